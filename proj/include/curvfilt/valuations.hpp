#pragma once

#include "curvfilt/curvature.hpp"
#include "curvfilt/metric_space.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace curvfilt {

/// Read-only n×n matrix, either stored or implied by a tuple of points of a
/// space. Lets kernels run on streamed tuples without building matrices.
class MatrixView {
public:
    MatrixView(const Matrix& m) noexcept : n_(m.n), data_(m.a.data()) {}  // NOLINT(implicit)
    MatrixView(const FiniteMetricSpace& space, std::span<const std::size_t> tuple) noexcept
        : n_(tuple.size()), space_(&space), tuple_(tuple.data()) {}

    std::size_t side() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const noexcept {
        return data_ ? data_[i * n_ + j] : (*space_)(tuple_[i], tuple_[j]);
    }

private:
    std::size_t n_;
    const double* data_ = nullptr;
    const FiniteMetricSpace* space_ = nullptr;
    const std::size_t* tuple_ = nullptr;
};

using MatrixKernel = std::function<double(const MatrixView&)>;
using SetEvaluator = std::function<double(const MatrixSet&)>;
using PointSetEvaluator = std::function<double(const FiniteMetricSpace&, std::span<const std::size_t>)>;

/// A monotone map from sets of n×n matrices to the nonnegative reals.
///
/// Max-induced valuations carry their kernel f and evaluate max_{α∈A} f(α);
/// others carry a set evaluator. Outputs are clamped at 0. `points_fast_path`,
/// when set, computes ν(K_n(σ)) for a point set directly and must agree with
/// streaming the kernel over all tuples.
struct ValuationSpec {
    std::string name;
    std::size_t n = 0;
    std::optional<double> stability_constant;
    MatrixKernel kernel;
    SetEvaluator set_evaluator;
    PointSetEvaluator points_fast_path;

    bool is_max_induced() const noexcept { return static_cast<bool>(kernel); }
    double evaluate(const MatrixSet& a) const;
};

ValuationSpec max_induced(std::string name, MatrixKernel f, std::size_t n,
                          std::optional<double> lipschitz_constant = std::nullopt);
ValuationSpec nu_rips();
ValuationSpec nu_ult_k(std::size_t k);
ValuationSpec nu_hyp();
/// ω_{n,k} in exact mode, as a valuation.
ValuationSpec nu_k_point(std::size_t n, std::size_t k);

/// Resolves "rips", "ult:k", "hyp", "kpoint:n:k".
ValuationSpec valuation_from_id(const std::string& id);

/// ν(K_n(σ)) for σ = `points`. Max-induced valuations stream tuples (or use
/// the fast path); general ones materialize the curvature set under `budget`.
double evaluate_on_points(const ValuationSpec& nu, const FiniteMetricSpace& space,
                          std::span<const std::size_t> points, std::uint64_t budget = kDefaultTupleBudget);
/// Always streams the kernel, ignoring any fast path. Max-induced only.
double stream_max_induced(const ValuationSpec& nu, const FiniteMetricSpace& space,
                          std::span<const std::size_t> points);

enum class KPointMode { Exact, Greedy };

struct KPointResult {
    double value = 0.0;
    bool approximate = false;
};

/// ℓ∞ k-center radius of A with centers anywhere in ℝ^{n×n}. Exact mode needs
/// k ≤ 3 and |A| ≤ 12 unless k = 1 (closed form); greedy mode is within a
/// factor 2 of the optimum.
KPointResult k_point_valuation(std::size_t k, const MatrixSet& a, KPointMode mode = KPointMode::Exact);

/// Entrywise maximum over the set.
Matrix max_matrix(const MatrixSet& a);

/// ν(A, v) on (n+1)×(n+1) basepoint curvature sets with a descriptor vector.
struct AdjustedValuationSpec {
    std::string name;
    std::size_t n = 0;  // matrices are (n+1)×(n+1)
    std::size_t descriptor_dim = 0;
    std::optional<double> stability_constant;
    std::function<double(const MatrixSet&, std::span<const double>)> evaluate_fn;

    double evaluate(const MatrixSet& a, std::span<const double> v) const;
};

/// "ecc:<c>" with the shortest decimal that round-trips c.
std::string ecc_functor_id(double c);

/// max{ max_{α, i,j≥1} α_ij , c·(v − min_{α, j≥1} α_0j) }.
AdjustedValuationSpec ecc_adjusted_valuation(std::size_t n, double c);

struct PointDescriptorSpec {
    std::string name;
    std::size_t dim = 0;
    double stability_constant = 0.0;
    std::function<std::vector<double>(const FiniteMetricSpace&, std::size_t)> evaluate;
};

PointDescriptorSpec ecc_descriptor();

struct IncreasingCheck {
    bool passed = true;
    std::optional<std::pair<MatrixSet, MatrixSet>> counterexample;  // (A, B) with A ≤ B, ν(A) > ν(B)
};

/// Samples pairs A ≤ B in the entrywise-domination order and looks for ν(A) > ν(B).
IncreasingCheck is_increasing_on_sample(const ValuationSpec& nu, std::size_t trials, std::uint64_t seed);

}  // namespace curvfilt
