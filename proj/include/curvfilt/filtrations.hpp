#pragma once

#include "curvfilt/combinatorics.hpp"
#include "curvfilt/curvature.hpp"
#include "curvfilt/metric_space.hpp"
#include "curvfilt/valuations.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace curvfilt {

inline constexpr std::uint64_t kDefaultSimplexBudget = 5'000'000;
inline constexpr std::size_t kDefaultDimCap = 2;

struct FilteredSimplex {
    std::vector<Vertex> vertices;  // strictly increasing
    double arrival = 0.0;

    std::size_t dimension() const noexcept { return vertices.size() - 1; }
};

/// A filtration of a finite metric space truncated at `dim_cap`.
///
/// Built-in constructors emit every simplex of dimension ≤ dim_cap, grouped
/// by dimension and in colex order inside each group, which makes face
/// lookups a rank computation. Hand-built spaces fall back to a map.
class FilteredSpace {
public:
    /// Checks closure under faces, duplicates and arrival sanity.
    static FilteredSpace from_simplices(FiniteMetricSpace space, std::size_t dim_cap,
                                        std::vector<FilteredSimplex> simplices, std::string functor_id);

    const FiniteMetricSpace& space() const noexcept { return space_; }
    std::size_t dim_cap() const noexcept { return dim_cap_; }
    const std::vector<FilteredSimplex>& simplices() const noexcept { return simplices_; }
    const std::string& functor_id() const noexcept { return functor_id_; }
    bool flag_property() const noexcept { return flag_dim_.has_value(); }
    /// Arrival of every simplex is the max over its faces of dimension ≤ flag_dim.
    std::optional<std::size_t> flag_dim() const noexcept { return flag_dim_; }

    std::optional<std::size_t> find(std::span<const Vertex> vertices) const;
    std::optional<double> arrival(std::span<const Vertex> vertices) const;

private:
    friend class FiltrationBuilder;
    FilteredSpace(FiniteMetricSpace space, std::size_t dim_cap, std::string functor_id);

    FiniteMetricSpace space_;
    std::size_t dim_cap_;
    std::vector<FilteredSimplex> simplices_;
    std::string functor_id_;
    std::optional<std::size_t> flag_dim_;
    // Complete colex layout: position = offset[dim] + rank.
    bool canonical_ = false;
    std::vector<std::size_t> offsets_;
    std::optional<BinomialTable> binomial_;
    std::map<std::vector<Vertex>, std::size_t> lookup_;
};

/// Vertex births on the diagonal, edge arrivals off it. Describes any
/// filtration whose arrivals are determined by the 1-skeleton.
struct FlagWeights {
    std::size_t n = 0;
    std::vector<double> w;

    double operator()(std::size_t i, std::size_t j) const noexcept { return w[i * n + j]; }
};

FlagWeights rips_weights(const FiniteMetricSpace& space);
FlagWeights ecc_weights(const FiniteMetricSpace& space, std::size_t x0, double c);

FilteredSpace rips_filtration(const FiniteMetricSpace& space, std::size_t dim_cap = kDefaultDimCap,
                              std::uint64_t budget = kDefaultSimplexBudget);
/// Arrival min_{p∈X} max_{x∈σ} d(p, x), centers ranging over the whole space.
FilteredSpace cech_filtration(const FiniteMetricSpace& space, std::size_t dim_cap = kDefaultDimCap,
                              std::uint64_t budget = kDefaultSimplexBudget);
/// Arrival ν(K_n(σ)).
FilteredSpace local_filtration(const FiniteMetricSpace& space, const ValuationSpec& nu,
                               std::size_t dim_cap = kDefaultDimCap, std::uint64_t budget = kDefaultSimplexBudget,
                               std::uint64_t tuple_budget = kDefaultTupleBudget);
FilteredSpace ult_filtration(const FiniteMetricSpace& space, std::size_t k, std::size_t dim_cap = kDefaultDimCap,
                             std::uint64_t budget = kDefaultSimplexBudget);
FilteredSpace hyp_filtration(const FiniteMetricSpace& space, std::size_t dim_cap = kDefaultDimCap,
                             std::uint64_t budget = kDefaultSimplexBudget);
/// Arrival max{diam σ, c·(ecc(x0) − min_{x∈σ} d(x0, x))}.
FilteredSpace ecc_basepoint_filtration(const FiniteMetricSpace& space, std::size_t x0, double c,
                                       std::size_t dim_cap = kDefaultDimCap,
                                       std::uint64_t budget = kDefaultSimplexBudget);
/// Every simplex arrives at `gh`, the caller-supplied d_GH(X, Z).
FilteredSpace upsilon_filtration(const FiniteMetricSpace& x, double gh, std::size_t dim_cap = 1,
                                 std::uint64_t budget = kDefaultSimplexBudget);
FilteredSpace flag_filtration(const FiniteMetricSpace& space, const FlagWeights& weights, std::string functor_id,
                              std::size_t dim_cap = kDefaultDimCap, std::uint64_t budget = kDefaultSimplexBudget);

/// First face/coface pair violating arrival(τ) ≤ arrival(σ), if any.
std::optional<std::string> audit_monotonicity(const FilteredSpace& fs);

}  // namespace curvfilt
