#pragma once

#include "curvfilt/metric_space.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace curvfilt {

/// Default cap on the number of tuples a curvature-set enumeration may visit.
inline constexpr std::uint64_t kDefaultTupleBudget = 10'000'000;
/// Default cap on |X|·|Y| for exhaustive correspondence search.
inline constexpr std::size_t kDefaultCorrespondenceBudget = 20;

/// Dense square matrix, row-major.
struct Matrix {
    std::size_t n = 0;
    std::vector<double> a;

    Matrix() = default;
    explicit Matrix(std::size_t side, double fill = 0.0) : n(side), a(side * side, fill) {}
    static Matrix from_rows(const std::vector<std::vector<double>>& rows);
    /// M(r): zero diagonal, r everywhere else.
    static Matrix constant_off_diagonal(std::size_t side, double r);

    double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    bool is_symmetric_zero_diagonal() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;
    friend bool operator<(const Matrix& x, const Matrix& y) {
        return x.n != y.n ? x.n < y.n : x.a < y.a;
    }
};

/// entrywise max |x - y|
double linf_distance(const Matrix& x, const Matrix& y);
double linf_norm(const Matrix& x);

/// Non-empty finite set of equally sized matrices, deduplicated by exact equality.
class MatrixSet {
public:
    explicit MatrixSet(std::vector<Matrix> members);

    std::size_t side() const noexcept { return n_; }
    std::size_t size() const noexcept { return members_.size(); }
    const std::vector<Matrix>& members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    bool contains(const Matrix& m) const;
    bool is_subset_of(const MatrixSet& other) const;
    /// Zero matrix is a member and no member has a negative entry.
    bool almost_metric() const;

    friend bool operator==(const MatrixSet&, const MatrixSet&) = default;

private:
    std::size_t n_;
    std::vector<Matrix> members_;
};

/// Visits every length-`length` tuple over `alphabet` (with repetition) in
/// odometer order. The callback receives the current tuple.
template <class Fn>
void for_each_tuple(std::span<const std::size_t> alphabet, std::size_t length, Fn&& fn) {
    const std::size_t m = alphabet.size();
    if (m == 0) return;
    std::vector<std::size_t> pos(length, 0);
    std::vector<std::size_t> tuple(length, alphabet[0]);
    while (true) {
        fn(std::span<const std::size_t>(tuple));
        std::size_t i = length;
        while (i > 0) {
            --i;
            if (++pos[i] < m) {
                tuple[i] = alphabet[pos[i]];
                break;
            }
            pos[i] = 0;
            tuple[i] = alphabet[0];
            if (i == 0) return;
        }
        if (length == 0) return;
    }
}

/// (d(t_i, t_j))_{ij}
Matrix distance_tuple_matrix(const FiniteMetricSpace& space, std::span<const std::size_t> tuple);

/// Image of the n-tuple distance map over all |X|^n tuples.
MatrixSet curvature_set(const FiniteMetricSpace& space, std::size_t n,
                        std::uint64_t budget = kDefaultTupleBudget);
/// Same, restricted to tuples drawn from `points`.
MatrixSet curvature_set_of(const FiniteMetricSpace& space, std::span<const std::size_t> points,
                           std::size_t n, std::uint64_t budget = kDefaultTupleBudget);

/// (n+1)×(n+1) matrices of (x0, t_1..t_n) for all n-tuples t over sigma.
MatrixSet basepoint_curvature_set(const FiniteMetricSpace& space, std::size_t x0,
                                  const PointSubset& sigma, std::size_t n,
                                  std::uint64_t budget = kDefaultTupleBudget);

/// Drops row and column 0 of every member.
MatrixSet project_away_basepoint(const MatrixSet& set);

/// Hausdorff distance between matrix sets under the entrywise-max norm.
double hausdorff_linf(const MatrixSet& a, const MatrixSet& b);

/// Exact Gromov–Hausdorff distance, half the least distortion over all
/// correspondences. Throws BudgetExceeded when |X|·|Y| > budget.
double gromov_hausdorff_bruteforce(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                   std::size_t budget = kDefaultCorrespondenceBudget);

}  // namespace curvfilt
