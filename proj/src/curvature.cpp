#include "curvfilt/curvature.hpp"

#include "curvfilt/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

namespace curvfilt {

namespace {

std::uint64_t tuple_count(std::size_t alphabet, std::size_t length) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < length; ++i) {
        if (alphabet != 0 && total > std::numeric_limits<std::uint64_t>::max() / alphabet) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        total *= alphabet;
    }
    return total;
}

void check_budget(std::size_t alphabet, std::size_t length, std::uint64_t budget) {
    const std::uint64_t need = tuple_count(alphabet, length);
    if (need > budget) {
        throw Error(ErrorKind::EnumerationBudgetExceeded,
                    "enumeration needs " + std::to_string(need) + " tuples, budget is " + std::to_string(budget));
    }
}

}  // namespace

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    Matrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw Error(ErrorKind::NonSquareMatrix, "matrix rows must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::constant_off_diagonal(std::size_t side, double r) {
    Matrix m(side, r);
    for (std::size_t i = 0; i < side; ++i) m(i, i) = 0.0;
    return m;
}

bool Matrix::is_symmetric_zero_diagonal() const {
    for (std::size_t i = 0; i < n; ++i) {
        if ((*this)(i, i) != 0.0) return false;
        for (std::size_t j = i + 1; j < n; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) return false;
        }
    }
    return true;
}

double linf_distance(const Matrix& x, const Matrix& y) {
    if (x.n != y.n) throw Error(ErrorKind::DimensionMismatch, "matrices differ in size");
    double worst = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) worst = std::max(worst, std::abs(x.a[i] - y.a[i]));
    return worst;
}

double linf_norm(const Matrix& x) {
    double worst = 0.0;
    for (double v : x.a) worst = std::max(worst, std::abs(v));
    return worst;
}

MatrixSet::MatrixSet(std::vector<Matrix> members) : members_(std::move(members)) {
    if (members_.empty()) throw Error(ErrorKind::InvalidArgument, "a matrix set must be non-empty");
    n_ = members_.front().n;
    for (const auto& m : members_) {
        if (m.n != n_) throw Error(ErrorKind::DimensionMismatch, "matrix set members differ in size");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool MatrixSet::contains(const Matrix& m) const {
    return std::binary_search(members_.begin(), members_.end(), m);
}

bool MatrixSet::is_subset_of(const MatrixSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

bool MatrixSet::almost_metric() const {
    if (!contains(Matrix(n_))) return false;
    return std::all_of(members_.begin(), members_.end(), [](const Matrix& m) {
        return std::all_of(m.a.begin(), m.a.end(), [](double v) { return v >= 0.0; });
    });
}

Matrix distance_tuple_matrix(const FiniteMetricSpace& space, std::span<const std::size_t> tuple) {
    for (std::size_t t : tuple) {
        if (t >= space.size()) {
            throw Error(ErrorKind::IndexOutOfRange, "tuple index " + std::to_string(t) + " out of range");
        }
    }
    Matrix m(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        for (std::size_t j = 0; j < tuple.size(); ++j) m(i, j) = space(tuple[i], tuple[j]);
    }
    return m;
}

MatrixSet curvature_set_of(const FiniteMetricSpace& space, std::span<const std::size_t> points,
                           std::size_t n, std::uint64_t budget) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "curvature sets need n >= 1");
    check_budget(points.size(), n, budget);
    std::vector<Matrix> out;
    for_each_tuple(points, n, [&](std::span<const std::size_t> t) { out.push_back(distance_tuple_matrix(space, t)); });
    return MatrixSet(std::move(out));
}

MatrixSet curvature_set(const FiniteMetricSpace& space, std::size_t n, std::uint64_t budget) {
    return curvature_set_of(space, PointSubset::all(space).indices(), n, budget);
}

MatrixSet basepoint_curvature_set(const FiniteMetricSpace& space, std::size_t x0, const PointSubset& sigma,
                                  std::size_t n, std::uint64_t budget) {
    if (x0 >= space.size()) throw Error(ErrorKind::IndexOutOfRange, "basepoint out of range");
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "curvature sets need n >= 1");
    check_budget(sigma.size(), n, budget);
    std::vector<Matrix> out;
    std::vector<std::size_t> full(n + 1, x0);
    for_each_tuple(sigma.indices(), n, [&](std::span<const std::size_t> t) {
        std::copy(t.begin(), t.end(), full.begin() + 1);
        out.push_back(distance_tuple_matrix(space, full));
    });
    return MatrixSet(std::move(out));
}

MatrixSet project_away_basepoint(const MatrixSet& set) {
    if (set.side() < 2) throw Error(ErrorKind::DimensionMismatch, "nothing left after projection");
    const std::size_t n = set.side() - 1;
    std::vector<Matrix> out;
    for (const auto& m : set) {
        Matrix p(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) p(i, j) = m(i + 1, j + 1);
        }
        out.push_back(std::move(p));
    }
    return MatrixSet(std::move(out));
}

double hausdorff_linf(const MatrixSet& a, const MatrixSet& b) {
    if (a.side() != b.side()) throw Error(ErrorKind::DimensionMismatch, "matrix sets differ in side length");
    auto directed = [](const MatrixSet& from, const MatrixSet& to) {
        double worst = 0.0;
        for (const auto& x : from) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& y : to) best = std::min(best, linf_distance(x, y));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

namespace {

/// Branch and bound over correspondences: each x picks a non-empty set of
/// partners; distortion only grows as pairs are added, so any partial
/// relation at least as bad as the incumbent is cut.
class CorrespondenceSearch {
public:
    CorrespondenceSearch(const FiniteMetricSpace& x, const FiniteMetricSpace& y) : x_(x), y_(y) {
        const std::size_t m = y.size();
        const std::uint32_t full = (1u << m) - 1u;
        for (std::uint32_t mask = 1; mask <= full; ++mask) masks_.push_back(mask);
        std::stable_sort(masks_.begin(), masks_.end(),
                         [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
        // X × Y is always a correspondence.
        best_ = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (std::size_t j = 0; j < x.size(); ++j) {
                for (std::size_t p = 0; p < y.size(); ++p) {
                    for (std::size_t q = 0; q < y.size(); ++q) {
                        best_ = std::max(best_, std::abs(x(i, j) - y(p, q)));
                    }
                }
            }
        }
        full_ = full;
    }

    double run() {
        descend(0, 0u, 0.0);
        return best_;
    }

private:
    void descend(std::size_t xi, std::uint32_t covered, double current) {
        if (xi == x_.size()) {
            if (covered == full_ && current < best_) best_ = current;
            return;
        }
        for (std::uint32_t mask : masks_) {
            double cost = current;
            const std::size_t mark = pairs_.size();
            for (std::size_t yj = 0; yj < y_.size() && cost < best_; ++yj) {
                if (!(mask & (1u << yj))) continue;
                for (const auto& [px, py] : pairs_) {
                    cost = std::max(cost, std::abs(x_(xi, px) - y_(yj, py)));
                }
                pairs_.emplace_back(xi, yj);
            }
            if (cost < best_) descend(xi + 1, covered | mask, cost);
            pairs_.resize(mark);
        }
    }

    const FiniteMetricSpace& x_;
    const FiniteMetricSpace& y_;
    std::vector<std::uint32_t> masks_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::uint32_t full_ = 0;
    double best_ = 0.0;
};

}  // namespace

double gromov_hausdorff_bruteforce(const FiniteMetricSpace& x, const FiniteMetricSpace& y, std::size_t budget) {
    if (x.size() * y.size() > budget) {
        throw Error(ErrorKind::BudgetExceeded, "correspondence search over " + std::to_string(x.size()) + "x" +
                                                   std::to_string(y.size()) + " exceeds budget " +
                                                   std::to_string(budget));
    }
    // Branch on the larger side so each level chooses among fewer subsets.
    if (y.size() > x.size()) return gromov_hausdorff_bruteforce(y, x, budget);
    if (y.size() > 30) throw Error(ErrorKind::BudgetExceeded, "correspondence search side too large");
    return 0.5 * CorrespondenceSearch(x, y).run();
}

}  // namespace curvfilt
