#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace curvfilt {

using Point3 = std::array<double, 3>;

/// Slack allowed in the triangle inequality check. Geodesic generators go
/// through arccos and are not exactly metric in floating point.
inline constexpr double kTriangleTolerance = 1e-9;

struct TriangleViolation {
    std::size_t i, j, k;
    double excess;  // d(i,j) - d(i,k) - d(k,j)
};

/// A finite metric space stored as a dense row-major distance matrix.
/// Immutable once built; construct through validate_metric().
class FiniteMetricSpace {
public:
    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return d_[i * n_ + j]; }
    std::span<const double> row(std::size_t i) const noexcept { return {d_.data() + i * n_, n_}; }
    std::span<const double> data() const noexcept { return d_; }
    std::vector<std::vector<double>> to_rows() const;

    /// False when the space was admitted with the triangle check disabled.
    bool triangle_enforced() const noexcept { return triangle_enforced_; }
    /// Violations found while validating with the check disabled (capped list).
    const std::vector<TriangleViolation>& triangle_violations() const noexcept { return violations_; }
    std::size_t triangle_violation_count() const noexcept { return violation_count_; }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<Point3>& coordinates() const noexcept { return coords_; }
    bool has_coordinates() const noexcept { return !coords_.empty(); }

    FiniteMetricSpace with_labels(std::vector<std::string> labels) const;
    FiniteMetricSpace with_coordinates(std::vector<Point3> coords) const;

    friend bool operator==(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
        return a.n_ == b.n_ && a.d_ == b.d_;
    }

private:
    friend FiniteMetricSpace validate_metric(std::span<const double>, std::size_t, bool);

    std::size_t n_ = 0;
    std::vector<double> d_;
    bool triangle_enforced_ = true;
    std::vector<TriangleViolation> violations_;
    std::size_t violation_count_ = 0;
    std::vector<std::string> labels_;
    std::vector<Point3> coords_;
};

/// Checks the metric axioms and builds a space. Throws Error with kind
/// AsymmetricMatrix, NegativeEntry, NonzeroDiagonal, TriangleViolation (only
/// when enforce_triangle), EmptySpace or NonSquareMatrix.
FiniteMetricSpace validate_metric(std::span<const double> row_major, std::size_t n,
                                  bool enforce_triangle = true);
FiniteMetricSpace validate_metric(const std::vector<std::vector<double>>& rows,
                                  bool enforce_triangle = true);

/// Strictly increasing, non-empty list of point indices of a parent space.
class PointSubset {
public:
    PointSubset(const FiniteMetricSpace& parent, std::vector<std::size_t> indices);
    static PointSubset all(const FiniteMetricSpace& parent);

    const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    std::size_t size() const noexcept { return indices_.size(); }

private:
    std::vector<std::size_t> indices_;
};

FiniteMetricSpace restrict(const FiniteMetricSpace& space, const PointSubset& subset);

double diameter(const FiniteMetricSpace& space);
double eccentricity(const FiniteMetricSpace& space, std::size_t point);
std::vector<double> eccentricities(const FiniteMetricSpace& space);

/// Greedy max-min subsampling starting at `seed`; ties go to the smallest index.
std::vector<std::size_t> farthest_point_sample(const FiniteMetricSpace& space, std::size_t count,
                                               std::size_t seed);

/// A relation between two point sets whose projections are both surjective.
class Correspondence {
public:
    using Pair = std::pair<std::size_t, std::size_t>;

    Correspondence(std::size_t x_size, std::size_t y_size, std::vector<Pair> pairs);
    static Correspondence identity(std::size_t size);

    const std::vector<Pair>& pairs() const noexcept { return pairs_; }
    std::size_t x_size() const noexcept { return x_size_; }
    std::size_t y_size() const noexcept { return y_size_; }

private:
    std::size_t x_size_, y_size_;
    std::vector<Pair> pairs_;
};

double distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Correspondence& r);

}  // namespace curvfilt
