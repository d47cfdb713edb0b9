#include "curvfilt/metric_space.hpp"

#include "curvfilt/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace curvfilt {

namespace {

constexpr std::size_t kMaxRecordedViolations = 16;

std::string pair_text(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

void check_index(std::size_t index, std::size_t size, const char* what) {
    if (index >= size) {
        throw Error(ErrorKind::IndexOutOfRange, std::string(what) + " index " + std::to_string(index) +
                                                    " out of range for size " + std::to_string(size));
    }
}

}  // namespace

FiniteMetricSpace validate_metric(std::span<const double> m, std::size_t n, bool enforce_triangle) {
    if (n == 0) throw Error(ErrorKind::EmptySpace, "a metric space needs at least one point");
    if (m.size() != n * n) {
        throw Error(ErrorKind::NonSquareMatrix, "expected " + std::to_string(n * n) + " entries, got " +
                                                    std::to_string(m.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i * n + i] != 0.0) {
            throw Error(ErrorKind::NonzeroDiagonal, "nonzero diagonal entry at " + pair_text(i, i));
        }
        for (std::size_t j = 0; j < n; ++j) {
            const double v = m[i * n + j];
            if (!std::isfinite(v)) {
                throw Error(ErrorKind::NegativeEntry, "non-finite entry at " + pair_text(i, j));
            }
            if (v < 0.0) throw Error(ErrorKind::NegativeEntry, "negative entry at " + pair_text(i, j));
            if (v != m[j * n + i]) {
                throw Error(ErrorKind::AsymmetricMatrix, "entries " + pair_text(i, j) + " and " +
                                                             pair_text(j, i) + " differ");
            }
        }
    }

    FiniteMetricSpace space;
    space.n_ = n;
    space.d_.assign(m.begin(), m.end());
    space.triangle_enforced_ = enforce_triangle;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dij = m[i * n + j];
            for (std::size_t k = 0; k < n; ++k) {
                const double excess = dij - m[i * n + k] - m[k * n + j];
                if (excess <= kTriangleTolerance) continue;
                if (enforce_triangle) {
                    throw Error(ErrorKind::TriangleViolation,
                                "d" + pair_text(i, j) + " exceeds the path through " + std::to_string(k) +
                                    " by " + std::to_string(excess));
                }
                ++space.violation_count_;
                if (space.violations_.size() < kMaxRecordedViolations) {
                    space.violations_.push_back({i, j, k, excess});
                }
            }
        }
    }
    return space;
}

FiniteMetricSpace validate_metric(const std::vector<std::vector<double>>& rows, bool enforce_triangle) {
    const std::size_t n = rows.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw Error(ErrorKind::NonSquareMatrix, "row " + std::to_string(i) + " has " +
                                                        std::to_string(rows[i].size()) + " entries, expected " +
                                                        std::to_string(n));
        }
        flat.insert(flat.end(), rows[i].begin(), rows[i].end());
    }
    return validate_metric(flat, n, enforce_triangle);
}

std::vector<std::vector<double>> FiniteMetricSpace::to_rows() const {
    std::vector<std::vector<double>> rows(n_);
    for (std::size_t i = 0; i < n_; ++i) rows[i].assign(d_.begin() + i * n_, d_.begin() + (i + 1) * n_);
    return rows;
}

FiniteMetricSpace FiniteMetricSpace::with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && labels.size() != n_) {
        throw Error(ErrorKind::InvalidArgument, "label count does not match space size");
    }
    FiniteMetricSpace copy = *this;
    copy.labels_ = std::move(labels);
    return copy;
}

FiniteMetricSpace FiniteMetricSpace::with_coordinates(std::vector<Point3> coords) const {
    if (!coords.empty() && coords.size() != n_) {
        throw Error(ErrorKind::InvalidArgument, "coordinate count does not match space size");
    }
    FiniteMetricSpace copy = *this;
    copy.coords_ = std::move(coords);
    return copy;
}

PointSubset::PointSubset(const FiniteMetricSpace& parent, std::vector<std::size_t> indices)
    : indices_(std::move(indices)) {
    if (indices_.empty()) throw Error(ErrorKind::InvalidSubset, "subset must be non-empty");
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        check_index(indices_[i], parent.size(), "subset");
        if (i > 0 && indices_[i] <= indices_[i - 1]) {
            throw Error(ErrorKind::InvalidSubset, "subset indices must be strictly increasing");
        }
    }
}

PointSubset PointSubset::all(const FiniteMetricSpace& parent) {
    std::vector<std::size_t> idx(parent.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return PointSubset(parent, std::move(idx));
}

FiniteMetricSpace restrict(const FiniteMetricSpace& space, const PointSubset& subset) {
    const auto& idx = subset.indices();
    for (std::size_t i : idx) check_index(i, space.size(), "subset");
    const std::size_t m = idx.size();
    std::vector<double> sub(m * m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) sub[a * m + b] = space(idx[a], idx[b]);
    }
    // A submatrix of a metric is a metric; skip the cubic re-check.
    FiniteMetricSpace out = validate_metric(sub, m, false);
    if (!space.labels().empty()) {
        std::vector<std::string> labels;
        for (std::size_t i : idx) labels.push_back(space.labels()[i]);
        out = out.with_labels(std::move(labels));
    }
    if (space.has_coordinates()) {
        std::vector<Point3> coords;
        for (std::size_t i : idx) coords.push_back(space.coordinates()[i]);
        out = out.with_coordinates(std::move(coords));
    }
    return out;
}

double diameter(const FiniteMetricSpace& space) {
    const auto d = space.data();
    return *std::max_element(d.begin(), d.end());
}

double eccentricity(const FiniteMetricSpace& space, std::size_t point) {
    check_index(point, space.size(), "point");
    const auto r = space.row(point);
    return *std::max_element(r.begin(), r.end());
}

std::vector<double> eccentricities(const FiniteMetricSpace& space) {
    std::vector<double> out(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) out[i] = eccentricity(space, i);
    return out;
}

std::vector<std::size_t> farthest_point_sample(const FiniteMetricSpace& space, std::size_t count,
                                               std::size_t seed) {
    check_index(seed, space.size(), "seed");
    if (count == 0 || count > space.size()) {
        throw Error(ErrorKind::CountExceedsSize, "cannot sample " + std::to_string(count) + " of " +
                                                     std::to_string(space.size()) + " points");
    }
    const std::size_t n = space.size();
    std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
    std::vector<bool> chosen(n, false);
    std::vector<std::size_t> order{seed};
    chosen[seed] = true;
    std::size_t last = seed;
    while (order.size() < count) {
        std::size_t best = n;
        double best_dist = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            nearest[i] = std::min(nearest[i], space(last, i));
            if (!chosen[i] && nearest[i] > best_dist) {
                best_dist = nearest[i];
                best = i;
            }
        }
        chosen[best] = true;
        order.push_back(best);
        last = best;
    }
    return order;
}

Correspondence::Correspondence(std::size_t x_size, std::size_t y_size, std::vector<Pair> pairs)
    : x_size_(x_size), y_size_(y_size), pairs_(std::move(pairs)) {
    std::vector<bool> hit_x(x_size, false), hit_y(y_size, false);
    for (auto [x, y] : pairs_) {
        if (x >= x_size || y >= y_size) {
            throw Error(ErrorKind::InvalidCorrespondence, "pair " + pair_text(x, y) + " out of range");
        }
        hit_x[x] = true;
        hit_y[y] = true;
    }
    const auto missing_x = std::find(hit_x.begin(), hit_x.end(), false);
    if (missing_x != hit_x.end()) {
        throw Error(ErrorKind::InvalidCorrespondence,
                    "point " + std::to_string(missing_x - hit_x.begin()) + " of X is not covered");
    }
    const auto missing_y = std::find(hit_y.begin(), hit_y.end(), false);
    if (missing_y != hit_y.end()) {
        throw Error(ErrorKind::InvalidCorrespondence,
                    "point " + std::to_string(missing_y - hit_y.begin()) + " of Y is not covered");
    }
}

Correspondence Correspondence::identity(std::size_t size) {
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < size; ++i) pairs.emplace_back(i, i);
    return Correspondence(size, size, std::move(pairs));
}

double distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Correspondence& r) {
    if (r.x_size() != x.size() || r.y_size() != y.size()) {
        throw Error(ErrorKind::InvalidCorrespondence, "correspondence sizes do not match the spaces");
    }
    const auto& p = r.pairs();
    double worst = 0.0;
    for (std::size_t a = 0; a < p.size(); ++a) {
        for (std::size_t b = a + 1; b < p.size(); ++b) {
            worst = std::max(worst, std::abs(x(p[a].first, p[b].first) - y(p[a].second, p[b].second)));
        }
    }
    return worst;
}

}  // namespace curvfilt
