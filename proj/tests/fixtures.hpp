#pragma once

#include "curvfilt/metric_space.hpp"

#include <cmath>

namespace fixtures {

/// Center q0 at distance 1 from three corners that are pairwise 2 apart.
inline curvfilt::FiniteMetricSpace space_q() {
    return curvfilt::validate_metric({{0, 1, 1, 1}, {1, 0, 2, 2}, {1, 2, 0, 2}, {1, 2, 2, 0}});
}

/// Equilateral triangle of side 2.
inline curvfilt::FiniteMetricSpace space_p() {
    return curvfilt::validate_metric({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}});
}

/// Triangle with sides 1, 2, √3.
inline curvfilt::FiniteMetricSpace space_s() {
    const double r3 = std::sqrt(3.0);
    return curvfilt::validate_metric({{0, 1, 2}, {1, 0, r3}, {2, r3, 0}});
}

/// Two points at distance r.
inline curvfilt::FiniteMetricSpace two_point(double r) { return curvfilt::validate_metric({{0, r}, {r, 0}}); }

inline curvfilt::FiniteMetricSpace one_point() { return curvfilt::validate_metric({{0}}); }

/// Corners of the unit square, Euclidean.
inline curvfilt::FiniteMetricSpace unit_square() {
    const double s = std::sqrt(2.0);
    return curvfilt::validate_metric({{0, 1, s, 1}, {1, 0, 1, s}, {s, 1, 0, 1}, {1, s, 1, 0}});
}

}  // namespace fixtures
