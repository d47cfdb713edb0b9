#pragma once

#include "curvfilt/metric_space.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace curvfilt {

/// n equally spaced points on a circle of the given radius, arc-length metric.
FiniteMetricSpace circle_geodesic(std::size_t n, double radius = 1.0);

/// Farthest point sample of n points from a `resolution`-point Fibonacci
/// lattice on the unit sphere, starting at candidate `seed % resolution`.
/// Throws InsufficientCandidates when resolution < n.
FiniteMetricSpace sphere_fps(std::size_t n, std::size_t resolution = 2000, std::uint64_t seed = 0);

/// Vertices (±1,±1,±1)/√3 of a cube on the unit sphere, great-circle metric.
/// Vertex i has sign bit b set for coordinate b when (i >> b) & 1.
FiniteMetricSpace geodesic_cube();

/// Wedge of two circles of radius r, each discretized as a regular
/// (n/2)-gon that contains the shared junction, which is point 0. Loop A is
/// points 1..n/2-1, loop B is n/2..n-2, both in order of position around
/// their loop, so n-1 points in total. Throws OddCount for odd n.
FiniteMetricSpace figure_eight(std::size_t n, double loop_radius = 1.0);
/// Index of the point of loop A farthest from the junction.
std::size_t figure_eight_far_point(std::size_t n);

/// {0, 1, ..., k-1} ⊂ ℝ.
FiniteMetricSpace line_segment_integers(std::size_t k);

FiniteMetricSpace euclidean_space(const std::vector<Point3>& points);
/// Shortest paths in the symmetrized k-nearest-neighbor graph with Euclidean
/// edge weights. Throws DisconnectedGraph naming the component count.
FiniteMetricSpace knn_geodesic_space(const std::vector<Point3>& points, std::size_t k);

/// Comma-separated decimals, one row per line, no header.
FiniteMetricSpace load_distance_csv(const std::string& path);

struct PointMetric {
    enum class Kind { Euclidean, KnnGeodesic } kind = Kind::Euclidean;
    std::size_t k = 0;

    /// "euclidean" or "knn:K".
    static PointMetric parse(const std::string& text);
};

/// CSV lines "x,y[,z]" or a JSON array of 2- or 3-element arrays.
std::vector<Point3> read_points(const std::string& path);
FiniteMetricSpace load_points(const std::string& path, PointMetric metric = {});

struct ShapeSpec {
    enum class Kind { Circle, SphereFps, GeodesicCube, FigureEight, LineSegmentIntegers };

    Kind kind = Kind::Circle;
    std::size_t count = 0;
    double radius = 1.0;
    std::size_t resolution = 2000;
    std::uint64_t seed = 0;

    /// "circle:N[:R]", "sphere:N[:res[:seed]]", "cube", "figure8:N[:r]", "line:k".
    static ShapeSpec parse(const std::string& text);
    std::string to_string() const;
};

FiniteMetricSpace generate(const ShapeSpec& spec);

}  // namespace curvfilt
