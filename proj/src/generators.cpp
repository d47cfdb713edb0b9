#include "curvfilt/generators.hpp"

#include "curvfilt/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <numbers>
#include <queue>
#include <sstream>

namespace curvfilt {

namespace {

double great_circle(const Point3& a, const Point3& b) {
    const double dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    return std::acos(std::clamp(dot, -1.0, 1.0));
}

FiniteMetricSpace from_function(std::size_t n, auto&& dist) {
    std::vector<double> m(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) m[i * n + j] = m[j * n + i] = dist(i, j);
    }
    return validate_metric(m, n);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) out.push_back(item);
    if (!text.empty() && text.back() == sep) out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

double parse_double(const std::string& raw, const std::string& where) {
    const std::string s = trim(raw);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) throw Error(ErrorKind::ParseError, "bad number '" + s + "' " + where);
    return v;
}

std::size_t parse_count(const std::string& raw, const std::string& where) {
    const std::string s = trim(raw);
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw Error(ErrorKind::ParseError, "bad count '" + s + "' " + where);
    }
    return static_cast<std::size_t>(std::stoull(s));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::vector<double>> read_csv_rows(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        std::vector<double> row;
        for (const auto& cell : split(line, ',')) {
            row.push_back(parse_double(cell, "at " + path + ":" + std::to_string(lineno)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

FiniteMetricSpace circle_geodesic(std::size_t n, double radius) {
    if (n == 0) throw Error(ErrorKind::EmptySpace, "circle needs at least one point");
    if (!(radius > 0.0)) throw Error(ErrorKind::InvalidArgument, "circle radius must be positive");
    const double step = 2.0 * std::numbers::pi * radius / static_cast<double>(n);
    auto space = from_function(n, [&](std::size_t i, std::size_t j) {
        const std::size_t gap = j - i;
        return step * static_cast<double>(std::min(gap, n - gap));
    });
    std::vector<Point3> coords(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
        coords[i] = {radius * std::cos(t), radius * std::sin(t), 0.0};
    }
    return space.with_coordinates(std::move(coords));
}

FiniteMetricSpace sphere_fps(std::size_t n, std::size_t resolution, std::uint64_t seed) {
    if (n == 0) throw Error(ErrorKind::EmptySpace, "sphere sample needs at least one point");
    if (resolution < n) {
        throw Error(ErrorKind::InsufficientCandidates, "resolution " + std::to_string(resolution) +
                                                           " gives fewer than " + std::to_string(n) + " candidates");
    }
    std::vector<Point3> lattice(resolution);
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < resolution; ++i) {
        const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(resolution);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * static_cast<double>(i);
        lattice[i] = {r * std::cos(phi), r * std::sin(phi), z};
    }
    // FPS straight on the lattice; the full candidate matrix is never built.
    std::vector<std::size_t> chosen{static_cast<std::size_t>(seed % resolution)};
    std::vector<double> gap(resolution);
    for (std::size_t i = 0; i < resolution; ++i) gap[i] = great_circle(lattice[i], lattice[chosen[0]]);
    while (chosen.size() < n) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < resolution; ++i) {
            if (gap[i] > gap[best]) best = i;
        }
        chosen.push_back(best);
        for (std::size_t i = 0; i < resolution; ++i) gap[i] = std::min(gap[i], great_circle(lattice[i], lattice[best]));
    }
    std::vector<Point3> coords;
    for (std::size_t c : chosen) coords.push_back(lattice[c]);
    auto space = from_function(n, [&](std::size_t i, std::size_t j) { return great_circle(coords[i], coords[j]); });
    return space.with_coordinates(std::move(coords));
}

FiniteMetricSpace geodesic_cube() {
    auto sign = [](std::size_t v, int b) { return ((v >> b) & 1U) ? -1 : 1; };
    auto space = from_function(8, [&](std::size_t i, std::size_t j) {
        int dot3 = 0;  // 3·<p_i, p_j>, an exact integer
        for (int b = 0; b < 3; ++b) dot3 += sign(i, b) * sign(j, b);
        return dot3 == -3 ? std::numbers::pi : std::acos(static_cast<double>(dot3) / 3.0);
    });
    std::vector<Point3> coords(8);
    const double s = 1.0 / std::sqrt(3.0);
    for (std::size_t v = 0; v < 8; ++v) coords[v] = {sign(v, 0) * s, sign(v, 1) * s, sign(v, 2) * s};
    return space.with_coordinates(std::move(coords));
}

FiniteMetricSpace figure_eight(std::size_t n, double r) {
    if (n % 2 != 0) throw Error(ErrorKind::OddCount, "figure eight needs an even count, got " + std::to_string(n));
    if (n < 8) throw Error(ErrorKind::InvalidArgument, "figure eight needs at least 8 points");
    if (!(r > 0.0)) throw Error(ErrorKind::InvalidArgument, "loop radius must be positive");
    const std::size_t m = n / 2;
    const std::size_t total = n - 1;
    const double step = 2.0 * std::numbers::pi * r / static_cast<double>(m);
    // (loop, position); the junction is position 0 of both loops.
    auto locate = [&](std::size_t i) -> std::pair<int, std::size_t> {
        if (i == 0) return {-1, 0};
        if (i < m) return {0, i};
        return {1, i - m + 1};
    };
    auto arc = [&](std::size_t p, std::size_t q) {
        const std::size_t gap = p > q ? p - q : q - p;
        return step * static_cast<double>(std::min(gap, m - gap));
    };
    auto space = from_function(total, [&](std::size_t i, std::size_t j) {
        const auto [li, pi] = locate(i);
        const auto [lj, pj] = locate(j);
        if (li == lj || li < 0 || lj < 0) return arc(pi, pj);
        return arc(pi, 0) + arc(0, pj);
    });
    std::vector<Point3> coords(total);
    for (std::size_t i = 0; i < total; ++i) {
        const auto [loop, p] = locate(i);
        const double t = 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(m);
        const double side = loop == 1 ? 1.0 : -1.0;
        coords[i] = {side * (r - r * std::cos(t)), r * std::sin(t), 0.0};
    }
    return space.with_coordinates(std::move(coords));
}

std::size_t figure_eight_far_point(std::size_t n) { return n / 4; }

FiniteMetricSpace line_segment_integers(std::size_t k) {
    if (k == 0) throw Error(ErrorKind::EmptySpace, "line segment needs at least one point");
    auto space = from_function(k, [](std::size_t i, std::size_t j) { return static_cast<double>(j - i); });
    std::vector<Point3> coords(k);
    for (std::size_t i = 0; i < k; ++i) coords[i] = {static_cast<double>(i), 0.0, 0.0};
    return space.with_coordinates(std::move(coords));
}

namespace {

double euclid(const Point3& a, const Point3& b) {
    return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

}  // namespace

FiniteMetricSpace euclidean_space(const std::vector<Point3>& points) {
    if (points.empty()) throw Error(ErrorKind::EmptySpace, "no points");
    auto space = from_function(points.size(), [&](std::size_t i, std::size_t j) { return euclid(points[i], points[j]); });
    return space.with_coordinates(points);
}

FiniteMetricSpace knn_geodesic_space(const std::vector<Point3>& points, std::size_t k) {
    const std::size_t n = points.size();
    if (n == 0) throw Error(ErrorKind::EmptySpace, "no points");
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "knn geodesic needs k >= 1");
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return euclid(points[i], points[a]) < euclid(points[i], points[b]);
        });
        std::size_t taken = 0;
        for (std::size_t j : order) {
            if (taken == k) break;
            if (j == i) continue;
            const double w = euclid(points[i], points[j]);
            adj[i].push_back({j, w});
            adj[j].push_back({i, w});
            ++taken;
        }
    }
    std::vector<double> m(n * n, std::numeric_limits<double>::infinity());
    using Item = std::pair<double, std::size_t>;
    for (std::size_t s = 0; s < n; ++s) {
        double* dist = m.data() + s * n;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        dist[s] = 0.0;
        pq.push({0.0, s});
        while (!pq.empty()) {
            const auto [d, u] = pq.top();
            pq.pop();
            if (d > dist[u]) continue;
            for (const auto& [v, w] : adj[u]) {
                if (d + w < dist[v]) {
                    dist[v] = d + w;
                    pq.push({dist[v], v});
                }
            }
        }
    }
    // Components from the reachability of the first rows.
    std::vector<std::size_t> component(n, n);
    std::size_t components = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (component[s] != n) continue;
        for (std::size_t v = 0; v < n; ++v) {
            if (std::isfinite(m[s * n + v])) component[v] = components;
        }
        ++components;
    }
    if (components > 1) {
        throw Error(ErrorKind::DisconnectedGraph, std::to_string(k) + "-nearest-neighbor graph has " +
                                                      std::to_string(components) + " components");
    }
    // Dijkstra from each side can differ in the last bit; symmetrize.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) m[i * n + j] = m[j * n + i] = std::min(m[i * n + j], m[j * n + i]);
    }
    return validate_metric(m, n).with_coordinates(points);
}

FiniteMetricSpace load_distance_csv(const std::string& path) {
    auto rows = read_csv_rows(path);
    if (rows.empty()) throw Error(ErrorKind::ParseError, "'" + path + "' has no rows");
    return validate_metric(rows);
}

PointMetric PointMetric::parse(const std::string& text) {
    if (text == "euclidean") return {};
    if (text.rfind("knn:", 0) == 0) return {Kind::KnnGeodesic, parse_count(text.substr(4), "in metric '" + text + "'")};
    throw Error(ErrorKind::ParseError, "unknown point metric '" + text + "' (expected euclidean or knn:K)");
}

std::vector<Point3> read_points(const std::string& path) {
    const std::string body = read_file(path);
    std::vector<std::vector<double>> rows;
    const auto first = body.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && body[first] == '[') {
        try {
            rows = nlohmann::json::parse(body).get<std::vector<std::vector<double>>>();
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::ParseError, "'" + path + "': " + e.what());
        }
    } else {
        rows = read_csv_rows(path);
    }
    std::vector<Point3> points;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() < 2 || rows[i].size() > 3) {
            throw Error(ErrorKind::ParseError, "point " + std::to_string(i) + " of '" + path + "' has " +
                                                   std::to_string(rows[i].size()) + " coordinates");
        }
        points.push_back({rows[i][0], rows[i][1], rows[i].size() == 3 ? rows[i][2] : 0.0});
    }
    return points;
}

FiniteMetricSpace load_points(const std::string& path, PointMetric metric) {
    const auto points = read_points(path);
    return metric.kind == PointMetric::Kind::Euclidean ? euclidean_space(points)
                                                       : knn_geodesic_space(points, metric.k);
}

ShapeSpec ShapeSpec::parse(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.empty()) throw Error(ErrorKind::ParseError, "empty shape");
    const std::string where = "in shape '" + text + "'";
    auto arity = [&](std::size_t lo, std::size_t hi) {
        if (parts.size() < lo || parts.size() > hi) throw Error(ErrorKind::ParseError, "wrong field count " + where);
    };
    ShapeSpec s;
    const std::string& kind = parts[0];
    if (kind == "circle") {
        arity(2, 3);
        s.kind = Kind::Circle;
        s.count = parse_count(parts[1], where);
        if (parts.size() > 2) s.radius = parse_double(parts[2], where);
    } else if (kind == "sphere") {
        arity(2, 4);
        s.kind = Kind::SphereFps;
        s.count = parse_count(parts[1], where);
        if (parts.size() > 2) s.resolution = parse_count(parts[2], where);
        if (parts.size() > 3) s.seed = parse_count(parts[3], where);
    } else if (kind == "cube") {
        arity(1, 1);
        s.kind = Kind::GeodesicCube;
        s.count = 8;
    } else if (kind == "figure8") {
        arity(2, 3);
        s.kind = Kind::FigureEight;
        s.count = parse_count(parts[1], where);
        if (parts.size() > 2) s.radius = parse_double(parts[2], where);
    } else if (kind == "line") {
        arity(2, 2);
        s.kind = Kind::LineSegmentIntegers;
        s.count = parse_count(parts[1], where);
    } else {
        throw Error(ErrorKind::ParseError, "unknown shape kind '" + kind + "'");
    }
    if (s.count == 0) throw Error(ErrorKind::InvalidArgument, "count must be positive " + where);
    return s;
}

std::string ShapeSpec::to_string() const {
    std::ostringstream out;
    out.precision(17);
    switch (kind) {
        case Kind::Circle: out << "circle:" << count << ':' << radius; break;
        case Kind::SphereFps: out << "sphere:" << count << ':' << resolution << ':' << seed; break;
        case Kind::GeodesicCube: out << "cube"; break;
        case Kind::FigureEight: out << "figure8:" << count << ':' << radius; break;
        case Kind::LineSegmentIntegers: out << "line:" << count; break;
    }
    return out.str();
}

FiniteMetricSpace generate(const ShapeSpec& spec) {
    switch (spec.kind) {
        case ShapeSpec::Kind::Circle: return circle_geodesic(spec.count, spec.radius);
        case ShapeSpec::Kind::SphereFps: return sphere_fps(spec.count, spec.resolution, spec.seed);
        case ShapeSpec::Kind::GeodesicCube: return geodesic_cube();
        case ShapeSpec::Kind::FigureEight: return figure_eight(spec.count, spec.radius);
        case ShapeSpec::Kind::LineSegmentIntegers: return line_segment_integers(spec.count);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown shape kind");
}

}  // namespace curvfilt
