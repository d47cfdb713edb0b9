#include "curvfilt/error.hpp"
#include "curvfilt/generators.hpp"
#include "curvfilt/persistence.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>

using namespace curvfilt;

namespace {

constexpr double kPi = std::numbers::pi;

std::string temp_file(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / ("curvfilt_test_" + name);
    std::ofstream(path) << body;
    return path.string();
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_SUITE("generators") {

TEST_CASE("circle") {
    CHECK(circle_geodesic(2)(0, 1) == kPi);
    const auto c4 = circle_geodesic(4);
    std::set<double> values;
    for (double d : c4.data()) values.insert(d);
    CHECK(values == std::set<double>{0.0, kPi / 2, kPi});

    const auto c50 = circle_geodesic(50);
    double min_pos = kInfinity;
    for (double d : c50.data()) {
        if (d > 0) min_pos = std::min(min_pos, d);
    }
    CHECK(min_pos == doctest::Approx(kPi / 25).epsilon(1e-15));
    // Brute-force ult over all triples: the smallest nonzero value is one arc step.
    double min_ult = kInfinity;
    for (std::size_t a = 0; a < 50; ++a) {
        for (std::size_t b = 0; b < 50; ++b) {
            for (std::size_t c = 0; c < 50; ++c) {
                const double u = c50(a, c) - std::max(c50(a, b), c50(b, c));
                if (u > 1e-12) min_ult = std::min(min_ult, u);
            }
        }
    }
    CHECK(min_ult == doctest::Approx(kPi / 25).epsilon(1e-12));

    for (std::size_t i = 0; i < 50; ++i) {
        for (std::size_t j = 0; j < 50; ++j) CHECK(c50(i, j) == c50(0, (j + 50 - i) % 50));
    }
    CHECK(circle_geodesic(7, 2.0)(0, 1) == doctest::Approx(4 * kPi / 7));
}

TEST_CASE("sphere") {
    for (std::uint64_t seed : {0u, 5u, 999u}) CHECK(sphere_fps(2, 2000, seed)(0, 1) == doctest::Approx(kPi).epsilon(0.1 / kPi));
    const auto s6 = sphere_fps(6);
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = i + 1; j < 6; ++j) CHECK(s6(i, j) >= kPi / 4);
    }
    CHECK(sphere_fps(1).size() == 1);
    CHECK(kind_of([] { sphere_fps(10, 5); }) == ErrorKind::InsufficientCandidates);
    CHECK(sphere_fps(50, 2000, 3).data().size() == 2500);
}

TEST_CASE("geodesic cube") {
    const auto cube = geodesic_cube();
    const double beta = std::acos(1.0 / 3), gamma = std::acos(-1.0 / 3);
    CHECK(cube(0, 1) == doctest::Approx(beta));  // one coordinate flips
    CHECK(beta == doctest::Approx(1.2310).epsilon(1e-4));
    CHECK(cube(0, 3) == doctest::Approx(gamma));  // two flip
    CHECK(gamma == doctest::Approx(1.9106).epsilon(1e-4));
    CHECK(cube(0, 7) == kPi);
    for (double d : cube.data()) {
        const bool known = d == 0.0 || std::abs(d - beta) < 1e-15 || std::abs(d - gamma) < 1e-15 || d == kPi;
        CHECK(known);
    }
}

TEST_CASE("figure eight") {
    CHECK(kind_of([] { figure_eight(401); }) == ErrorKind::OddCount);
    CHECK(kind_of([] { figure_eight(6); }) == ErrorKind::InvalidArgument);
    const std::size_t n = 40, m = n / 2;
    const auto f = figure_eight(n, 1.0);
    CHECK(f.size() == n - 1);
    const double step = 2 * kPi / m;
    const std::size_t a = figure_eight_far_point(n);  // antipodal to the junction on loop A
    const std::size_t b = m + m / 2 - 1;              // same on loop B
    CHECK(f(0, a) == doctest::Approx(kPi));
    CHECK(f(0, b) == doctest::Approx(kPi));
    CHECK(f(a, b) == doctest::Approx(f(a, 0) + f(0, b)));
    CHECK(f(0, 3) == doctest::Approx(3 * step));
    CHECK(f(1, m - 1) == doctest::Approx(2 * step));
    CHECK(f(1, m) == doctest::Approx(2 * step));  // across the junction
}

TEST_CASE("figure eight Rips H1 has two equal long bars") {
    const auto f = figure_eight(400, 1.0);
    const auto h1 = flag_barcodes(rips_weights(f), 1)[1];
    double longest = 0.0;
    for (const auto& i : h1.intervals) longest = std::max(longest, i.persistence());
    std::vector<double> long_bars;
    for (const auto& i : h1.intervals) {
        if (i.persistence() >= 0.5 * longest) long_bars.push_back(i.persistence());
    }
    REQUIRE(long_bars.size() == 2);
    CHECK(std::abs(long_bars[0] - long_bars[1]) <= 1e-6);
}

TEST_CASE("line segment") {
    const auto x = line_segment_integers(5);
    CHECK(x(0, 4) == 4.0);
    CHECK(x(1, 3) == 2.0);
}

TEST_CASE("loaders") {
    const auto two = load_distance_csv(temp_file("two.csv", "0,1\n1,0\n"));
    CHECK(two.size() == 2);
    CHECK(two(0, 1) == 1.0);
    CHECK(kind_of([] { load_distance_csv(temp_file("bad.csv", "0,x\n1,0\n")); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { load_distance_csv("/nonexistent/nowhere.csv"); }) == ErrorKind::IoError);

    const auto tri = load_points(temp_file("tri.csv", "0,0\n3,0\n0,4\n"));
    CHECK(tri(1, 2) == 5.0);
    const auto json = load_points(temp_file("tri.json", "[[0,0,0],[3,0,0],[0,4,0]]"));
    CHECK(json == tri);
    CHECK(json.has_coordinates());
    CHECK(kind_of([] { load_points(temp_file("bad.json", "[[0,0],[1]]")); }) == ErrorKind::ParseError);

    const auto gap = temp_file("gap.csv", "0,0\n1,0\n10,0\n11,0\n");
    try {
        load_points(gap, PointMetric::parse("knn:1"));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DisconnectedGraph);
        CHECK(std::string(e.what()).find("2 components") != std::string::npos);
    }
    const auto path = load_points(gap, PointMetric::parse("knn:2"));
    CHECK(path(0, 3) == 11.0);
    CHECK(kind_of([] { PointMetric::parse("manhattan"); }) == ErrorKind::ParseError);
}

TEST_CASE("shape specs") {
    CHECK(ShapeSpec::parse("circle:50").count == 50);
    CHECK(ShapeSpec::parse("circle:50:0.5").radius == 0.5);
    const auto s = ShapeSpec::parse("sphere:50:1000:7");
    CHECK(s.resolution == 1000);
    CHECK(s.seed == 7);
    CHECK(ShapeSpec::parse("cube").kind == ShapeSpec::Kind::GeodesicCube);
    CHECK(ShapeSpec::parse("figure8:400").kind == ShapeSpec::Kind::FigureEight);
    CHECK(ShapeSpec::parse("line:6").count == 6);
    for (const char* bad : {"circle", "circle:x", "torus:3", "cube:2", "line:0", "circle:5:1:2"}) {
        CHECK_THROWS_AS(ShapeSpec::parse(bad), Error);
    }
    CHECK(generate(ShapeSpec::parse(ShapeSpec::parse("figure8:12:2").to_string())) == figure_eight(12, 2.0));
}

TEST_CASE("generators are deterministic and metric") {
    for (const char* spec : {"circle:37", "sphere:30", "cube", "figure8:60", "line:9"}) {
        const auto a = generate(ShapeSpec::parse(spec));
        const auto b = generate(ShapeSpec::parse(spec));
        CHECK(a == b);
        CHECK(a.triangle_enforced());
    }
}

}  // TEST_SUITE
