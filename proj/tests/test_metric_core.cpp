#include "curvfilt/error.hpp"
#include "curvfilt/metric_space.hpp"
#include "fixtures.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace curvfilt;

namespace {

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

TEST_SUITE("metric_core") {

TEST_CASE("validate_metric accepts and rejects") {
    const auto two = validate_metric({{0, 1}, {1, 0}});
    CHECK(two.size() == 2);
    CHECK(two(0, 1) == 1.0);

    CHECK(kind_of([] { validate_metric({{0, 1}, {2, 0}}); }) == ErrorKind::AsymmetricMatrix);
    CHECK(kind_of([] { validate_metric({{0, -1}, {-1, 0}}); }) == ErrorKind::NegativeEntry);
    CHECK(kind_of([] { validate_metric({{1, 1}, {1, 0}}); }) == ErrorKind::NonzeroDiagonal);
    CHECK(kind_of([] { validate_metric({{0, 1}, {1}}); }) == ErrorKind::NonSquareMatrix);
    CHECK(kind_of([] { validate_metric(std::vector<std::vector<double>>{}); }) == ErrorKind::EmptySpace);

    const std::vector<std::vector<double>> bad{{0, 1, 5}, {1, 0, 1}, {5, 1, 0}};
    CHECK(kind_of([&] { validate_metric(bad); }) == ErrorKind::TriangleViolation);
    const auto loose = validate_metric(bad, false);
    CHECK_FALSE(loose.triangle_enforced());
    CHECK(loose.triangle_violation_count() == 1);
    REQUIRE(loose.triangle_violations().size() == 1);
    CHECK(loose.triangle_violations()[0].excess == doctest::Approx(3.0));

    CHECK(fixtures::space_q().size() == 4);
}

TEST_CASE("error messages name the offending indices") {
    try {
        validate_metric({{0, 1, 2}, {1, 0, 3}, {2, 4, 0}});
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("(1, 2)") != std::string::npos);
    }
}

TEST_CASE("restrict") {
    const auto q = fixtures::space_q();
    const auto a = restrict(q, PointSubset(q, {1, 2, 3}));
    CHECK(a == fixtures::space_p());
    CHECK(restrict(q, PointSubset::all(q)) == q);
    CHECK(restrict(q, PointSubset(q, {2})).size() == 1);
    CHECK_THROWS_AS(PointSubset(q, {1, 4}), Error);
    try {
        PointSubset(q, {7});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IndexOutOfRange);
    }
    CHECK_THROWS_AS(PointSubset(q, {2, 1}), Error);
    CHECK_THROWS_AS(PointSubset(q, {}), Error);
}

TEST_CASE("diameter and eccentricity") {
    CHECK(diameter(fixtures::one_point()) == 0.0);
    CHECK(diameter(fixtures::two_point(2.5)) == 2.5);
    CHECK(diameter(fixtures::space_q()) == 2.0);
    CHECK(eccentricity(fixtures::two_point(2.5), 0) == 2.5);
    CHECK(eccentricity(fixtures::two_point(2.5), 1) == 2.5);
    CHECK(eccentricity(fixtures::space_q(), 0) == 1.0);
    CHECK(eccentricity(fixtures::space_q(), 1) == 2.0);
    CHECK(kind_of([] { eccentricity(fixtures::space_q(), 4); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("farthest point sampling") {
    const auto line = validate_metric({{0, 1, 2, 3}, {1, 0, 1, 2}, {2, 1, 0, 1}, {3, 2, 1, 0}});
    CHECK(farthest_point_sample(line, 2, 0) == std::vector<std::size_t>{0, 3});
    CHECK(farthest_point_sample(line, 1, 2) == std::vector<std::size_t>{2});
    auto all = farthest_point_sample(line, 4, 1);
    CHECK(all.front() == 1);
    std::sort(all.begin(), all.end());
    CHECK(all == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(kind_of([&] { farthest_point_sample(line, 5, 0); }) == ErrorKind::CountExceedsSize);

    // Brute force: the second point maximizes distance to the seed, smallest index on ties.
    oracle::Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        const auto s = oracle::random_graph_metric(rng, oracle::uniform_index(rng, 2, 7));
        const std::size_t seed = oracle::uniform_index(rng, 0, s.size() - 1);
        const auto sample = farthest_point_sample(s, s.size(), seed);
        CHECK(sample == farthest_point_sample(s, s.size(), seed));
        std::size_t best = 0;
        for (std::size_t v = 1; v < s.size(); ++v) {
            if (s(seed, v) > s(seed, best)) best = v;
        }
        CHECK(sample[1] == best);
    }
}

TEST_CASE("distortion") {
    const auto x = fixtures::two_point(1.0);
    CHECK(distortion(x, x, Correspondence::identity(2)) == 0.0);
    CHECK(distortion(x, fixtures::one_point(), Correspondence(2, 1, {{0, 0}, {1, 0}})) == 1.0);
    const double eps = 0.25;
    CHECK(distortion(x, fixtures::two_point(1 + eps), Correspondence(2, 2, {{0, 0}, {1, 1}})) == doctest::Approx(eps));
    CHECK(kind_of([] { Correspondence(2, 2, {{0, 0}}); }) == ErrorKind::InvalidCorrespondence);
    CHECK(kind_of([&] { distortion(x, x, Correspondence::identity(3)); }) == ErrorKind::InvalidCorrespondence);
}

TEST_CASE("property: subsets shrink diameter, eccentricity bounded by diameter") {
    oracle::Rng rng(1234);
    for (int t = 0; t < 100; ++t) {
        const auto s = oracle::random_space(rng, oracle::uniform_index(rng, 1, 7));
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (rng() & 1) idx.push_back(i);
        }
        if (idx.empty()) idx.push_back(0);
        CHECK(diameter(restrict(s, PointSubset(s, idx))) <= diameter(s));
        for (std::size_t p = 0; p < s.size(); ++p) CHECK(eccentricity(s, p) <= diameter(s));
    }
}

TEST_CASE("property: eccentricity and diameter move by at most the distortion") {
    oracle::Rng rng(99);
    for (int t = 0; t < 200; ++t) {
        const auto x = oracle::random_space(rng, oracle::uniform_index(rng, 1, 5));
        const auto y = oracle::random_space(rng, oracle::uniform_index(rng, 1, 5));
        std::vector<Correspondence::Pair> pairs;
        for (std::size_t i = 0; i < x.size(); ++i) pairs.push_back({i, oracle::uniform_index(rng, 0, y.size() - 1)});
        for (std::size_t j = 0; j < y.size(); ++j) pairs.push_back({oracle::uniform_index(rng, 0, x.size() - 1), j});
        for (int extra = 0; extra < 3; ++extra) {
            pairs.push_back({oracle::uniform_index(rng, 0, x.size() - 1), oracle::uniform_index(rng, 0, y.size() - 1)});
        }
        const Correspondence r(x.size(), y.size(), pairs);
        const double dis = distortion(x, y, r);
        CHECK(std::abs(diameter(x) - diameter(y)) <= dis + 1e-12);
        for (const auto& [a, b] : r.pairs()) CHECK(std::abs(eccentricity(x, a) - eccentricity(y, b)) <= dis + 1e-12);
    }
}

}  // TEST_SUITE
