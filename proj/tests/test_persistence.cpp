#include "curvfilt/error.hpp"
#include "curvfilt/generators.hpp"
#include "curvfilt/persistence.hpp"
#include "fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_filtration.hpp"

#include <doctest.h>

#include <set>

using namespace curvfilt;

namespace {

using Bars = std::vector<PersistenceInterval>;

}  // namespace

TEST_SUITE("persistence") {

TEST_CASE("examples") {
    CHECK(barcode(rips_filtration(fixtures::one_point(), 1), 0).intervals == Bars{{0.0, kInfinity}});
    const double r = 2.5;
    CHECK(barcode(rips_filtration(fixtures::two_point(r), 1), 0).intervals == Bars{{0.0, r}, {0.0, kInfinity}});
    oracle::Rng rng(1);
    for (int t = 0; t < 10; ++t) {
        const auto s = oracle::random_space(rng, oracle::uniform_index(rng, 1, 7));
        CHECK(barcode(ult_filtration(s, 3, 1), 0).intervals == Bars{{0.0, kInfinity}});
    }
    // A square loop under Rips: one H1 class born at the side, killed at the diagonal.
    const auto sq = rips_filtration(fixtures::unit_square(), 2);
    CHECK(barcode(sq, 1).intervals == Bars{{1.0, std::sqrt(2.0)}});
}

TEST_CASE("dim cap and zero-length bars") {
    const auto fs = rips_filtration(fixtures::space_p(), 1);
    try {
        barcode(fs, 1);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DimCapInsufficient);
    }
    PersistenceDiagram d;
    d.add(1.0, 1.0);
    d.add(0.5, 2.0);
    CHECK(d.intervals.size() == 1);
}

TEST_CASE("clearing reduction agrees with the dense reduction") {
    oracle::Rng rng(2);
    for (int t = 0; t < 150; ++t) {
        const auto s = oracle::random_space(rng, oracle::uniform_index(rng, 1, 7));
        const std::size_t cap = oracle::uniform_index(rng, 1, 4);
        const auto fs = (t % 2) ? oracle::random_filtered_space(rng, s, cap) : rips_filtration(s, cap);
        const auto all = barcodes(fs, cap - 1);
        for (std::size_t k = 0; k + 1 <= cap; ++k) {
            CHECK(all[k] == barcode_dense(fs, k));
            CHECK(all[k] == barcode(fs, k));
        }
    }
}

TEST_CASE("implicit flag cohomology agrees with explicit reduction") {
    oracle::Rng rng(3);
    for (int t = 0; t < 120; ++t) {
        const auto s = oracle::random_space(rng, oracle::uniform_index(rng, 1, 9));
        const std::size_t max_k = oracle::uniform_index(rng, 0, 2);
        const std::size_t x0 = oracle::uniform_index(rng, 0, s.size() - 1);
        const double c = (t % 3) * 0.25;
        const auto w = (t % 2) ? ecc_weights(s, x0, c) : rips_weights(s);
        const auto fs = flag_filtration(s, w, "flag", max_k + 1);
        const auto implicit = flag_barcodes(w, max_k);
        const auto explicit_ = barcodes(fs, max_k);
        for (std::size_t k = 0; k <= max_k; ++k) CHECK(implicit[k] == explicit_[k]);
    }
    // Larger spaces with many ties exercise the reduction fallback.
    for (int t = 0; t < 6; ++t) {
        const auto s = oracle::random_graph_metric(rng, 14, 3);
        const auto fs = rips_filtration(s, 3);
        const auto implicit = flag_barcodes(rips_weights(s), 2);
        const auto explicit_ = barcodes(fs, 2);
        for (std::size_t k = 0; k <= 2; ++k) CHECK(implicit[k] == explicit_[k]);
    }
    const auto circle = circle_geodesic(24);
    CHECK(flag_barcodes(rips_weights(circle), 1)[1] == barcode(rips_filtration(circle, 2), 1));
}

TEST_CASE("union-find H0 agrees with reduction") {
    oracle::Rng rng(4);
    for (int t = 0; t < 200; ++t) {
        const auto s = oracle::random_space(rng, oracle::uniform_index(rng, 1, 8));
        const auto fs = oracle::random_filtered_space(rng, s, oracle::uniform_index(rng, 1, 2), 0.7);
        CHECK(barcode_h0_unionfind(fs) == barcode(fs, 0));
    }
    const auto f8 = figure_eight(40);
    const auto ecc = ecc_basepoint_filtration(f8, 0, 0.5, 1);
    const auto h0 = barcode_h0_unionfind(ecc);
    CHECK(h0 == barcode(ecc, 0));
    CHECK(h0.infinite_count() == 1);
    CHECK(h0.intervals.size() > 1);
    CHECK(barcode_h0_unionfind(upsilon_filtration(f8, 0.75)).intervals == Bars{{0.75, kInfinity}});
}

TEST_CASE("property: Euler characteristic at every filtration value") {
    // Every complex here lives inside the simplex on n points, whose single
    // top simplex has a nonzero boundary, so homology stops below degree n-1.
    oracle::Rng rng(5);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = oracle::uniform_index(rng, 2, 6);
        const auto s = oracle::random_space(rng, n);
        const auto fs = (t % 2) ? oracle::random_filtered_space(rng, s, n - 1, 0.9) : rips_filtration(s, n - 1);
        const auto dgms = barcodes(fs, n - 2);
        std::set<double> times;
        for (const auto& x : fs.simplices()) times.insert(x.arrival);
        for (double time : times) {
            long chi = 0;
            for (const auto& x : fs.simplices()) {
                if (x.arrival <= time) chi += (x.dimension() % 2 == 0) ? 1 : -1;
            }
            long betti = 0;
            for (std::size_t k = 0; k + 1 < n; ++k) {
                betti += (k % 2 == 0 ? 1 : -1) * static_cast<long>(oracle::alive_at(dgms[k], time));
            }
            CHECK(betti == chi);
        }
    }
}

TEST_CASE("determinism") {
    oracle::Rng rng(6);
    const auto s = oracle::random_graph_metric(rng, 8);
    const auto fs = rips_filtration(s, 2);
    CHECK(barcodes(fs, 1) == barcodes(fs, 1));
    CHECK(flag_barcodes(rips_weights(s), 1) == flag_barcodes(rips_weights(s), 1));
}

}  // TEST_SUITE
