#include "curvfilt/curvature.hpp"
#include "curvfilt/error.hpp"
#include "fixtures.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace curvfilt;

TEST_SUITE("curvature") {

TEST_CASE("distance_tuple_matrix") {
    const auto q = fixtures::space_q();
    const std::vector<std::size_t> constant{2, 2, 2};
    CHECK(distance_tuple_matrix(q, constant) == Matrix(3, 0.0));
    const std::vector<std::size_t> pair{0, 1};
    CHECK(distance_tuple_matrix(fixtures::two_point(3.0), pair) == Matrix::constant_off_diagonal(2, 3.0));
    const std::vector<std::size_t> all{0, 1, 2, 3};
    CHECK(distance_tuple_matrix(q, all) == Matrix::from_rows(q.to_rows()));
    const std::vector<std::size_t> bad{0, 9};
    CHECK_THROWS_AS(distance_tuple_matrix(q, bad), Error);
}

TEST_CASE("curvature_set examples") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto k = curvature_set(fixtures::one_point(), n);
        CHECK(k.size() == 1);
        CHECK(k.contains(Matrix(n, 0.0)));
    }
    const auto k2 = curvature_set(fixtures::two_point(1.5), 2);
    CHECK(k2 == MatrixSet({Matrix(2, 0.0), Matrix::constant_off_diagonal(2, 1.5)}));

    // K_2(σ) = {M(d(x,x'))}
    oracle::Rng rng(5);
    for (int t = 0; t < 30; ++t) {
        const auto s = oracle::random_space(rng, oracle::uniform_index(rng, 1, 6));
        std::vector<Matrix> expected;
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = 0; j < s.size(); ++j) expected.push_back(Matrix::constant_off_diagonal(2, s(i, j)));
        }
        CHECK(curvature_set(s, 2) == MatrixSet(expected));
    }
}

TEST_CASE("enumeration budget") {
    const auto q = fixtures::space_q();
    try {
        curvature_set(q, 4, 255);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EnumerationBudgetExceeded);
        CHECK(std::string(e.what()).find("256") != std::string::npos);
    }
    CHECK(curvature_set(q, 4, 256).size() > 1);
}

TEST_CASE("basepoint curvature sets") {
    const auto q = fixtures::space_q();
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto k = basepoint_curvature_set(q, 2, PointSubset(q, {2}), n);
        CHECK(k == MatrixSet({Matrix(n + 1, 0.0)}));
    }
    const auto x = fixtures::two_point(2.0);
    CHECK(basepoint_curvature_set(x, 0, PointSubset(x, {1}), 1) ==
          MatrixSet({Matrix::constant_off_diagonal(2, 2.0)}));

    oracle::Rng rng(17);
    for (int t = 0; t < 40; ++t) {
        const auto s = oracle::random_space(rng, oracle::uniform_index(rng, 2, 5));
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (rng() & 1) idx.push_back(i);
        }
        if (idx.empty()) idx.push_back(s.size() - 1);
        const PointSubset sigma(s, idx);
        const std::size_t n = oracle::uniform_index(rng, 1, 3);
        const std::size_t x0 = oracle::uniform_index(rng, 0, s.size() - 1);
        CHECK(project_away_basepoint(basepoint_curvature_set(s, x0, sigma, n)) ==
              curvature_set(restrict(s, sigma), n));
    }
}

TEST_CASE("hausdorff_linf") {
    const MatrixSet zero({Matrix(2, 0.0)});
    const MatrixSet both({Matrix(2, 0.0), Matrix::constant_off_diagonal(2, 0.75)});
    CHECK(hausdorff_linf(zero, zero) == 0.0);
    CHECK(hausdorff_linf(zero, both) == 0.75);
    CHECK(hausdorff_linf(both, zero) == 0.75);
    CHECK_THROWS_AS(hausdorff_linf(zero, MatrixSet({Matrix(3, 0.0)})), Error);

    oracle::Rng rng(8);
    for (int t = 0; t < 200; ++t) {
        const auto a = oracle::random_dyadic_set(rng, 2, oracle::uniform_index(rng, 1, 4));
        const auto b = oracle::random_dyadic_set(rng, 2, oracle::uniform_index(rng, 1, 4));
        const auto c = oracle::random_dyadic_set(rng, 2, oracle::uniform_index(rng, 1, 4));
        CHECK(hausdorff_linf(a, b) == hausdorff_linf(b, a));
        CHECK(hausdorff_linf(a, c) <= hausdorff_linf(a, b) + hausdorff_linf(b, c) + 1e-12);
    }
}

TEST_CASE("gromov_hausdorff_bruteforce examples") {
    CHECK(gromov_hausdorff_bruteforce(fixtures::two_point(3.0), fixtures::one_point()) == 1.5);
    const double eps = 0.375;
    CHECK(gromov_hausdorff_bruteforce(fixtures::two_point(1.0), fixtures::two_point(1 + eps)) ==
          doctest::Approx(eps / 2).epsilon(1e-15));
    CHECK(gromov_hausdorff_bruteforce(fixtures::space_q(), fixtures::space_q()) == 0.0);
    try {
        gromov_hausdorff_bruteforce(fixtures::space_q(), fixtures::unit_square(), 15);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
}

TEST_CASE("gromov_hausdorff_bruteforce matches the map-pair oracle") {
    oracle::Rng rng(2024);
    for (int t = 0; t < 150; ++t) {
        const auto x = oracle::random_space(rng, oracle::uniform_index(rng, 1, 4));
        const auto y = oracle::random_space(rng, oracle::uniform_index(rng, 1, 4));
        CHECK(gromov_hausdorff_bruteforce(x, y) == doctest::Approx(oracle::gh_by_map_pairs(x, y)).epsilon(1e-12));
    }
}

TEST_CASE("property: functoriality, stability, almost-metric") {
    oracle::Rng rng(77);
    for (int t = 0; t < 60; ++t) {
        const auto s = oracle::random_space(rng, oracle::uniform_index(rng, 1, 5));
        const std::size_t n = oracle::uniform_index(rng, 2, 3);
        const auto k = curvature_set(s, n);
        CHECK(k.almost_metric());
        CHECK(k.contains(Matrix(n, 0.0)));
        for (const auto& m : k) CHECK(m.is_symmetric_zero_diagonal());

        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (rng() & 1) idx.push_back(i);
        }
        if (idx.empty()) idx.push_back(0);
        CHECK(curvature_set(restrict(s, PointSubset(s, idx)), n).is_subset_of(k));
    }
    for (int t = 0; t < 60; ++t) {
        const auto x = oracle::random_space(rng, oracle::uniform_index(rng, 1, 4));
        const auto y = oracle::random_space(rng, oracle::uniform_index(rng, 1, 4));
        const double gh = gromov_hausdorff_bruteforce(x, y);
        for (std::size_t n : {2u, 3u}) {
            CHECK(hausdorff_linf(curvature_set(x, n), curvature_set(y, n)) <= 2 * gh + 1e-9);
        }
    }
}

}  // TEST_SUITE
