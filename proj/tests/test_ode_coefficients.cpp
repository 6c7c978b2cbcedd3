#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boole/ode_coefficients.hpp"
#include "property_checks.hpp"

using boole::LaurentPoly;
using boole::Rat;

namespace {

const LaurentPoly l = LaurentPoly::lambda();

LaurentPoly poly(std::vector<Rat> c) { return LaurentPoly(0, std::move(c)); }

}  // namespace

TEST_CASE("golden rows") {
    auto tri = boole::triangle_by_recurrence(5);
    CHECK(tri.at(0, 0) == LaurentPoly::monomial(1, -1));
    CHECK(tri.row(1) == std::vector<LaurentPoly>{1, -1});
    CHECK(tri.row(2) == std::vector<LaurentPoly>{1 + l, -1 - 3 * l, 2 * l});
    // rows 3..5 from expanding d^N/dt^N of 1/(u+1), u = (1+t)^λ, in powers of F
    CHECK(tri.row(3) == std::vector<LaurentPoly>{poly({2, 3, 1}), poly({-2, -9, -7}), poly({0, 6, 12}), poly({0, 0, -6})});
    CHECK(tri.row(4) == std::vector<LaurentPoly>{poly({6, 11, 6, 1}), poly({-6, -33, -42, -15}), poly({0, 22, 72, 50}),
                                                 poly({0, 0, -36, -60}), poly({0, 0, 0, 24})});
    CHECK(tri.row(5) == std::vector<LaurentPoly>{poly({24, 50, 35, 10, 1}), poly({-24, -150, -245, -150, -31}),
                                                 poly({0, 100, 420, 500, 180}), poly({0, 0, -210, -600, -390}),
                                                 poly({0, 0, 0, 240, 360}), poly({0, 0, 0, 0, -120})});
    CHECK(tri.at(3, 3) == l * l * Rat(-6));
    CHECK(tri.at(0, 4) == (l + 3) * (l + 2) * (l + 1));
}

TEST_CASE("boundary closed forms match the recurrence") {
    auto tri = boole::triangle_by_recurrence(12);
    for (int n = 0; n <= 12; ++n) {
        CHECK(tri.at(0, n) == boole::first_row_closed_form(n));
        CHECK(tri.at(n, n) == boole::diagonal_closed_form(n));
    }
    CHECK(boole::first_row_closed_form(0) == LaurentPoly::monomial(1, -1));
    CHECK(boole::diagonal_closed_form(4) == LaurentPoly::monomial(24, 3));
}

TEST_CASE("nested-sum closed form matches the recurrence") {
    CHECK(boole::closed_form_entry(1, 2) == -1 - 3 * l);
    auto tri = boole::triangle_by_recurrence(12);
    CHECK(boole::closed_form_entry(2, 4) == tri.at(2, 4));
    for (int n = 2; n <= 12; ++n)
        for (int j = 1; j <= n - 1; ++j) {
            CAPTURE(n);
            CAPTURE(j);
            CHECK(boole::closed_form_entry(j, n) == tri.at(j, n));
        }
}

TEST_CASE("single-sum form of a_1") {
    // a_1(N+1) = -λ Σ_{i=0}^{N} (N+2λ)_i (N+λ-i-1)_{N-i-1}
    auto tri = boole::triangle_by_recurrence(11);
    for (int n = 1; n <= 10; ++n) {
        LaurentPoly sum;
        for (int i = 0; i <= n; ++i)
            sum += boole::falling_factorial(n + 2 * l, i) * boole::falling_factorial(n + l - (i + 1), n - i - 1);
        CHECK(-l * sum == tri.at(1, n + 1));
    }
}

TEST_CASE("closed form index range") {
    CHECK_THROWS_AS(boole::closed_form_entry(0, 3), std::out_of_range);
    CHECK_THROWS_AS(boole::closed_form_entry(3, 3), std::out_of_range);
    CHECK_THROWS_AS(boole::closed_form_entry(1, 1), std::out_of_range);
}

TEST_CASE("once-unrolled recurrence") {
    auto tri = boole::triangle_by_recurrence(11);
    for (int n = 2; n <= 11; ++n)
        for (int k = 1; k <= n - 1; ++k) CHECK(boole::unrolled_entry(tri, k, n) == tri.at(k, n));
    CHECK_THROWS_AS(boole::unrolled_entry(tri, 0, 3), std::out_of_range);
}

TEST_CASE("structure of the triangle") {
    auto tri = boole::triangle_by_recurrence(12);
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(tri.at(k, n).is_polynomial());
            CHECK(tri.at(k, n).degree() <= n - 1);
        }
    CHECK_THROWS_AS(tri.at(3, 2), std::out_of_range);
    CHECK_THROWS_AS(tri.at(0, 13), std::out_of_range);
}

TEST_CASE("matrix view") {
    auto tri = boole::triangle_by_recurrence(4);
    auto m = boole::matrix_view(tri);
    REQUIRE(m.size() == 5);
    CHECK(m[2][1].is_zero());
    CHECK(m[0][3] == boole::falling_factorial(2 + l, 2));
    CHECK(m[2][2] == 2 * l);
    CHECK(m[0][0] == LaurentPoly::monomial(1, -1));
    for (int j = 0; j <= 4; ++j) CHECK(m[j][j] == boole::diagonal_closed_form(j));
}

TEST_CASE("extending the triangle keeps earlier rows") {
    auto small = boole::triangle_by_recurrence(3);
    auto rows3 = small.row(3);
    small.extend_to(8);
    CHECK(small.n_max() == 8);
    CHECK(small.row(3) == rows3);
    auto big = boole::triangle_by_recurrence(8);
    for (int n = 0; n <= 8; ++n) CHECK(small.row(n) == big.row(n));
}

TEST_CASE("fixed-lambda triangle is the specialization of the symbolic one") {
    boole::testing::Gen g(21);
    auto tri = boole::triangle_by_recurrence(9);
    for (int trial = 0; trial < 5; ++trial) {
        Rat q = g.nonzero_rat();
        auto fixed = boole::triangle_by_recurrence(9, q);
        for (int n = 0; n <= 9; ++n)
            for (int k = 0; k <= n; ++k) CHECK(fixed.at(k, n) == tri.at(k, n).evaluate(q));
    }
    CHECK_THROWS_AS(boole::triangle_by_recurrence(3, Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(boole::triangle_by_recurrence(0), std::invalid_argument);
}
