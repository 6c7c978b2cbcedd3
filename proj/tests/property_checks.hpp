#pragma once

// Randomized algebraic-law checks shared by the unit tests and the acceptance
// suite. Each check runs `cases` independent trials from a fixed seed and
// returns the number of failing trials.

#include <cstdint>
#include <random>

#include "boole/laurent_poly.hpp"
#include "boole/rational.hpp"
#include "boole/series.hpp"

namespace boole::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rat rat() { return Rat(integer(-20, 20), integer(1, 12)); }
    Rat nonzero_rat() {
        Rat q = rat();
        while (q.is_zero()) q = rat();
        return q;
    }

    /// Up to `terms` coefficients starting at exponent min_lo..0.
    LaurentPoly poly(int min_lo = 0, int terms = 4) {
        int lo = integer(min_lo, 0);
        int n = integer(0, terms);
        std::vector<Rat> c;
        for (int i = 0; i < n; ++i) c.push_back(integer(0, 3) == 0 ? Rat(0) : rat());
        return LaurentPoly(lo, std::move(c));
    }

    template <class R>
    R element();

    template <class R>
    Series<R> series(int order, bool unit_constant = false) {
        Series<R> s(order);
        for (int n = 0; n < order; ++n) s[n] = element<R>();
        if (unit_constant) s[0] = R(nonzero_rat());
        return s;
    }

private:
    std::mt19937_64 rng_;
};

template <>
inline Rat Gen::element<Rat>() {
    return rat();
}
template <>
inline LaurentPoly Gen::element<LaurentPoly>() {
    return poly(0, 3);
}

inline int check_rat_field_axioms(int cases, std::uint64_t seed) {
    Gen g(seed);
    int failures = 0;
    for (int i = 0; i < cases; ++i) {
        Rat a = g.rat(), b = g.rat(), c = g.rat();
        bool ok = (a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) && a * b == b * a &&
                  a * (b + c) == a * b + a * c && a + Rat(0) == a && a * Rat(1) == a && a + (-a) == Rat(0) &&
                  (a + b) - b == a;
        if (!a.is_zero()) ok = ok && a * a.inverse() == Rat(1) && (b / a) * a == b;
        if (!ok) ++failures;
    }
    return failures;
}

inline int check_laurent_ring_axioms(int cases, std::uint64_t seed) {
    Gen g(seed);
    int failures = 0;
    for (int i = 0; i < cases; ++i) {
        // additive laws may use the λ^{-1} term; products stay polynomial
        LaurentPoly a = g.poly(-1), b = g.poly(-1), c = g.poly(-1);
        LaurentPoly p = g.poly(0), q = g.poly(0), r = g.poly(0);
        bool ok = (a + b) + c == a + (b + c) && a + b == b + a && a + LaurentPoly() == a && a + (-a) == LaurentPoly() &&
                  (a + b) - b == a && (p * q) * r == p * (q * r) && p * q == q * p && p * (q + r) == p * q + p * r &&
                  p * LaurentPoly(1) == p && a * LaurentPoly(1) == a && a * p == p * a;
        if (!ok) ++failures;
    }
    return failures;
}

template <class R>
int check_series_inverse_law(int cases, std::uint64_t seed) {
    Gen g(seed);
    int failures = 0;
    for (int i = 0; i < cases; ++i) {
        int order = g.integer(1, 7);
        Series<R> a = g.series<R>(order, true);
        if (!(a * inverse(a) == Series<R>::constant(RingTraits<R>::one(), order))) ++failures;
    }
    return failures;
}

template <class R>
int check_leibniz_rule(int cases, std::uint64_t seed) {
    Gen g(seed);
    int failures = 0;
    for (int i = 0; i < cases; ++i) {
        int order = g.integer(2, 8);
        Series<R> a = g.series<R>(order), b = g.series<R>(order);
        if (!(derivative(a * b) == derivative(a) * b + a * derivative(b))) ++failures;
    }
    return failures;
}

inline int check_binom_pow_additivity(int cases, std::uint64_t seed) {
    Gen g(seed);
    int failures = 0;
    for (int i = 0; i < cases; ++i) {
        int order = g.integer(1, 7);
        LaurentPoly alpha = g.poly(0, 3), beta = g.poly(0, 3);
        if (!(binom_pow(alpha, order) * binom_pow(beta, order) == binom_pow(alpha + beta, order))) ++failures;
    }
    return failures;
}

}  // namespace boole::testing
