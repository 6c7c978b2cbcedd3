#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "boole/laurent_poly.hpp"
#include "boole/rational.hpp"

namespace boole {

/// Coefficient-ring hooks used by Series. Specialized for Rat and LaurentPoly.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rat> {
    static Rat zero() { return 0; }
    static Rat one() { return 1; }
    static bool is_invertible(const Rat& r) { return !r.is_zero(); }
    static Rat inverse(const Rat& r) { return r.inverse(); }
};

template <>
struct RingTraits<LaurentPoly> {
    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return 1; }
    // units of the λ^{-1}..λ^d domain: c·λ^e with e in {-1, 0, 1}
    static bool is_invertible(const LaurentPoly& p) {
        return p.is_monomial() && p.min_exp() >= -1 && p.min_exp() <= 1;
    }
    static LaurentPoly inverse(const LaurentPoly& p) {
        if (!is_invertible(p)) throw DomainError("not a unit: " + p.to_string());
        return LaurentPoly::monomial(p.coeffs().front().inverse(), -p.min_exp());
    }
};

template <class R>
concept CoefficientRing = requires(R a, const R& b, const Rat& q) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { a * q } -> std::convertible_to<R>;
    { a / q } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { RingTraits<R>::zero() } -> std::convertible_to<R>;
    { RingTraits<R>::one() } -> std::convertible_to<R>;
    { RingTraits<R>::is_invertible(b) } -> std::convertible_to<bool>;
    { RingTraits<R>::inverse(b) } -> std::convertible_to<R>;
};

/// Power series in t known modulo t^order.
///
/// Binary operations on series of different orders truncate to the
/// smaller order; the result's order() records what is actually known.
template <CoefficientRing R>
class Series {
public:
    using Traits = RingTraits<R>;

    explicit Series(int order) : coeffs_(checked_order(order), Traits::zero()) {}
    explicit Series(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { checked_order(order()); }

    static Series constant(const R& c, int order) {
        Series s(order);
        s.coeffs_[0] = c;
        return s;
    }
    /// The series t (or 0 when order == 1).
    static Series variable(int order) {
        Series s(order);
        if (order > 1) s.coeffs_[1] = Traits::one();
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<R>& coeffs() const { return coeffs_; }
    const R& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    R& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

    Series truncated(int order) const {
        if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
        return Series(std::vector<R>(coeffs_.begin(), coeffs_.begin() + checked_order(order)));
    }

    Series operator-() const {
        Series r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()));
        for (int n = 0; n < r.order(); ++n) r[n] = a[n] + b[n];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

    /// Cauchy product modulo t^min(order).
    friend Series operator*(const Series& a, const Series& b) {
        Series r(std::min(a.order(), b.order()));
        for (int i = 0; i < r.order(); ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; i + j < r.order(); ++j) {
                if (b[j].is_zero()) continue;
                r[i + j] = r[i + j] + a[i] * b[j];
            }
        }
        return r;
    }

    friend Series operator*(const Series& a, const R& c) {
        Series r = a;
        for (auto& x : r.coeffs_) x = x * c;
        return r;
    }
    friend Series operator*(const R& c, const Series& a) { return a * c; }

    friend bool operator==(const Series&, const Series&) = default;

private:
    static std::size_t checked_order(int order) {
        if (order < 1) throw std::invalid_argument("series order must be >= 1, got " + std::to_string(order));
        return static_cast<std::size_t>(order);
    }

    std::vector<R> coeffs_;
};

/// Multiplicative inverse; the constant term must be a unit of R.
template <CoefficientRing R>
Series<R> inverse(const Series<R>& a) {
    using T = RingTraits<R>;
    if (!T::is_invertible(a[0])) throw DomainError("series inverse: constant term is not invertible");
    const R c0_inv = T::inverse(a[0]);
    Series<R> b(a.order());
    b[0] = c0_inv;
    for (int n = 1; n < a.order(); ++n) {
        R acc = T::zero();
        for (int k = 1; k <= n; ++k)
            if (!a[k].is_zero()) acc = acc + a[k] * b[n - k];
        b[n] = -(acc * c0_inv);
    }
    return b;
}

/// d/dt; the result is known to one order less.
template <CoefficientRing R>
Series<R> derivative(const Series<R>& a) {
    if (a.order() < 2) throw std::invalid_argument("derivative needs order >= 2");
    Series<R> d(a.order() - 1);
    for (int n = 0; n < d.order(); ++n) d[n] = a[n + 1] * Rat(n + 1);
    return d;
}

/// exp(a) for a with zero constant term, from n b_n = Σ_{k=1}^{n} k a_k b_{n-k}.
template <CoefficientRing R>
Series<R> exp(const Series<R>& a) {
    using T = RingTraits<R>;
    if (!a[0].is_zero()) throw DomainError("series exp: constant term must be zero");
    Series<R> b(a.order());
    b[0] = T::one();
    for (int n = 1; n < a.order(); ++n) {
        R acc = T::zero();
        for (int k = 1; k <= n; ++k)
            if (!a[k].is_zero()) acc = acc + a[k] * b[n - k] * Rat(k);
        b[n] = acc / Rat(n);
    }
    return b;
}

/// log(1+t) = t - t^2/2 + t^3/3 - ... modulo t^order.
template <CoefficientRing R = Rat>
Series<R> log1p(int order) {
    Series<R> s(order);
    for (int k = 1; k < order; ++k) s[k] = RingTraits<R>::one() * Rat(k % 2 == 1 ? 1 : -1, k);
    return s;
}

/// e^t - 1 modulo t^order.
template <CoefficientRing R = Rat>
Series<R> expm1(int order) {
    Series<R> s(order);
    Rat inv_fact = 1;
    for (int k = 1; k < order; ++k) {
        inv_fact /= Rat(k);
        s[k] = RingTraits<R>::one() * inv_fact;
    }
    return s;
}

/// a^r for r >= 0 by repeated squaring.
template <CoefficientRing R>
Series<R> power(const Series<R>& a, int r) {
    if (r < 0) throw std::invalid_argument("series power: negative exponent");
    Series<R> result = Series<R>::constant(RingTraits<R>::one(), a.order());
    Series<R> base = a;
    for (unsigned e = static_cast<unsigned>(r); e != 0; e >>= 1) {
        if (e & 1U) result = result * base;
        if (e > 1) base = base * base;
    }
    return result;
}

/// a(inner) by Horner's rule; inner must have zero constant term. The result
/// is known to min(order(a), order(inner)).
template <CoefficientRing R>
Series<R> compose(const Series<R>& a, const Series<R>& inner) {
    if (!inner[0].is_zero()) throw DomainError("series compose: inner series must have zero constant term");
    int order = std::min(a.order(), inner.order());
    Series<R> in = inner.truncated(order);
    Series<R> acc = Series<R>::constant(a[order - 1], order);
    for (int n = order - 2; n >= 0; --n) {
        acc = acc * in;
        acc[0] = acc[0] + a[n];
    }
    return acc;
}

/// a(e^t - 1), truncated to the order of a.
template <CoefficientRing R>
Series<R> compose_exp_minus_one(const Series<R>& a) {
    return compose(a, expm1<R>(a.order()));
}

/// (1+t)^alpha with the coefficient of t^n equal to (alpha)_n / n!.
template <CoefficientRing R>
Series<R> binomial_series(const R& alpha, int order) {
    Series<R> s(order);
    R ff = RingTraits<R>::one();
    Rat inv_fact = 1;
    s[0] = ff;
    for (int n = 1; n < order; ++n) {
        ff = ff * (alpha - RingTraits<R>::one() * Rat(n - 1));
        inv_fact /= Rat(n);
        s[n] = ff * inv_fact;
    }
    return s;
}

/// (1+t)^alpha over LaurentPoly. alpha must be a polynomial in λ; a λ^{-1}
/// term is rejected with DomainError.
inline Series<LaurentPoly> binom_pow(const LaurentPoly& alpha, int order) {
    if (!alpha.is_polynomial()) throw DomainError("binom_pow: exponent " + alpha.to_string() + " has a l^-1 term");
    return binomial_series(alpha, order);
}

/// n! · c_n for n < order: the exponential-generating-function reading of a.
template <CoefficientRing R>
std::vector<R> egf_values(const Series<R>& a) {
    std::vector<R> out;
    out.reserve(static_cast<std::size_t>(a.order()));
    Rat fact = 1;
    for (int n = 0; n < a.order(); ++n) {
        if (n > 0) fact *= Rat(n);
        out.push_back(a[n] * fact);
    }
    return out;
}

}  // namespace boole
