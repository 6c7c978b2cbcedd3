#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "boole/rational.hpp"

namespace boole {

/// Raised when an operation would leave the λ^{-1}..λ^d domain, e.g. a
/// product containing λ^{-2}.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Polynomial in λ with rational coefficients and exponents >= -1.
///
/// Stored densely from min_exp() upward. Normalization is eager: the
/// first and last stored coefficients are nonzero, and the zero
/// polynomial has no coefficients and min_exp() == 0. Two values are
/// equal iff their canonical representations are equal.
class LaurentPoly {
public:
    static constexpr int kMinExponent = -1;

    LaurentPoly() = default;
    LaurentPoly(const Rat& constant);  // NOLINT(google-explicit-constructor)
    LaurentPoly(std::int64_t constant) : LaurentPoly(Rat(constant)) {}  // NOLINT(google-explicit-constructor)

    /// Coefficients c_0, c_1, ... attached to λ^{min_exp}, λ^{min_exp+1}, ...
    LaurentPoly(int min_exp, std::vector<Rat> coeffs);

    static LaurentPoly monomial(const Rat& coeff, int exponent);
    /// The indeterminate λ.
    static LaurentPoly lambda() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return is_zero() || (min_exp_ == 0 && coeffs_.size() == 1); }
    bool is_monomial() const { return coeffs_.size() == 1; }
    /// True when min_exp() >= 0.
    bool is_polynomial() const { return is_zero() || min_exp_ >= 0; }

    int min_exp() const { return min_exp_; }
    /// Highest exponent with a nonzero coefficient; -2 for the zero polynomial
    /// (below every representable exponent).
    int degree() const { return is_zero() ? -2 : min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int exponent) const;

    /// Exact value at λ = x. Throws DomainError when x = 0 and a λ^{-1}
    /// term is present.
    Rat evaluate(const Rat& x) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    /// Throws DomainError if the product has a term below λ^{-1}.
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Rat& rhs);
    LaurentPoly& operator/=(const Rat& rhs);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Rat& b) { return a *= b; }
    friend LaurentPoly operator*(const Rat& a, LaurentPoly b) { return b *= a; }
    friend LaurentPoly operator*(LaurentPoly a, std::int64_t b) { return a *= Rat(b); }
    friend LaurentPoly operator*(std::int64_t a, LaurentPoly b) { return b *= Rat(a); }
    friend LaurentPoly operator/(LaurentPoly a, const Rat& b) { return a /= b; }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Canonical ASCII rendering with λ written as "l", ascending powers:
    /// "-1-3*l", "1/4*l", "l^-1", "2+3*l+l^2". Zero renders as "0".
    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

private:
    void normalize();

    int min_exp_ = 0;
    std::vector<Rat> coeffs_;
};

/// Falling factorial (base)_n = base (base-1) ... (base-n+1), with
/// (base)_0 = 1 and the extension (base)_{-1} = 1/(base+1). The n = -1
/// case requires base+1 to be a nonzero monomial c·λ^e with e in {-1, 0, 1}.
LaurentPoly falling_factorial(const LaurentPoly& base, int n);

/// Falling factorial over the rationals; n = -1 gives 1/(base+1).
Rat falling_factorial(const Rat& base, int n);

}  // namespace boole
