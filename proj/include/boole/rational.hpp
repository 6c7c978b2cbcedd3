#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace boole {

/// Exact rational number, always held in lowest terms with a positive
/// denominator.
class Rat {
public:
    Rat() = default;
    Rat(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rat(std::int64_t num, std::int64_t den);

    /// Parses "p" or "p/q" (optional leading sign, decimal digits only).
    /// Throws std::invalid_argument on malformed input or q = 0.
    static Rat parse(std::string_view text);

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    std::string numerator() const { return value_.get_num().get_str(); }
    std::string denominator() const { return value_.get_den().get_str(); }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const;
    double to_double() const { return value_.get_d(); }

    Rat inverse() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& rhs);
    Rat& operator-=(const Rat& rhs);
    Rat& operator*=(const Rat& rhs);
    Rat& operator/=(const Rat& rhs);

    friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
    friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
    friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
    friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    explicit Rat(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_{0};
};

/// Integer power with integer exponent; negative exponents invert.
Rat pow(const Rat& base, int exponent);

/// n! as a rational.
Rat factorial(int n);

/// C(n, k) for 0 <= k <= n, zero otherwise.
Rat binomial(int n, int k);

}  // namespace boole
