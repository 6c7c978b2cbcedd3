#include "boole/laurent_poly.hpp"

#include <algorithm>
#include <ostream>

namespace boole {

LaurentPoly::LaurentPoly(const Rat& constant) : min_exp_(0), coeffs_{constant} { normalize(); }

LaurentPoly::LaurentPoly(int min_exp, std::vector<Rat> coeffs) : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
    normalize();
    if (!is_zero() && min_exp_ < kMinExponent)
        throw DomainError("LaurentPoly: exponent " + std::to_string(min_exp_) + " is below -1");
}

LaurentPoly LaurentPoly::monomial(const Rat& coeff, int exponent) { return LaurentPoly(exponent, {coeff}); }

void LaurentPoly::normalize() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return !c.is_zero(); });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        min_exp_ = 0;
        return;
    }
    auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const Rat& c) { return !c.is_zero(); }).base();
    coeffs_.erase(last, coeffs_.end());
    min_exp_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
}

Rat LaurentPoly::coeff(int exponent) const {
    if (is_zero() || exponent < min_exp_ || exponent > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - min_exp_)];
}

Rat LaurentPoly::evaluate(const Rat& x) const {
    if (is_zero()) return 0;
    if (min_exp_ < 0 && x.is_zero()) throw DomainError("LaurentPoly: evaluating a λ^-1 term at λ = 0");
    // Horner over the stored range, then shift by x^min_exp
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return min_exp_ == 0 ? acc : acc * pow(x, min_exp_);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    int lo = std::min(min_exp_, rhs.min_exp_);
    int hi = std::max(degree(), rhs.degree());
    std::vector<Rat> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(min_exp_ - lo) + i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        out[static_cast<std::size_t>(rhs.min_exp_ - lo) + i] += rhs.coeffs_[i];
    min_exp_ = lo;
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    if (is_zero() || rhs.is_zero()) return *this = LaurentPoly();
    int lo = min_exp_ + rhs.min_exp_;
    std::vector<Rat> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    // leading/trailing products of nonzero rationals are nonzero, so lo is exact
    if (lo < kMinExponent)
        throw DomainError("LaurentPoly: product has a term l^" + std::to_string(lo) + ", below l^-1");
    min_exp_ = lo;
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& rhs) {
    if (rhs.is_zero()) return *this = LaurentPoly();
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

LaurentPoly& LaurentPoly::operator/=(const Rat& rhs) {
    if (rhs.is_zero()) throw DomainError("LaurentPoly: division by zero");
    for (auto& c : coeffs_) c /= rhs;
    return *this;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c.is_zero()) continue;
        int e = min_exp_ + static_cast<int>(i);
        std::string term;
        if (e == 0) {
            term = c.to_string();
        } else {
            std::string power = e == 1 ? "l" : "l^" + std::to_string(e);
            if (c.is_one())
                term = power;
            else if (c == Rat(-1))
                term = "-" + power;
            else
                term = c.to_string() + "*" + power;
        }
        if (!out.empty() && term.front() != '-') out += '+';
        out += term;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly falling_factorial(const LaurentPoly& base, int n) {
    if (n < -1) throw DomainError("falling factorial subscript " + std::to_string(n) + " is below -1");
    if (n == -1) {
        LaurentPoly shifted = base + LaurentPoly(1);
        if (!shifted.is_monomial())
            throw DomainError("(x)_{-1} needs x+1 to be a nonzero monomial, got x+1 = " + shifted.to_string());
        int e = shifted.min_exp();
        if (-e < LaurentPoly::kMinExponent || -e > 1)
            throw DomainError("(x)_{-1}: 1/(" + shifted.to_string() + ") is outside the l^-1..l range");
        return LaurentPoly::monomial(shifted.coeffs().front().inverse(), -e);
    }
    LaurentPoly result(1);
    for (int i = 0; i < n; ++i) result *= base - LaurentPoly(i);
    return result;
}

Rat falling_factorial(const Rat& base, int n) {
    if (n < -1) throw DomainError("falling factorial subscript " + std::to_string(n) + " is below -1");
    if (n == -1) return (base + 1).inverse();
    Rat result = 1;
    for (int i = 0; i < n; ++i) result *= base - i;
    return result;
}

}  // namespace boole
