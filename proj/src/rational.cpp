#include "boole/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace boole {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!is_digits(digits)) throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
    std::string s(text.front() == '+' ? text.substr(1) : text);
    return mpz_class(s, 10);
}

}  // namespace

static_assert(sizeof(long) == sizeof(std::int64_t), "GMP long must hold int64_t");

Rat::Rat(std::int64_t value) : value_(static_cast<long>(value)) {}

Rat::Rat(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("not a rational number: ''");
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(mpq_class(parse_integer(text, text)));

    mpz_class num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!is_digits(den_text)) throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Rat(std::move(q));
}

std::string Rat::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat Rat::inverse() const {
    if (is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(mpq_class(1) / value_);
}

Rat Rat::operator-() const { return Rat(mpq_class(-value_)); }

Rat& Rat::operator+=(const Rat& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rat& Rat::operator-=(const Rat& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rat& Rat::operator*=(const Rat& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Rat: division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

Rat pow(const Rat& base, int exponent) {
    if (exponent < 0) return pow(base, -exponent).inverse();
    Rat result = 1;
    Rat b = base;
    for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
        if (e & 1U) result *= b;
        if (e > 1) b *= b;
    }
    return result;
}

Rat factorial(int n) {
    if (n < 0) throw std::domain_error("factorial of a negative number");
    Rat result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

Rat binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    Rat result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

}  // namespace boole
