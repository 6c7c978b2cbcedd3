#include "boole/special_numbers.hpp"

#include <stdexcept>

namespace boole {

namespace {

void require_n_max(int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0, got " + std::to_string(n_max));
}

void require_order(int r) {
    if (r < 1) throw std::invalid_argument("order r must be >= 1, got " + std::to_string(r));
}

void require_nonzero_lambda(const Rat& lambda) {
    if (lambda.is_zero()) throw std::invalid_argument("lambda must be nonzero");
}

template <class R>
Series<R> generating_function(int order, const R& lambda) {
    Series<R> denom = binomial_series(lambda, order);
    denom[0] = denom[0] + RingTraits<R>::one();
    return inverse(denom);
}

// n! [t^n] F^r (1+t)^x
template <class R>
std::vector<R> boole_values(int n_max, int r, const R& lambda, const std::optional<Rat>& x) {
    int order = n_max + 1;
    Series<R> s = power(generating_function(order, lambda), r);
    if (x && !x->is_zero()) s = s * binomial_series(RingTraits<R>::one() * *x, order);
    return egf_values(s);
}

// n! [t^n] g^k / k! for every k <= n <= n_max, g with zero constant term.
StirlingTriangle triangle_from_powers(StirlingKind kind, int n_max, const Series<Rat>& g) {
    std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(n_max + 1));
    for (int n = 0; n <= n_max; ++n) rows[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n + 1), 0);
    Series<Rat> gk = Series<Rat>::constant(1, n_max + 1);
    Rat k_fact = 1;
    for (int k = 0; k <= n_max; ++k) {
        if (k > 0) {
            gk = gk * g;
            k_fact *= Rat(k);
        }
        std::vector<Rat> vals = egf_values(gk);
        for (int n = k; n <= n_max; ++n)
            rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = vals[static_cast<std::size_t>(n)] / k_fact;
    }
    return StirlingTriangle(kind, std::move(rows));
}

}  // namespace

StirlingTriangle::StirlingTriangle(StirlingKind kind, std::vector<std::vector<Rat>> rows)
    : kind_(kind), rows_(std::move(rows)) {
    for (std::size_t n = 0; n < rows_.size(); ++n)
        if (rows_[n].size() != n + 1) throw std::invalid_argument("StirlingTriangle: row " + std::to_string(n) + " has wrong length");
}

Rat StirlingTriangle::operator()(int n, int k) const {
    if (n < 0 || n > n_max()) throw std::out_of_range("StirlingTriangle: n = " + std::to_string(n) + " out of range");
    if (k < 0 || k > n) return 0;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Series<LaurentPoly> boole_generating_function(int order) { return generating_function(order, LaurentPoly::lambda()); }

Series<Rat> boole_generating_function(int order, const Rat& lambda) {
    require_nonzero_lambda(lambda);
    return generating_function(order, lambda);
}

BooleTable<LaurentPoly> boole_numbers(int n_max, int r) {
    require_n_max(n_max);
    require_order(r);
    return {n_max, r, std::nullopt, boole_values(n_max, r, LaurentPoly::lambda(), std::nullopt)};
}

BooleTable<Rat> boole_numbers(int n_max, int r, const Rat& lambda) {
    require_n_max(n_max);
    require_order(r);
    require_nonzero_lambda(lambda);
    return {n_max, r, lambda, boole_values(n_max, r, lambda, std::nullopt)};
}

std::vector<LaurentPoly> boole_polynomials(int n_max, const Rat& x, int r) {
    require_n_max(n_max);
    require_order(r);
    return boole_values(n_max, r, LaurentPoly::lambda(), std::optional<Rat>(x));
}

std::vector<Rat> boole_polynomials(int n_max, const Rat& x, int r, const Rat& lambda) {
    require_n_max(n_max);
    require_order(r);
    require_nonzero_lambda(lambda);
    return boole_values(n_max, r, lambda, std::optional<Rat>(x));
}

EulerTable euler_numbers(int n_max, int r) {
    require_n_max(n_max);
    require_order(r);
    int order = n_max + 1;
    Series<Rat> denom = expm1(order);
    denom[0] = 2;  // e^t + 1
    Series<Rat> base = inverse(denom) * Rat(2);
    return {n_max, r, egf_values(power(base, r))};
}

StirlingTriangle stirling2(int n_max) {
    require_n_max(n_max);
    return triangle_from_powers(StirlingKind::Second, n_max, expm1(n_max + 1));
}

StirlingTriangle stirling1(int n_max) {
    require_n_max(n_max);
    return triangle_from_powers(StirlingKind::First, n_max, log1p(n_max + 1));
}

}  // namespace boole
