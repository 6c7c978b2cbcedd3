#include "boole/ode_coefficients.hpp"

#include <stdexcept>

namespace boole {

namespace {

const LaurentPoly& lam() {
    static const LaurentPoly l = LaurentPoly::lambda();
    return l;
}

LaurentPoly affine(int constant, int lambda_coeff) { return LaurentPoly(constant) + lam() * Rat(lambda_coeff); }

// Nested sum behind a_j(m+1), m = N-1. `level` runs from 0 (index i_j) to
// j-1 (index i_1); `used` is the sum of the indices chosen so far. Level l
// contributes (m - l + (j+1-l)λ - used)_{i}, i in [0, m-j+1-used]; the tail
// is a_0(m - j + 1 - used) = (m + λ - used - j)_{m - used - j}.
LaurentPoly nested_sum(int level, int j, int m, int used) {
    if (level == j) {
        int sub = m - used - j;
        LaurentPoly base = affine(m - used - j, 1);
        // sub = -1 is the a_0(0) = 1/λ tail; its argument + 1 must be exactly λ
        if (sub == -1 && base + LaurentPoly(1) != lam())
            throw std::logic_error("closed form: (x)_{-1} with x+1 = " + (base + LaurentPoly(1)).to_string());
        return falling_factorial(base, sub);
    }
    LaurentPoly base = affine(m - level - used, j + 1 - level);
    LaurentPoly total;
    LaurentPoly ff(1);
    for (int i = 0; i <= m - j + 1 - used; ++i) {
        if (i > 0) ff *= base - LaurentPoly(i - 1);
        total += ff * nested_sum(level + 1, j, m, used + i);
    }
    return total;
}

}  // namespace

ATriangle triangle_by_recurrence(int n_max) {
    if (n_max < 1) throw std::invalid_argument("triangle N_max must be >= 1");
    return ATriangle(n_max, LaurentPoly::lambda());
}

BasicTriangle<Rat> triangle_by_recurrence(int n_max, const Rat& lambda) {
    if (n_max < 1) throw std::invalid_argument("triangle N_max must be >= 1");
    if (lambda.is_zero()) throw std::invalid_argument("lambda must be nonzero");
    return BasicTriangle<Rat>(n_max, lambda);
}

LaurentPoly first_row_closed_form(int n) {
    if (n < 0) throw std::out_of_range("a_0(N) needs N >= 0");
    return falling_factorial(affine(n - 1, 1), n - 1);
}

LaurentPoly diagonal_closed_form(int n) {
    if (n < 0) throw std::out_of_range("a_N(N) needs N >= 0");
    Rat c = factorial(n);
    if (n % 2 == 1) c = -c;
    return LaurentPoly::monomial(c, n - 1);
}

LaurentPoly closed_form_entry(int j, int n) {
    if (j < 1 || j > n - 1)
        throw std::out_of_range("closed_form_entry needs 1 <= j <= N-1, got j=" + std::to_string(j) +
                                ", N=" + std::to_string(n));
    Rat prefactor = factorial(j);
    if (j % 2 == 1) prefactor = -prefactor;
    return LaurentPoly::monomial(prefactor, j) * nested_sum(0, j, n - 1, 0);
}

LaurentPoly unrolled_entry(const ATriangle& triangle, int k, int n) {
    if (k < 1 || k > n || n - 1 > triangle.n_max())
        throw std::out_of_range("unrolled_entry needs 1 <= k <= N and row N-1 in the triangle");
    LaurentPoly base = affine(n - 1, k + 1);
    LaurentPoly sum;
    LaurentPoly ff(1);
    for (int i = 0; i <= n - k; ++i) {
        if (i > 0) ff *= base - LaurentPoly(i - 1);
        sum += ff * triangle.at(k - 1, n - 1 - i);
    }
    return LaurentPoly::monomial(Rat(-k), 1) * sum;
}

std::vector<std::vector<LaurentPoly>> matrix_view(const ATriangle& triangle) {
    auto size = static_cast<std::size_t>(triangle.n_max() + 1);
    std::vector<std::vector<LaurentPoly>> m(size, std::vector<LaurentPoly>(size));
    for (int j = 0; j <= triangle.n_max(); ++j)
        for (int i = 0; i <= j; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = triangle.at(i, j);
    return m;
}

}  // namespace boole
