#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "boole/laurent_poly.hpp"
#include "boole/rational.hpp"
#include "boole/series.hpp"

namespace boole {

/// Coefficients a_k(N; λ), 0 <= k <= N, of
///
///   F^{(N)} = (-1)^N λ (1+t)^{-N} Σ_{i=1}^{N+1} a_{i-1}(N; λ) F^i,
///   F = 1 / ((1+t)^λ + 1),
///
/// built row by row from
///
///   a_0(N+1)     = (N + λ) a_0(N)
///   a_{N+1}(N+1) = -(N+1) λ a_N(N)
///   a_{i-1}(N+1) = -(i-1) λ a_{i-2}(N) + (N + iλ) a_{i-1}(N),  2 <= i <= N+1
///
/// seeded with a_0(0) = 1/λ. R is LaurentPoly for symbolic λ or Rat for a
/// fixed λ. Rows are cached; extend_to() only computes the missing ones.
template <CoefficientRing R>
class BasicTriangle {
public:
    BasicTriangle(int n_max, R lambda) : lambda_(std::move(lambda)) {
        if (n_max < 0) throw std::invalid_argument("triangle N_max must be >= 0");
        rows_.push_back({RingTraits<R>::inverse(lambda_)});
        extend_to(n_max);
    }

    int n_max() const { return static_cast<int>(rows_.size()) - 1; }
    const R& lambda() const { return lambda_; }

    /// a_k(N); throws std::out_of_range outside 0 <= k <= N <= n_max().
    const R& at(int k, int n) const {
        if (n < 0 || n > n_max() || k < 0 || k > n)
            throw std::out_of_range("a_" + std::to_string(k) + "(" + std::to_string(n) + ") is outside the triangle");
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    const std::vector<R>& row(int n) const { return rows_.at(static_cast<std::size_t>(n)); }

    void extend_to(int n_max) {
        while (this->n_max() < n_max) {
            const std::vector<R>& prev = rows_.back();
            const int n = this->n_max();
            const R one = RingTraits<R>::one();
            std::vector<R> next(static_cast<std::size_t>(n + 2), RingTraits<R>::zero());
            next[0] = (one * Rat(n) + lambda_) * prev[0];
            for (int i = 2; i <= n + 1; ++i) {
                auto k = static_cast<std::size_t>(i - 1);
                next[k] = (one * Rat(n) + lambda_ * Rat(i)) * prev[k] - lambda_ * Rat(i - 1) * prev[k - 1];
            }
            next[static_cast<std::size_t>(n + 1)] = -(lambda_ * Rat(n + 1)) * prev[static_cast<std::size_t>(n)];
            rows_.push_back(std::move(next));
        }
    }

private:
    R lambda_;
    std::vector<std::vector<R>> rows_;
};

using ATriangle = BasicTriangle<LaurentPoly>;

/// Symbolic triangle through row N_max (N_max >= 1).
ATriangle triangle_by_recurrence(int n_max);
/// The same recurrence at a fixed nonzero λ.
BasicTriangle<Rat> triangle_by_recurrence(int n_max, const Rat& lambda);

/// a_0(N) = (N + λ - 1)_{N-1}, N >= 0 (N = 0 gives 1/λ via (x)_{-1}).
LaurentPoly first_row_closed_form(int n);
/// a_N(N) = (-1)^N λ^{N-1} N!, N >= 0.
LaurentPoly diagonal_closed_form(int n);

/// a_j(N) for 1 <= j <= N-1 as the j-fold nested sum of falling factorials
/// with prefactor (-1)^j j! λ^j. Independent of the recurrence; throws
/// std::out_of_range outside that index range.
LaurentPoly closed_form_entry(int j, int n);

/// a_k(N) from the once-unrolled recurrence
///   a_k(N) = -kλ Σ_{i=0}^{N-k} (N-1 + (k+1)λ)_i a_{k-1}(N-1-i),
/// reading only row N-1 and below of `triangle`. 1 <= k <= N-1.
LaurentPoly unrolled_entry(const ATriangle& triangle, int k, int n);

/// Square matrix (a_i(j)) for 0 <= i, j <= triangle.n_max(), zero below the
/// diagonal (i > j).
std::vector<std::vector<LaurentPoly>> matrix_view(const ATriangle& triangle);

}  // namespace boole
