#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boole/laurent_poly.hpp"
#include "boole/rational.hpp"
#include "boole/series.hpp"

namespace boole {

inline constexpr int kDefaultNMax = 16;

/// Higher-order Boole numbers Bl_0^{(r)} .. Bl_{n_max}^{(r)}.
///
/// R = LaurentPoly holds the symbolic-λ table (lambda is empty);
/// R = Rat holds a table at the fixed value *lambda.
template <class R>
struct BooleTable {
    int n_max = 0;
    int order = 1;
    std::optional<Rat> lambda;
    std::vector<R> values;

    bool symbolic() const { return !lambda.has_value(); }
};

struct EulerTable {
    int n_max = 0;
    int order = 1;
    std::vector<Rat> values;
};

enum class StirlingKind { First, Second };

/// Lower-triangular table S(n, k), 0 <= k <= n <= n_max. The first kind is
/// signed.
class StirlingTriangle {
public:
    StirlingTriangle(StirlingKind kind, std::vector<std::vector<Rat>> rows);

    StirlingKind kind() const { return kind_; }
    int n_max() const { return static_cast<int>(rows_.size()) - 1; }
    /// S(n, k); zero for k > n or k < 0.
    Rat operator()(int n, int k) const;
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }

private:
    StirlingKind kind_;
    std::vector<std::vector<Rat>> rows_;
};

/// F(t; λ) = 1 / ((1+t)^λ + 1) modulo t^order, for symbolic λ.
Series<LaurentPoly> boole_generating_function(int order);
/// The same at a fixed nonzero λ.
Series<Rat> boole_generating_function(int order, const Rat& lambda);

/// Bl_n^{(r)}(λ) = n! [t^n] F(t; λ)^r, symbolic λ.
BooleTable<LaurentPoly> boole_numbers(int n_max, int r = 1);
/// Fixed-λ variant. Throws std::invalid_argument for λ = 0.
BooleTable<Rat> boole_numbers(int n_max, int r, const Rat& lambda);

/// Bl_n^{(r)}(x | λ) = n! [t^n] F^r (1+t)^x, symbolic λ and rational x.
std::vector<LaurentPoly> boole_polynomials(int n_max, const Rat& x, int r = 1);
std::vector<Rat> boole_polynomials(int n_max, const Rat& x, int r, const Rat& lambda);

/// E_n^{(r)} = n! [t^n] (2/(e^t+1))^r.
EulerTable euler_numbers(int n_max, int r = 1);

/// S2(n, k) = n! [t^n] (e^t - 1)^k / k!.
StirlingTriangle stirling2(int n_max);
/// Signed S1(n, k) = n! [t^n] log(1+t)^k / k!.
StirlingTriangle stirling1(int n_max);

}  // namespace boole
