#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boole/rational.hpp"

namespace boole {

/// Identity families checked by the verifier.
///
///   ODE       F^{(N)} = (-1)^N λ (1+t)^{-N} Σ a_{i-1}(N) F^i, as series
///   THM3      Bl_{k+N} via a_{i-1}(N) and higher-order Boole numbers
///   EQ32      λ^n E_n / 2 = Σ_k Bl_k S2(n,k)
///   EQ34      2^{-i} λ^n E_n^{(i)} = Σ_k Bl_k^{(i)} S2(n,k)
///   EQ36      Bl_n = ½ Σ_k E_k λ^k S1(n,k)
///   EQ38      2^i Bl_n^{(i)} = Σ_k E_k^{(i)} λ^k S1(n,k)
///   THM4      THM3 with both sides rewritten through Euler and S1
///   CHANGHEE  Bl_n(1) = (-1)^n n! / 2^{n+1}
enum class IdentityId { ODE, THM3, EQ32, EQ34, EQ36, EQ38, THM4, CHANGHEE };

inline constexpr IdentityId kAllIdentities[] = {IdentityId::ODE,  IdentityId::THM3, IdentityId::EQ32,
                                                IdentityId::EQ34, IdentityId::EQ36, IdentityId::EQ38,
                                                IdentityId::THM4, IdentityId::CHANGHEE};

std::string_view to_string(IdentityId id);
/// Case-insensitive; returns nullopt for unknown names.
std::optional<IdentityId> parse_identity(std::string_view name);

struct Counterexample {
    /// Index tuple in the order the grid is scanned, e.g. {{"N", 2}, {"k", 3}}.
    std::vector<std::pair<std::string, int>> index;
    std::string lhs;
    std::string rhs;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerifyReport {
    IdentityId identity = IdentityId::ODE;
    std::map<std::string, int> params;
    /// Empty for symbolic λ.
    std::optional<Rat> lambda;
    /// Number of index tuples compared.
    std::size_t checks = 0;
    /// Smallest failing index tuple, if any.
    std::optional<Counterexample> counterexample;

    bool passed() const { return !counterexample.has_value(); }
};

struct VerifyOptions {
    /// Empty: verify over symbolic λ. Set: recompute everything at this λ.
    std::optional<Rat> lambda;
    /// 0 selects default_thread_count().
    unsigned threads = 0;
};

/// Series identity for one N, compared modulo t^{order-N}. Needs order >= N+2.
VerifyReport verify_ode(int n, int order, const VerifyOptions& opts = {});
VerifyReport verify_ode_upto(int n_max, int order, const VerifyOptions& opts = {});

/// Bl_{k+N} = (-1)^N λ Σ_{i=1}^{N+1} a_{i-1}(N) Σ_{l=0}^{k} C(k,l) (-1)^l (N+l-1)_l Bl_{k-l}^{(i)}, k <= k_max.
VerifyReport verify_thm3(int n, int k_max, const VerifyOptions& opts = {});
VerifyReport verify_thm3_upto(int n_max, int k_max, const VerifyOptions& opts = {});

VerifyReport verify_eq32(int n_max, const VerifyOptions& opts = {});
VerifyReport verify_eq34(int i_max, int n_max, const VerifyOptions& opts = {});
VerifyReport verify_eq36(int n_max, const VerifyOptions& opts = {});
VerifyReport verify_eq38(int i_max, int n_max, const VerifyOptions& opts = {});

VerifyReport verify_thm4(int n, int k_max, const VerifyOptions& opts = {});
VerifyReport verify_thm4_upto(int n_max, int k_max, const VerifyOptions& opts = {});

/// Always at λ = 1: symbolic Bl_n(λ) evaluated at 1, or the fixed-λ=1 table
/// when opts.lambda is set.
VerifyReport changhee_crosscheck(int n_max, const VerifyOptions& opts = {});

struct SuiteConfig {
    int n_max = 12;
    int N_max = 8;
    int k_max = 8;
    int i_max = 4;
    int order = 16;
    /// Empty runs every family.
    std::set<IdentityId> identities;
    VerifyOptions options;
};

/// One report per selected family, in IdentityId order.
std::vector<VerifyReport> run_suite(const SuiteConfig& config);

/// Fixed-width terminal table, one line per report plus a totals line.
std::string render_summary(const std::vector<VerifyReport>& reports);

}  // namespace boole
