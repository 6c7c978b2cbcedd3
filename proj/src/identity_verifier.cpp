#include "boole/identity_verifier.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include "boole/laurent_poly.hpp"
#include "boole/ode_coefficients.hpp"
#include "boole/parallel.hpp"
#include "boole/series.hpp"
#include "boole/special_numbers.hpp"

namespace boole {

namespace {

using Index = std::vector<std::pair<std::string, int>>;

struct Outcome {
    std::size_t checks = 0;
    std::optional<Counterexample> counterexample;
};

template <class R>
R lift(const Rat& q) {
    return RingTraits<R>::one() * q;
}

template <class R>
R power_of(const R& x, int n) {
    R result = RingTraits<R>::one();
    for (int i = 0; i < n; ++i) result = result * x;
    return result;
}

std::vector<LaurentPoly> boole_values(int n_max, int r, const LaurentPoly&) { return boole_numbers(n_max, r).values; }
std::vector<Rat> boole_values(int n_max, int r, const Rat& lambda) { return boole_numbers(n_max, r, lambda).values; }

Series<LaurentPoly> generating_function(int order, const LaurentPoly&) { return boole_generating_function(order); }
Series<Rat> generating_function(int order, const Rat& lambda) { return boole_generating_function(order, lambda); }

std::string render(const LaurentPoly& p) { return p.to_string(); }
std::string render(const Rat& q) { return q.to_string(); }

unsigned thread_count(const VerifyOptions& opts) { return opts.threads == 0 ? default_thread_count() : opts.threads; }

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

// Evaluates every tuple (possibly in parallel) and reports the first one,
// in tuple order, whose two sides differ.
template <class Fn>
Outcome scan(const std::vector<Index>& tuples, unsigned threads, Fn sides) {
    auto results = parallel_map(tuples.size(), threads, [&](std::size_t i) { return sides(tuples[i]); });
    Outcome out;
    out.checks = tuples.size();
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!(results[i].first == results[i].second)) {
            out.counterexample = Counterexample{tuples[i], render(results[i].first), render(results[i].second)};
            break;
        }
    }
    return out;
}

std::vector<Index> grid(const std::string& a, int a_lo, int a_hi, const std::string& b, int b_lo, int b_hi) {
    std::vector<Index> tuples;
    for (int x = a_lo; x <= a_hi; ++x)
        for (int y = b_lo; y <= b_hi; ++y) tuples.push_back({{a, x}, {b, y}});
    return tuples;
}

std::vector<Index> line(const std::string& a, int lo, int hi) {
    std::vector<Index> tuples;
    for (int x = lo; x <= hi; ++x) tuples.push_back({{a, x}});
    return tuples;
}

template <class Body>
VerifyReport run(IdentityId id, std::map<std::string, int> params, const VerifyOptions& opts, Body body) {
    VerifyReport report;
    report.identity = id;
    report.params = std::move(params);
    report.lambda = opts.lambda;
    Outcome outcome;
    if (opts.lambda) {
        require(!opts.lambda->is_zero(), "lambda must be nonzero");
        outcome = body(*opts.lambda);
    } else {
        outcome = body(LaurentPoly::lambda());
    }
    report.checks = outcome.checks;
    report.counterexample = std::move(outcome.counterexample);
    return report;
}

// --- ODE -------------------------------------------------------------------

template <class R>
Outcome ode_outcome(int n, int order, const R& lambda) {
    Series<R> f = generating_function(order, lambda);

    Series<R> lhs = f;
    for (int d = 0; d < n; ++d) lhs = derivative(lhs);

    BasicTriangle<R> tri(n, lambda);
    Series<R> combo(order);
    Series<R> f_pow = f;
    for (int i = 1; i <= n + 1; ++i) {
        if (i > 1) f_pow = f_pow * f;
        combo = combo + f_pow * tri.at(i - 1, n);
    }
    R sign_lambda = n % 2 == 0 ? lambda : -lambda;
    Series<R> rhs = (binomial_series(lift<R>(Rat(-n)), order) * combo * sign_lambda).truncated(lhs.order());

    Outcome out;
    out.checks = static_cast<std::size_t>(lhs.order());
    for (int c = 0; c < lhs.order(); ++c) {
        if (!(lhs[c] == rhs[c])) {
            out.counterexample = Counterexample{{{"N", n}, {"coeff", c}}, render(lhs[c]), render(rhs[c])};
            break;
        }
    }
    return out;
}

template <class R>
Outcome ode_range(int n_lo, int n_hi, int order, const R& lambda, unsigned threads) {
    auto count = static_cast<std::size_t>(n_hi - n_lo + 1);
    auto per_n = parallel_map(count, threads,
                              [&](std::size_t i) { return ode_outcome(n_lo + static_cast<int>(i), order, lambda); });
    Outcome out;
    for (auto& o : per_n) {
        out.checks += o.checks;
        if (!out.counterexample && o.counterexample) out.counterexample = std::move(o.counterexample);
    }
    return out;
}

// --- THM3 / THM4: Bl_{k+N} through the ODE coefficients ------------------

// Σ_{i=1}^{N+1} a_{i-1}(N) Σ_{l=0}^{k} C(k,l) (-1)^l (N+l-1)_l inner(i, k-l), times (-1)^N λ.
template <class R, class Inner>
R ode_expansion(const BasicTriangle<R>& tri, int n, int k, const R& lambda, Inner inner) {
    R total = RingTraits<R>::zero();
    for (int i = 1; i <= n + 1; ++i) {
        R acc = RingTraits<R>::zero();
        for (int l = 0; l <= k; ++l) {
            Rat c = binomial(k, l) * falling_factorial(Rat(n + l - 1), l);
            if (l % 2 == 1) c = -c;
            acc = acc + inner(i, k - l) * c;
        }
        total = total + tri.at(i - 1, n) * acc;
    }
    return total * (n % 2 == 0 ? lambda : -lambda);
}

template <class R>
Outcome thm3_outcome(int n_lo, int n_hi, int k_max, const R& lambda, unsigned threads) {
    BasicTriangle<R> tri(n_hi, lambda);
    std::vector<R> bl = boole_values(k_max + n_hi, 1, lambda);
    std::vector<std::vector<R>> bl_order(static_cast<std::size_t>(n_hi + 2));
    for (int i = 1; i <= n_hi + 1; ++i) bl_order[static_cast<std::size_t>(i)] = boole_values(k_max, i, lambda);

    return scan(grid("N", n_lo, n_hi, "k", 0, k_max), threads, [&](const Index& idx) {
        int n = idx[0].second;
        int k = idx[1].second;
        R lhs = bl[static_cast<std::size_t>(k + n)];
        R rhs = ode_expansion(tri, n, k, lambda, [&](int i, int m) {
            return bl_order[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
        });
        return std::pair{lhs, rhs};
    });
}

// Σ_{n=0}^{m} scale · E_n^{(r)} λ^n S1(m, n)
template <class R>
R euler_stirling1(const EulerTable& e, const StirlingTriangle& s1, int m, const R& lambda, const Rat& scale) {
    R total = RingTraits<R>::zero();
    R lam_pow = RingTraits<R>::one();
    for (int n = 0; n <= m; ++n) {
        if (n > 0) lam_pow = lam_pow * lambda;
        total = total + lam_pow * (scale * e.values[static_cast<std::size_t>(n)] * s1(m, n));
    }
    return total;
}

template <class R>
Outcome thm4_outcome(int n_lo, int n_hi, int k_max, const R& lambda, unsigned threads) {
    BasicTriangle<R> tri(n_hi, lambda);
    StirlingTriangle s1 = stirling1(k_max + n_hi);
    EulerTable e1 = euler_numbers(k_max + n_hi, 1);
    std::vector<EulerTable> e_order;
    for (int i = 0; i <= n_hi + 1; ++i) e_order.push_back(euler_numbers(k_max, std::max(i, 1)));

    return scan(grid("N", n_lo, n_hi, "k", 0, k_max), threads, [&](const Index& idx) {
        int n = idx[0].second;
        int k = idx[1].second;
        R lhs = euler_stirling1(e1, s1, k + n, lambda, Rat(1, 2));
        R rhs = ode_expansion(tri, n, k, lambda, [&](int i, int m) {
            return euler_stirling1(e_order[static_cast<std::size_t>(i)], s1, m, lambda, pow(Rat(2), -i));
        });
        return std::pair{lhs, rhs};
    });
}

// --- Stirling bridges ------------------------------------------------------

template <class R>
Outcome eq34_outcome(int i_lo, int i_hi, int n_max, const R& lambda, unsigned threads) {
    StirlingTriangle s2 = stirling2(n_max);
    std::vector<EulerTable> e;
    std::vector<std::vector<R>> bl;
    for (int i = 0; i <= i_hi; ++i) {
        e.push_back(euler_numbers(n_max, std::max(i, 1)));
        bl.push_back(boole_values(n_max, std::max(i, 1), lambda));
    }
    return scan(grid("i", i_lo, i_hi, "n", 0, n_max), threads, [&](const Index& idx) {
        auto i = static_cast<std::size_t>(idx[0].second);
        int n = idx[1].second;
        R lhs = power_of(lambda, n) * (pow(Rat(2), -idx[0].second) * e[i].values[static_cast<std::size_t>(n)]);
        R rhs = RingTraits<R>::zero();
        for (int k = 0; k <= n; ++k) rhs = rhs + bl[i][static_cast<std::size_t>(k)] * s2(n, k);
        return std::pair{lhs, rhs};
    });
}

template <class R>
Outcome eq38_outcome(int i_lo, int i_hi, int n_max, const R& lambda, unsigned threads) {
    StirlingTriangle s1 = stirling1(n_max);
    std::vector<EulerTable> e;
    std::vector<std::vector<R>> bl;
    for (int i = 0; i <= i_hi; ++i) {
        e.push_back(euler_numbers(n_max, std::max(i, 1)));
        bl.push_back(boole_values(n_max, std::max(i, 1), lambda));
    }
    return scan(grid("i", i_lo, i_hi, "n", 0, n_max), threads, [&](const Index& idx) {
        auto i = static_cast<std::size_t>(idx[0].second);
        int n = idx[1].second;
        R lhs = bl[i][static_cast<std::size_t>(n)] * pow(Rat(2), idx[0].second);
        R rhs = euler_stirling1(e[i], s1, n, lambda, Rat(1));
        return std::pair{lhs, rhs};
    });
}

// EQ32 is the i = 1 row of EQ34 with the index relabelled.
Outcome first_order_only(Outcome o) {
    if (o.counterexample) o.counterexample->index.erase(o.counterexample->index.begin());
    return o;
}

}  // namespace

std::string_view to_string(IdentityId id) {
    switch (id) {
        case IdentityId::ODE: return "ODE";
        case IdentityId::THM3: return "THM3";
        case IdentityId::EQ32: return "EQ32";
        case IdentityId::EQ34: return "EQ34";
        case IdentityId::EQ36: return "EQ36";
        case IdentityId::EQ38: return "EQ38";
        case IdentityId::THM4: return "THM4";
        case IdentityId::CHANGHEE: return "CHANGHEE";
    }
    return "?";
}

std::optional<IdentityId> parse_identity(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    for (IdentityId id : kAllIdentities)
        if (to_string(id) == upper) return id;
    return std::nullopt;
}

VerifyReport verify_ode(int n, int order, const VerifyOptions& opts) {
    require(n >= 1, "ODE: N must be >= 1");
    require(order >= n + 2, "ODE: order must be >= N + 2");
    return run(IdentityId::ODE, {{"N", n}, {"order", order}}, opts,
               [&](const auto& lambda) { return ode_outcome(n, order, lambda); });
}

VerifyReport verify_ode_upto(int n_max, int order, const VerifyOptions& opts) {
    require(n_max >= 1, "ODE: N_max must be >= 1");
    require(order >= n_max + 2, "ODE: order must be >= N_max + 2");
    return run(IdentityId::ODE, {{"N_max", n_max}, {"order", order}}, opts,
               [&](const auto& lambda) { return ode_range(1, n_max, order, lambda, thread_count(opts)); });
}

VerifyReport verify_thm3(int n, int k_max, const VerifyOptions& opts) {
    require(n >= 1 && k_max >= 0, "THM3: needs N >= 1 and k_max >= 0");
    return run(IdentityId::THM3, {{"N", n}, {"k_max", k_max}}, opts,
               [&](const auto& lambda) { return thm3_outcome(n, n, k_max, lambda, thread_count(opts)); });
}

VerifyReport verify_thm3_upto(int n_max, int k_max, const VerifyOptions& opts) {
    require(n_max >= 1 && k_max >= 0, "THM3: needs N_max >= 1 and k_max >= 0");
    return run(IdentityId::THM3, {{"N_max", n_max}, {"k_max", k_max}}, opts,
               [&](const auto& lambda) { return thm3_outcome(1, n_max, k_max, lambda, thread_count(opts)); });
}

VerifyReport verify_eq32(int n_max, const VerifyOptions& opts) {
    require(n_max >= 0, "EQ32: n_max must be >= 0");
    return run(IdentityId::EQ32, {{"n_max", n_max}}, opts, [&](const auto& lambda) {
        return first_order_only(eq34_outcome(1, 1, n_max, lambda, thread_count(opts)));
    });
}

VerifyReport verify_eq34(int i_max, int n_max, const VerifyOptions& opts) {
    require(i_max >= 1 && n_max >= 0, "EQ34: needs i_max >= 1 and n_max >= 0");
    return run(IdentityId::EQ34, {{"i_max", i_max}, {"n_max", n_max}}, opts,
               [&](const auto& lambda) { return eq34_outcome(1, i_max, n_max, lambda, thread_count(opts)); });
}

VerifyReport verify_eq36(int n_max, const VerifyOptions& opts) {
    require(n_max >= 0, "EQ36: n_max must be >= 0");
    return run(IdentityId::EQ36, {{"n_max", n_max}}, opts, [&](const auto& lambda) {
        using R = std::decay_t<decltype(lambda)>;
        StirlingTriangle s1 = stirling1(n_max);
        EulerTable e = euler_numbers(n_max, 1);
        std::vector<R> bl = boole_values(n_max, 1, lambda);
        return scan(line("n", 0, n_max), thread_count(opts), [&](const Index& idx) {
            int n = idx[0].second;
            return std::pair{bl[static_cast<std::size_t>(n)], euler_stirling1(e, s1, n, lambda, Rat(1, 2))};
        });
    });
}

VerifyReport verify_eq38(int i_max, int n_max, const VerifyOptions& opts) {
    require(i_max >= 1 && n_max >= 0, "EQ38: needs i_max >= 1 and n_max >= 0");
    return run(IdentityId::EQ38, {{"i_max", i_max}, {"n_max", n_max}}, opts,
               [&](const auto& lambda) { return eq38_outcome(1, i_max, n_max, lambda, thread_count(opts)); });
}

VerifyReport verify_thm4(int n, int k_max, const VerifyOptions& opts) {
    require(n >= 1 && k_max >= 0, "THM4: needs N >= 1 and k_max >= 0");
    return run(IdentityId::THM4, {{"N", n}, {"k_max", k_max}}, opts,
               [&](const auto& lambda) { return thm4_outcome(n, n, k_max, lambda, thread_count(opts)); });
}

VerifyReport verify_thm4_upto(int n_max, int k_max, const VerifyOptions& opts) {
    require(n_max >= 1 && k_max >= 0, "THM4: needs N_max >= 1 and k_max >= 0");
    return run(IdentityId::THM4, {{"N_max", n_max}, {"k_max", k_max}}, opts,
               [&](const auto& lambda) { return thm4_outcome(1, n_max, k_max, lambda, thread_count(opts)); });
}

VerifyReport changhee_crosscheck(int n_max, const VerifyOptions& opts) {
    require(n_max >= 0, "CHANGHEE: n_max must be >= 0");
    VerifyReport report;
    report.identity = IdentityId::CHANGHEE;
    report.params = {{"n_max", n_max}};
    report.lambda = opts.lambda ? std::optional<Rat>(Rat(1)) : std::nullopt;

    std::vector<Rat> at_one;
    if (opts.lambda) {
        at_one = boole_numbers(n_max, 1, Rat(1)).values;
    } else {
        for (const LaurentPoly& p : boole_numbers(n_max, 1).values) at_one.push_back(p.evaluate(1));
    }
    Outcome o = scan(line("n", 0, n_max), thread_count(opts), [&](const Index& idx) {
        int n = idx[0].second;
        Rat closed = factorial(n) / pow(Rat(2), n + 1);
        if (n % 2 == 1) closed = -closed;
        return std::pair{at_one[static_cast<std::size_t>(n)], closed};
    });
    report.checks = o.checks;
    report.counterexample = std::move(o.counterexample);
    return report;
}

std::vector<VerifyReport> run_suite(const SuiteConfig& config) {
    auto selected = [&](IdentityId id) { return config.identities.empty() || config.identities.contains(id); };
    const VerifyOptions& opts = config.options;
    std::vector<VerifyReport> reports;
    for (IdentityId id : kAllIdentities) {
        if (!selected(id)) continue;
        switch (id) {
            case IdentityId::ODE: reports.push_back(verify_ode_upto(config.N_max, config.order, opts)); break;
            case IdentityId::THM3: reports.push_back(verify_thm3_upto(config.N_max, config.k_max, opts)); break;
            case IdentityId::EQ32: reports.push_back(verify_eq32(config.n_max, opts)); break;
            case IdentityId::EQ34: reports.push_back(verify_eq34(config.i_max, config.n_max, opts)); break;
            case IdentityId::EQ36: reports.push_back(verify_eq36(config.n_max, opts)); break;
            case IdentityId::EQ38: reports.push_back(verify_eq38(config.i_max, config.n_max, opts)); break;
            case IdentityId::THM4: reports.push_back(verify_thm4_upto(config.N_max, config.k_max, opts)); break;
            case IdentityId::CHANGHEE: reports.push_back(changhee_crosscheck(config.n_max, opts)); break;
        }
    }
    return reports;
}

std::string render_summary(const std::vector<VerifyReport>& reports) {
    std::ostringstream os;
    os << std::left << std::setw(10) << "identity" << std::setw(8) << "result" << std::setw(8) << "checks"
       << "params\n";
    std::size_t passed = 0;
    for (const VerifyReport& r : reports) {
        std::string params;
        for (const auto& [key, value] : r.params) params += (params.empty() ? "" : " ") + key + "=" + std::to_string(value);
        params += r.lambda ? " lambda=" + r.lambda->to_string() : " lambda=symbolic";
        os << std::setw(10) << to_string(r.identity) << std::setw(8) << (r.passed() ? "pass" : "FAIL") << std::setw(8)
           << r.checks << params << '\n';
        if (r.passed()) {
            ++passed;
        } else {
            const Counterexample& c = *r.counterexample;
            os << "    first failure at";
            for (const auto& [name, value] : c.index) os << ' ' << name << '=' << value;
            os << ": lhs = " << c.lhs << ", rhs = " << c.rhs << '\n';
        }
    }
    os << passed << "/" << reports.size() << " identity families passed\n";
    return os.str();
}

}  // namespace boole
