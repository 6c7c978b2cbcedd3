#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "boole/json_io.hpp"
#include "boole/laurent_poly.hpp"
#include "boole/ode_coefficients.hpp"
#include "boole/series.hpp"
#include "boole/special_numbers.hpp"

namespace boole::cli {

namespace {

const std::set<std::string> kFamilies = {"boole", "boole-poly", "euler", "stirling1", "stirling2"};
const std::set<std::string> kFunctions = {"F", "binom", "log1p", "expm1", "euler"};

std::string lambda_label(const std::optional<Rat>& lambda) { return lambda ? lambda->to_string() : "symbolic"; }

std::string render(const LaurentPoly& p) { return p.to_string(); }
std::string render(const Rat& q) { return q.to_string(); }

std::string approx(const LaurentPoly&) { return {}; }
std::string approx(const Rat& q) {
    if (q.is_integer()) return {};
    std::ostringstream os;
    os << std::setprecision(12) << "  [approx " << q.to_double() << "]";
    return os.str();
}

template <class R>
void write_sequence(std::ostream& out, Format format, const std::string& symbol, const std::vector<R>& values,
                    const Json& json) {
    switch (format) {
        case Format::Json: out << json.dump(2) << '\n'; break;
        case Format::Csv:
            out << "n,value\n";
            for (std::size_t n = 0; n < values.size(); ++n) out << n << ',' << render(values[n]) << '\n';
            break;
        case Format::Pretty:
            for (std::size_t n = 0; n < values.size(); ++n)
                out << symbol << '_' << n << " = " << render(values[n]) << approx(values[n]) << '\n';
            break;
    }
}

void write_stirling(std::ostream& out, Format format, const StirlingTriangle& s) {
    const char* name = s.kind() == StirlingKind::First ? "S1" : "S2";
    switch (format) {
        case Format::Json: out << to_json(s).dump(2) << '\n'; break;
        case Format::Csv:
            out << "n,k,value\n";
            for (int n = 0; n <= s.n_max(); ++n)
                for (int k = 0; k <= n; ++k) out << n << ',' << k << ',' << s(n, k) << '\n';
            break;
        case Format::Pretty:
            for (int n = 0; n <= s.n_max(); ++n) {
                out << name << '(' << n << ", *) =";
                for (int k = 0; k <= n; ++k) out << ' ' << s(n, k);
                out << '\n';
            }
            break;
    }
}

std::string boole_symbol(int r) { return r == 1 ? "Bl" : "Bl^(" + std::to_string(r) + ")"; }

void run_numbers(const CliConfig& c, std::ostream& out) {
    if (c.family == "boole") {
        if (c.lambda) {
            auto t = boole_numbers(c.n_max, c.r, *c.lambda);
            write_sequence(out, c.format, boole_symbol(c.r), t.values, to_json(t));
        } else {
            auto t = boole_numbers(c.n_max, c.r);
            write_sequence(out, c.format, boole_symbol(c.r), t.values, to_json(t));
        }
    } else if (c.family == "boole-poly") {
        Json j{{"family", "boole-poly"}, {"r", c.r}, {"n_max", c.n_max}, {"x", c.x}};
        j["mode"] = c.lambda ? "fixed" : "symbolic";
        j["lambda"] = lambda_label(c.lambda);
        std::string symbol = boole_symbol(c.r) + "[x=" + c.x.to_string() + "]";
        if (c.lambda) {
            auto v = boole_polynomials(c.n_max, c.x, c.r, *c.lambda);
            j["values"] = v;
            write_sequence(out, c.format, symbol, v, j);
        } else {
            auto v = boole_polynomials(c.n_max, c.x, c.r);
            j["values"] = v;
            write_sequence(out, c.format, symbol, v, j);
        }
    } else if (c.family == "euler") {
        auto t = euler_numbers(c.n_max, c.r);
        write_sequence(out, c.format, c.r == 1 ? "E" : "E^(" + std::to_string(c.r) + ")", t.values, to_json(t));
    } else if (c.family == "stirling1") {
        write_stirling(out, c.format, stirling1(c.n_max));
    } else {
        write_stirling(out, c.format, stirling2(c.n_max));
    }
}

template <class R>
void write_triangle_rows(std::ostream& out, Format format, const BasicTriangle<R>& tri) {
    if (format == Format::Csv) {
        out << "N,k,a\n";
        for (int n = 0; n <= tri.n_max(); ++n)
            for (int k = 0; k <= n; ++k) out << n << ',' << k << ',' << render(tri.at(k, n)) << '\n';
        return;
    }
    for (int n = 0; n <= tri.n_max(); ++n)
        for (int k = 0; k <= n; ++k)
            out << "a_" << k << '(' << n << ") = " << render(tri.at(k, n)) << approx(tri.at(k, n)) << '\n';
}

void run_triangle(const CliConfig& c, std::ostream& out) {
    if (c.lambda) {
        auto tri = triangle_by_recurrence(c.N_max, *c.lambda);
        if (c.format == Format::Json) {
            Json rows = Json::array();
            for (int n = 0; n <= tri.n_max(); ++n) rows.push_back(tri.row(n));
            out << Json{{"N_max", c.N_max}, {"lambda", *c.lambda}, {"rows", std::move(rows)}}.dump(2) << '\n';
        } else {
            write_triangle_rows(out, c.format, tri);
        }
        return;
    }
    auto tri = triangle_by_recurrence(c.N_max);
    if (c.format == Format::Json) {
        Json j = to_json(tri);
        j["lambda"] = "symbolic";
        out << j.dump(2) << '\n';
    } else {
        write_triangle_rows(out, c.format, tri);
    }
}

template <class R>
void write_series(std::ostream& out, const CliConfig& c, const Series<R>& s) {
    switch (c.format) {
        case Format::Json: {
            Json j{{"function", c.function}, {"r", c.r}, {"lambda", lambda_label(c.lambda)}};
            j["series"] = series_to_json(s);
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            out << "n,coeff\n";
            for (int n = 0; n < s.order(); ++n) out << n << ',' << render(s[n]) << '\n';
            break;
        case Format::Pretty:
            out << c.function << " mod t^" << s.order() << ":\n";
            for (int n = 0; n < s.order(); ++n) out << "  [t^" << n << "] " << render(s[n]) << approx(s[n]) << '\n';
            break;
    }
}

void run_series(const CliConfig& c, std::ostream& out) {
    const std::string& f = c.function;
    if (f == "log1p") return write_series(out, c, power(log1p(c.order), c.r));
    if (f == "expm1") return write_series(out, c, power(expm1(c.order), c.r));
    if (f == "euler") {
        Series<Rat> denom = expm1(c.order);
        denom[0] = 2;
        return write_series(out, c, power(inverse(denom) * Rat(2), c.r));
    }
    if (c.lambda) {
        Series<Rat> s = f == "F" ? boole_generating_function(c.order, *c.lambda)
                                 : binomial_series(*c.lambda, c.order);
        return write_series(out, c, power(s, c.r));
    }
    Series<LaurentPoly> s = f == "F" ? boole_generating_function(c.order) : binom_pow(LaurentPoly::lambda(), c.order);
    write_series(out, c, power(s, c.r));
}

SuiteConfig suite_config(const CliConfig& c) {
    SuiteConfig s;
    s.n_max = c.n_max_given ? c.n_max : 12;
    s.N_max = c.N_max;
    s.k_max = c.k_max;
    s.i_max = c.i_max;
    s.order = c.order;
    s.identities = c.identities;
    s.options.lambda = c.lambda;
    return s;
}

bool all_passed(const std::vector<VerifyReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed()) return false;
    return true;
}

Json reports_json(const std::vector<VerifyReport>& reports) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr;
}

int run_verify(const CliConfig& c, std::ostream& out) {
    auto reports = run_suite(suite_config(c));
    switch (c.format) {
        case Format::Json:
            out << Json{{"lambda", lambda_label(c.lambda)}, {"passed", all_passed(reports)}, {"reports", reports_json(reports)}}
                       .dump(2)
                << '\n';
            break;
        case Format::Csv:
            out << "identity,passed,checks\n";
            for (const auto& r : reports) out << to_string(r.identity) << ',' << (r.passed() ? "true" : "false") << ',' << r.checks << '\n';
            break;
        case Format::Pretty: out << render_summary(reports); break;
    }
    return all_passed(reports) ? kExitOk : kExitIdentityFailure;
}

int run_all(const CliConfig& c, std::ostream& out) {
    int n_max = c.n_max;
    auto reports = run_suite(suite_config(c));
    if (c.format == Format::Json) {
        Json j;
        j["lambda"] = lambda_label(c.lambda);
        if (c.lambda) {
            j["boole"] = to_json(boole_numbers(n_max, 1, *c.lambda));
        } else {
            j["boole"] = to_json(boole_numbers(n_max, 1));
        }
        j["euler"] = to_json(euler_numbers(n_max, 1));
        j["stirling1"] = to_json(stirling1(n_max));
        j["stirling2"] = to_json(stirling2(n_max));
        if (c.lambda) {
            auto tri = triangle_by_recurrence(c.N_max, *c.lambda);
            Json rows = Json::array();
            for (int n = 0; n <= tri.n_max(); ++n) rows.push_back(tri.row(n));
            j["triangle"] = Json{{"N_max", c.N_max}, {"rows", std::move(rows)}};
        } else {
            j["triangle"] = to_json(triangle_by_recurrence(c.N_max));
        }
        j["passed"] = all_passed(reports);
        j["reports"] = reports_json(reports);
        out << j.dump(2) << '\n';
    } else {
        CliConfig section = c;
        out << "== Boole numbers (lambda = " << lambda_label(c.lambda) << ")\n";
        section.family = "boole";
        section.r = 1;
        run_numbers(section, out);
        out << "\n== Euler numbers\n";
        section.family = "euler";
        run_numbers(section, out);
        out << "\n== ODE coefficient triangle a_k(N)\n";
        run_triangle(section, out);
        out << "\n== Identity verification\n" << render_summary(reports);
    }
    return all_passed(reports) ? kExitOk : kExitIdentityFailure;
}

Rat parse_lambda_value(const std::string& text) {
    try {
        return Rat::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--lambda: ") + e.what());
    }
}

}  // namespace

void validate(const CliConfig& c) {
    if (c.lambda && c.lambda->is_zero()) throw UsageError("--lambda must be nonzero");
    if (c.n_max < 0) throw UsageError("--n-max must be >= 0");
    if (c.N_max < 1) throw UsageError("--N-max must be >= 1");
    if (c.k_max < 0) throw UsageError("--k-max must be >= 0");
    if (c.i_max < 1) throw UsageError("--i-max must be >= 1");
    if (c.order < 1) throw UsageError("--order must be >= 1");
    if (c.r < 1) throw UsageError("--r must be >= 1");
    if (!kFamilies.contains(c.family)) throw UsageError("unknown --family '" + c.family + "'");
    if (!kFunctions.contains(c.function)) throw UsageError("unknown --function '" + c.function + "'");
    bool verifies_ode = (c.command == Command::Verify || c.command == Command::All) &&
                        (c.identities.empty() || c.identities.contains(IdentityId::ODE));
    if (verifies_ode && c.order < c.N_max + 2)
        throw UsageError("--order must be >= N_max + 2 (" + std::to_string(c.N_max + 2) + ") when verifying ODE");
    if (c.command == Command::All && c.format == Format::Csv) throw UsageError("'all' supports pretty and json output only");
}

int run(const CliConfig& config, std::ostream& out) {
    validate(config);
    switch (config.command) {
        case Command::Numbers: run_numbers(config, out); return kExitOk;
        case Command::Triangle: run_triangle(config, out); return kExitOk;
        case Command::Series: run_series(config, out); return kExitOk;
        case Command::Verify: return run_verify(config, out);
        case Command::All: return run_all(config, out);
    }
    return kExitOk;
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Boole numbers, ODE coefficient triangle and identity verification"};
    app.require_subcommand(1);

    CliConfig config;
    std::string lambda_text = "symbolic";
    std::string x_text = "0";
    std::string format_text = "pretty";
    std::string out_path;
    std::vector<std::string> identity_names;
    bool all_flag = false;

    const std::map<std::string, Format> formats{{"pretty", Format::Pretty}, {"json", Format::Json}, {"csv", Format::Csv}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--lambda", lambda_text, "\"symbolic\" or a nonzero rational p/q");
        sub->add_option("--format", format_text, "pretty | json | csv")->check(CLI::IsMember({"pretty", "json", "csv"}));
        sub->add_option("--out", out_path, "write to this file instead of stdout");
    };
    auto add_bounds = [&](CLI::App* sub) {
        sub->add_option("--N-max", config.N_max, "largest N for the triangle and N-indexed identities");
        sub->add_option("--k-max", config.k_max, "largest k for THM3/THM4");
        sub->add_option("--i-max", config.i_max, "largest order i for EQ34/EQ38");
        sub->add_option("--order", config.order, "series truncation order for ODE");
    };

    CLI::Option* n_max_opts[3] = {};

    auto* numbers = app.add_subcommand("numbers", "Boole, Euler or Stirling tables");
    n_max_opts[0] = numbers->add_option("--n-max", config.n_max, "largest index n");
    numbers->add_option("--family", config.family, "boole | boole-poly | euler | stirling1 | stirling2");
    numbers->add_option("--r", config.r, "order r of the higher-order families");
    numbers->add_option("--x", x_text, "rational x for boole-poly");
    add_common(numbers);

    auto* triangle = app.add_subcommand("triangle", "ODE coefficient triangle a_k(N; lambda)");
    triangle->add_option("--N-max", config.N_max, "last row");
    add_common(triangle);

    auto* series = app.add_subcommand("series", "truncated generating functions");
    series->add_option("--function", config.function, "F | binom | log1p | expm1 | euler");
    series->add_option("--order", config.order, "number of coefficients kept");
    series->add_option("--r", config.r, "raise the series to this power");
    add_common(series);

    auto* verify = app.add_subcommand("verify", "check identities over a bounded grid");
    verify->add_flag("--all", all_flag, "every identity family (default when no --identity is given)");
    verify->add_option("--identity", identity_names, "ODE THM3 EQ32 EQ34 EQ36 EQ38 THM4 CHANGHEE");
    n_max_opts[1] = verify->add_option("--n-max", config.n_max, "largest n for EQ32/EQ34/EQ36/EQ38/CHANGHEE");
    add_bounds(verify);
    add_common(verify);

    auto* all = app.add_subcommand("all", "tables, triangle and the full verification suite");
    n_max_opts[2] = all->add_option("--n-max", config.n_max, "largest n");
    add_bounds(all);
    add_common(all);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (numbers->parsed()) config.command = Command::Numbers;
        if (triangle->parsed()) config.command = Command::Triangle;
        if (series->parsed()) config.command = Command::Series;
        if (verify->parsed()) config.command = Command::Verify;
        if (all->parsed()) config.command = Command::All;
        for (auto* opt : n_max_opts)
            if (opt->count() > 0) config.n_max_given = true;

        if (lambda_text != "symbolic") config.lambda = parse_lambda_value(lambda_text);
        try {
            config.x = Rat::parse(x_text);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--x: ") + e.what());
        }
        config.format = formats.at(format_text);
        for (const auto& name : identity_names) {
            auto id = parse_identity(name);
            if (!id) throw UsageError("unknown --identity '" + name + "'");
            config.identities.insert(*id);
        }
        if (all_flag) config.identities.clear();
        if (!out_path.empty()) config.out = out_path;

        validate(config);
        if (config.out) {
            std::ofstream file(*config.out);
            if (!file) throw UsageError("cannot open '" + *config.out + "' for writing");
            return run(config, file);
        }
        return run(config, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace boole::cli
