#include "boole/json_io.hpp"

#include <stdexcept>

namespace boole {

void to_json(Json& j, const Rat& q) { j = q.to_string(); }

void from_json(const Json& j, Rat& q) {
    if (j.is_number_integer()) {
        q = Rat(j.get<std::int64_t>());
        return;
    }
    q = Rat::parse(j.get<std::string>());
}

void to_json(Json& j, const LaurentPoly& p) {
    Json coeffs = Json::array();
    for (const Rat& c : p.coeffs()) coeffs.push_back(c);
    j = Json{{"min_exp", p.min_exp()}, {"coeffs", std::move(coeffs)}};
}

void from_json(const Json& j, LaurentPoly& p) {
    p = LaurentPoly(j.at("min_exp").get<int>(), j.at("coeffs").get<std::vector<Rat>>());
}

namespace {

template <class R>
Json boole_json(const BooleTable<R>& table) {
    Json j{{"family", "boole"}, {"r", table.order}, {"n_max", table.n_max}};
    j["mode"] = table.symbolic() ? "symbolic" : "fixed";
    j["lambda"] = table.symbolic() ? Json("symbolic") : Json(*table.lambda);
    j["values"] = table.values;
    return j;
}

}  // namespace

Json to_json(const BooleTable<LaurentPoly>& table) { return boole_json(table); }
Json to_json(const BooleTable<Rat>& table) { return boole_json(table); }

Json to_json(const EulerTable& table) {
    return Json{{"family", "euler"}, {"r", table.order}, {"n_max", table.n_max}, {"mode", "exact"}, {"values", table.values}};
}

Json to_json(const StirlingTriangle& table) {
    return Json{{"family", table.kind() == StirlingKind::First ? "stirling1" : "stirling2"},
                {"n_max", table.n_max()},
                {"mode", "exact"},
                {"values", table.rows()}};
}

Json to_json(const ATriangle& triangle) {
    Json rows = Json::array();
    Json entries = Json::array();
    for (int n = 0; n <= triangle.n_max(); ++n) {
        Json row = Json::array();
        for (const LaurentPoly& p : triangle.row(n)) row.push_back(p.to_string());
        rows.push_back(std::move(row));
        entries.push_back(triangle.row(n));
    }
    return Json{{"N_max", triangle.n_max()}, {"rows", std::move(rows)}, {"entries", std::move(entries)}};
}

std::vector<std::vector<LaurentPoly>> triangle_rows_from_json(const Json& j) {
    return j.at("entries").get<std::vector<std::vector<LaurentPoly>>>();
}

Json to_json(const VerifyReport& report) {
    Json params = Json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    Json j{{"identity", std::string(to_string(report.identity))}, {"params", std::move(params)}};
    j["lambda"] = report.lambda ? Json(*report.lambda) : Json("symbolic");
    j["passed"] = report.passed();
    j["checks"] = report.checks;
    if (report.counterexample) {
        Json index = Json::object();
        for (const auto& [name, value] : report.counterexample->index) index[name] = value;
        j["counterexample"] = Json{{"index", std::move(index)},
                                   {"lhs", report.counterexample->lhs},
                                   {"rhs", report.counterexample->rhs}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

VerifyReport report_from_json(const Json& j) {
    VerifyReport r;
    auto id = parse_identity(j.at("identity").get<std::string>());
    if (!id) throw std::invalid_argument("unknown identity '" + j.at("identity").get<std::string>() + "'");
    r.identity = *id;
    for (const auto& [key, value] : j.at("params").items()) r.params[key] = value.get<int>();
    if (j.at("lambda") != "symbolic") r.lambda = j.at("lambda").get<Rat>();
    r.checks = j.at("checks").get<std::size_t>();
    const Json& cx = j.at("counterexample");
    if (!cx.is_null()) {
        Counterexample c;
        for (const auto& [name, value] : cx.at("index").items()) c.index.emplace_back(name, value.get<int>());
        c.lhs = cx.at("lhs").get<std::string>();
        c.rhs = cx.at("rhs").get<std::string>();
        r.counterexample = std::move(c);
    }
    if (j.at("passed").get<bool>() != r.passed())
        throw std::invalid_argument("report JSON: 'passed' disagrees with 'counterexample'");
    return r;
}

}  // namespace boole
