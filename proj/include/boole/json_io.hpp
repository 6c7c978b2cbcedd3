#pragma once

// JSON forms of the library's values.
//
//   Rat          "p/q" or "p"
//   LaurentPoly  {"min_exp": e, "coeffs": ["p/q", ...]}
//   Series       {"order": M, "coeffs": [<ring element>, ...]}
//   VerifyReport {"identity", "params", "lambda", "passed", "checks", "counterexample"}

#include <json.hpp>

#include "boole/identity_verifier.hpp"
#include "boole/laurent_poly.hpp"
#include "boole/ode_coefficients.hpp"
#include "boole/rational.hpp"
#include "boole/series.hpp"
#include "boole/special_numbers.hpp"

namespace boole {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const Rat& q);
void from_json(const Json& j, Rat& q);

void to_json(Json& j, const LaurentPoly& p);
void from_json(const Json& j, LaurentPoly& p);

template <CoefficientRing R>
Json series_to_json(const Series<R>& s) {
    Json coeffs = Json::array();
    for (const R& c : s.coeffs()) coeffs.push_back(c);
    return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

/// Throws std::invalid_argument when "order" disagrees with the coefficient count.
template <CoefficientRing R>
Series<R> series_from_json(const Json& j) {
    std::vector<R> coeffs = j.at("coeffs").get<std::vector<R>>();
    if (j.at("order").get<int>() != static_cast<int>(coeffs.size()))
        throw std::invalid_argument("series JSON: order does not match coefficient count");
    return Series<R>(std::move(coeffs));
}

Json to_json(const BooleTable<LaurentPoly>& table);
Json to_json(const BooleTable<Rat>& table);
Json to_json(const EulerTable& table);
Json to_json(const StirlingTriangle& table);
/// {"N_max", "rows": [[canonical string, ...], ...], "entries": [[LaurentPoly, ...], ...]}
Json to_json(const ATriangle& triangle);
/// Rebuilds the rows of a triangle from the "entries" field.
std::vector<std::vector<LaurentPoly>> triangle_rows_from_json(const Json& j);

Json to_json(const VerifyReport& report);
VerifyReport report_from_json(const Json& j);

}  // namespace boole
