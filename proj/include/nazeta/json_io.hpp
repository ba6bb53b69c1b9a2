#pragma once

#include "nazeta/poly.hpp"
#include "nazeta/ratfun.hpp"

#include <json.hpp>

namespace nazeta {

using json = nlohmann::json;

// Rationals travel as ["num", "den"] decimal strings; polynomials as arrays of
// those, lowest exponent first.
json to_json(const Rational& x);
json to_json(const Poly& p);
json to_json(const RationalFunction& f);

// Accepts ["num","den"], [num, den], "a/b", or a plain integer.
Rational rational_from_json(const json& j);
Poly poly_from_json(const json& j);
RationalFunction ratfun_from_json(const json& j);

}  // namespace nazeta
