#include "nazeta/json_io.hpp"

#include "nazeta/errors.hpp"

namespace nazeta {

json to_json(const Rational& x) {
  auto [n, d] = to_string_pair(x);
  return json::array({n, d});
}

json to_json(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

json to_json(const RationalFunction& f) {
  return json{{"numerator", to_json(f.numerator())}, {"denominator", to_json(f.denominator())}};
}

namespace {

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Rational r = parse_rational(j.get<std::string>());
    if (!is_integer(r)) throw InputError("expected an integer, got " + j.dump());
    return r.get_num();
  }
  throw InputError("expected an integer, got " + j.dump());
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw InputError("rational must be a [num, den] pair, got " + j.dump());
    Integer den = integer_from_json(j[1]);
    if (den == 0) throw InputError("zero denominator in " + j.dump());
    return make_rational(integer_from_json(j[0]), den);
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("cannot read a rational from " + j.dump());
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw InputError("polynomial must be an array, got " + j.dump());
  std::vector<Rational> c;
  c.reserve(j.size());
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return Poly(std::move(c));
}

RationalFunction ratfun_from_json(const json& j) {
  if (!j.is_object() || !j.contains("numerator") || !j.contains("denominator")) {
    throw InputError("rational function needs numerator and denominator");
  }
  Poly den = poly_from_json(j.at("denominator"));
  if (den.is_zero()) throw InputError("rational function with zero denominator");
  return RationalFunction(poly_from_json(j.at("numerator")), den);
}

}  // namespace nazeta
