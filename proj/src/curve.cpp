#include "nazeta/curve.hpp"

#include "nazeta/errors.hpp"

#include <algorithm>
#include <cmath>

namespace nazeta {

namespace {

Integer binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

void require_prime_power(long q) {
  if (q < 2 || prime_power_decomposition(static_cast<std::uint64_t>(q)).first == 0) {
    throw InputError("q = " + std::to_string(q) + " is not a prime power");
  }
}

}  // namespace

std::vector<Integer> CurveData::derived_point_counts(int m_max) const {
  std::vector<Integer> out;
  if (m_max <= 0) return out;
  auto S = newton_power_sums(weil_numerator, m_max);
  for (int m = 1; m <= m_max; ++m) {
    Rational n = Rational(integer_pow(Integer(q), static_cast<unsigned long>(m)) + 1) - S[static_cast<std::size_t>(m - 1)];
    out.push_back(n.get_num());
  }
  return out;
}

CurveData ingest_weil(long q, int g, const std::vector<Integer>& coeffs, std::string label,
                      std::vector<Integer> point_counts) {
  require_prime_power(q);
  if (g < 0) throw InputError("genus must be >= 0");
  if (static_cast<int>(coeffs.size()) != 2 * g + 1) {
    throw InputError("Weil numerator of genus " + std::to_string(g) + " needs " + std::to_string(2 * g + 1) +
                     " coefficients, got " + std::to_string(coeffs.size()));
  }
  if (coeffs[0] != 1) throw InputError("Weil numerator must have a_0 = 1");
  for (int i = 0; i <= g; ++i) {
    Integer expected = integer_pow(Integer(q), static_cast<unsigned long>(g - i)) * coeffs[static_cast<std::size_t>(i)];
    if (coeffs[static_cast<std::size_t>(2 * g - i)] != expected) {
      throw InputError("Weil numerator violates a_{2g-i} = q^{g-i} a_i at i = " + std::to_string(i));
    }
  }
  for (int i = 1; i <= g; ++i) {
    const Integer& a = coeffs[static_cast<std::size_t>(i)];
    Integer bound = binomial(2 * g, i);
    if (a * a > bound * bound * integer_pow(Integer(q), static_cast<unsigned long>(i))) {
      throw InputError("coefficient a_" + std::to_string(i) + " = " + a.get_str() + " exceeds the Weil bound");
    }
  }
  CurveData c;
  c.q = q;
  c.g = g;
  std::vector<Rational> rc;
  rc.reserve(coeffs.size());
  for (const auto& a : coeffs) rc.emplace_back(a);
  c.weil_numerator = Poly(std::move(rc));
  c.label = std::move(label);

  auto derived = c.derived_point_counts(std::max<int>(g, static_cast<int>(point_counts.size())));
  for (int m = 0; m < std::max(g, 1) && m < static_cast<int>(derived.size()); ++m) {
    if (derived[static_cast<std::size_t>(m)] < 0) {
      throw InputError("Weil numerator implies N_" + std::to_string(m + 1) + " < 0");
    }
  }
  for (std::size_t m = 0; m < point_counts.size(); ++m) {
    if (point_counts[m] < 0) throw InputError("negative point count N_" + std::to_string(m + 1));
    if (point_counts[m] != derived[m]) {
      throw InputError("point count N_" + std::to_string(m + 1) + " = " + point_counts[m].get_str() +
                       " disagrees with the numerator (expected " + derived[m].get_str() + ")");
    }
  }
  c.point_counts = std::move(point_counts);
  return c;
}

Poly weil_from_counts(long q, int g, const std::vector<Integer>& counts) {
  require_prime_power(q);
  if (static_cast<int>(counts.size()) != g) {
    throw InputError("weil_from_counts needs exactly g = " + std::to_string(g) + " point counts");
  }
  std::vector<Rational> S;
  S.reserve(counts.size());
  for (int m = 1; m <= g; ++m) {
    S.emplace_back(integer_pow(Integer(q), static_cast<unsigned long>(m)) + 1 - counts[static_cast<std::size_t>(m - 1)]);
  }
  Poly half = poly_from_power_sums(S, g, Rational(1));
  std::vector<Rational> a(static_cast<std::size_t>(2 * g + 1), Rational(0));
  for (int i = 0; i <= g; ++i) {
    const Rational& ai = half.coeff(i);
    if (!is_integer(ai)) throw InputError("point counts admit no integral Weil numerator");
    a[static_cast<std::size_t>(i)] = ai;
    a[static_cast<std::size_t>(2 * g - i)] = ai * Rational(integer_pow(Integer(q), static_cast<unsigned long>(g - i)));
  }
  return Poly(std::move(a));
}

Rational AbelianZeta::b_at(int d) const {
  if (d < 0) return Rational(0);
  if (d <= d_max()) return b[static_cast<std::size_t>(d)];
  if (d > 2 * g - 2) {
    return Rational(h) * (rational_pow(Rational(q), d + 1 - g) - 1) / (q - 1);
  }
  throw DomainError("b_d requested beyond the computed window");
}

Rational AbelianZeta::sigma_at(int d) const {
  if (d < 0) return Rational(h);
  if (d <= d_max()) return sigma[static_cast<std::size_t>(d)];
  if (d > 2 * g - 2) return Rational(h) * rational_pow(Rational(q), d + 1 - g);
  throw DomainError("sigma_d requested beyond the computed window");
}

AbelianZeta abelian_zeta(const CurveData& c, int d_max) {
  AbelianZeta out;
  out.q = c.q;
  out.g = c.g;
  const Poly denom = Poly{Rational(1), Rational(-1)} * Poly{Rational(1), Rational(-c.q)};
  out.Z = RationalFunction(c.weil_numerator, denom);
  Rational h = c.weil_numerator(Rational(1));
  out.h = h.get_num();
  out.b = series_expand(out.Z, std::max(d_max, 0) + 1);
  out.sigma.reserve(out.b.size());
  for (const auto& bd : out.b) out.sigma.push_back((c.q - 1) * bd + h);
  return out;
}

int default_d_max(int g, int r) { return std::max(2 * g - 2, r * (2 * g - 2)) + 2 * r; }

AbelianVerification verify_abelian(const CurveData& c, double tol) {
  AbelianVerification v;
  auto pairing = pairing_check(c.weil_numerator, c.q);
  v.functional_equation = pairing.holds;
  v.fe_constant = pairing.constant;
  if (c.weil_numerator.degree() < 1) {
    v.vacuous = true;
    return v;
  }
  auto roots = roots_numeric(c.weil_numerator, tol);
  const double sq = std::sqrt(static_cast<double>(c.q));
  for (const auto& w : roots.roots) v.rh_max_deviation = std::max(v.rh_max_deviation, std::fabs(std::abs(w) - sq));
  v.roots = std::move(roots.roots);
  return v;
}

json to_json(const CurveData& c) {
  json coeffs = json::array();
  for (const auto& a : c.weil_numerator.coefficients()) coeffs.push_back(std::stol(a.get_num().get_str()));
  json out{{"label", c.label}, {"q", c.q}, {"g", c.g}, {"weil_numerator", coeffs}};
  if (!c.point_counts.empty()) {
    json counts = json::array();
    for (const auto& n : c.point_counts) counts.push_back(std::stol(n.get_str()));
    out["point_counts"] = counts;
  }
  return out;
}

namespace {

Integer json_integer(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Rational r = parse_rational(j.get<std::string>());
    if (is_integer(r)) return r.get_num();
  }
  throw InputError("expected an integer, got " + j.dump());
}

}  // namespace

CurveData curve_from_json(const json& j) {
  if (!j.is_object()) throw InputError("curve JSON must be an object");
  for (const char* key : {"q", "g", "weil_numerator"}) {
    if (!j.contains(key)) throw InputError(std::string("curve JSON missing '") + key + "'");
  }
  if (!j.at("q").is_number_integer() || !j.at("g").is_number_integer()) {
    throw InputError("curve JSON: q and g must be integers");
  }
  std::vector<Integer> coeffs;
  for (const auto& a : j.at("weil_numerator")) coeffs.push_back(json_integer(a));
  std::vector<Integer> counts;
  if (j.contains("point_counts")) {
    for (const auto& n : j.at("point_counts")) counts.push_back(json_integer(n));
  }
  return ingest_weil(j.at("q").get<long>(), j.at("g").get<int>(), coeffs, j.value("label", std::string{}),
                     std::move(counts));
}

}  // namespace nazeta
