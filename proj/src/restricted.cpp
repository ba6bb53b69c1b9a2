#include "nazeta/restricted.hpp"

#include "nazeta/errors.hpp"
#include "nazeta/mass.hpp"

namespace nazeta {

namespace {

using detail::positive_mod;

Rational q_pow(long q, long e) { return rational_pow(Rational(q), e); }

RationalFunction t_pow(int e) { return RationalFunction::monomial(Rational(1), e); }

RationalFunction qt_pow(long q, int e) { return RationalFunction::monomial(q_pow(q, e), e); }

bool on_progressions(int d, int dL, int D) {
  return positive_mod(d - dL, D) == 0 || positive_mod(d + dL, D) == 0;
}

bool progressions_collide(int dL, int D) { return positive_mod(2L * dL, D) == 0; }

}  // namespace

void RestrictedWindow::validate() const {
  if (g <= 1) throw DomainError("restricted zeta needs g >= 2 (every denominator vanishes for g <= 1)");
  if (q < 2 || prime_power_decomposition(static_cast<std::uint64_t>(q)).first == 0) {
    throw InputError("q = " + std::to_string(q) + " is not a prime power");
  }
  if (r < 1) throw InputError("rank must be >= 1");
  if (dL < 0 || dL > r * (g - 1)) {
    throw InputError("level degree must satisfy 0 <= dL <= r(g-1), got " + std::to_string(dL));
  }
  if (M <= 0) throw InputError("Harder-Narasimhan number must be positive");
  const int D = top_degree();
  for (const auto& [d, v] : u) {
    if (d < 0 || d > D) throw InputError("window degree " + std::to_string(d) + " outside [0, " + std::to_string(D) + "]");
    if (strict_progressions && !on_progressions(d, dL, D)) {
      throw InputError("window degree " + std::to_string(d) + " is not congruent to +-dL mod " + std::to_string(D));
    }
  }
  for (const auto& [d, v] : u) {
    auto it = u.find(D - d);
    const Rational partner = it == u.end() ? Rational(0) : it->second;
    if (partner != q_pow(q, static_cast<long>(r) * (g - 1) - d) * v) {
      throw InputError("window violates duality at d = " + std::to_string(d));
    }
  }
}

json to_json(const RestrictedWindow& w) {
  json u = json::array();
  for (const auto& [d, v] : w.u) u.push_back({{"d", d}, {"value", to_json(v)}});
  return json{{"q", w.q},
              {"g", w.g},
              {"r", w.r},
              {"dL", w.dL},
              {"u", u},
              {"M", to_json(w.M)},
              {"semantics", w.semantics == WindowSemantics::set ? "set" : "multiset"},
              {"strict_progressions", w.strict_progressions}};
}

RestrictedWindow restricted_window_from_json(const json& j) {
  if (!j.is_object()) throw InputError("restricted window JSON must be an object");
  for (const char* key : {"q", "g", "r", "dL", "u", "M"}) {
    if (!j.contains(key)) throw InputError(std::string("restricted window JSON missing '") + key + "'");
  }
  RestrictedWindow w;
  w.q = j.at("q").get<long>();
  w.g = j.at("g").get<int>();
  w.r = j.at("r").get<int>();
  w.dL = j.at("dL").get<int>();
  for (const auto& e : j.at("u")) {
    const int d = e.at("d").get<int>();
    if (w.u.contains(d)) throw InputError("duplicate window degree " + std::to_string(d));
    w.u[d] = rational_from_json(e.at("value"));
  }
  w.M = rational_from_json(j.at("M"));
  w.strict_progressions = j.value("strict_progressions", true);
  const std::string sem = j.value("semantics", std::string("multiset"));
  if (sem == "multiset") {
    w.semantics = WindowSemantics::multiset;
  } else if (sem == "set") {
    w.semantics = WindowSemantics::set;
  } else {
    throw InputError("semantics must be 'multiset' or 'set'");
  }
  return w;
}

RationalFunction restricted_bracket(long q, int g, int r, int dL) {
  const int D = r * (2 * g - 2);
  const int chi = dL - r * (g - 1);
  if (D == 0) throw DomainError("restricted zeta needs g >= 2");
  const RationalFunction one(Rational(1));
  const RationalFunction qt_den = qt_pow(q, -D) - one;
  const RationalFunction t_den = t_pow(D) - one;
  return qt_pow(q, chi) / qt_den + t_pow(-chi) / t_den + qt_pow(q, -chi) / qt_den + t_pow(chi) / t_den;
}

RestrictedZeta assemble_xi(const RestrictedWindow& w, bool skip_validation) {
  if (!skip_validation) w.validate();
  if (w.g <= 1) throw DomainError("restricted zeta needs g >= 2 (every denominator vanishes for g <= 1)");
  const int shift = w.r * (w.g - 1);
  RestrictedZeta z;
  RationalFunction symmetrized;
  for (const auto& [d, v] : w.u) {
    const int chi_d = d - shift;
    z.S_part += RationalFunction::monomial(v, chi_d);
    symmetrized += RationalFunction(v / 2) * (t_pow(chi_d) + qt_pow(w.q, -chi_d));
  }
  z.s_symmetrized_agrees = symmetrized == z.S_part;
  z.s_holomorphic = (z.S_part * t_pow(shift)).is_polynomial();

  Rational weight = w.M;
  if (w.semantics == WindowSemantics::set && progressions_collide(w.dL, w.top_degree())) weight /= 2;
  z.T_part = RationalFunction(weight) * restricted_bracket(w.q, w.g, w.r, w.dL);
  z.xi = z.S_part + z.T_part;
  z.fe_verdict = check_fe_xi(z.xi, w.q);
  return z;
}

bool check_fe_xi(const RationalFunction& xi, long q) { return substitute_recip(xi, q) == xi; }

RestrictedResidues residues_xi(const RestrictedZeta& z, long q, int g, int r, int dL) {
  RestrictedResidues out;
  const Rational t1(1);
  const Rational tq(1, q);
  if (pole_order(z.xi, t1) != 1 || pole_order(z.xi, tq) != 1) {
    throw DomainError("xi must have simple poles at t = 1 and t = 1/q");
  }
  const RationalFunction bracket = restricted_bracket(q, g, r, dL);
  out.res_t1 = residue_at(z.xi, t1);
  out.res_t_qinv = residue_at(z.xi, tq);
  out.nu_t1 = residue_at(bracket, t1);
  out.nu_t_qinv = residue_at(bracket, tq);
  out.hn_from_t1 = out.res_t1 / out.nu_t1;
  out.hn_from_t_qinv = out.res_t_qinv / out.nu_t_qinv;
  out.agree = out.hn_from_t1 == out.hn_from_t_qinv;
  return out;
}

json to_json(const RestrictedZeta& z, const RestrictedResidues& res) {
  return json{{"xi", to_json(z.xi)},
              {"S_part", to_json(z.S_part)},
              {"T_part", to_json(z.T_part)},
              {"residues",
               {{"t1", to_json(res.res_t1)},
                {"t_qinv", to_json(res.res_t_qinv)},
                {"nu_t1", to_json(res.nu_t1)},
                {"nu_t_qinv", to_json(res.nu_t_qinv)},
                {"hn_normalized", to_json(res.hn_from_t_qinv)},
                {"hn_from_t1", to_json(res.hn_from_t1)}}},
              {"verdicts",
               {{"functional_equation", z.fe_verdict},
                {"s_holomorphic", z.s_holomorphic},
                {"s_symmetrized_agrees", z.s_symmetrized_agrees},
                {"residues_agree", res.agree}}}};
}

}  // namespace nazeta
