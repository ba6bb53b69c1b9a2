#include "nazeta/rank_zeta.hpp"

#include "nazeta/errors.hpp"

#include <cmath>
#include <numeric>

namespace nazeta {

namespace {

using detail::positive_mod;

Rational q_pow(long q, long e) { return rational_pow(Rational(q), e); }

// Norm from F(t) to F(T), T = t^a, of a polynomial: determinant of
// multiplication by p on the basis 1, t, ..., t^{a-1} of F[t] over F[T].
Poly polynomial_norm(const Poly& p, int a) {
  if (a == 1) return p;
  const auto n = static_cast<std::size_t>(a);
  std::vector<std::vector<Rational>> parts(n);
  for (int k = 0; k <= p.degree(); ++k) {
    auto& c = parts[static_cast<std::size_t>(k % a)];
    const auto idx = static_cast<std::size_t>(k / a);
    if (c.size() <= idx) c.resize(idx + 1, Rational(0));
    c[idx] = p.coeff(k);
  }
  const Poly T = Poly::monomial(Rational(1), 1);
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Poly c(parts[j]);
      if (i + j >= n) c *= T;
      m[i][(i + j) % n] = c;
    }
  }
  // Bareiss fraction-free elimination over Q[T].
  Poly prev = Poly::constant(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return Poly();
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto [quot, rem] = divmod(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        if (!rem.is_zero()) throw DomainError("inexact Bareiss step");
        m[i][j] = quot;
      }
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace

const Rational& RankWindow::beta_at(long d) const {
  auto it = beta.find(static_cast<int>(positive_mod(d, r)));
  if (it == beta.end()) throw InputError("window lacks beta for d = " + std::to_string(d) + " mod " + std::to_string(r));
  return it->second;
}

void RankWindow::validate() const {
  if (q < 2 || prime_power_decomposition(static_cast<std::uint64_t>(q)).first == 0) {
    throw InputError("q = " + std::to_string(q) + " is not a prime power");
  }
  if (g < 0) throw InputError("genus must be >= 0");
  if (r < 1) throw InputError("rank must be >= 1");
  for (int k = 0; k < r; ++k) {
    const Rational& b = beta_at(k);
    if (b < 0) throw InputError("negative semistable mass in window");
  }
  for (const auto& [d, v] : u) {
    if (g == 0 || d < 0 || d > top_degree()) {
      throw InputError("window entry u_" + std::to_string(d) + " outside [0, " + std::to_string(top_degree()) + "]");
    }
  }
  if (g == 0) return;
  const int D = top_degree();
  for (int d = 0; d <= D; ++d) {
    if (!u.contains(d)) throw InputError("window lacks u_" + std::to_string(d));
  }
  for (int d = 0; d <= D; ++d) {
    if (u.at(D - d) != q_pow(q, static_cast<long>(r) * (g - 1) - d) * u.at(d)) {
      throw InputError("window violates duality at d = " + std::to_string(d));
    }
  }
}

json to_json(const RankWindow& w) {
  json u = json::array();
  for (const auto& [d, v] : w.u) u.push_back({{"d", d}, {"value", to_json(v)}});
  json beta = json::array();
  for (const auto& [k, v] : w.beta) beta.push_back({{"d_mod_r", k}, {"value", to_json(v)}});
  return json{{"q", w.q}, {"g", w.g}, {"r", w.r}, {"u", u}, {"beta", beta}};
}

RankWindow rank_window_from_json(const json& j) {
  if (!j.is_object()) throw InputError("rank window JSON must be an object");
  for (const char* key : {"q", "g", "r", "beta"}) {
    if (!j.contains(key)) throw InputError(std::string("rank window JSON missing '") + key + "'");
  }
  RankWindow w;
  w.q = j.at("q").get<long>();
  w.g = j.at("g").get<int>();
  w.r = j.at("r").get<int>();
  if (w.r < 1) throw InputError("rank must be >= 1");
  for (const auto& e : j.value("u", json::array())) w.u[e.at("d").get<int>()] = rational_from_json(e.at("value"));
  for (const auto& e : j.at("beta")) {
    w.beta[static_cast<int>(positive_mod(e.at("d_mod_r").get<long>(), w.r))] = rational_from_json(e.at("value"));
  }
  return w;
}

RankWindow window_from_masses(MassTable& table, int r, std::map<int, Rational> u) {
  RankWindow w;
  w.q = table.curve().q;
  w.g = table.curve().g;
  w.r = r;
  w.u = std::move(u);
  for (int k = 0; k < r; ++k) w.beta[k] = table.beta(r, k);
  return w;
}

bool ZetaReport::all_assertable_pass() const {
  bool ok = degree_ok && functional_equation && pairing.holds && exp_log_ok && residue_symmetry;
  if (r == 1 && !rh.vacuous) ok = ok && rh.max_deviation < 1e-9;
  return ok;
}

RationalFunction assemble_rank_zeta(const RankWindow& w) {
  w.validate();
  const int D = w.top_degree();
  RationalFunction I;
  if (w.g >= 1) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(D + 1), Rational(0));
    for (const auto& [d, v] : w.u) coeffs[static_cast<std::size_t>(d)] = v;
    I = RationalFunction(Poly(std::move(coeffs)));
  }
  const int first = w.g == 0 ? 0 : D + 1;
  RationalFunction II;
  for (int d = first; d < first + w.r; ++d) {
    II += geometric_sum(d, w.beta_at(d), w.r, SeriesBase::qt, w.q);
  }
  II *= RationalFunction(q_pow(w.q, -static_cast<long>(w.r) * (w.g - 1)));
  RationalFunction III;
  for (int d = 0; d < w.r; ++d) III += geometric_sum(d, w.beta_at(d), w.r, SeriesBase::t);
  return I + II - III;
}

std::vector<Rational> power_sums_N(const Poly& P, int r, long q, int m_max) {
  std::vector<Rational> out;
  if (m_max <= 0) return out;
  const auto S = newton_power_sums(P, m_max);
  out.reserve(static_cast<std::size_t>(m_max));
  for (int m = 1; m <= m_max; ++m) {
    Rational n = -S[static_cast<std::size_t>(m - 1)];
    if (m % r == 0) n += r * (1 + q_pow(q, m));
    out.push_back(n);
  }
  return out;
}

bool exp_log_identity(const RationalFunction& Z, const std::vector<Rational>& N, int m_max) {
  if (static_cast<int>(N.size()) < m_max) throw DomainError("exp_log_identity needs N_1..N_m_max");
  const auto series = series_expand(Z, m_max + 1);
  if (series.empty() || series[0] == 0) return false;
  std::vector<Rational> log_series(static_cast<std::size_t>(m_max + 1), Rational(0));
  for (int m = 1; m <= m_max; ++m) log_series[static_cast<std::size_t>(m)] = N[static_cast<std::size_t>(m - 1)] / m;
  const auto e = series_exp(log_series, m_max + 1);
  for (int m = 0; m <= m_max; ++m) {
    if (e[static_cast<std::size_t>(m)] * series[0] != series[static_cast<std::size_t>(m)]) return false;
  }
  return true;
}

RationalFunction roots_of_unity_product(const RationalFunction& Z, int a) {
  if (a < 1) throw InputError("a must be >= 1");
  return RationalFunction(polynomial_norm(Z.numerator(), a), polynomial_norm(Z.denominator(), a));
}

RootsOfUnityCheck roots_of_unity_check(const ZetaReport& rep, int a, int m_max) {
  if (std::gcd(a, rep.r) != 1) {
    throw InputError("roots-of-unity product needs gcd(a, r) = 1, got a = " + std::to_string(a));
  }
  RootsOfUnityCheck out;
  out.product = roots_of_unity_product(rep.Z, a);
  const auto N = power_sums_N(rep.P, rep.r, rep.q, m_max * a);
  std::vector<Rational> Na;
  for (int m = 1; m <= m_max; ++m) Na.push_back(N[static_cast<std::size_t>(m * a - 1)]);
  out.matches = exp_log_identity(out.product, Na, m_max);
  return out;
}

RhReport rh_probe(const Poly& P, long q, double tol) {
  RhReport out;
  if (P.degree() < 1) {
    out.vacuous = true;
    return out;
  }
  auto roots = roots_numeric(P, tol);
  const double sq = std::sqrt(static_cast<double>(q));
  for (const auto& w : roots.roots) out.max_deviation = std::max(out.max_deviation, std::fabs(std::abs(w) - sq));
  out.roots = std::move(roots.roots);
  return out;
}

ZetaReport assemble_Z(const RankWindow& w, const ZetaOptions& opts) {
  ZetaReport rep;
  rep.q = w.q;
  rep.g = w.g;
  rep.r = w.r;
  rep.Z = assemble_rank_zeta(w);

  const Poly one_minus_tr = Poly::constant(1) - Poly::monomial(Rational(1), w.r);
  const Poly one_minus_qtr = Poly::constant(1) - Poly::monomial(q_pow(w.q, w.r), w.r);
  const RationalFunction scaled = rep.Z * RationalFunction(one_minus_tr * one_minus_qtr);
  if (!scaled.is_polynomial()) {
    throw VerificationError("Z (1-t^r)(1-(qt)^r) is not a polynomial: inconsistent window data");
  }
  rep.P = scaled.numerator() * (1 / scaled.denominator().coeff(0));
  rep.degree = rep.P.degree();
  rep.expected_degree = 2 * w.r * w.g;
  rep.degree_ok = rep.degree == rep.expected_degree;

  const long shift = -static_cast<long>(w.r) * (w.g - 1);
  const RationalFunction xi = rep.Z * RationalFunction::monomial(Rational(1), static_cast<int>(shift));
  rep.functional_equation = substitute_recip(xi, w.q) == xi;
  rep.pairing = pairing_check(rep.P, w.q);

  rep.N = power_sums_N(rep.P, w.r, w.q, opts.m_max);
  rep.exp_log_ok = exp_log_identity(rep.Z, rep.N, opts.m_max);

  rep.residue_t1 = residue_at(xi, Rational(1));
  rep.residue_t_qinv = residue_at(xi, Rational(1, w.q));
  rep.residue_symmetry = rep.residue_t_qinv == -rep.residue_t1 / w.q;

  if (opts.numeric_roots) rep.rh = rh_probe(rep.P, w.q, opts.tol);
  return rep;
}

ZetaReport rank1_pipeline(const CurveData& c, const ZetaOptions& opts) {
  const AbelianZeta ab = abelian_zeta(c, std::max(2 * c.g - 2, 0));
  RankWindow w;
  w.q = c.q;
  w.g = c.g;
  w.r = 1;
  if (c.g >= 1) {
    for (int d = 0; d <= 2 * c.g - 2; ++d) w.u[d] = ab.sigma_at(d) / (c.q - 1);
  }
  w.beta[0] = Rational(ab.h) / (c.q - 1);
  ZetaReport rep = assemble_Z(w, opts);
  if (!(rep.Z == ab.Z)) {
    throw VerificationError("rank-1 assembly " + rep.Z.to_string() + " differs from the abelian zeta " +
                            ab.Z.to_string());
  }
  return rep;
}

json to_json(const ZetaReport& rep) {
  json N = json::array();
  for (const auto& n : rep.N) N.push_back(to_json(n));
  json roots = json::array();
  for (const auto& w : rep.rh.roots) roots.push_back({w.real(), w.imag()});
  return json{
      {"q", rep.q},
      {"g", rep.g},
      {"r", rep.r},
      {"Z", to_json(rep.Z)},
      {"P", to_json(rep.P)},
      {"degP", rep.degree},
      {"expected_degree", rep.expected_degree},
      {"N", N},
      {"pairing_constant", to_json(rep.pairing.constant)},
      {"residues", {{"t1", to_json(rep.residue_t1)}, {"t_qinv", to_json(rep.residue_t_qinv)}}},
      {"verdicts",
       {{"degree", rep.degree_ok},
        {"functional_equation", rep.functional_equation},
        {"pairing", rep.pairing.holds},
        {"exp_log", rep.exp_log_ok},
        {"residue_symmetry", rep.residue_symmetry}}},
      {"rh",
       {{"numeric", true},
        {"vacuous", rep.rh.vacuous},
        {"assertable", rep.r == 1},
        {"max_deviation", rep.rh.max_deviation},
        {"roots", roots}}},
  };
}

}  // namespace nazeta
