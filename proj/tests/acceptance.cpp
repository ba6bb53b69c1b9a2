#include "fixtures.hpp"
#include "nazeta/errors.hpp"
#include "nazeta/mass.hpp"
#include "nazeta/nonstable.hpp"
#include "nazeta/point_count.hpp"
#include "nazeta/rank_zeta.hpp"
#include "oracles.hpp"
#include "property_suites.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace nazeta;
using fixtures::constant;
using fixtures::t_var;

namespace {

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  std::function<std::string()> run;  // empty string = pass, otherwise the reason
};

std::string a1() {
  for (long q : {2L, 3L}) {
    const auto ab = abelian_zeta(fixtures::projective_line(q), 2);
    const RationalFunction one = constant(1);
    if (ab.Z != one / ((one - t_var()) * (one - constant(q) * t_var()))) return "P1 zeta over F_" + std::to_string(q);
  }
  return {};
}

std::string a2() {
  const auto counts = count_points(parse_hyperelliptic("y^2+y=x^3", 2), 2);
  if (counts != std::vector<Integer>{3, 9}) return "point counts";
  std::vector<Integer> coeffs;
  const Poly numerator = weil_from_counts(2, 1, {counts[0]});
  for (const auto& a : numerator.coefficients()) coeffs.push_back(a.get_num());
  const auto c = ingest_weil(2, 1, coeffs, "E", counts);
  if (c.weil_numerator != Poly::from_integers({1, 0, 2})) return "numerator";
  if (abelian_zeta(c, 2).h != 3) return "class number";
  const auto v = verify_abelian(c);
  if (!v.functional_equation) return "functional equation";
  for (const auto& w : v.roots) {
    if (std::fabs(std::abs(w) - std::sqrt(2.0)) > 1e-9) return "root modulus";
  }
  return {};
}

std::string a3() {
  RankWindow w{2, 1, 1, {{0, Rational(4)}}, {{0, Rational(3)}}};
  const RationalFunction one = constant(1);
  const RationalFunction t = t_var();
  if (assemble_rank_zeta(w) != (one + constant(2) * t * t) / ((one - t) * (one - constant(2) * t))) return "elliptic";
  for (const auto& c : {fixtures::projective_line(2), fixtures::genus2_f2()}) {
    try {
      if (rank1_pipeline(c).Z != abelian_zeta(c, 4).Z) return c.label;
    } catch (const Error& e) {
      return c.label + ": " + e.what();
    }
  }
  return {};
}

std::string a4() {
  for (long q : {2L, 3L}) {
    MassTable table(fixtures::projective_line(q));
    const auto rep = assemble_Z(window_from_masses(table, 2));
    const RationalFunction one = constant(1);
    const RationalFunction t = t_var();
    const RationalFunction qt = constant(q) * t;
    if (rep.Z != one / (constant(q * q - q) * (one - t * t) * (one - qt * qt))) return "closed form, q = " + std::to_string(q);
    if (series_expand(rep.Z, 30) != oracles::p1_rank2_series(q, 30)) return "split-bundle series, q = " + std::to_string(q);
    if (rep.P.degree() != 0 || rep.degree != 0) return "degree";
    if (!rep.functional_equation || !rep.pairing.holds) return "FE / pairing";
  }
  return {};
}

std::string a5() {
  for (long q : {2L, 3L}) {
    const auto p1 = fixtures::projective_line(q);
    for (int r : {2, 3}) {
      for (int d : {-1, 0, 1, 2}) {
        if (total_mass(p1, r, d) != oracle_mass_p1(q, r, d)) {
          return "q=" + std::to_string(q) + " r=" + std::to_string(r) + " d=" + std::to_string(d);
        }
      }
    }
  }
  MassTable table(fixtures::projective_line(2));
  if (table.beta(2, 1) != 0) return "beta_{2,1}";
  if (table.beta(2, 0) != make_rational(1, 6)) return "beta_{2,0}";
  return {};
}

std::string a6() {
  const auto o = props::restricted_windows(0xacce0006, 100, 2);
  if (o.cases != 100) return "ran " + std::to_string(o.cases) + " windows";
  return o.ok() ? std::string{} : o.first_failure;
}

std::string a7() {
  for (const auto& [eq, c] : {std::pair{"y^2+y=x^3", fixtures::elliptic_f2()}, std::pair{"y^2+y=x^5", fixtures::genus2_f2()}}) {
    const auto counts = count_points(parse_hyperelliptic(eq, 2), 4);
    ZetaOptions opts;
    opts.m_max = 10;
    const auto rep = rank1_pipeline(c, opts);
    for (int m = 1; m <= 4; ++m) {
      if (rep.N[static_cast<std::size_t>(m - 1)] != Rational(counts[static_cast<std::size_t>(m - 1)])) {
        return std::string(eq) + " N_" + std::to_string(m);
      }
    }
    if (!exp_log_identity(rep.Z, rep.N, 10)) return std::string(eq) + " exp/log";
    for (int a : {2, 3}) {
      if (!roots_of_unity_check(rep, a, 10).matches) return std::string(eq) + " roots of unity a=" + std::to_string(a);
    }
  }
  MassTable table(fixtures::projective_line(2));
  const auto r2 = assemble_Z(window_from_masses(table, 2));
  if (!exp_log_identity(r2.Z, r2.N, 10)) return "P1 rank 2 exp/log";
  if (!roots_of_unity_check(r2, 3, 10).matches) return "P1 rank 2 roots of unity a=3";
  return {};
}

std::string a8() {
  const auto z = assemble_ns(make_nonstable_input(fixtures::projective_line(2)));
  const auto series = series_expand(z.zeta_ns, 20);
  for (int d = 0; d < 20; ++d) {
    if (series[static_cast<std::size_t>(d)] != oracles::p1_nonstable_coefficient(2, d)) return "P1 coefficient " + std::to_string(d);
  }
  const auto ell = make_nonstable_input(fixtures::elliptic_f2());
  const auto ze = assemble_ns(ell);
  const auto o = oracle_truncated(ell, ze, Rational(2), 60, 1e-9);
  if (!(o.gap < 1e-9)) return "elliptic gap " + std::to_string(o.gap);
  const auto ex = resolve_jacobian_mode(fixtures::elliptic_f2(), Rational(2), 60, 1e-9);
  if (!ex.unique()) return "mode experiment not unique";
  std::printf("   mode: %s (gap paper %.3g, squared %.3g)\n", to_string(ex.consistent.front()).c_str(), ex.gap_paper,
              ex.gap_squared);
  for (const auto& s : fe_probe(ze.zeta_ns, 2)) {
    std::printf("   FE probe t=%.4f: %.12g vs %.12g\n", s.t, s.value, s.reflected);
  }
  return {};
}

std::string a9() {
  const std::pair<const char*, props::Outcome> suites[] = {
      {"duality-window rejection", props::restricted_windows(0xacce0009, 200)},
      {"non-contracting refusal", props::non_contracting_refusal(0xacce0009, 2000)},
      {"pairing equivalence", props::pairing_equivalence(0xacce0009, 1000)},
      {"cache determinism", props::cache_determinism(20)},
  };
  for (const auto& [name, o] : suites) {
    if (!o.ok()) return std::string(name) + ": " + o.first_failure;
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"A1", "Artin zeta of P1 over F_2 and F_3", 1, a1},
      {"A2", "elliptic curve from brute-force counts", 1, a2},
      {"A3", "rank-1 assembly closure", 1, a3},
      {"A4", "rank-2 zeta of P1 against split bundles", 1, a4},
      {"A5", "mass gate and semistable masses on P1", 10, a5},
      {"A6", "100 random genus-2 restricted windows", 30, a6},
      {"A7", "N_m, exp/log and roots-of-unity identities", 10, a7},
      {"A8", "non-stable rank-2 zeta and its oracles", 60, a8},
      {"A9", "property suites", 60, a9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      reason = c.run();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty() && secs > c.budget_seconds) reason = "over time budget";
    std::printf("%s %s  %-45s %.3fs / %.0fs%s%s\n", c.id, reason.empty() ? "PASS" : "FAIL", c.title, secs,
                c.budget_seconds, reason.empty() ? "" : "  ", reason.c_str());
    std::fflush(stdout);
    if (!reason.empty()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
