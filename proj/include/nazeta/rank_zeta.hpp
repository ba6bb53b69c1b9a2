#pragma once

#include "nazeta/curve.hpp"
#include "nazeta/json_io.hpp"
#include "nazeta/mass.hpp"

#include <complex>
#include <map>
#include <vector>

namespace nazeta {

// Data for the rank-r zeta function: u_d = sum over semistable E of degree d of
// q^{h0(E)}/#Aut(E) for 0 <= d <= r(2g-2), and semistable masses beta keyed by d mod r.
struct RankWindow {
  long q = 0;
  int g = 0;
  int r = 1;
  std::map<int, Rational> u;
  std::map<int, Rational> beta;

  int top_degree() const { return r * (2 * g - 2); }
  const Rational& beta_at(long d) const;
  // Throws InputError on missing entries, broken duality, or negative masses.
  void validate() const;
};

json to_json(const RankWindow& w);
RankWindow rank_window_from_json(const json& j);

// Window for g = 0 (no u entries) or with caller-supplied u, masses from the table.
RankWindow window_from_masses(MassTable& table, int r, std::map<int, Rational> u = {});

struct ZetaOptions {
  int m_max = 10;
  double tol = 1e-9;
  bool numeric_roots = true;
};

struct RhReport {
  bool vacuous = false;
  double max_deviation = 0;
  std::vector<std::complex<double>> roots;
};

struct ZetaReport {
  long q = 0;
  int g = 0;
  int r = 1;
  RationalFunction Z;
  Poly P;
  int degree = 0;
  int expected_degree = 0;
  bool degree_ok = false;
  bool functional_equation = false;
  PairingResult pairing;
  std::vector<Rational> N;
  bool exp_log_ok = false;
  Rational residue_t1;
  Rational residue_t_qinv;
  bool residue_symmetry = false;
  RhReport rh;

  bool all_assertable_pass() const;
};

// Z = I + II - III.
RationalFunction assemble_rank_zeta(const RankWindow& w);

ZetaReport assemble_Z(const RankWindow& w, const ZetaOptions& opts = {});

// Rank-1 window from abelian data; throws VerificationError unless the assembled
// Z equals P_C/((1-t)(1-qt)) exactly.
ZetaReport rank1_pipeline(const CurveData& c, const ZetaOptions& opts = {});

// N_m = r(1+q^m) [r | m] - sum_i omega_i^m.
std::vector<Rational> power_sums_N(const Poly& P, int r, long q, int m_max);

// Checks Z = Z(0) exp(sum_m N_m t^m / m) through order m_max.
bool exp_log_identity(const RationalFunction& Z, const std::vector<Rational>& N, int m_max);

// prod over a-th roots of unity zeta of Z(zeta t), as a rational function of T = t^a.
RationalFunction roots_of_unity_product(const RationalFunction& Z, int a);

struct RootsOfUnityCheck {
  RationalFunction product;
  bool matches = false;
};

// Compares log of the product in T with sum_m N_{ma} T^m / m through order m_max.
RootsOfUnityCheck roots_of_unity_check(const ZetaReport& rep, int a, int m_max);

RhReport rh_probe(const Poly& P, long q, double tol);

json to_json(const ZetaReport& rep);

}  // namespace nazeta
