#pragma once

#include "nazeta/analysis.hpp"
#include "nazeta/json_io.hpp"
#include "nazeta/poly.hpp"
#include "nazeta/ratfun.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace nazeta {

// Arithmetic ground truth of one curve over F_q: the Weil numerator
// P_C(t) = 1 + a_1 t + ... + q^g t^{2g} of its Artin zeta function.
struct CurveData {
  long q = 0;
  int g = 0;
  Poly weil_numerator;
  // N_1..N_k when known (optional; validated against the numerator)
  std::vector<Integer> point_counts;
  std::string label;

  // q^m + 1 - S_m from the numerator, m = 1..m_max
  std::vector<Integer> derived_point_counts(int m_max) const;
};

// Validates a_0 = 1, a_{2g-i} = q^{g-i} a_i, the coefficient bound
// |a_i| <= C(2g,i) q^{i/2}, q a prime power, and any supplied point counts.
CurveData ingest_weil(long q, int g, const std::vector<Integer>& coeffs, std::string label = {},
                      std::vector<Integer> point_counts = {});

// Solves a_1..a_g from N_1..N_g via Newton's identities, completes by symmetry.
Poly weil_from_counts(long q, int g, const std::vector<Integer>& counts);

// Abelian-side statistics derived from a curve.
struct AbelianZeta {
  long q = 0;
  int g = 0;
  // P_C / ((1-t)(1-qt))
  RationalFunction Z;
  // class number, P_C(1)
  Integer h;
  // b_d = number of effective divisors of degree d, d = 0..d_max
  std::vector<Rational> b;
  // sigma_d = sum over Pic^d of q^{h0(L)} = (q-1) b_d + h
  std::vector<Rational> sigma;

  int d_max() const { return static_cast<int>(b.size()) - 1; }
  // Valid for every integer d: 0 below degree 0, closed form above 2g-2.
  Rational b_at(int d) const;
  Rational sigma_at(int d) const;
};

AbelianZeta abelian_zeta(const CurveData& c, int d_max);

// Default window reach for zeta assemblies up to rank r.
int default_d_max(int g, int r);

struct AbelianVerification {
  bool functional_equation = false;
  Rational fe_constant;
  double rh_max_deviation = 0;
  std::vector<std::complex<double>> roots;
  bool vacuous = false;
};

AbelianVerification verify_abelian(const CurveData& c, double tol = 1e-9);

json to_json(const CurveData& c);
CurveData curve_from_json(const json& j);

}  // namespace nazeta
