#pragma once

#include "nazeta/curve.hpp"
#include "nazeta/json_io.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace nazeta {

// Largest rank the Harder-Narasimhan inversion is implemented for.
inline constexpr int kMaxMassRank = 3;

// chi(Hom(E_low, E_high)) = r_low d_high - r_high d_low + r_high r_low (1 - g)
// for bundles E_high of type (r_high, d_high) and E_low of type (r_low, d_low).
long hom_euler_characteristic(int r_high, long d_high, int r_low, long d_low, int g);

// Mass of all rank-r degree-d bundles (semistable or not):
// q^{(r^2-1)(g-1)} * h/(q-1) * prod_{i=2}^r Z_C(q^{-i}). Independent of d.
Rational total_mass(const CurveData& c, int r, int d);

// Independent mass count on P^1 by Grothendieck splitting: sum over
// a_1 <= ... <= a_r with sum a_i = d of 1/#Aut(O(a_1) + ... + O(a_r)).
Rational oracle_mass_p1(long q, int r, int d);

// Order of GL_m(F_q).
Integer gl_order(long q, int m);

// Sum over all Harder-Narasimhan strata with >= 2 parts of
// prod beta(r_i, d_i) * q^{-sum_{i<j} chi(Hom(E_j, E_i))}, resummed in closed form.
// beta(r', d') is only queried for r' < r.
template <class BetaFn>
Rational unstable_strata_mass(long q, int g, int r, long d, BetaFn&& beta);

// Exact comparison of total_mass against oracle_mass_p1 on P^1 over F_q for
// r in {2, 3}, d in {-1, 0, 1, 2}. Result is memoized per q.
bool mass_gate_p1(long q);

enum class MassProvenance { recursion, oracle, user };
std::string to_string(MassProvenance p);

struct MassEntry {
  int r = 0;
  int d_mod_r = 0;
  Rational beta;
  MassProvenance provenance = MassProvenance::recursion;
};

struct FixedDeterminantMass {
  Rational value;
  // M_{C,r,L} taken as beta_{r,d}/h, i.e. assumed independent of L in Pic^d
  bool assumes_l_independence = true;
};

// Semistable masses beta_{r,d} = sum over semistable E of rank r, degree d of
// 1/#Aut(E), memoized per (r, d mod r). Safe for concurrent use.
class MassTable {
 public:
  explicit MassTable(CurveData curve);

  const CurveData& curve() const { return curve_; }
  const Integer& class_number() const { return h_; }

  // Throws GateFailure when the P^1 mass gate fails for this q.
  Rational beta(int r, long d);
  // Recomputes from the recursion for the actual degree d, bypassing the memo
  // at rank r (lower ranks still come from the table).
  Rational beta_uncached(int r, long d);
  FixedDeterminantMass fixed_det_mass(int r, long d);
  // total_mass rebuilt from the table: beta(r, d) + unstable strata.
  Rational hn_resum(int r, long d);

  void set_user(int r, long d, const Rational& beta);
  std::vector<MassEntry> entries() const;
  json to_json() const;

 private:
  Rational compute(int r, long d);
  void require_gate();

  CurveData curve_;
  Integer h_;
  mutable std::mutex mutex_;
  std::map<std::pair<int, int>, MassEntry> entries_;
  bool gate_checked_ = false;
  bool gate_passed_ = false;
};

// ---------------------------------------------------------------------------

namespace detail {

inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline long positive_mod(long a, long m) { return ((a % m) + m) % m; }

Rational q_power(long q, long e);

}  // namespace detail

template <class BetaFn>
Rational unstable_strata_mass(long q, int g, int r, long d, BetaFn&& beta) {
  using detail::floor_div;
  using detail::q_power;
  Rational total(0);
  if (r <= 1) return total;

  // Two parts (r1, r2), r1 + r2 = r: free degree d1 > r1 d / r, weight periodic
  // in d1 with period lcm(r1, r2).
  for (int r1 = 1; r1 < r; ++r1) {
    const int r2 = r - r1;
    const long period = std::lcm(r1, r2);
    const long d1_min = floor_div(static_cast<long>(r1) * d, r) + 1;
    auto chi = [&](long d1) { return hom_euler_characteristic(r1, d1, r2, d - d1, g); };
    Rational head(0);
    for (long j = 0; j < period; ++j) {
      const long d1 = d1_min + j;
      head += beta(r1, d1) * beta(r2, d - d1) * q_power(q, -chi(d1));
    }
    const long step = chi(d1_min + period) - chi(d1_min);
    total += scalar_geometric_sum(head, q_power(q, -step));
  }

  if (r == 3) {
    // Three line-bundle parts d1 > d2 > d3, gaps u = d1 - d2 >= 1, v = d2 - d3 >= 1,
    // with 3 | d - u - 2v.
    auto chi_sum = [&](long u, long v) {
      const long d3 = (d - u - 2 * v) / 3;
      const long d2 = d3 + v;
      const long d1 = d2 + u;
      return hom_euler_characteristic(1, d1, 1, d2, g) + hom_euler_characteristic(1, d1, 1, d3, g) +
             hom_euler_characteristic(1, d2, 1, d3, g);
    };
    for (long u0 = 1; u0 <= 3; ++u0) {
      for (long v0 = 1; v0 <= 3; ++v0) {
        if (detail::positive_mod(d - u0 - 2 * v0, 3) != 0) continue;
        const long d3 = (d - u0 - 2 * v0) / 3;
        const Rational b = beta(1, d3);
        Rational term = b * b * b * q_power(q, -chi_sum(u0, v0));
        const long step_u = chi_sum(u0 + 3, v0) - chi_sum(u0, v0);
        const long step_v = chi_sum(u0, v0 + 3) - chi_sum(u0, v0);
        term = scalar_geometric_sum(term, q_power(q, -step_u));
        term = scalar_geometric_sum(term, q_power(q, -step_v));
        total += term;
      }
    }
  }
  return total;
}

}  // namespace nazeta
