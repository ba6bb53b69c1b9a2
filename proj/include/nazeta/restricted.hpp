#pragma once

#include "nazeta/json_io.hpp"
#include "nazeta/ratfun.hpp"

#include <map>

namespace nazeta {

enum class WindowSemantics { multiset, set };

// Level-L family of rank r with deg L = dL: u_d on the degrees of the two
// progressions +-dL mod r(2g-2) inside [0, r(2g-2)], plus its Harder-Narasimhan mass M.
struct RestrictedWindow {
  long q = 0;
  int g = 2;
  int r = 1;
  int dL = 0;
  std::map<int, Rational> u;
  Rational M;
  WindowSemantics semantics = WindowSemantics::multiset;
  // off-progression degrees are rejected unless this is cleared
  bool strict_progressions = true;

  int top_degree() const { return r * (2 * g - 2); }
  int chi_level() const { return dL - r * (g - 1); }
  // Throws InputError (DomainError for g <= 1).
  void validate() const;
};

json to_json(const RestrictedWindow& w);
RestrictedWindow restricted_window_from_json(const json& j);

struct RestrictedZeta {
  RationalFunction xi;
  RationalFunction S_part;
  RationalFunction T_part;
  bool fe_verdict = false;
  // S_part * t^{r(g-1)} is a polynomial
  bool s_holomorphic = false;
  // direct and duality-symmetrized S agree
  bool s_symmetrized_agrees = false;
};

// The four-term bracket multiplying M, as a rational function of t.
RationalFunction restricted_bracket(long q, int g, int r, int dL);

// Skipping validation is for experiments only (forced bad windows).
RestrictedZeta assemble_xi(const RestrictedWindow& w, bool skip_validation = false);

bool check_fe_xi(const RationalFunction& xi, long q);

struct RestrictedResidues {
  Rational res_t1;
  Rational res_t_qinv;
  // residues of the M = 1 bracket
  Rational nu_t1;
  Rational nu_t_qinv;
  Rational hn_from_t1;
  Rational hn_from_t_qinv;
  bool agree = false;
};

// DomainError if either pole is not simple.
RestrictedResidues residues_xi(const RestrictedZeta& z, long q, int g, int r, int dL);

json to_json(const RestrictedZeta& z, const RestrictedResidues& res);

}  // namespace nazeta
