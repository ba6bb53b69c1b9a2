#pragma once

#include "nazeta/curve.hpp"
#include "nazeta/json_io.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nazeta {

// How many Jacobian factors multiply the closed forms outside IV_a:
// squared = one per line bundle of the pair (L_+, L_-), paper = a single factor.
enum class JacobianMode { paper, squared };
std::string to_string(JacobianMode m);
JacobianMode jacobian_mode_from_string(const std::string& s);

// Extensions 0 -> L_+ -> E -> L_- -> 0 with d_+ <= 2g-2, grouped by h0(E) and
// hom = h0(L_-^{-1} L_+): count triples (L_+, L_-, extension class incl. split).
struct IvaEntry {
  int h0 = 0;
  Integer count;
  int hom = 0;
};

struct IvaCell {
  int d_plus = 0;
  int d_minus = 0;
  std::vector<IvaEntry> values;
};

using IvaTable = std::vector<IvaCell>;

json to_json(const IvaTable& t);
IvaTable iva_table_from_json(const json& j);

struct NonstableInput {
  CurveData curve;
  AbelianZeta abelian;
  std::optional<IvaTable> iva_table;
  JacobianMode mode = JacobianMode::squared;
  bool allow_partial = false;
};

NonstableInput make_nonstable_input(const CurveData& c, JacobianMode mode = JacobianMode::squared,
                                    std::optional<IvaTable> table = std::nullopt, bool allow_partial = false);

enum class NsPart { I, II, III, IV_a, IV_b, IV_c };
std::string to_string(NsPart p);

// Region of the unstable pair (d_+ > d_-, d_+ + d_- >= 0). DomainError otherwise.
NsPart classify(int g, long d_plus, long d_minus);

// #Aut(L_+ + L_-) = (q-1)^2 q^{hom_dim}.
Integer aut_split(long q, int hom_dim);

// Sum of 1/#Aut over the split bundle and all non-split extensions of one pair.
Rational extension_block(long q, long d_plus, long d_minus, int g);

// sum_{d=0}^{2g-2} sigma_d q^d / (q-1)^2
Rational a_invariant(const AbelianZeta& ab);

RationalFunction mass_part(const NonstableInput& inp);

struct NonstableZeta {
  RationalFunction zeta_ns;
  // mass_part, I, II, III, IV_a, IV_b, IV_c
  std::map<std::string, RationalFunction> parts;
  bool partial = false;
  JacobianMode mode = JacobianMode::squared;
};

NonstableZeta assemble_ns(const NonstableInput& inp);

struct OracleResult {
  double oracle_value = 0;
  double closed_value = 0;
  double gap = 0;
  double tail_bound = 0;
  // per-part |oracle - closed| at the sample point
  std::map<std::string, double> part_gaps;
};

// Direct double series over (d_+, d_-) from degree-level data with one Jacobian
// factor per line bundle whatever inp.mode says, compared with z at t = q^{-s}.
// Only the slice d_- > depth is dropped; tail_bound bounds it.
// DomainError unless s > 1; ConvergenceError if the tail bound exceeds tol.
OracleResult oracle_truncated(const NonstableInput& inp, const NonstableZeta& z, const Rational& s, int depth,
                              double tol = 1e-9);

struct ModeExperiment {
  double gap_paper = 0;
  double gap_squared = 0;
  std::vector<JacobianMode> consistent;
  bool unique() const { return consistent.size() == 1; }
};

ModeExperiment resolve_jacobian_mode(const CurveData& c, const Rational& s, int depth, double tol = 1e-9,
                                     std::optional<IvaTable> table = std::nullopt);

struct FeSample {
  double t = 0;
  double value = 0;
  double reflected = 0;
};

// zeta_ns(t) against zeta_ns(1/(qt)) at a few points; a report, never asserted.
std::vector<FeSample> fe_probe(const RationalFunction& zeta_ns, long q);

json to_json(const NonstableZeta& z);

}  // namespace nazeta
