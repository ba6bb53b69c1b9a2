#include "nazeta/nonstable.hpp"

#include "nazeta/errors.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>

namespace nazeta {

namespace {

Rational q_pow(long q, long e) { return rational_pow(Rational(q), e); }

RationalFunction t_pow(int e) { return RationalFunction::monomial(Rational(1), e); }

RationalFunction one_minus(const Rational& c, int k) {
  return RationalFunction(Poly::constant(1) - Poly::monomial(c, k));
}

Rational aut_constant(long q) { return Rational(1) / Rational((q - 1) * (q - 1)); }

Rational iva_weight(long q, const IvaCell& cell) {
  Rational w(0);
  for (const auto& e : cell.values) w += Rational(e.count) * q_pow(q, e.h0 - e.hom);
  return w * aut_constant(q);
}

Rational iva_mass(long q, const IvaCell& cell) {
  Rational w(0);
  for (const auto& e : cell.values) w += Rational(e.count) * q_pow(q, -e.hom);
  return w * aut_constant(q);
}

void validate_table(const NonstableInput& inp) {
  const int g = inp.curve.g;
  const long q = inp.curve.q;
  const Rational h(inp.abelian.h);
  std::map<std::pair<int, int>, const IvaCell*> cells;
  for (const auto& cell : *inp.iva_table) {
    if (cell.d_plus <= cell.d_minus || cell.d_plus + cell.d_minus < 0 ||
        classify(g, cell.d_plus, cell.d_minus) != NsPart::IV_a) {
      throw InputError("IV_a table cell (" + std::to_string(cell.d_plus) + ", " + std::to_string(cell.d_minus) +
                       ") lies outside d_+ <= 2g-2");
    }
    if (!cells.emplace(std::pair{cell.d_plus, cell.d_minus}, &cell).second) {
      throw InputError("duplicate IV_a table cell");
    }
    for (const auto& e : cell.values) {
      if (e.count < 0 || e.h0 < 0 || e.hom < 0) throw InputError("IV_a table entries must be non-negative");
    }
    // every (L_+, L_-, e) triple accounted for: total mass h^2 * extension_block
    if (iva_mass(q, cell) != h * h * extension_block(q, cell.d_plus, cell.d_minus, g)) {
      throw InputError("IV_a table cell (" + std::to_string(cell.d_plus) + ", " + std::to_string(cell.d_minus) +
                       ") does not account for every extension");
    }
  }
  for (int dp = 1; dp <= 2 * g - 2; ++dp) {
    for (int dm = -dp; dm < dp; ++dm) {
      if (!cells.contains({dp, dm})) {
        throw InputError("IV_a table lacks cell (" + std::to_string(dp) + ", " + std::to_string(dm) + ")");
      }
    }
  }
}

}  // namespace

std::string to_string(JacobianMode m) { return m == JacobianMode::paper ? "paper" : "squared"; }

JacobianMode jacobian_mode_from_string(const std::string& s) {
  if (s == "paper") return JacobianMode::paper;
  if (s == "squared") return JacobianMode::squared;
  throw InputError("jacobian factor mode must be 'paper' or 'squared'");
}

std::string to_string(NsPart p) {
  switch (p) {
    case NsPart::I: return "I";
    case NsPart::II: return "II";
    case NsPart::III: return "III";
    case NsPart::IV_a: return "IV_a";
    case NsPart::IV_b: return "IV_b";
    case NsPart::IV_c: return "IV_c";
  }
  return "?";
}

json to_json(const IvaTable& t) {
  json out = json::array();
  for (const auto& cell : t) {
    json values = json::array();
    for (const auto& e : cell.values) values.push_back({{"h0", e.h0}, {"count", e.count.get_str()}, {"hom", e.hom}});
    out.push_back({{"d_plus", cell.d_plus}, {"d_minus", cell.d_minus}, {"h0_values", values}});
  }
  return out;
}

IvaTable iva_table_from_json(const json& j) {
  if (!j.is_array()) throw InputError("IV_a table JSON must be an array");
  IvaTable t;
  for (const auto& c : j) {
    IvaCell cell;
    cell.d_plus = c.at("d_plus").get<int>();
    cell.d_minus = c.at("d_minus").get<int>();
    for (const auto& e : c.at("h0_values")) {
      if (!e.contains("hom")) throw InputError("IV_a table entries need 'hom' = h0(L_-^{-1} L_+)");
      IvaEntry v;
      v.h0 = e.at("h0").get<int>();
      v.hom = e.at("hom").get<int>();
      const json& cnt = e.at("count");
      v.count = cnt.is_string() ? Integer(cnt.get<std::string>()) : Integer(cnt.get<long>());
      cell.values.push_back(std::move(v));
    }
    t.push_back(std::move(cell));
  }
  return t;
}

NonstableInput make_nonstable_input(const CurveData& c, JacobianMode mode, std::optional<IvaTable> table,
                                    bool allow_partial) {
  NonstableInput inp;
  inp.curve = c;
  inp.abelian = abelian_zeta(c, std::max(2 * c.g, 1));
  inp.iva_table = std::move(table);
  inp.mode = mode;
  inp.allow_partial = allow_partial;
  return inp;
}

NsPart classify(int g, long d_plus, long d_minus) {
  const long m = d_plus + d_minus;
  if (d_plus <= d_minus || m < 0) {
    throw DomainError("(" + std::to_string(d_plus) + ", " + std::to_string(d_minus) + ") is not an unstable pair");
  }
  if (d_plus <= 2L * g - 2) return NsPart::IV_a;
  if (m >= 4L * g) {
    if (d_minus >= std::max(2L * g - 1, 0L)) return NsPart::I;
    if (d_minus <= -1) return NsPart::II;
    return NsPart::III;
  }
  return d_minus >= 0 ? NsPart::IV_b : NsPart::IV_c;
}

Integer aut_split(long q, int hom_dim) {
  if (hom_dim < 0) throw DomainError("hom dimension must be >= 0");
  return Integer((q - 1) * (q - 1)) * integer_pow(Integer(q), static_cast<unsigned long>(hom_dim));
}

Rational extension_block(long q, long d_plus, long d_minus, int g) {
  return q_pow(q, d_minus - d_plus + g - 1) * aut_constant(q);
}

Rational a_invariant(const AbelianZeta& ab) {
  Rational a(0);
  for (int d = 0; d <= 2 * ab.g - 2; ++d) a += ab.sigma_at(d) * q_pow(ab.q, d);
  return a * aut_constant(ab.q);
}

RationalFunction mass_part(const NonstableInput& inp) {
  const long q = inp.curve.q;
  const int g = inp.curve.g;
  const Rational h(inp.abelian.h);
  const Rational jac = inp.mode == JacobianMode::squared ? h * h : h;
  const Rational k = jac * q_pow(q, g - 1) * aut_constant(q) / (q * q - 1);
  return RationalFunction(Poly{k, k * q}) / one_minus(Rational(1), 2);
}

NonstableZeta assemble_ns(const NonstableInput& inp) {
  const long q = inp.curve.q;
  const int g = inp.curve.g;
  const AbelianZeta& ab = inp.abelian;
  const Rational h(ab.h);
  const Rational c = aut_constant(q);
  NonstableZeta z;
  z.mode = inp.mode;

  if (g >= 2 && !inp.iva_table) {
    if (!inp.allow_partial) throw InputError("genus >= 2 needs an IV_a table (or the allow-partial flag)");
    z.partial = true;
  }
  if (inp.iva_table) validate_table(inp);

  // Closed forms with one Jacobian factor per line bundle; paper mode divides by h below.
  const RationalFunction after_4g = t_pow(4 * g) / one_minus(Rational(1), 1);

  RationalFunction I;
  {
    const Rational k = h * c * h * q_pow(q, 1 - g);
    const long d0 = std::max(2L * g - 1, 0L);
    const long d1 = std::max(d0, 2L * g);
    for (long d = d0; d < d1; ++d) I += RationalFunction(k * q_pow(q, 2 * d)) * after_4g;
    I += RationalFunction(k) * RationalFunction::monomial(q_pow(q, 2 * d1), static_cast<int>(2 * d1 + 1)) /
         (one_minus(Rational(q * q), 2) * one_minus(Rational(1), 1));
  }
  const RationalFunction II = RationalFunction(h * c * h / (q - 1)) * after_4g;
  const RationalFunction III =
      g >= 1 ? RationalFunction(h * a_invariant(ab)) * after_4g : RationalFunction();

  std::vector<Rational> ivb(static_cast<std::size_t>(std::max(4 * g, 1)), Rational(0));
  std::vector<Rational> ivc(ivb.size(), Rational(0));
  for (int m = 0; m < 4 * g; ++m) {
    for (int dm = 0; dm <= 2 * g - 1; ++dm) {
      const int dp = m - dm;
      if (dp > 2 * g - 2 && dp > dm) ivb[static_cast<std::size_t>(m)] += h * c * ab.sigma_at(dm) * q_pow(q, dm);
    }
    ivc[static_cast<std::size_t>(m)] = h * c * h * q_pow(q, std::min(-1, m - 2 * g + 1)) * q / (q - 1);
  }
  const RationalFunction IVb(Poly(std::move(ivb)));
  const RationalFunction IVc(Poly(std::move(ivc)));

  RationalFunction IVa;
  if (inp.iva_table) {
    for (const auto& cell : *inp.iva_table) {
      IVa += RationalFunction::monomial(iva_weight(q, cell), cell.d_plus + cell.d_minus);
    }
  }

  const RationalFunction scale(inp.mode == JacobianMode::paper ? Rational(1) / h : Rational(1));
  z.parts["mass_part"] = mass_part(inp);
  z.parts["I"] = scale * I;
  z.parts["II"] = scale * II;
  z.parts["III"] = scale * III;
  z.parts["IV_a"] = IVa;
  z.parts["IV_b"] = scale * IVb;
  z.parts["IV_c"] = scale * IVc;
  z.zeta_ns = z.parts["I"] + z.parts["II"] + z.parts["III"] + z.parts["IV_a"] + z.parts["IV_b"] +
              z.parts["IV_c"] - z.parts["mass_part"];
  return z;
}

namespace {

template <class T>
T as_number(const Rational& x) {
  if constexpr (std::is_same_v<T, Rational>) {
    return x;
  } else {
    return static_cast<T>(x.get_d());
  }
}

template <class T>
T power(const T& base, long n) {
  if constexpr (std::is_same_v<T, Rational>) {
    return rational_pow(base, n);
  } else {
    return std::pow(base, static_cast<T>(n));
  }
}

template <class T>
struct OracleSums {
  std::map<std::string, T> parts;
  T mass{0};
};

// Outer loop over d_- in [-depth, depth]; for each d_- the d_+ direction is
// summed term by term until the weight becomes degree-uniform, then by its
// exact geometric tail. The slice d_- < -depth is also geometric and summed
// exactly; only d_- > depth is dropped.
template <class T>
OracleSums<T> oracle_sums(const NonstableInput& inp, const T& t, long depth) {
  const long q = inp.curve.q;
  const long g = inp.curve.g;
  const AbelianZeta& ab = inp.abelian;
  const Rational h(ab.h);
  const Rational c = aut_constant(q);
  const T one(1);
  const T tq = t / as_number<T>(Rational(q));

  std::map<std::pair<long, long>, const IvaCell*> cells;
  if (inp.iva_table) {
    for (const auto& cell : *inp.iva_table) cells[{cell.d_plus, cell.d_minus}] = &cell;
  }

  OracleSums<T> out;
  for (const char* name : {"I", "II", "III", "IV_a", "IV_b", "IV_c"}) out.parts[name] = T(0);

  for (long dm = -depth; dm <= depth; ++dm) {
    const long start = std::max(dm + 1, -dm);
    const long uniform = std::max({start, 2 * g - 1, 4 * g - dm});
    for (long dp = start; dp < uniform; ++dp) {
      const NsPart part = classify(static_cast<int>(g), dp, dm);
      const Rational block = extension_block(q, dp, dm, static_cast<int>(g));
      Rational weight(0);
      if (part == NsPart::IV_a) {
        if (auto it = cells.find({dp, dm}); it != cells.end()) weight = iva_weight(q, *it->second);
      } else {
        weight = ab.sigma_at(static_cast<int>(dp)) * ab.sigma_at(static_cast<int>(dm)) * block;
      }
      const T tm = power(t, dp + dm);
      out.parts[to_string(part)] += as_number<T>(weight) * tm;
      out.mass += as_number<T>(Rational(h * h * block)) * tm;
    }
    const NsPart tail_part = classify(static_cast<int>(g), uniform, dm);
    const T tm = power(t, uniform + dm);
    out.parts[to_string(tail_part)] +=
        as_number<T>(Rational(c * h * ab.sigma_at(static_cast<int>(dm)) * q_pow(q, dm))) * tm / (one - t);
    out.mass += as_number<T>(Rational(h * h * c * q_pow(q, dm - uniform + g - 1))) * tm / (one - tq);
  }

  // d_- <= -depth-1: d_+ >= depth+1 throughout, sigma_{d_-} = h.
  const Rational low_h0 = c * h * h * q_pow(q, -depth) / (q - 1);
  const Rational low_mass = h * h * c * q_pow(q, g - 1) * q_pow(q, -2 * depth - 2) / (1 - q_pow(q, -2));
  for (long m = 0; m < 4 * g; ++m) {
    out.parts["IV_c"] += as_number<T>(low_h0) * power(t, m);
    out.mass += as_number<T>(Rational(low_mass * q_pow(q, -m))) * power(t, m);
  }
  const T t4g = power(t, 4 * g);
  out.parts["II"] += as_number<T>(low_h0) * t4g / (one - t);
  out.mass += as_number<T>(Rational(low_mass * q_pow(q, -4 * g))) * t4g / (one - tq);
  return out;
}

}  // namespace

OracleResult oracle_truncated(const NonstableInput& inp, const NonstableZeta& z, const Rational& s, int depth,
                              double tol) {
  if (s <= 1) throw DomainError("the defining series converges only for Re(s) > 1");
  const long q = inp.curve.q;
  const int g = inp.curve.g;
  if (depth < 4 * g + 2) throw ConvergenceError("truncation depth must reach past 4g");

  const double hd = Rational(inp.abelian.h).get_d();
  const double qd = static_cast<double>(q);
  const double td = std::pow(qd, -s.get_d());
  // dropped slice d_- > depth, bounded by its h0-weighted sum
  const double qt = qd * td;
  OracleResult out;
  out.tail_bound = hd * hd / ((qd - 1) * (qd - 1)) * std::pow(qd, 1.0 - g) * td * std::pow(qt, 2.0 * (depth + 1)) /
                   ((1 - qt * qt) * (1 - td));
  if (out.tail_bound > tol) {
    throw ConvergenceError("truncation depth " + std::to_string(depth) + " leaves a tail bound above tolerance");
  }
  auto finish = [&](const auto& sums, auto closed_at) {
    using T = std::decay_t<decltype(sums.mass)>;
    T total = -sums.mass;
    for (const auto& [name, v] : sums.parts) total += v;
    const T closed = closed_at(z.zeta_ns);
    auto to_double = [](const T& x) {
      if constexpr (std::is_same_v<T, Rational>) {
        return x.get_d();
      } else {
        return static_cast<double>(x);
      }
    };
    auto absolute = [](const T& x) { return x < 0 ? T(-x) : x; };
    out.oracle_value = to_double(total);
    out.closed_value = to_double(closed);
    out.gap = to_double(absolute(T(total - closed)));
    for (const auto& [name, v] : sums.parts) {
      out.part_gaps[name] = to_double(absolute(T(v - closed_at(z.parts.at(name)))));
    }
    out.part_gaps["mass_part"] = to_double(absolute(T(sums.mass - closed_at(z.parts.at("mass_part")))));
  };

  if (is_integer(s)) {
    const Rational t = q_pow(q, -s.get_num().get_si());
    finish(oracle_sums<Rational>(inp, t, depth), [&](const RationalFunction& f) { return f(t); });
  } else {
    const long double t = std::pow(static_cast<long double>(q), -static_cast<long double>(s.get_d()));
    finish(oracle_sums<long double>(inp, t, depth),
           [&](const RationalFunction& f) { return static_cast<long double>(f.eval_double(static_cast<double>(t))); });
  }
  return out;
}

ModeExperiment resolve_jacobian_mode(const CurveData& c, const Rational& s, int depth, double tol,
                                     std::optional<IvaTable> table) {
  ModeExperiment out;
  for (JacobianMode mode : {JacobianMode::paper, JacobianMode::squared}) {
    auto inp = make_nonstable_input(c, mode, table);
    const double gap = oracle_truncated(inp, assemble_ns(inp), s, depth, tol).gap;
    (mode == JacobianMode::paper ? out.gap_paper : out.gap_squared) = gap;
    if (gap < tol) out.consistent.push_back(mode);
  }
  return out;
}

std::vector<FeSample> fe_probe(const RationalFunction& zeta_ns, long q) {
  std::vector<FeSample> out;
  for (double k : {0.3, 0.45, 0.6}) {
    FeSample s;
    s.t = k / static_cast<double>(q);
    s.value = zeta_ns.eval_double(s.t);
    s.reflected = zeta_ns.eval_double(1.0 / (static_cast<double>(q) * s.t));
    out.push_back(s);
  }
  return out;
}

json to_json(const NonstableZeta& z) {
  json parts = json::object();
  for (const auto& [name, f] : z.parts) parts[name] = to_json(f);
  return json{{"zeta_ns", to_json(z.zeta_ns)},
              {"parts", parts},
              {"partial", z.partial},
              {"jacobian_factor_mode", to_string(z.mode)}};
}

}  // namespace nazeta
