#include "property_suites.hpp"

#include "cli_harness.hpp"
#include "nazeta/errors.hpp"
#include "nazeta/point_count.hpp"
#include "nazeta/rank_zeta.hpp"
#include "nazeta/restricted.hpp"

#include <random>

namespace props {

using namespace nazeta;

namespace {

Rational random_rational(std::mt19937_64& rng, long span, long max_den) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, max_den);
  return make_rational(num(rng), den(rng));
}

Rational random_positive(std::mt19937_64& rng, long span, long max_den) {
  std::uniform_int_distribution<long> num(1, span);
  std::uniform_int_distribution<long> den(1, max_den);
  return make_rational(num(rng), den(rng));
}

template <class T>
T pick(std::mt19937_64& rng, std::initializer_list<T> values) {
  std::uniform_int_distribution<std::size_t> i(0, values.size() - 1);
  return *(values.begin() + static_cast<std::ptrdiff_t>(i(rng)));
}

RestrictedWindow random_window(std::mt19937_64& rng, int genus) {
  RestrictedWindow w;
  w.q = pick(rng, {2L, 3L, 4L, 5L, 7L});
  w.g = genus > 0 ? genus : pick(rng, {2, 3});
  w.r = pick(rng, {1, 2, 3});
  w.dL = std::uniform_int_distribution<int>(0, w.r * (w.g - 1))(rng);
  w.M = random_positive(rng, 50, 12);
  const int D = w.top_degree();
  const long shift = static_cast<long>(w.r) * (w.g - 1);
  for (int d = 0; d <= D; ++d) {
    const int a = ((d - w.dL) % D + D) % D;
    const int b = ((d + w.dL) % D + D) % D;
    if (a != 0 && b != 0) continue;
    if (d > D - d) break;
    const Rational v = random_positive(rng, 30, 9);
    w.u[d] = v;
    w.u[D - d] = rational_pow(Rational(w.q), shift - d) * v;
  }
  return w;
}

// GF(p) polynomials, low degree first.
using ModPoly = std::vector<long>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long inverse_mod(long a, long p) {
  long r = 1;
  for (long e = p - 2, b = a; e > 0; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return r;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, long p) {
  const long inv = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const long c = a.back() * inv % p;
    const std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = ((a[off + i] - c * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

bool squarefree(const ModPoly& f, long p) {
  ModPoly df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(static_cast<long>(i) * f[i] % p);
  trim(df);
  if (df.empty()) return false;
  ModPoly a = f;
  ModPoly b = df;
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

}  // namespace

Outcome restricted_windows(std::uint64_t seed, int n, int genus) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (int i = 0; i < n; ++i) {
    ++out.cases;
    const RestrictedWindow w = random_window(rng, genus);
    const std::string tag = "case " + std::to_string(i) + ": " + to_json(w).dump();
    try {
      w.validate();
      const RestrictedZeta z = assemble_xi(w);
      if (!z.fe_verdict) out.fail(tag + " FE");
      if (pole_order(z.xi, Rational(1)) != 1 || pole_order(z.xi, make_rational(1, w.q)) != 1) out.fail(tag + " poles");
      const RestrictedResidues res = residues_xi(z, w.q, w.g, w.r, w.dL);
      if (res.hn_from_t_qinv != w.M || !res.agree) out.fail(tag + " residues");
    } catch (const Error& e) {
      out.fail(tag + " threw " + e.what());
      continue;
    }
    std::vector<int> movable;
    for (const auto& [d, v] : w.u) {
      if (2 * d != w.top_degree()) movable.push_back(d);
    }
    if (movable.empty()) continue;
    RestrictedWindow bad = w;
    const int d = movable[std::uniform_int_distribution<std::size_t>(0, movable.size() - 1)(rng)];
    bad.u[d] += random_positive(rng, 5, 3);
    bool rejected = false;
    try {
      bad.validate();
    } catch (const InputError&) {
      rejected = true;
    }
    if (!rejected) out.fail(tag + " perturbed window accepted at d = " + std::to_string(d));
  }
  return out;
}

Outcome non_contracting_refusal(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (int i = 0; i < n; ++i) {
    ++out.cases;
    const Rational first = random_rational(rng, 20, 7);
    const Rational ratio = random_rational(rng, 40, 20);
    bool refused = false;
    Rational sum;
    try {
      sum = scalar_geometric_sum(first, ratio);
    } catch (const NonContractingSeries&) {
      refused = true;
    }
    const bool contracting = abs(ratio) < 1;
    if (refused == contracting) out.fail("ratio " + to_string(ratio));
    if (!refused && sum * (1 - ratio) != first) out.fail("sum for ratio " + to_string(ratio));
  }
  return out;
}

Outcome pairing_equivalence(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (int i = 0; i < n; ++i) {
    ++out.cases;
    const int deg = std::uniform_int_distribution<int>(0, 6)(rng);
    const bool construct = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    // the constant c satisfies c^2 = q^{-n}, so odd n needs a square q
    const long q = construct && deg % 2 == 1 ? pick(rng, {4L, 9L}) : pick(rng, {2L, 3L, 4L, 5L});
    std::vector<Rational> a(static_cast<std::size_t>(deg) + 1);
    for (auto& x : a) x = random_rational(rng, 6, 3);
    a[0] = random_positive(rng, 6, 3);
    if (construct && deg > 0) {
      // a_{n-i} q^{-(n-i)} = c a_i with c = +-q^{-n/2}
      const long root = q == 4 ? 2 : q == 9 ? 3 : 0;
      Rational c = deg % 2 == 0 ? rational_pow(Rational(q), -deg / 2) : rational_pow(Rational(root), -deg);
      if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) c = -c;
      for (int k = 0; 2 * k < deg; ++k) {
        a[static_cast<std::size_t>(deg - k)] = c * a[static_cast<std::size_t>(k)] * rational_pow(Rational(q), deg - k);
      }
      if (deg % 2 == 0 && c < 0) a[static_cast<std::size_t>(deg / 2)] = 0;
    }
    if (a.back() == 0) a.back() = 1;
    const Poly P(a);
    const RationalFunction mirrored =
        substitute_recip(RationalFunction(P), q) * RationalFunction::monomial(Rational(1), P.degree());
    const bool direct = mirrored.is_polynomial() &&
                        mirrored * RationalFunction(P.coeff(0)) == RationalFunction(P) * RationalFunction(mirrored(Rational(0)));
    const PairingResult pr = pairing_check(P, q);
    if (pr.holds != direct) out.fail("P = " + P.to_string() + ", q = " + std::to_string(q));
    if (construct && deg > 0 && !pr.holds) out.fail("constructed P = " + P.to_string() + " not paired");
    if (pr.holds && mirrored != RationalFunction(pr.constant) * RationalFunction(P)) out.fail("constant for " + P.to_string());
  }
  return out;
}

Outcome cache_determinism(int n) {
  Outcome out;
  const auto dir = harness::scratch_dir("replay");
  const std::vector<std::string> args{"zeta", "rank", "--r", "1", "--weil", "2", "2", "1", "0", "0", "0", "4"};
  const std::string fresh = harness::run(args).out;
  {
    harness::CacheDirGuard guard(dir);
    for (int i = 0; i < n; ++i) {
      ++out.cases;
      const auto r = harness::run(args);
      if (r.code != 0 || r.out != fresh) out.fail("replay " + std::to_string(i));
    }
  }
  std::filesystem::remove_all(dir);
  return out;
}

Outcome hyperelliptic_closure(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  Outcome out;
  while (out.cases < n) {
    PlaneCurveSpec spec;
    spec.q = pick(rng, {3L, 5L});
    spec.model = PlaneCurveSpec::Model::hyperelliptic;
    const int deg = pick(rng, {3, 4, 5, 6});
    std::uniform_int_distribution<long> coeff(0, spec.q - 1);
    spec.f.resize(static_cast<std::size_t>(deg) + 1);
    for (auto& c : spec.f) c = coeff(rng);
    spec.f.back() = std::uniform_int_distribution<long>(1, spec.q - 1)(rng);
    if (!squarefree(spec.f, spec.q)) continue;
    ++out.cases;
    const int g = spec.hyperelliptic_genus();
    const std::string tag = "q = " + std::to_string(spec.q) + ", deg f = " + std::to_string(deg);
    try {
      const int m_max = std::max(4, g);
      const auto counts = count_points(spec, m_max);
      const Poly P = weil_from_counts(spec.q, g, std::vector<Integer>(counts.begin(), counts.begin() + g));
      std::vector<Integer> coeffs;
      for (const auto& c : P.coefficients()) coeffs.push_back(c.get_num());
      const CurveData c = ingest_weil(spec.q, g, coeffs, tag, counts);
      const ZetaReport rep = rank1_pipeline(c);
      if (!rep.all_assertable_pass()) out.fail(tag + " verdicts");
      for (int m = 1; m <= 4; ++m) {
        if (rep.N[static_cast<std::size_t>(m - 1)] != Rational(counts[static_cast<std::size_t>(m - 1)])) {
          out.fail(tag + " N_" + std::to_string(m));
        }
      }
    } catch (const Error& e) {
      out.fail(tag + " threw " + e.what());
    }
  }
  return out;
}

}  // namespace props
