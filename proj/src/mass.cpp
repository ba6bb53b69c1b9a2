#include "nazeta/mass.hpp"

#include "nazeta/errors.hpp"

#include <functional>

namespace nazeta {

namespace detail {

Rational q_power(long q, long e) { return rational_pow(Rational(q), e); }

}  // namespace detail

namespace {

using detail::positive_mod;
using detail::q_power;

void require_rank(int r) {
  if (r < 1 || r > kMaxMassRank) {
    throw DomainError("mass computations are implemented for 1 <= r <= " + std::to_string(kMaxMassRank) +
                      ", got r = " + std::to_string(r));
  }
}

CurveData projective_line(long q) {
  CurveData c;
  c.q = q;
  c.g = 0;
  c.weil_numerator = Poly::constant(1);
  c.label = "P1";
  return c;
}

}  // namespace

long hom_euler_characteristic(int r_high, long d_high, int r_low, long d_low, int g) {
  return static_cast<long>(r_low) * d_high - static_cast<long>(r_high) * d_low +
         static_cast<long>(r_high) * r_low * (1 - g);
}

Rational total_mass(const CurveData& c, int r, int /*d*/) {
  if (r < 1) throw DomainError("rank must be positive");
  const Rational h = c.weil_numerator(Rational(1));
  Rational out = q_power(c.q, static_cast<long>(r * r - 1) * (c.g - 1)) * h / (c.q - 1);
  for (int i = 2; i <= r; ++i) {
    const Rational t = q_power(c.q, -i);
    out *= c.weil_numerator(t) / ((1 - t) * (1 - c.q * t));
  }
  return out;
}

Integer gl_order(long q, int m) {
  Integer out(1);
  const Integer qm = integer_pow(Integer(q), static_cast<unsigned long>(m));
  for (int i = 0; i < m; ++i) out *= qm - integer_pow(Integer(q), static_cast<unsigned long>(i));
  return out;
}

Rational oracle_mass_p1(long q, int r, int d) {
  require_rank(r);
  if (r == 1) return Rational(1, q - 1);
  // Gaps x_k = a_{k+1} - a_k >= 0 (k = 1..r-1). For each zero pattern the
  // positive gaps run over residues x0 in [1, r] plus multiples of r.
  const int n_gaps = r - 1;
  Rational total(0);

  auto aut_exponent = [&](const std::vector<long>& x) {
    // sum over i < j with a_i < a_j of h^0(O(a_j - a_i)) = a_j - a_i + 1
    std::vector<long> a(static_cast<std::size_t>(r), 0);
    for (int k = 1; k < r; ++k) a[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k - 1)] + x[static_cast<std::size_t>(k - 1)];
    long e = 0;
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        if (a[static_cast<std::size_t>(i)] < a[static_cast<std::size_t>(j)]) {
          e += a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(i)] + 1;
        }
      }
    }
    return e;
  };
  auto gl_product = [&](const std::vector<long>& x) -> Integer {
    Integer out(1);
    int block = 1;
    for (int k = 0; k < n_gaps; ++k) {
      if (x[static_cast<std::size_t>(k)] == 0) {
        ++block;
      } else {
        out *= gl_order(q, block);
        block = 1;
      }
    }
    return out * gl_order(q, block);
  };

  for (unsigned mask = 0; mask < (1u << n_gaps); ++mask) {
    std::vector<int> positive;
    for (int k = 0; k < n_gaps; ++k) {
      if (mask & (1u << k)) positive.push_back(k);
    }
    std::vector<long> x(static_cast<std::size_t>(n_gaps), 0);
    std::function<void(std::size_t)> walk = [&](std::size_t idx) {
      if (idx == positive.size()) {
        long weighted = 0;
        for (int k = 0; k < n_gaps; ++k) weighted += static_cast<long>(r - (k + 1)) * x[static_cast<std::size_t>(k)];
        if (positive_mod(d - weighted, r) != 0) return;
        const long base = aut_exponent(x);
        Rational term = Rational(1) / Rational(gl_product(x)) * q_power(q, -base);
        for (int k : positive) {
          std::vector<long> bumped = x;
          bumped[static_cast<std::size_t>(k)] += r;
          term = scalar_geometric_sum(term, q_power(q, -(aut_exponent(bumped) - base)));
        }
        total += term;
        return;
      }
      for (long v = 1; v <= r; ++v) {
        x[static_cast<std::size_t>(positive[idx])] = v;
        walk(idx + 1);
      }
    };
    walk(0);
  }
  return total;
}

bool mass_gate_p1(long q) {
  static std::mutex mutex;
  static std::map<long, bool> results;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = results.find(q); it != results.end()) return it->second;
  const CurveData p1 = projective_line(q);
  bool ok = true;
  for (int r = 2; r <= 3 && ok; ++r) {
    for (int d = -1; d <= 2 && ok; ++d) ok = total_mass(p1, r, d) == oracle_mass_p1(q, r, d);
  }
  results[q] = ok;
  return ok;
}

std::string to_string(MassProvenance p) {
  switch (p) {
    case MassProvenance::recursion: return "recursion";
    case MassProvenance::oracle: return "oracle";
    case MassProvenance::user: return "user";
  }
  return "unknown";
}

MassTable::MassTable(CurveData curve) : curve_(std::move(curve)) {
  h_ = curve_.weil_numerator(Rational(1)).get_num();
}

void MassTable::require_gate() {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (gate_checked_) {
      if (!gate_passed_) throw GateFailure("mass gate failed on P1 over F_" + std::to_string(curve_.q));
      return;
    }
  }
  const bool ok = mass_gate_p1(curve_.q);
  std::lock_guard<std::mutex> lock(mutex_);
  gate_checked_ = true;
  gate_passed_ = ok;
  if (!ok) throw GateFailure("mass gate failed on P1 over F_" + std::to_string(curve_.q));
}

Rational MassTable::compute(int r, long d) {
  require_rank(r);
  if (r == 1) return Rational(h_) / (curve_.q - 1);
  const Rational unstable =
      unstable_strata_mass(curve_.q, curve_.g, r, d, [this](int rr, long dd) { return beta(rr, dd); });
  const Rational out = total_mass(curve_, r, static_cast<int>(d)) - unstable;
  if (out < 0) {
    throw VerificationError("negative semistable mass for r = " + std::to_string(r) + ", d = " + std::to_string(d));
  }
  if (curve_.g >= 2 && out == 0) {
    throw VerificationError("zero semistable mass for g >= 2 at r = " + std::to_string(r));
  }
  return out;
}

Rational MassTable::beta(int r, long d) {
  require_rank(r);
  if (r >= 2) require_gate();
  const std::pair<int, int> key{r, static_cast<int>(positive_mod(d, r))};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second.beta;
  }
  const Rational value = compute(r, d);
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = entries_.emplace(key, MassEntry{r, key.second, value, MassProvenance::recursion});
  return it->second.beta;
}

Rational MassTable::beta_uncached(int r, long d) {
  require_rank(r);
  if (r >= 2) require_gate();
  return compute(r, d);
}

FixedDeterminantMass MassTable::fixed_det_mass(int r, long d) {
  FixedDeterminantMass out;
  out.value = beta(r, d) / Rational(h_);
  return out;
}

Rational MassTable::hn_resum(int r, long d) {
  return beta(r, d) +
         unstable_strata_mass(curve_.q, curve_.g, r, d, [this](int rr, long dd) { return beta(rr, dd); });
}

void MassTable::set_user(int r, long d, const Rational& value) {
  require_rank(r);
  if (value < 0) throw InputError("semistable mass must be non-negative");
  const std::pair<int, int> key{r, static_cast<int>(positive_mod(d, r))};
  std::lock_guard<std::mutex> lock(mutex_);
  entries_[key] = MassEntry{r, key.second, value, MassProvenance::user};
}

std::vector<MassEntry> MassTable::entries() const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::vector<MassEntry> out;
  out.reserve(entries_.size());
  for (const auto& [key, entry] : entries_) out.push_back(entry);
  return out;
}

json MassTable::to_json() const {
  json list = json::array();
  for (const auto& e : entries()) {
    list.push_back({{"r", e.r}, {"d_mod_r", e.d_mod_r}, {"beta", nazeta::to_json(e.beta)},
                    {"provenance", to_string(e.provenance)}});
  }
  return json{{"q", curve_.q}, {"g", curve_.g}, {"class_number", h_.get_str()}, {"entries", list}};
}

}  // namespace nazeta
