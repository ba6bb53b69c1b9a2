#include "nazeta/point_count.hpp"

#include "nazeta/errors.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace nazeta {

namespace {

using Digits = std::vector<std::uint32_t>;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Arithmetic in F_p[x]/(modulus), modulus monic of degree n given by its low
// coefficients (modulus = x^n + sum low[i] x^i).
struct QuotientRing {
  std::uint32_t p;
  Digits low;

  Digits mul(const Digits& a, const Digits& b) const {
    const std::size_t n = low.size();
    std::vector<std::uint64_t> prod(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    }
    for (std::size_t k = 2 * n - 1; k >= n; --k) {
      const std::uint64_t c = prod[k];
      if (!c) continue;
      prod[k] = 0;
      // x^k = x^(k-n) * x^n = -x^(k-n) * sum low[i] x^i
      for (std::size_t i = 0; i < n; ++i) prod[k - n + i] = (prod[k - n + i] + (p - c) * low[i]) % p;
    }
    return Digits(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n));
  }

  Digits pow(Digits base, std::uint64_t e) const {
    Digits acc(low.size(), 0);
    acc[0] = 1;
    while (e) {
      if (e & 1u) acc = mul(acc, base);
      e >>= 1u;
      if (e) base = mul(base, base);
    }
    return acc;
  }
};

bool is_one(const Digits& d) {
  if (d[0] != 1) return false;
  return std::all_of(d.begin() + 1, d.end(), [](std::uint32_t v) { return v == 0; });
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, unsigned n) : p_(p), n_(n) {
  if (n == 0) throw DomainError("field degree must be >= 1");
  std::uint64_t size = 1;
  for (unsigned i = 0; i < n; ++i) {
    size *= p;
    if (size > (1u << 24)) throw InputError("finite field too large for table arithmetic");
  }
  size_ = static_cast<std::uint32_t>(size);
  const std::uint64_t order = size - 1;
  const auto factors = prime_factors(order);

  QuotientRing ring{p, Digits(n, 0)};
  Digits x(n, 0);
  if (n > 1) x[1] = 1;
  bool found = false;
  for (std::uint64_t code = 0; code < size && !found; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < n; ++i) {
      ring.low[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (ring.low[0] == 0) continue;
    // x mod (x + low0) is -low0 when n = 1
    if (n == 1) x[0] = (p - ring.low[0]) % p;
    if (!is_one(ring.pow(x, order))) continue;
    found = std::all_of(factors.begin(), factors.end(),
                        [&](std::uint64_t l) { return !is_one(ring.pow(x, order / l)); });
  }
  if (!found && order > 0) throw DomainError("no primitive modulus found");

  exp_.assign(size_, 0);
  log_.assign(size_, 0);
  auto encode = [&](const Digits& d) {
    std::uint32_t v = 0;
    for (unsigned i = n; i-- > 0;) v = v * p + d[i];
    return v;
  };
  Digits e(n, 0);
  e[0] = 1;
  for (std::uint32_t k = 0; k < order; ++k) {
    const std::uint32_t v = encode(e);
    exp_[k] = v;
    log_[v] = k;
    e = ring.mul(e, x);
  }
  if (order == 0) exp_[0] = 1;
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  std::uint32_t out = 0, scale = 1;
  for (unsigned i = 0; i < n_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

std::uint32_t FiniteField::neg(std::uint32_t a) const {
  if (p_ == 2) return a;
  std::uint32_t out = 0, scale = 1;
  for (unsigned i = 0; i < n_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint32_t order = size_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % order];
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = size_ - 1;
  return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % order)) % order)];
}

std::uint32_t FiniteField::from_integer(long c) const {
  const long p = static_cast<long>(p_);
  return static_cast<std::uint32_t>(((c % p) + p) % p);
}

int PlaneCurveSpec::hyperelliptic_genus() const {
  auto degree = [](const std::vector<long>& v, long p) {
    int d = -1;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (((v[i] % p) + p) % p != 0) d = static_cast<int>(i);
    }
    return d;
  };
  const long p = static_cast<long>(prime_power_decomposition(static_cast<std::uint64_t>(q)).first);
  const int df = degree(f, p);
  const int dh = degree(h, p);
  const int top = std::max(df, 2 * dh);
  if (top < 1) throw InputError("hyperelliptic model needs a nonconstant f or h");
  return (top + 1) / 2 - 1;
}

namespace {

std::uint32_t eval_poly(const FiniteField& F, const std::vector<std::uint32_t>& coeffs, std::uint32_t x) {
  std::uint32_t acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

std::vector<std::uint32_t> embed(const FiniteField& F, const std::vector<long>& v) {
  std::vector<std::uint32_t> out;
  out.reserve(v.size());
  for (long c : v) out.push_back(F.from_integer(c));
  return out;
}

std::uint64_t count_hyperelliptic(const PlaneCurveSpec& spec, const FiniteField& F) {
  const auto f = embed(F, spec.f);
  const auto h = embed(F, spec.h);
  const std::uint32_t n = F.size();
  std::vector<std::uint32_t> squares(n);
  for (std::uint32_t y = 0; y < n; ++y) squares[y] = F.mul(y, y);
  std::uint64_t affine = 0;
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::uint32_t fx = eval_poly(F, f, x);
    const std::uint32_t hx = eval_poly(F, h, x);
    for (std::uint32_t y = 0; y < n; ++y) {
      if (F.add(squares[y], F.mul(hx, y)) == fx) ++affine;
    }
  }
  // Smooth model at infinity: Y^2 + h_{g+1} Y = f_{2g+2}.
  const int g = spec.hyperelliptic_genus();
  auto coeff = [&](const std::vector<std::uint32_t>& v, int i) -> std::uint32_t {
    return i < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(i)] : 0;
  };
  const std::uint32_t hc = coeff(h, g + 1);
  const std::uint32_t fc = coeff(f, 2 * g + 2);
  std::uint64_t infinite = 0;
  for (std::uint32_t y = 0; y < n; ++y) {
    if (F.add(squares[y], F.mul(hc, y)) == fc) ++infinite;
  }
  return affine + infinite;
}

std::uint64_t count_plane(const PlaneCurveSpec& spec, const FiniteField& F) {
  struct Term {
    int i, j, k;
    std::uint32_t c;
  };
  std::vector<Term> terms;
  int total = -1;
  for (const auto& [key, c] : spec.monomials) {
    auto [i, j, k] = key;
    if (total < 0) total = i + j + k;
    if (i + j + k != total) throw InputError("plane curve polynomial is not homogeneous");
    const std::uint32_t cc = F.from_integer(c);
    if (cc != 0) terms.push_back({i, j, k, cc});
  }
  if (terms.empty()) throw InputError("plane curve polynomial is zero");
  auto value = [&](std::uint32_t X, std::uint32_t Y, std::uint32_t Z) {
    std::uint32_t acc = 0;
    for (const auto& t : terms) {
      acc = F.add(acc, F.mul(t.c, F.mul(F.pow(X, t.i), F.mul(F.pow(Y, t.j), F.pow(Z, t.k)))));
    }
    return acc;
  };
  const std::uint32_t n = F.size();
  std::uint64_t count = 0;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) count += value(x, y, 1) == 0;
  }
  for (std::uint32_t x = 0; x < n; ++x) count += value(x, 1, 0) == 0;
  count += value(1, 0, 0) == 0;
  return count;
}

}  // namespace

std::vector<Integer> count_points(const PlaneCurveSpec& spec, int m_max) {
  auto [p, k] = prime_power_decomposition(static_cast<std::uint64_t>(spec.q));
  if (p == 0) throw InputError("q = " + std::to_string(spec.q) + " is not a prime power");
  std::vector<Integer> out;
  for (int m = 1; m <= m_max; ++m) {
    std::uint64_t size = 1;
    for (unsigned i = 0; i < k * static_cast<unsigned>(m); ++i) size *= p;
    if (size * size > spec.scan_bound) {
      throw InputError("brute-force bound exceeded at m = " + std::to_string(m) + " (field size " +
                       std::to_string(size) + ")");
    }
    FiniteField F(static_cast<std::uint32_t>(p), k * static_cast<unsigned>(m));
    const std::uint64_t n = spec.model == PlaneCurveSpec::Model::hyperelliptic ? count_hyperelliptic(spec, F)
                                                                               : count_plane(spec, F);
    out.emplace_back(static_cast<unsigned long>(n));
  }
  return out;
}

namespace {

class EquationParser {
 public:
  explicit EquationParser(std::string text) : text_(std::move(text)) {}

  // (i, j) -> coefficient of x^i y^j in LHS - RHS
  std::map<std::pair<int, int>, long> parse() {
    auto eq = text_.find('=');
    if (eq == std::string::npos) throw InputError("equation needs '=': " + text_);
    std::map<std::pair<int, int>, long> out;
    parse_side(text_.substr(0, eq), 1, out);
    parse_side(text_.substr(eq + 1), -1, out);
    return out;
  }

 private:
  void parse_side(const std::string& side, long sign, std::map<std::pair<int, int>, long>& out) {
    std::string s;
    for (char ch : side) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s.empty()) throw InputError("empty side in equation: " + text_);
    std::size_t pos = 0;
    while (pos < s.size()) {
      long term_sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        term_sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      }
      long coeff = 1;
      bool have_coeff = false;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff = read_int(s, pos);
        have_coeff = true;
      }
      int ex = 0, ey = 0;
      bool have_factor = false;
      while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
        if (s[pos] == '*') {
          ++pos;
          continue;
        }
        const char var = s[pos];
        if (var != 'x' && var != 'y') throw InputError("unexpected '" + std::string(1, var) + "' in " + text_);
        ++pos;
        int e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
            throw InputError("missing exponent in " + text_);
          }
          e = static_cast<int>(read_int(s, pos));
        }
        (var == 'x' ? ex : ey) += e;
        have_factor = true;
      }
      if (!have_coeff && !have_factor) throw InputError("empty term in " + text_);
      out[{ex, ey}] += sign * term_sign * coeff;
    }
  }

  static long read_int(const std::string& s, std::size_t& pos) {
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    return v;
  }

  std::string text_;
};

long mod_inverse(long a, long p) {
  long r = 1;
  for (long e = p - 2, b = a % p; e > 0; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return r;
}

}  // namespace

PlaneCurveSpec parse_hyperelliptic(const std::string& equation, long q) {
  auto [p_u, k] = prime_power_decomposition(static_cast<std::uint64_t>(q));
  if (p_u == 0) throw InputError("q = " + std::to_string(q) + " is not a prime power");
  const long p = static_cast<long>(p_u);
  auto terms = EquationParser(equation).parse();
  auto reduce = [p](long c) { return ((c % p) + p) % p; };

  long lead = 0;
  PlaneCurveSpec spec;
  spec.q = q;
  spec.model = PlaneCurveSpec::Model::hyperelliptic;
  for (const auto& [key, c] : terms) {
    auto [i, j] = key;
    if (reduce(c) == 0) continue;
    if (j == 2 && i == 0) {
      lead = reduce(c);
    } else if (j > 1) {
      throw InputError("not of the form y^2 + h(x) y = f(x): " + equation);
    }
  }
  if (lead == 0) throw InputError("equation has no y^2 term: " + equation);
  const long inv = mod_inverse(lead, p);
  for (const auto& [key, c] : terms) {
    auto [i, j] = key;
    const long v = reduce(reduce(c) * inv);
    if (v == 0 || j == 2) continue;
    auto& target = j == 1 ? spec.h : spec.f;
    if (static_cast<int>(target.size()) <= i) target.resize(static_cast<std::size_t>(i) + 1, 0);
    target[static_cast<std::size_t>(i)] = j == 1 ? v : reduce(-v);
  }
  spec.genus = spec.hyperelliptic_genus();
  return spec;
}

}  // namespace nazeta
