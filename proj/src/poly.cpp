#include "nazeta/poly.hpp"

#include "nazeta/errors.hpp"

#include <algorithm>
#include <sstream>

namespace nazeta {

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int k) {
  if (k < 0) throw DomainError("negative exponent in Poly::monomial");
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::from_integers(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero_rational();
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) return zero_rational();
  return coeffs_.back();
}

Rational Poly::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::complex<long double> Poly::operator()(std::complex<long double> t) const {
  std::complex<long double> acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + static_cast<long double>(it->get_d());
  }
  return acc;
}

double Poly::eval_double(double t) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (coeffs_.empty()) return {};
  Poly out = *this;
  Rational inv = 1 / leading();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

Poly Poly::shifted(int k) const {
  if (coeffs_.empty()) return {};
  if (k >= 0) {
    std::vector<Rational> v(static_cast<std::size_t>(k), Rational(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v));
  }
  for (int i = 0; i < -k && i < static_cast<int>(coeffs_.size()); ++i) {
    if (coeffs_[static_cast<std::size_t>(i)] != 0) {
      throw DomainError("Poly::shifted would produce a negative power");
    }
  }
  if (-k >= static_cast<int>(coeffs_.size())) return {};
  return Poly(std::vector<Rational>(coeffs_.begin() - k, coeffs_.end()));
}

Poly Poly::scaled_variable(const Rational& c) const {
  Poly out = *this;
  Rational power(1);
  for (auto& coeff : out.coeffs_) {
    coeff *= power;
    power *= c;
  }
  out.trim();
  return out;
}

Poly Poly::reversed() const {
  return Poly(std::vector<Rational>(coeffs_.rbegin(), coeffs_.rend()));
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  if (coeffs_.empty() || other.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> v(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(v);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string Poly::to_string(const char* var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const int db = b.degree();
  const Rational inv_lead = 1 / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational c = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quo[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Poly pow(const Poly& p, unsigned e) {
  Poly out = Poly::constant(1);
  Poly base = p;
  while (e) {
    if (e & 1u) out *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return out;
}

LaurentPoly::LaurentPoly(int min_exponent, std::vector<Rational> coeffs)
    : min_exponent_(min_exponent), coeffs_(std::move(coeffs)) {
  trim();
}

void LaurentPoly::add_term(const Rational& c, int e) {
  if (c == 0) return;
  if (coeffs_.empty()) {
    min_exponent_ = e;
    coeffs_.assign(1, c);
    return;
  }
  if (e < min_exponent_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_exponent_ - e), Rational(0));
    min_exponent_ = e;
  }
  auto idx = static_cast<std::size_t>(e - min_exponent_);
  if (idx >= coeffs_.size()) coeffs_.resize(idx + 1, Rational(0));
  coeffs_[idx] += c;
  trim();
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    min_exponent_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_exponent_ += static_cast<int>(lead);
  }
}

Poly LaurentPoly::shifted_to_polynomial() const { return Poly(coeffs_); }

}  // namespace nazeta
