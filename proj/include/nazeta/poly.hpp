#pragma once

#include "nazeta/rational.hpp"

#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nazeta {

// Dense univariate polynomial in t with exact rational coefficients.
// coefficients()[i] is the coefficient of t^i. Trailing zeros are never
// stored, so the zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  // c * t^k, k >= 0
  static Poly monomial(const Rational& c, int k);
  static Poly from_integers(std::initializer_list<long> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  // Coefficient of t^i; zero outside the stored range.
  const Rational& coeff(int i) const;
  const Rational& leading() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational operator()(const Rational& t) const;
  std::complex<long double> operator()(std::complex<long double> t) const;
  double eval_double(double t) const;

  Poly derivative() const;
  Poly monic() const;
  // p(t) * t^k
  Poly shifted(int k) const;
  // p(c t)
  Poly scaled_variable(const Rational& c) const;
  // t^deg * p(1/t)
  Poly reversed() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const char* var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly pow(const Poly& p, unsigned e);

// Laurent polynomial: coefficients start at t^min_exponent. Only used as a
// transient builder; converted to a RationalFunction for arithmetic.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int min_exponent, std::vector<Rational> coeffs);

  // Adds c * t^e.
  void add_term(const Rational& c, int e);

  int min_exponent() const { return min_exponent_; }
  std::span<const Rational> coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // t^{-min_exponent} * this
  Poly shifted_to_polynomial() const;

 private:
  void trim();
  int min_exponent_ = 0;
  std::vector<Rational> coeffs_;
};

}  // namespace nazeta
