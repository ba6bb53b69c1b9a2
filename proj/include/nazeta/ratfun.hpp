#pragma once

#include "nazeta/poly.hpp"

#include <string>
#include <vector>

namespace nazeta {

// Quotient of two polynomials in t, kept in canonical form: numerator and
// denominator coprime, denominator monic. Equality is therefore plain
// coefficient comparison. Negative powers of t live in the denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(Poly::constant(1)) {}
  RationalFunction(const Rational& c);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Poly& p);      // NOLINT(google-explicit-constructor)
  RationalFunction(Poly num, Poly den);

  // c * t^k for any integer k.
  static RationalFunction monomial(const Rational& c, int k);
  static RationalFunction from_laurent(const LaurentPoly& lp);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  // Throws DomainError if t is a pole.
  Rational operator()(const Rational& t) const;
  double eval_double(double t) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void canonicalize();
  Poly num_;
  Poly den_;
};

enum class ArithOp { add, sub, mul, div };

RationalFunction ratfun_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op);

// g(t) = f(1/(q t)).
RationalFunction substitute_recip(const RationalFunction& f, long q);

enum class SeriesBase { t, qt };

// coefficient * base^first_exponent / (1 - base^ratio_exponent), the closed form
// of sum_{n>=0} coefficient * base^(first_exponent + n*ratio_exponent).
// base = qt requires q.
RationalFunction geometric_sum(int first_exponent, const Rational& coefficient, int ratio_exponent,
                               SeriesBase base, long q = 0);

// Closed form of sum_{n>=0} first * ratio^n for an exact scalar ratio.
// Refuses (NonContractingSeries) unless |ratio| < 1.
Rational scalar_geometric_sum(const Rational& first, const Rational& ratio);

// First n_terms Taylor coefficients at t = 0.
std::vector<Rational> series_expand(const RationalFunction& f, int n_terms);

// Residue in the t-plane at t0. Zero if f is regular there; DomainError if the
// pole has order >= 2.
Rational residue_at(const RationalFunction& f, const Rational& t0);

// Order of the pole of f at t0 (0 if regular).
int pole_order(const RationalFunction& f, const Rational& t0);

}  // namespace nazeta
