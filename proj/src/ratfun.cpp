#include "nazeta/ratfun.hpp"

#include "nazeta/errors.hpp"

#include <algorithm>

namespace nazeta {

RationalFunction::RationalFunction(const Rational& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}

RationalFunction::RationalFunction(const Poly& p) : num_(p), den_(Poly::constant(1)) {}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  canonicalize();
}

RationalFunction RationalFunction::monomial(const Rational& c, int k) {
  if (k >= 0) return RationalFunction(Poly::monomial(c, k));
  return RationalFunction(Poly::constant(c), Poly::monomial(1, -k));
}

RationalFunction RationalFunction::from_laurent(const LaurentPoly& lp) {
  if (lp.is_zero()) return {};
  Poly body = lp.shifted_to_polynomial();
  if (lp.min_exponent() >= 0) return RationalFunction(body.shifted(lp.min_exponent()));
  return RationalFunction(body, Poly::monomial(1, -lp.min_exponent()));
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunction::operator()(const Rational& t) const {
  Rational d = den_(t);
  if (d == 0) throw DomainError("evaluation at a pole t = " + nazeta::to_string(t));
  return num_(t) / d;
}

double RationalFunction::eval_double(double t) const { return num_.eval_double(t) / den_.eval_double(t); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    *this = RationalFunction(num_ + o.num_, den_);
  } else {
    *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  if (den_ == o.den_) {
    *this = RationalFunction(num_ - o.num_, den_);
  } else {
    *this = RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DomainError("division by the zero rational function");
  *this = RationalFunction(num_ * o.den_, den_ * o.num_);
  return *this;
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction out = a;
  out.num_ = -out.num_;
  return out;
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction ratfun_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw DomainError("unknown arithmetic op");
}

namespace {

// t^deg(p) * p(1/(q t))
Poly reflect(const Poly& p, long q) {
  const int n = p.degree();
  std::vector<Rational> v(static_cast<std::size_t>(n + 1));
  Rational qinv_pow(1);
  const Rational qinv = make_rational(1, q);
  for (int i = 0; i <= n; ++i) {
    v[static_cast<std::size_t>(n - i)] = p.coeff(i) * qinv_pow;
    qinv_pow *= qinv;
  }
  return Poly(std::move(v));
}

}  // namespace

RationalFunction substitute_recip(const RationalFunction& f, long q) {
  if (q < 2) throw DomainError("substitute_recip needs q >= 2");
  if (f.is_zero()) return f;
  const int n = f.numerator().degree();
  const int m = f.denominator().degree();
  Poly num = reflect(f.numerator(), q);
  Poly den = reflect(f.denominator(), q);
  // f(1/(qt)) = num/den * t^(m-n)
  if (m >= n) return RationalFunction(num.shifted(m - n), den);
  return RationalFunction(num, den.shifted(n - m));
}

RationalFunction geometric_sum(int first_exponent, const Rational& coefficient, int ratio_exponent,
                               SeriesBase base, long q) {
  if (ratio_exponent < 1) throw DomainError("geometric_sum needs ratio_exponent >= 1");
  Rational scale(1);
  if (base == SeriesBase::qt) {
    if (q < 2) throw DomainError("geometric_sum over qt needs q >= 2");
    scale = q;
  }
  // base^k = scale^k t^k
  RationalFunction head = RationalFunction::monomial(coefficient * rational_pow(scale, first_exponent), first_exponent);
  Poly denom = Poly::constant(1) - Poly::monomial(rational_pow(scale, ratio_exponent), ratio_exponent);
  return head / RationalFunction(denom);
}

Rational scalar_geometric_sum(const Rational& first, const Rational& ratio) {
  if (abs(ratio) >= 1) {
    throw NonContractingSeries("refusing to sum a geometric series with ratio " + to_string(ratio));
  }
  return first / (1 - ratio);
}

std::vector<Rational> series_expand(const RationalFunction& f, int n_terms) {
  const Poly& num = f.numerator();
  const Poly& den = f.denominator();
  const Rational d0 = den.coeff(0);
  if (d0 == 0) throw DomainError("series_expand: pole at t = 0");
  std::vector<Rational> out(static_cast<std::size_t>(std::max(n_terms, 0)));
  const Rational inv = 1 / d0;
  for (int n = 0; n < n_terms; ++n) {
    Rational acc = num.coeff(n);
    for (int k = 1; k <= std::min(n, den.degree()); ++k) acc -= den.coeff(k) * out[static_cast<std::size_t>(n - k)];
    out[static_cast<std::size_t>(n)] = acc * inv;
  }
  return out;
}

int pole_order(const RationalFunction& f, const Rational& t0) {
  Poly d = f.denominator();
  int order = 0;
  const Poly linear{-t0, Rational(1)};
  while (d.degree() > 0 && d(t0) == 0) {
    d = divmod(d, linear).first;
    ++order;
  }
  return order;
}

Rational residue_at(const RationalFunction& f, const Rational& t0) {
  const int order = pole_order(f, t0);
  if (order == 0) return Rational(0);
  if (order > 1) {
    throw DomainError("pole of order " + std::to_string(order) + " at t = " + to_string(t0));
  }
  return f.numerator()(t0) / f.denominator().derivative()(t0);
}

}  // namespace nazeta
