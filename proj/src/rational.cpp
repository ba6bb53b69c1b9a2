#include "nazeta/rational.hpp"

#include "nazeta/errors.hpp"

#include <cctype>

namespace nazeta {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

namespace {

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw InputError("malformed integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw InputError("malformed integer: '" + text + "'");
    }
  }
  std::string digits = text[0] == '+' ? text.substr(1) : text;
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  auto den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + text + "'");
  return make_rational(parse_integer(text.substr(0, slash)), den);
}

Integer integer_pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (base == 0) {
    if (exponent < 0) throw DomainError("zero raised to a negative power");
    return Rational(0);
  }
  const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                       : static_cast<unsigned long>(exponent);
  Integer num = integer_pow(base.get_num(), e);
  Integer den = integer_pow(base.get_den(), e);
  return exponent < 0 ? make_rational(den, num) : make_rational(num, den);
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::pair<std::string, std::string> to_string_pair(const Rational& x) {
  return {x.get_num().get_str(10), x.get_den().get_str(10)};
}

std::string to_string(const Rational& x) { return x.get_str(10); }

std::pair<std::uint64_t, unsigned> prime_power_decomposition(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};
  unsigned k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return {0, 0};
  return {p, k};
}

}  // namespace nazeta
