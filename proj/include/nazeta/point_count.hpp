#pragma once

#include "nazeta/rational.hpp"

#include <cstdint>
#include <map>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

namespace nazeta {

// F_{p^n} with log/antilog tables. Elements are integers in [0, p^n) read as
// base-p digit vectors over the polynomial basis of a primitive modulus; the
// prime field sits at 0..p-1.
class FiniteField {
 public:
  FiniteField(std::uint32_t p, unsigned n);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  std::uint32_t size() const { return size_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  // Embeds an element of the prime field given as any integer.
  std::uint32_t from_integer(long c) const;

 private:
  std::uint32_t p_;
  unsigned n_;
  std::uint32_t size_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

// Coefficients are prime-field elements (integers reduced mod p).
struct PlaneCurveSpec {
  enum class Model { hyperelliptic, plane };

  long q = 0;
  Model model = Model::hyperelliptic;
  // y^2 + h(x) y = f(x); index = power of x
  std::vector<long> f;
  std::vector<long> h;
  // plane: homogeneous monomials (i, j, k) -> c for c X^i Y^j Z^k
  std::map<std::tuple<int, int, int>, long> monomials;
  // user-asserted genus for plane models; derived for hyperelliptic ones
  int genus = -1;
  // maximum number of (x, y) pairs scanned per extension degree
  std::uint64_t scan_bound = 1u << 20;

  int hyperelliptic_genus() const;
};

// Projective point counts over F_{q^m}, m = 1..m_max. Hyperelliptic specs are
// counted on the smooth model (points at infinity from the leading terms);
// plane specs on the projective closure as given.
std::vector<Integer> count_points(const PlaneCurveSpec& spec, int m_max);

// Parses "y^2 + y = x^3", "y^2+x*y=x^3+1", "y^2 = x^5 + 2x + 1", ... over F_p.
PlaneCurveSpec parse_hyperelliptic(const std::string& equation, long q);

}  // namespace nazeta
