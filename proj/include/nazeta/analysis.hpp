#pragma once

#include "nazeta/poly.hpp"
#include "nazeta/ratfun.hpp"

#include <complex>
#include <vector>

namespace nazeta {

// S_m = sum_i omega_i^m, m = 1..m_max, for the reciprocal roots omega_i of P,
// i.e. P(t) = P(0) * prod_i (1 - omega_i t). Uses Newton's identities, no roots.
std::vector<Rational> newton_power_sums(const Poly& P, int m_max);

// Inverse of newton_power_sums: the polynomial c * prod_i (1 - omega_i t) of
// degree n whose reciprocal roots have power sums S_1..S_n.
Poly poly_from_power_sums(const std::vector<Rational>& power_sums, int degree, const Rational& constant_term);

struct PairingResult {
  bool holds = false;
  // t^deg P(1/(qt)) = constant * P(t) when holds
  Rational constant;
};

// Exact, root-free form of omega_i * omega_{n+1-i} = q.
PairingResult pairing_check(const Poly& P, long q);

struct NumericRoots {
  // Reciprocal roots, ordered by real part then imaginary part.
  std::vector<std::complex<double>> roots;
  // |P(1/omega_i)| after refinement.
  std::vector<double> residuals;
};

// Reciprocal roots of P by companion-matrix eigenvalues plus Newton polishing.
// The scaled residual |P(z)| / sum_i |a_i||z|^i at z = 1/omega must drop below tol
// for every root, else ConvergenceError.
NumericRoots roots_numeric(const Poly& P, double tol = 1e-9);

// exp of a power series with zero constant term, first n coefficients.
std::vector<Rational> series_exp(const std::vector<Rational>& log_series, int n);
// log of a power series with constant term 1, first n coefficients.
std::vector<Rational> series_log(const std::vector<Rational>& series, int n);

}  // namespace nazeta
