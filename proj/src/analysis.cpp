#include "nazeta/analysis.hpp"

#include "nazeta/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace nazeta {

namespace {

// Elementary coefficients c_k of P/P(0) = 1 + c_1 t + ... + c_n t^n.
std::vector<Rational> normalized_coefficients(const Poly& P) {
  const Rational p0 = P.coeff(0);
  if (p0 == 0) throw DomainError("reciprocal roots undefined: P(0) = 0");
  std::vector<Rational> c(static_cast<std::size_t>(P.degree() + 1));
  for (int k = 0; k <= P.degree(); ++k) c[static_cast<std::size_t>(k)] = P.coeff(k) / p0;
  return c;
}

}  // namespace

std::vector<Rational> newton_power_sums(const Poly& P, int m_max) {
  const auto c = normalized_coefficients(P);
  const int n = P.degree();
  std::vector<Rational> S(static_cast<std::size_t>(std::max(m_max, 0)) + 1, Rational(0));
  for (int m = 1; m <= m_max; ++m) {
    Rational acc = m <= n ? Rational(-m * c[static_cast<std::size_t>(m)]) : Rational(0);
    for (int k = 1; k < m && k <= n; ++k) acc -= c[static_cast<std::size_t>(k)] * S[static_cast<std::size_t>(m - k)];
    S[static_cast<std::size_t>(m)] = acc;
  }
  return {S.begin() + 1, S.end()};
}

Poly poly_from_power_sums(const std::vector<Rational>& power_sums, int degree, const Rational& constant_term) {
  if (static_cast<int>(power_sums.size()) < degree) {
    throw DomainError("poly_from_power_sums: need at least `degree` power sums");
  }
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
  c[0] = 1;
  for (int m = 1; m <= degree; ++m) {
    Rational acc = power_sums[static_cast<std::size_t>(m - 1)];
    for (int k = 1; k < m; ++k) acc += c[static_cast<std::size_t>(k)] * power_sums[static_cast<std::size_t>(m - k - 1)];
    c[static_cast<std::size_t>(m)] = -acc / m;
  }
  for (auto& x : c) x *= constant_term;
  return Poly(std::move(c));
}

PairingResult pairing_check(const Poly& P, long q) {
  if (P.coeff(0) == 0) throw DomainError("pairing_check: P(0) = 0");
  const int n = P.degree();
  if (n == 0) return {true, Rational(1)};
  // coefficient of t^(n-i) in t^n P(1/(qt)) is a_i q^-i
  const Rational qinv = make_rational(1, q);
  const Rational c = P.coeff(n) * rational_pow(qinv, n) / P.coeff(0);
  Rational qpow(1);
  for (int i = 0; i <= n; ++i) {
    if (P.coeff(i) * qpow != c * P.coeff(n - i)) return {false, Rational(0)};
    qpow *= qinv;
  }
  return {true, c};
}

NumericRoots roots_numeric(const Poly& P, double tol) {
  if (P.degree() < 1) throw DomainError("roots_numeric needs deg P >= 1");
  if (P.coeff(0) == 0) throw DomainError("roots_numeric: P(0) = 0");
  const int n = P.degree();
  // omega are the roots of R(x) = x^n P(1/x) = sum a_i x^(n-i).
  const Poly R = P.reversed();
  const Poly dR = R.derivative();
  const double lead = R.leading().get_d();

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int j = 0; j < n; ++j) companion(j, n - 1) = -R.coeff(j).get_d() / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw ConvergenceError("companion eigenvalue solve failed");

  using cld = std::complex<long double>;
  std::vector<long double> abs_coeffs;
  abs_coeffs.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) abs_coeffs.push_back(std::fabs(static_cast<long double>(P.coeff(i).get_d())));

  NumericRoots out;
  std::vector<std::pair<std::complex<double>, double>> found;
  for (int k = 0; k < n; ++k) {
    cld z(solver.eigenvalues()[k].real(), solver.eigenvalues()[k].imag());
    for (int it = 0; it < 60; ++it) {
      cld f = R(z);
      cld df = dR(z);
      if (std::abs(df) == 0.0L) break;
      cld step = f / df;
      z -= step;
      if (std::abs(step) <= 1e-30L * std::max<long double>(1.0L, std::abs(z))) break;
    }
    if (std::abs(z) == 0.0L) throw ConvergenceError("root refinement collapsed to zero");
    cld x = 1.0L / z;
    long double scale = 0;
    long double xp = 1;
    for (int i = 0; i <= n; ++i) {
      scale += abs_coeffs[static_cast<std::size_t>(i)] * xp;
      xp *= std::abs(x);
    }
    const long double residual = std::abs(P(x));
    if (!(residual <= tol * scale)) {
      throw ConvergenceError("reciprocal root did not converge: scaled residual " +
                             std::to_string(static_cast<double>(residual / scale)));
    }
    std::complex<double> w(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    const double mag = std::max(1.0, std::abs(w));
    if (std::fabs(w.real()) < 1e-14 * mag) w.real(0.0);
    if (std::fabs(w.imag()) < 1e-14 * mag) w.imag(0.0);
    found.emplace_back(w, static_cast<double>(residual));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    const double eps = 1e-9 * std::max({1.0, std::abs(a.first), std::abs(b.first)});
    if (std::fabs(a.first.real() - b.first.real()) > eps) return a.first.real() < b.first.real();
    return a.first.imag() < b.first.imag();
  });
  for (auto& [w, r] : found) {
    out.roots.push_back(w);
    out.residuals.push_back(r);
  }
  return out;
}

std::vector<Rational> series_exp(const std::vector<Rational>& g, int n) {
  if (!g.empty() && g[0] != 0) throw DomainError("series_exp needs zero constant term");
  std::vector<Rational> f(static_cast<std::size_t>(std::max(n, 0)), Rational(0));
  if (n <= 0) return f;
  f[0] = 1;
  for (int m = 1; m < n; ++m) {
    Rational acc(0);
    for (int k = 1; k <= m && k < static_cast<int>(g.size()); ++k) {
      acc += k * g[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(m - k)];
    }
    f[static_cast<std::size_t>(m)] = acc / m;
  }
  return f;
}

std::vector<Rational> series_log(const std::vector<Rational>& f, int n) {
  if (f.empty() || f[0] != 1) throw DomainError("series_log needs constant term 1");
  std::vector<Rational> g(static_cast<std::size_t>(std::max(n, 0)), Rational(0));
  auto fc = [&](int i) -> Rational { return i < static_cast<int>(f.size()) ? f[static_cast<std::size_t>(i)] : Rational(0); };
  for (int m = 1; m < n; ++m) {
    Rational acc = m * fc(m);
    for (int k = 1; k < m; ++k) acc -= k * g[static_cast<std::size_t>(k)] * fc(m - k);
    g[static_cast<std::size_t>(m)] = acc / m;
  }
  return g;
}

}  // namespace nazeta
