#include "fixtures.hpp"
#include "nazeta/errors.hpp"
#include "nazeta/point_count.hpp"

#include <doctest.h>

#include <cmath>

using namespace nazeta;

TEST_CASE("ingest validation") {
  CHECK_NOTHROW(fixtures::elliptic_f2());
  CHECK_THROWS_AS(ingest_weil(6, 0, {1}), InputError);
  CHECK_THROWS_AS(ingest_weil(2, 1, {2, 0, 2}), InputError);
  CHECK_THROWS_AS(ingest_weil(2, 1, {1, 0, 3}), InputError);
  CHECK_THROWS_AS(ingest_weil(2, 1, {1, 0}), InputError);
  // a_1 = 5 breaks |a_1| <= 2 sqrt(2)
  CHECK_THROWS_AS(ingest_weil(2, 1, {1, 5, 2}), InputError);
  CHECK_THROWS_AS(ingest_weil(2, 1, {1, 0, 2}, "", {Integer(4)}), InputError);
}

TEST_CASE("point counts of the elliptic curve follow from 1 + 2t^2") {
  const auto c = fixtures::elliptic_f2();
  const auto n = c.derived_point_counts(4);
  CHECK(n == std::vector<Integer>{3, 9, 9, 9});
  CHECK(weil_from_counts(2, 1, {Integer(3)}) == Poly::from_integers({1, 0, 2}));
}

TEST_CASE("abelian zeta of P1 counts effective divisors") {
  const auto ab = abelian_zeta(fixtures::projective_line(3), 5);
  CHECK(ab.h == 1);
  // b_d = (q^{d+1} - 1)/(q - 1)
  CHECK(ab.b[0] == 1);
  CHECK(ab.b[1] == 4);
  CHECK(ab.b[2] == 13);
  CHECK(ab.sigma_at(-3) == 1);
  CHECK(ab.sigma_at(2) == 27);
  CHECK(ab.b_at(40) == (rational_pow(Rational(3), 41) - 1) / 2);
}

TEST_CASE("sigma closes Riemann-Roch on genus 2") {
  const auto c = fixtures::genus2_f2();
  const auto ab = abelian_zeta(c, 6);
  CHECK(ab.h == 5);
  for (int d = 0; d <= 2; ++d) CHECK(ab.sigma_at(2 - d) == rational_pow(Rational(2), 1 - d) * ab.sigma_at(d));
  for (int d = 3; d <= 6; ++d) CHECK(ab.sigma[static_cast<std::size_t>(d)] == ab.sigma_at(d));
}

TEST_CASE("finite field tables") {
  for (auto [p, n] : {std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{5u, 1u}}) {
    const FiniteField F(p, n);
    const std::uint32_t size = F.size();
    for (std::uint32_t a = 1; a < size; ++a) {
      CHECK(F.pow(a, size - 1) == 1);
      CHECK(F.add(a, F.neg(a)) == 0);
    }
    for (std::uint32_t a = 0; a < size; ++a) {
      for (std::uint32_t b = 0; b < size; ++b) CHECK(F.mul(a, b) == F.mul(b, a));
    }
  }
}

TEST_CASE("brute-force counts") {
  const auto e = count_points(parse_hyperelliptic("y^2+y=x^3", 2), 4);
  CHECK(e == std::vector<Integer>{3, 9, 9, 9});
  const auto c2 = count_points(parse_hyperelliptic("y^2 + y = x^5", 2), 4);
  CHECK(c2 == std::vector<Integer>{3, 5, 9, 33});
  CHECK(parse_hyperelliptic("y^2+y=x^5", 2).hyperelliptic_genus() == 2);
  // Fermat cubic X^3 + Y^3 + Z^3 over F_2
  PlaneCurveSpec fermat;
  fermat.q = 2;
  fermat.model = PlaneCurveSpec::Model::plane;
  fermat.genus = 1;
  fermat.monomials = {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}, {{0, 0, 3}, 1}};
  CHECK(count_points(fermat, 2) == std::vector<Integer>{3, 9});
  CHECK_THROWS_AS(parse_hyperelliptic("y^3 = x", 2), InputError);
}

TEST_CASE("verify_abelian on the genus-2 curve") {
  const auto v = verify_abelian(fixtures::genus2_f2());
  CHECK(v.functional_equation);
  CHECK(v.rh_max_deviation < 1e-9);
  CHECK(v.roots.size() == 4);
  CHECK(verify_abelian(fixtures::projective_line(2)).vacuous);
}

TEST_CASE("curve json round trip") {
  const auto c = fixtures::genus2_f2();
  const auto back = curve_from_json(to_json(c));
  CHECK(back.weil_numerator == c.weil_numerator);
  CHECK(back.q == 2);
  CHECK_THROWS_AS(curve_from_json(json::parse(R"({"q":2,"g":1})")), InputError);
}
