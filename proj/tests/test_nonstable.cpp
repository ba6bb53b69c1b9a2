#include "fixtures.hpp"
#include "nazeta/errors.hpp"
#include "nazeta/nonstable.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace nazeta;
using fixtures::constant;
using fixtures::t_var;

namespace {

IvaTable uniform_genus2_table(const Integer& h) {
  IvaTable table;
  for (int dp = 1; dp <= 2; ++dp) {
    for (int dm = -dp; dm < dp; ++dm) table.push_back({dp, dm, {{1, h * h, dp - dm - 1}}});
  }
  return table;
}

}  // namespace

TEST_CASE("split automorphism groups") {
  CHECK(aut_split(2, 0) == 1);
  CHECK(aut_split(2, 3) == 8);
  CHECK(aut_split(3, 1) == 12);
  CHECK_THROWS_AS(aut_split(2, -1), DomainError);
}

TEST_CASE("extension blocks") {
  CHECK(extension_block(2, 1, -1, 0) == make_rational(1, 8));
  CHECK(extension_block(3, 2, 2, 1) == make_rational(1, 4));
  CHECK(extension_block(2, 3, -3, 1) == make_rational(1, 64));
}

TEST_CASE("region classification follows the degree lists") {
  for (int g = 0; g <= 3; ++g) {
    for (long m = 0; m <= 30; ++m) {
      const long n = m / 2;
      for (long dp = -5; dp <= 40; ++dp) {
        const long dm = m - dp;
        if (dp > dm) {
          CHECK_NOTHROW(classify(g, dp, dm));
          CHECK(dp >= n + 1);
          CHECK(dm <= (m % 2 == 0 ? n - 1 : n));
        } else {
          CHECK_THROWS_AS(classify(g, dp, dm), DomainError);
        }
      }
    }
  }
  CHECK_THROWS_AS(classify(1, 1, -2), DomainError);
  CHECK(classify(0, 1, -1) == NsPart::II);
  CHECK(classify(2, 2, -1) == NsPart::IV_a);
  CHECK(classify(1, 3, 1) == NsPart::I);
  CHECK(classify(2, 9, 0) == NsPart::III);
  CHECK(classify(2, 4, 0) == NsPart::IV_b);
  CHECK(classify(2, 5, -1) == NsPart::IV_c);
}

TEST_CASE("A invariant of the elliptic curve") {
  const auto ab = abelian_zeta(fixtures::elliptic_f2(), 2);
  // sigma_0 = (q-1) b_0 + h = 4
  CHECK(a_invariant(ab) == 4);
}

TEST_CASE("mass part on P1") {
  for (long q : {2L, 3L}) {
    const auto inp = make_nonstable_input(fixtures::projective_line(q));
    const RationalFunction one = constant(1);
    const RationalFunction t = t_var();
    const RationalFunction expected =
        constant(make_rational(1, q * (q - 1) * (q - 1) * (q * q - 1))) * (one + constant(q) * t) / (one - t * t);
    CHECK(mass_part(inp) == expected);
    const auto paper = make_nonstable_input(fixtures::projective_line(q), JacobianMode::paper);
    CHECK(mass_part(paper) == expected);
  }
}

TEST_CASE("P1 non-stable zeta against the split-bundle series") {
  for (long q : {2L, 3L}) {
    const auto z = assemble_ns(make_nonstable_input(fixtures::projective_line(q)));
    CHECK_FALSE(z.partial);
    const auto series = series_expand(z.zeta_ns, 16);
    for (int d = 0; d < 16; ++d) CHECK(series[static_cast<std::size_t>(d)] == oracles::p1_nonstable_coefficient(q, d));
  }
  const long q = 2;
  const auto z = assemble_ns(make_nonstable_input(fixtures::projective_line(q)));
  const RationalFunction one = constant(1);
  const RationalFunction t = t_var();
  const RationalFunction qt = constant(q) * t;
  const RationalFunction closed =
      constant(make_rational(1, (q - 1) * (q - 1))) *
      (qt / ((one - t) * (one - qt * qt)) + constant(make_rational(1, q - 1)) / (one - t) -
       (one + qt) / (constant(q * (q * q - 1)) * (one - t * t)));
  CHECK(z.zeta_ns == closed);
  RationalFunction sum;
  for (const char* part : {"I", "II", "III", "IV_a", "IV_b", "IV_c"}) sum += z.parts.at(part);
  CHECK(z.zeta_ns == sum - z.parts.at("mass_part"));
}

TEST_CASE("truncated oracle") {
  const auto p1 = make_nonstable_input(fixtures::projective_line(2));
  const auto zp = assemble_ns(p1);
  CHECK(oracle_truncated(p1, zp, Rational(2), 40).gap < 1e-12);

  const auto ell = make_nonstable_input(fixtures::elliptic_f2());
  const auto ze = assemble_ns(ell);
  const auto o = oracle_truncated(ell, ze, Rational(2), 60);
  CHECK(o.gap < 1e-9);
  CHECK(o.tail_bound < 1e-9);
  CHECK(oracle_truncated(ell, ze, make_rational(3, 2), 80).gap < 1e-9);

  CHECK_THROWS_AS(oracle_truncated(ell, ze, Rational(1), 60), DomainError);
  CHECK_THROWS_AS(oracle_truncated(ell, ze, Rational(2), 3), ConvergenceError);
  CHECK_THROWS_AS(oracle_truncated(ell, ze, Rational(2), 8, 1e-30), ConvergenceError);
}

TEST_CASE("Jacobian factor resolution on the elliptic curve") {
  const auto ex = resolve_jacobian_mode(fixtures::elliptic_f2(), Rational(2), 60);
  CHECK(ex.unique());
  CHECK(ex.consistent.front() == JacobianMode::squared);
  CHECK(ex.gap_squared < 1e-9);
  CHECK(ex.gap_paper > 1.0);
  const auto paper = assemble_ns(make_nonstable_input(fixtures::elliptic_f2(), JacobianMode::paper));
  const auto squared = assemble_ns(make_nonstable_input(fixtures::elliptic_f2()));
  CHECK(paper.parts.at("mass_part") * constant(3) == squared.parts.at("mass_part"));
}

TEST_CASE("genus 2 with and without an extension table") {
  const auto c = fixtures::genus2_f2();
  CHECK_THROWS_AS(assemble_ns(make_nonstable_input(c)), InputError);

  const auto partial_in = make_nonstable_input(c, JacobianMode::squared, std::nullopt, true);
  const auto partial = assemble_ns(partial_in);
  CHECK(partial.partial);
  CHECK(partial.parts.at("IV_a").is_zero());
  CHECK(oracle_truncated(partial_in, partial, Rational(2), 60).gap < 1e-9);

  const auto full_in = make_nonstable_input(c, JacobianMode::squared, uniform_genus2_table(5));
  const auto full = assemble_ns(full_in);
  CHECK_FALSE(full.partial);
  CHECK_FALSE(full.parts.at("IV_a").is_zero());
  CHECK(oracle_truncated(full_in, full, Rational(2), 60).gap < 1e-9);
}

TEST_CASE("extension table validation") {
  const auto c = fixtures::genus2_f2();
  auto wrong_count = uniform_genus2_table(5);
  wrong_count[0].values[0].count = 24;
  CHECK_THROWS_AS(assemble_ns(make_nonstable_input(c, JacobianMode::squared, wrong_count)), InputError);
  auto missing = uniform_genus2_table(5);
  missing.pop_back();
  CHECK_THROWS_AS(assemble_ns(make_nonstable_input(c, JacobianMode::squared, missing)), InputError);
  auto outside = uniform_genus2_table(5);
  outside.push_back({3, 0, {{1, Integer(25), 2}}});
  CHECK_THROWS_AS(assemble_ns(make_nonstable_input(c, JacobianMode::squared, outside)), InputError);
  auto dup = uniform_genus2_table(5);
  dup.push_back(dup.front());
  CHECK_THROWS_AS(assemble_ns(make_nonstable_input(c, JacobianMode::squared, dup)), InputError);

  const auto table = uniform_genus2_table(5);
  CHECK(to_json(iva_table_from_json(to_json(table))) == to_json(table));
  CHECK_THROWS_AS(iva_table_from_json(json::parse(R"([{"d_plus":1,"d_minus":0,"h0_values":[{"h0":1,"count":1}]}])")),
                  InputError);
}

TEST_CASE("functional equation probe is a report") {
  const auto z = assemble_ns(make_nonstable_input(fixtures::elliptic_f2()));
  const auto samples = fe_probe(z.zeta_ns, 2);
  CHECK(samples.size() == 3);
  for (const auto& s : samples) CHECK(s.t < 0.5);
  CHECK(jacobian_mode_from_string("paper") == JacobianMode::paper);
  CHECK_THROWS_AS(jacobian_mode_from_string("cubed"), InputError);
  CHECK(to_json(z).contains("parts"));
}
