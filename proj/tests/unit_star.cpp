#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bstar/star.hpp"
#include "support/random_gen.hpp"

using bstar::CofactorPair;
using bstar::FactoredPoly;
using bstar::MPoly;
using bstar::Rational;

namespace {

MPoly st(int i, int j, const Rational& c) {
  return MPoly::monomial({"s", "t"}, {i, j}, c);
}

// b(s-t) as a bivariate polynomial.
MPoly shifted_expand(const FactoredPoly& b) {
  return substitute(b.expand("u"), "u", st(1, 0, 1) + st(0, 1, -1));
}

}  // namespace

TEST_CASE("star frozen examples") {
  const FactoredPoly bf = FactoredPoly::linear(Rational(1, 2));
  const FactoredPoly cg = FactoredPoly::from_factors(
      {{Rational(1, 3), 1}, {Rational(2, 3), 1}});
  CHECK(star(bf, cg) == FactoredPoly::from_factors(
                            {{Rational(5, 6), 1}, {Rational(7, 6), 1}}));
  CHECK(star(FactoredPoly::one(), cg).is_one());
  CHECK(star(cg, FactoredPoly::one()).is_one());
  CHECK(star(FactoredPoly::one(), FactoredPoly::one()).is_one());
  // Power-factor base case: (s+1)^2 * (t+1)^3 -> (u+2)^4.
  CHECK(star(FactoredPoly::linear(1, 2), FactoredPoly::linear(1, 3)) ==
        FactoredPoly::linear(2, 4));
}

TEST_CASE("star multiplicity takes the max over colliding sums") {
  // gamma = 1 arises from (0,1) with 2+3-1 = 4 and from (1,0) with 1+1-1 = 1.
  const FactoredPoly a =
      FactoredPoly::from_factors({{Rational(0), 2}, {Rational(1), 1}});
  const FactoredPoly b =
      FactoredPoly::from_factors({{Rational(0), 1}, {Rational(1), 3}});
  CHECK(star(a, b) == FactoredPoly::from_factors({{Rational(0), 2},
                                                  {Rational(1), 4},
                                                  {Rational(2), 3}}));
}

TEST_CASE("star is commutative") {
  std::mt19937 rng(201);
  for (int i = 0; i < 100; ++i) {
    const FactoredPoly a = testgen::random_factored(rng);
    const FactoredPoly b = testgen::random_factored(rng);
    CHECK(star(a, b) == star(b, a));
  }
}

TEST_CASE("star is associative on random triples") {
  // Observed property; nothing downstream depends on it.
  std::mt19937 rng(202);
  for (int i = 0; i < 100; ++i) {
    const FactoredPoly a = testgen::random_factored(rng);
    const FactoredPoly b = testgen::random_factored(rng);
    const FactoredPoly c = testgen::random_factored(rng);
    CHECK(star(star(a, b), c) == star(a, star(b, c)));
  }
}

TEST_CASE("power-factor law") {
  std::mt19937 rng(203);
  std::uniform_int_distribution<int> mult(1, 5);
  for (int i = 0; i < 50; ++i) {
    const Rational alpha = testgen::random_root(rng);
    const Rational beta = testgen::random_root(rng);
    const int d = mult(rng), e = mult(rng);
    CHECK(star(FactoredPoly::linear(alpha, d), FactoredPoly::linear(beta, e)) ==
          FactoredPoly::linear(alpha + beta, d + e - 1));
  }
}

TEST_CASE("lcm and gcd of factored polynomials") {
  const FactoredPoly p =
      FactoredPoly::from_factors({{Rational(1), 1}, {Rational(2), 1}});
  const FactoredPoly q = FactoredPoly::linear(2, 2);
  CHECK(lcm_factored(p, q) ==
        FactoredPoly::from_factors({{Rational(1), 1}, {Rational(2), 2}}));
  CHECK(gcd_factored(p, q) == FactoredPoly::linear(2));
  CHECK(lcm_factored(FactoredPoly::one(), FactoredPoly::linear(1)) ==
        FactoredPoly::linear(1));
  CHECK(gcd_factored(p, FactoredPoly::one()).is_one());
}

TEST_CASE("star distributes over lcm") {
  std::mt19937 rng(204);
  for (int i = 0; i < 100; ++i) {
    const FactoredPoly a = testgen::random_factored(rng);
    const FactoredPoly b = testgen::random_factored(rng);
    const FactoredPoly q = testgen::random_factored(rng);
    CHECK(star(lcm_factored(a, b), q) ==
          lcm_factored(star(a, q), star(b, q)));
  }
}

TEST_CASE("star_oracle frozen examples") {
  CHECK(star_oracle(FactoredPoly::linear(Rational(1, 2)),
                    FactoredPoly::from_factors(
                        {{Rational(1, 3), 1}, {Rational(2, 3), 1}})) ==
        FactoredPoly::from_factors({{Rational(5, 6), 1}, {Rational(7, 6), 1}}));
  CHECK(star_oracle(FactoredPoly::linear(1, 2), FactoredPoly::linear(1, 3)) ==
        FactoredPoly::linear(2, 4));
  CHECK(star_oracle(FactoredPoly::one(), FactoredPoly::linear(1)).is_one());
}

TEST_CASE("star agrees with the ideal-membership oracle") {
  // The acceptance gate runs 200 pairs; this is the fast regression slice.
  std::mt19937 rng(205);
  for (int i = 0; i < 50; ++i) {
    const FactoredPoly a = testgen::random_factored(rng);
    const FactoredPoly b = testgen::random_factored(rng);
    CHECK(star(a, b) == star_oracle(a, b));
  }
}

TEST_CASE("sum-form cofactors frozen examples") {
  const FactoredPoly bf = FactoredPoly::linear(Rational(1, 2));
  const FactoredPoly cg = FactoredPoly::from_factors(
      {{Rational(1, 3), 1}, {Rational(2, 3), 1}});
  const CofactorPair cp = cofactors_sum_form(bf, cg);
  CHECK(cp.form == CofactorPair::Form::SumForm);
  CHECK(cp.A == st(1, 0, 1) + st(0, 1, 2) + st(0, 0, Rational(3, 2)));
  CHECK(cp.B == MPoly::constant(1));

  const CofactorPair lin =
      cofactors_sum_form(bf, FactoredPoly::linear(Rational(1, 3)));
  CHECK(lin.A == MPoly::constant(1));
  CHECK(lin.B == MPoly::constant(1));

  const CofactorPair sq =
      cofactors_sum_form(FactoredPoly::linear(1, 2), FactoredPoly::linear(1, 2));
  CHECK(sq.A * FactoredPoly::linear(1, 2).expand("s") +
            sq.B * FactoredPoly::linear(1, 2).expand("t") ==
        shift_expand(FactoredPoly::linear(2, 3).expand("u")));
}

TEST_CASE("theorem-form cofactors frozen examples") {
  const FactoredPoly bf = FactoredPoly::linear(Rational(1, 2));
  const FactoredPoly cg = FactoredPoly::from_factors(
      {{Rational(1, 3), 1}, {Rational(2, 3), 1}});
  const CofactorPair cp = cofactors_theorem_form(bf, cg);
  CHECK(cp.form == CofactorPair::Form::TheoremForm);
  CHECK(cp.A == st(1, 0, 1) + st(0, 1, 1) + st(0, 0, Rational(3, 2)));
  CHECK(cp.B == MPoly::constant(1));

  const CofactorPair one = cofactors_theorem_form(FactoredPoly::one(), cg);
  CHECK(one.A == MPoly::constant(1));
  CHECK(one.B.is_zero());

  const CofactorPair lin = cofactors_theorem_form(
      bf, FactoredPoly::linear(Rational(1, 2)));
  CHECK(lin.A == MPoly::constant(1));
  CHECK(lin.B == MPoly::constant(1));
}

TEST_CASE("cofactor identities hold exactly on random pairs") {
  std::mt19937 rng(206);
  for (int i = 0; i < 100; ++i) {
    const FactoredPoly a = testgen::random_factored(rng);
    const FactoredPoly b = testgen::random_factored(rng);

    const CofactorPair sum = cofactors_sum_form(a, b);
    CHECK(sum.A * a.expand("s") + sum.B * b.expand("t") ==
          shift_expand(star(a, b).expand("u")));

    const CofactorPair thm = cofactors_theorem_form(a, b);
    CHECK(thm.A * shifted_expand(a) + thm.B * b.expand("t") ==
          star(a, b).expand("s"));
  }
}

TEST_CASE("cofactor degree bound") {
  std::mt19937 rng(207);
  for (int i = 0; i < 50; ++i) {
    FactoredPoly a, b;
    do {
      a = testgen::random_factored(rng);
      b = testgen::random_factored(rng);
    } while (a.is_one() || b.is_one());
    const CofactorPair sum = cofactors_sum_form(a, b);
    CHECK(sum.A.degree_in("s") < star(a, b).degree());
  }
}
