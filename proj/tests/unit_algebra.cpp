#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bstar/errors.hpp"
#include "bstar/factored.hpp"
#include "bstar/mpoly.hpp"
#include "bstar/rational.hpp"
#include "support/random_gen.hpp"

using bstar::FactoredPoly;
using bstar::MPoly;
using bstar::Rational;

namespace {

MPoly st(int i, int j, const Rational& c) {
  return MPoly::monomial({"s", "t"}, {i, j}, c);
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, 6).str() == "-1/2");
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational::from_string("-3/4") == Rational(-3, 4));
  CHECK(Rational(7).to_long() == 7);
  CHECK_THROWS_AS(Rational(1, 0), bstar::Error);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), bstar::Error);
}

TEST_CASE("polynomial arithmetic basics") {
  const MPoly x = MPoly::variable("x");
  const MPoly y = MPoly::variable("y");
  CHECK(x.pow(2) * y.pow(3) == MPoly::monomial({"x", "y"}, {2, 3}, 1));
  CHECK((x + y) + (-x) == y);
  CHECK((x.pow(2) + y.pow(3)) * MPoly::constant(1) == x.pow(2) + y.pow(3));
  // Equality is semantic: a vanished variable column does not matter.
  CHECK(x + MPoly::monomial({"x", "y"}, {0, 1}, 0) == x);
  CHECK((x - x).is_zero());
  CHECK(MPoly().total_degree() == -1);
}

TEST_CASE("partial derivatives") {
  const MPoly x = MPoly::variable("x");
  const MPoly y = MPoly::variable("y");
  CHECK(partial(x.pow(2), "x") == Rational(2) * x);
  CHECK(partial(x.pow(2) + y.pow(3), "y") == Rational(3) * y.pow(2));
  CHECK(partial(x.pow(2), "z").is_zero());
}

TEST_CASE("partial obeys the Leibniz rule") {
  std::mt19937 rng(101);
  const std::vector<std::string> vars{"x", "y"};
  for (int i = 0; i < 100; ++i) {
    const MPoly p = testgen::random_poly(rng, vars);
    const MPoly q = testgen::random_poly(rng, vars);
    CHECK(partial(p * q, "x") == partial(p, "x") * q + p * partial(q, "x"));
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(102);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 0; i < 100; ++i) {
    const MPoly a = testgen::random_poly(rng, vars);
    const MPoly b = testgen::random_poly(rng, vars);
    const MPoly c = testgen::random_poly(rng, vars);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("shift_expand frozen values") {
  const MPoly u = MPoly::variable("u");
  CHECK(shift_expand(u + MPoly::constant(Rational(5, 6))) ==
        st(1, 0, 1) + st(0, 1, 1) + st(0, 0, Rational(5, 6)));
  const FactoredPoly cusp = FactoredPoly::from_factors(
      {{Rational(5, 6), 1}, {Rational(7, 6), 1}});
  CHECK(shift_expand(cusp.expand("u")) ==
        st(2, 0, 1) + st(1, 1, 2) + st(0, 2, 1) + st(1, 0, 2) + st(0, 1, 2) +
            st(0, 0, Rational(35, 36)));
  CHECK(shift_expand(MPoly::constant(1)) == MPoly::constant(1));
}

TEST_CASE("shift_expand agrees with evaluation at t = 0") {
  std::mt19937 rng(103);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (int i = 0; i < 50; ++i) {
    const MPoly p = testgen::random_poly(rng, {"u"});
    const Rational u0(num(rng), den(rng));
    const MPoly at = substitute(substitute(shift_expand(p), "s",
                                           MPoly::constant(u0)),
                                "t", MPoly());
    CHECK(at == MPoly::constant(evaluate_univariate(p, u0)));
  }
}

TEST_CASE("divide_in_var frozen values") {
  const MPoly half = FactoredPoly::linear(Rational(1, 2)).expand("s");
  const MPoly P = st(2, 0, 1) + st(1, 1, 2) + st(0, 2, 1) + st(1, 0, 2) +
                  st(0, 1, 2) + st(0, 0, Rational(35, 36));
  const auto [q, r] = divide_in_var(P, half, "s");
  CHECK(q == st(1, 0, 1) + st(0, 1, 2) + st(0, 0, Rational(3, 2)));
  CHECK(r == st(0, 2, 1) + st(0, 1, 1) + st(0, 0, Rational(2, 9)));

  const auto [q2, r2] =
      divide_in_var(st(1, 0, 1) + st(0, 1, 1) + st(0, 0, Rational(5, 6)), half, "s");
  CHECK(q2 == MPoly::constant(1));
  CHECK(r2 == st(0, 1, 1) + st(0, 0, Rational(1, 3)));

  const auto [q3, r3] =
      divide_in_var(st(0, 2, 1), FactoredPoly::linear(1).expand("s"), "s");
  CHECK(q3.is_zero());
  CHECK(r3 == st(0, 2, 1));
}

TEST_CASE("divide_in_var round-trip and degree bound") {
  std::mt19937 rng(104);
  for (int i = 0; i < 100; ++i) {
    const MPoly P = testgen::random_poly(rng, {"s", "t"}, 5, 4);
    FactoredPoly a;
    do {
      a = testgen::random_factored(rng);
    } while (a.is_one());
    const MPoly as = a.expand("s");
    const auto [q, r] = divide_in_var(P, as, "s");
    CHECK(q * as + r == P);
    CHECK(r.degree_in("s") < a.degree());
  }
}

TEST_CASE("exact division") {
  const MPoly ct = st(0, 2, 1) + st(0, 1, 1) + st(0, 0, Rational(2, 9));
  CHECK(exact_div(ct, ct) == MPoly::constant(1));
  CHECK(exact_div(ct, FactoredPoly::linear(Rational(1, 3)).expand("t")) ==
        FactoredPoly::linear(Rational(2, 3)).expand("t"));
  const MPoly t = MPoly::variable("t");
  CHECK_THROWS_AS(exact_div(t, t + MPoly::constant(1)), bstar::NonExact);
}

TEST_CASE("coefficients_in splits along a variable") {
  const MPoly P = st(2, 0, 1) + st(1, 1, 3) + st(0, 0, Rational(1, 2));
  const auto parts = coefficients_in(P, "s");
  REQUIRE(parts.size() == 3);
  CHECK(parts.at(2) == MPoly::constant(1));
  CHECK(parts.at(1) == st(0, 1, 3));
  CHECK(parts.at(0) == MPoly::constant(Rational(1, 2)));
}

TEST_CASE("factored polynomials expand, evaluate, and shift") {
  FactoredPoly p;
  p.insert(Rational(1, 2), 2);
  p.insert(Rational(1, 2), -1);
  CHECK(p == FactoredPoly::linear(Rational(1, 2)));
  CHECK(p.expand("s") == MPoly::variable("s") + MPoly::constant(Rational(1, 2)));
  CHECK(p.evaluate(Rational(1, 2)) == Rational(1));
  CHECK(p.shifted(Rational(1, 3)) == FactoredPoly::linear(Rational(5, 6)));
  CHECK(FactoredPoly::one().expand("s") == MPoly::constant(1));
  CHECK(FactoredPoly::one().degree() == 0);
  // Multiplication adds multiplicities of shared roots.
  const FactoredPoly q = FactoredPoly::linear(Rational(1, 2)) *
                         FactoredPoly::linear(Rational(1, 2));
  CHECK(q.multiplicity(Rational(1, 2)) == 2);
  CHECK(q.degree() == 2);
}
