#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>
#include <string>

#include "bstar/certificate.hpp"
#include "bstar/errors.hpp"
#include "bstar/json_io.hpp"
#include "bstar/parse.hpp"
#include "support/random_gen.hpp"

using bstar::FactoredPoly;
using bstar::MPoly;
using bstar::Rational;
using bstar::WeylOp;

TEST_CASE("rational constants") {
  CHECK(bstar::parse_rational("3/4") == Rational(3, 4));
  CHECK(bstar::parse_rational("-2") == Rational(-2));
  CHECK(bstar::parse_rational("-(1/2 + 1/3)") == Rational(-5, 6));
  CHECK_THROWS_AS(bstar::parse_rational("x"), bstar::SyntaxError);
  CHECK_THROWS_AS(bstar::parse_rational("1/0"), bstar::SyntaxError);
}

TEST_CASE("polynomial grammar") {
  CHECK(bstar::parse_poly("x^2 + y^3") ==
        MPoly::variable("x").pow(2) + MPoly::variable("y").pow(3));
  CHECK(bstar::parse_poly("2*x*y - 1") ==
        Rational(2) * MPoly::variable("x") * MPoly::variable("y") -
            MPoly::constant(1));
  CHECK(bstar::parse_poly("0").is_zero());
  CHECK(bstar::parse_poly("(x + 1)^2") ==
        MPoly::variable("x").pow(2) + Rational(2) * MPoly::variable("x") +
            MPoly::constant(1));
  // '*' is mandatory outside factored input.
  CHECK_THROWS_AS(bstar::parse_poly("2x"), bstar::SyntaxError);
  CHECK_THROWS_AS(bstar::parse_poly("d_x"), bstar::SyntaxError);
  CHECK_THROWS_AS(bstar::parse_poly("s + 1"), bstar::SyntaxError);
  CHECK_THROWS_AS(bstar::parse_poly("x + z", {"x", "y"}),
                  bstar::UndeclaredVariable);
  CHECK(bstar::parse_poly("x*y", {"x", "y"}) ==
        MPoly::variable("x") * MPoly::variable("y"));
}

TEST_CASE("syntax errors carry positions") {
  try {
    bstar::parse_poly("(x + 1");
    FAIL("expected SyntaxError");
  } catch (const bstar::SyntaxError& e) {
    CHECK(e.position == 6);
    CHECK(std::string(e.what()).find("(at position 6)") != std::string::npos);
  }
  try {
    bstar::parse_poly("x + $");
    FAIL("expected SyntaxError");
  } catch (const bstar::SyntaxError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("exponent validation") {
  CHECK_THROWS_AS(bstar::parse_poly("x^-2"), bstar::SyntaxError);
  CHECK_THROWS_AS(bstar::parse_poly("x^1234567"), bstar::SyntaxError);
  CHECK(bstar::parse_poly("x^0") == MPoly::constant(1));
}

TEST_CASE("bivariate polynomials over the parameters") {
  CHECK(bstar::parse_bipoly("s^2 + 2*s*t + t^2") ==
        (MPoly::variable("s") + MPoly::variable("t")).pow(2));
  CHECK_THROWS_AS(bstar::parse_bipoly("x + s"), bstar::UndeclaredVariable);
}

TEST_CASE("factored-polynomial grammar") {
  const FactoredPoly cusp = FactoredPoly::from_factors(
      {{Rational(5, 6), 1}, {Rational(7, 6), 1}});
  CHECK(bstar::parse_factored("(s+5/6)*(s+7/6)") == cusp);
  // Juxtaposition is allowed here.
  CHECK(bstar::parse_factored("(s+5/6)(s+7/6)") == cusp);
  CHECK(bstar::parse_factored("(t+1/3)^2") ==
        FactoredPoly::linear(Rational(1, 3), 2));
  CHECK(bstar::parse_factored("1").is_one());
  CHECK(bstar::parse_factored("s^3") == FactoredPoly::linear(0, 3));
  CHECK(bstar::parse_factored("s + 1/2") ==
        FactoredPoly::linear(Rational(1, 2)));
  CHECK(bstar::parse_factored("(s-1)^2") == FactoredPoly::linear(-1, 2));
  CHECK(bstar::parse_factored("((s+1)(s+2))^2") ==
        FactoredPoly::from_factors({{Rational(1), 2}, {Rational(2), 2}}));

  CHECK_THROWS_AS(bstar::parse_factored("(s^2 + 1)"), bstar::NonRationalRoot);
  CHECK_THROWS_AS(bstar::parse_factored("(2*s + 1)"), bstar::NonRationalRoot);
  CHECK_THROWS_AS(bstar::parse_factored("(s+1)*(t+1)"), bstar::SyntaxError);
  CHECK_THROWS_AS(bstar::parse_factored("(x+1)"), bstar::SyntaxError);
  CHECK_THROWS_AS(bstar::parse_factored("2*(s+1)"), bstar::SyntaxError);
}

TEST_CASE("operator grammar") {
  const WeylOp X = WeylOp::from_polynomial(MPoly::variable("x"));
  const WeylOp Dx = WeylOp::derivation("x");
  const WeylOp S = WeylOp::parameter();
  CHECK(bstar::parse_operator("1/2*(x*d_x + 1)*s") ==
        (X * Dx + WeylOp::identity()) * Rational(1, 2) * S);
  // Order matters: d_x*x normal-orders to x*d_x + 1.
  CHECK(bstar::parse_operator("d_x*x") == X * Dx + WeylOp::identity());
  CHECK(bstar::parse_operator("x*d_x") == X * Dx);
  CHECK(bstar::parse_operator("d_x^2*x^2 - x^2*d_x^2 - 4*x*d_x").is_zero() ==
        false);
  CHECK(bstar::parse_operator("d_x^2*x^2 - x^2*d_x^2 - 4*x*d_x - 2").is_zero());
  // t is the euler-side parameter name.
  CHECK(bstar::parse_operator("t*y*d_y", "t") ==
        WeylOp::from_polynomial(MPoly::variable("y")) *
            WeylOp::derivation("y") * WeylOp::parameter());
  CHECK_THROWS_AS(bstar::parse_operator("t*x"), bstar::SyntaxError);
  CHECK_THROWS_AS(bstar::parse_operator("d_z", std::vector<std::string>{"x"}),
                  bstar::UndeclaredVariable);
  CHECK_THROWS_AS(bstar::parse_operator("d_s"), bstar::SyntaxError);
}

TEST_CASE("print-parse round-trips on random values") {
  std::mt19937 rng(601);
  for (int i = 0; i < 60; ++i) {
    const MPoly p = testgen::random_poly(rng, {"x", "y"});
    CHECK(bstar::parse_poly(to_string(p)) == p);

    const FactoredPoly f = testgen::random_factored(rng);
    CHECK(bstar::parse_factored(f.str()) == f);

    const WeylOp op = testgen::random_operator(rng, {"x", "y"});
    CHECK(bstar::parse_operator(op.str()) == op);
  }
}

TEST_CASE("certificate json round-trip") {
  const bstar::Certificate cf = bstar::power_certificate(2, "x");
  const bstar::Certificate h =
      compose(cf, bstar::suspension_certificate(3, "y"));

  const std::string text = bstar::certificate_to_json(h);
  const bstar::Certificate back = bstar::certificate_from_json(text);
  CHECK(back.f() == h.f());
  CHECK(back.btilde() == h.btilde());
  CHECK(back.assemble() == h.assemble());
  CHECK(verify_certificate(back).pass);
  // Serialization is stable.
  CHECK(bstar::certificate_to_json(back) == text);

  const bstar::EulerCertificate e = bstar::suspension_certificate(5, "z");
  const std::string etext = bstar::certificate_to_json(e);
  const bstar::EulerCertificate eback = bstar::euler_from_json(etext);
  CHECK(eback.g() == e.g());
  CHECK(eback.chi() == e.chi());
  CHECK(eback.q() == e.q());
  CHECK(verify_euler(eback).pass);
  CHECK(bstar::certificate_to_json(eback) == etext);
}

TEST_CASE("certificate json rejects malformed input") {
  CHECK_THROWS_AS(bstar::certificate_from_json("{broken"), bstar::SyntaxError);
  CHECK_THROWS_AS(bstar::certificate_from_json("{}"), bstar::SyntaxError);
  CHECK_THROWS_AS(
      bstar::certificate_from_json(
          R"({"schema_version": 2, "kind": "bs-certificate"})"),
      bstar::SyntaxError);
  // A bs-certificate loader refuses the euler kind.
  const std::string etext =
      bstar::certificate_to_json(bstar::suspension_certificate(2));
  CHECK_THROWS_AS(bstar::certificate_from_json(etext), bstar::SyntaxError);
}

TEST_CASE("certificate files save and load") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "bstar-test-io";
  fs::create_directories(dir);
  const std::string path = (dir / "cert.json").string();

  const bstar::Certificate h = compose(bstar::power_certificate(2, "x"),
                                       bstar::suspension_certificate(3, "y"));
  bstar::save_certificate_file(path, h);
  const bstar::AnyCertificate loaded = bstar::load_certificate_file(path);
  REQUIRE(std::holds_alternative<bstar::Certificate>(loaded));
  CHECK(verify_certificate(std::get<bstar::Certificate>(loaded)).pass);
  std::remove(path.c_str());
  CHECK_THROWS_AS(bstar::load_certificate_file(path), bstar::Error);
}
