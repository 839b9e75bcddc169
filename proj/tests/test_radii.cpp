#include "doctest.h"

#include <cmath>

#include "bohr/error.hpp"
#include "bohr/radii.hpp"

using namespace bohr;

TEST_CASE("classical radius") {
  CHECK(classical_radius(make_domain(0.0)).value == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
  CHECK(classical_radius(make_domain(0.5)).value == doctest::Approx(1.5 / 3.5));
  CHECK(classical_radius(make_domain(0.2)).method == RadiusMethod::ClosedForm);
}

TEST_CASE("improvement coefficient beta") {
  CHECK(beta_coefficient(2, make_domain(0.0)) == doctest::Approx(0.25));
  CHECK(beta_coefficient(2, make_domain(0.2)) == doctest::Approx(0.136));
  CHECK(beta_coefficient(3, make_domain(0.0)) == doctest::Approx(2.0 / 16.0));
  CHECK(beta_coefficient(2, make_domain(0.7)) < 0.0);
  CHECK_THROWS_AS(beta_coefficient(1, make_domain(0.0)), Error);
}

TEST_CASE("gamma_star for m = 2 against the quadratic formula") {
  const double oracle = (-3.0 + std::sqrt(17.0)) / 2.0;
  const RadiusResult r = gamma_star(2);
  CHECK(std::abs(r.value - oracle) < 1e-9);
  CHECK(r.method == RadiusMethod::BracketedRoot);
  REQUIRE(r.bracket.has_value());
  CHECK(r.bracket->first <= oracle);
  CHECK(r.bracket->second >= oracle);
  CHECK(std::abs(gamma_star_polynomial(2, r.value)) < 1e-8);
}

TEST_CASE("gamma_star decreases in m") {
  double prev = 1.0;
  for (int m = 2; m <= 40; ++m) {
    const double g = gamma_star(m).value;
    CHECK(g < prev);
    CHECK(g > 0.0);
    prev = g;
  }
}

TEST_CASE("Bohr-Rogosinski roots at gamma = 0") {
  // lemma form at N = 1: rho^2 - 4 rho + 1 = 0
  const double lemma = 2.0 - std::sqrt(3.0);
  // theorem form at N = 1: rho^2 + 4 rho - 1 = 0
  const double theorem = std::sqrt(5.0) - 2.0;
  const GammaDomain d = make_domain(0.0);
  CHECK(std::abs(rho_N(1, d, RogosinskiVariant::LemmaForm).value - lemma) < 1e-9);
  CHECK(std::abs(rho_N(1, d, RogosinskiVariant::TheoremForm).value - theorem) < 1e-9);
  CHECK(rogosinski_equation(1, 0.0, theorem, RogosinskiVariant::TheoremForm) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("Bohr-Rogosinski radius scales by 1/(1-gamma)") {
  const GammaDomain d = make_domain(0.3);
  for (int N : {1, 2, 5}) {
    const double rho = rho_N(N, d).value;
    CHECK(rho > 0.0);
    CHECK(rho < 0.7);
    CHECK(rogosinski_radius(N, d).value == doctest::Approx(rho / 0.7));
  }
  CHECK(rho_N(2, make_domain(0.0)).value > rho_N(1, make_domain(0.0)).value);
}

TEST_CASE("variant names") {
  CHECK(std::string(to_string(RogosinskiVariant::LemmaForm)) == "lemma");
  CHECK(parse_variant("theorem") == RogosinskiVariant::TheoremForm);
  CHECK_THROWS_AS(parse_variant("other"), Error);
}

TEST_CASE("area weight coefficient") {
  CHECK(area_lambda_coeff(0.0) == doctest::Approx(8.0 / 9.0));
  CHECK(area_lambda_coeff(2.0) == doctest::Approx(13.0 / 288.0));
  CHECK(area_lambda_coeff(kAreaLambdaMax) == doctest::Approx(0.0).epsilon(1e-15));
  try {
    area_lambda_coeff(2.2);
    FAIL("expected InapplicableParameter");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InapplicableParameter);
  }
  CHECK_THROWS_AS(area_lambda_coeff(-0.01), Error);
}

TEST_CASE("bisection") {
  auto f = [](double x) { return x * x - 2.0; };
  CHECK(std::abs(find_root_bracketed(f, 0.0, 2.0, 1e-12) - std::sqrt(2.0)) < 1e-12);
  const RadiusResult r = bracket_root(f, 0.0, 2.0, 1e-10);
  REQUIRE(r.bracket.has_value());
  CHECK(r.bracket->second - r.bracket->first <= 2e-10);
  CHECK(r.tolerance == 1e-10);
  try {
    find_root_bracketed(f, 2.0, 3.0, 1e-10);
    FAIL("expected RootNotFound");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RootNotFound);
  }
  CHECK_THROWS_AS(find_root_bracketed([](double) { return std::nan(""); }, 0.0, 1.0, 1e-10),
                  Error);
}
