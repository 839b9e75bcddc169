#include "doctest.h"

#include <cmath>

#include "bohr/error.hpp"
#include "bohr/harness.hpp"

using namespace bohr;

TEST_CASE("claimed radii per theorem") {
  const GammaDomain d = make_domain(0.0);
  CHECK(claimed_radius(TheoremId::classical(), d) == doctest::Approx(1.0 / 3.0));
  CHECK(claimed_radius(TheoremId::improved(2), d) == doctest::Approx(1.0 / 3.0));
  CHECK(claimed_radius(TheoremId::area(1.0), d) == doctest::Approx(1.0 / 3.0));
  CHECK(claimed_radius(TheoremId::refined(), d) == doctest::Approx(1.0 / 3.0));
  CHECK(claimed_radius(TheoremId::rogosinski(1), d) ==
        doctest::Approx(std::sqrt(5.0) - 2.0).epsilon(1e-9));
}

TEST_CASE("theorem names") {
  CHECK(to_string(TheoremTag::ImprovedM) == "improved-m");
  CHECK(parse_theorem_tag("improved") == TheoremTag::ImprovedM);
  CHECK(parse_theorem_tag("rogosinski") == TheoremTag::Rogosinski);
  CHECK_THROWS_AS(parse_theorem_tag("bogus"), Error);
  CHECK_FALSE(TheoremId::area(0.5).describe().empty());
}

TEST_CASE("preconditions") {
  try {
    check_applicable(TheoremId::improved(2), make_domain(0.75));
    FAIL("expected PreconditionViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionViolation);
  }
  CHECK_NOTHROW(check_applicable(TheoremId::improved(2), make_domain(0.5)));
  CHECK_THROWS_AS(check_applicable(TheoremId::area(3.0), make_domain(0.0)), Error);
  CHECK_THROWS_AS(check_applicable(TheoremId::rogosinski(0), make_domain(0.0)), Error);
}

TEST_CASE("radius grid") {
  const GammaDomain d = make_domain(0.25);
  const auto grid = default_r_grid(TheoremId::classical(), d);
  REQUIRE(grid.size() == 8);
  CHECK(grid.front() > 0.0);
  CHECK(grid.back() == doctest::Approx(claimed_radius(TheoremId::classical(), d)));
  for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);
}

TEST_CASE("small classical sweep has no violations") {
  const GammaDomain d = make_domain(0.1);
  const TheoremId t = TheoremId::classical();
  const auto report = verify_theorem(t, d, 10, default_r_grid(t, d, 4), 42);
  CHECK(report.samples.size() == 4 * 10 * 4);
  CHECK(report.violations == 0);
  CHECK(report.max_value_inside_radius <= 1.0 + 1e-9);
  CHECK(report.max_value_inside_radius > 0.5);
}

TEST_CASE("a radius past the claim is refused") {
  const GammaDomain d = make_domain(0.0);
  CHECK_THROWS_AS(verify_theorem(TheoremId::classical(), d, 2, {0.5}, 1), Error);
}

TEST_CASE("explicit specs beyond the radius are flagged") {
  const GammaDomain d = make_domain(0.0);
  FunctionSpec ext;
  ext.kind = FunctionKind::Extremal;
  ext.a = 0.99;
  HarnessOptions opts;
  const auto inside = verify_specs(TheoremId::classical(), d, {ext}, {0.3}, opts);
  CHECK(inside.violations == 0);
}

TEST_CASE("worker count does not change the report") {
  const GammaDomain d = make_domain(0.25);
  const TheoremId t = TheoremId::area(kAreaLambdaMax);
  HarnessOptions one, four;
  four.workers = 4;
  const auto grid = default_r_grid(t, d, 3);
  const auto a = verify_theorem(t, d, 6, grid, 5, one);
  const auto b = verify_theorem(t, d, 6, grid, 5, four);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].sample_index == b.samples[i].sample_index);
    CHECK(a.samples[i].value == b.samples[i].value);
    CHECK(a.samples[i].upper_slack == b.samples[i].upper_slack);
  }
}

TEST_CASE("sampled specs are reproducible") {
  const GammaDomain d = make_domain(0.5);
  const TheoremId t = TheoremId::refined();
  for (FunctionKind k : sweep_kinds(t)) {
    const FunctionSpec a = sample_spec(t, d, k, 3, 9);
    const FunctionSpec b = sample_spec(t, d, k, 3, 9);
    CHECK(serialize(a) == serialize(b));
  }
  for (FunctionKind k : sweep_kinds(t)) CHECK(k != FunctionKind::Constant);
}

TEST_CASE("sharpness of the classical radius") {
  const GammaDomain d = make_domain(0.0);
  CHECK(sharpness_probe(TheoremId::classical(), d, 0.99, 0.35) ==
        doctest::Approx(1.00066).epsilon(5e-5));
  CHECK(sharpness_probe(TheoremId::classical(), d, 0.999, 0.35) > 1.0);
  CHECK(sharpness_probe(TheoremId::classical(), d, 0.999, 1.0 / 3.0) <= 1.0);
  CHECK_THROWS_AS(sharpness_probe(TheoremId::classical(), make_domain(0.5), 0.4, 0.3), Error);
}

TEST_CASE("radius scan of the extremal family approaches the claim") {
  const GammaDomain d = make_domain(0.0);
  for (double a : {0.9, 0.99}) {
    const auto s = extremal_coeffs(a, d, 400);
    const double r = radius_scan(TheoremId::classical(), d, s);
    CHECK(r >= 1.0 / 3.0 - 1e-9);
    CHECK(r - 1.0 / 3.0 <= 10.0 * (1.0 - a));
    CHECK(r == doctest::Approx(1.0 / (1.0 + 2.0 * a)).epsilon(1e-8));
  }
}

TEST_CASE("figure data") {
  const auto rows = figure1_data({10, 21});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].m == 10);
  CHECK(rows[0].gamma_star == doctest::Approx(0.1083).epsilon(5e-3));
}
