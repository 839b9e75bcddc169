#include "doctest.h"

#include <cmath>

#include "bohr/error.hpp"
#include "bohr/generators.hpp"
#include "bohr/rng.hpp"

using namespace bohr;

TEST_CASE("seed derivation and sample stream are deterministic") {
  CHECK(derive_seed(42, 1, 7) == derive_seed(42, 1, 7));
  CHECK(derive_seed(42, 1, 7) != derive_seed(42, 1, 8));
  CHECK(derive_seed(42, 1, 7) != derive_seed(42, 2, 7));
  SampleRng a(99), b(99);
  for (int i = 0; i < 100; ++i) {
    const double u = a.uniform();
    CHECK(u == b.uniform());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("Schur evaluation") {
  // one parameter: the constant p_0
  CHECK(schur_eval({Complex(0.3, 0.1)}, Complex(0.7)) == Complex(0.3, 0.1));
  // p_0 = 0, p_1 = 1 gives z
  CHECK(std::abs(schur_eval({Complex(0.0), Complex(1.0)}, Complex(0.4, 0.2)) -
                 Complex(0.4, 0.2)) < 1e-15);
  const auto spec = random_schur_spec(3, 6);
  for (int k = 0; k < 16; ++k) {
    const Complex z = std::polar(0.999, 0.4 * k);
    CHECK(std::abs(schur_eval(spec.parameters, z)) <= 1.0 + 1e-12);
  }
}

TEST_CASE("Blaschke products are unimodular on the circle") {
  const auto spec = random_blaschke_spec(5, 4);
  REQUIRE(spec.parameters.size() == 4);
  for (const Complex& z : spec.parameters) CHECK(std::abs(z) <= 0.95);
  for (int k = 0; k < 16; ++k) {
    const Complex z = std::polar(1.0, 0.4 * k);
    CHECK(std::abs(blaschke_eval(spec.parameters, spec.rotation, z)) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(std::abs(blaschke_eval(spec.parameters, spec.rotation, spec.parameters[2])) < 1e-15);
}

TEST_CASE("extremal family coefficients") {
  const GammaDomain d = make_domain(0.3);
  const double a = 0.8;
  const auto s = extremal_coeffs(a, d, 40);
  const double c0 = (a - 0.3) / (1.0 - a * 0.3);
  const double B = a * 0.7 / (1.0 - a * 0.3);
  CHECK(s.coeffs[0].real() == doctest::Approx(c0));
  CHECK(s.coeffs[3].real() ==
        doctest::Approx(-(1.0 - a * a) / (a * (1.0 - a * 0.3)) * B * B * B));
  CHECK(s.tail_radius == doctest::Approx(1.0 / B));
  REQUIRE(s.member_gamma.has_value());

  const auto sampled = compose_affine(disk_function(FunctionSpec{FunctionKind::Extremal,
                                                                 {}, {}, {}, {1.0, 0.0}, a}),
                                      d);
  for (std::size_t n = 0; n <= 40; ++n) CHECK(std::abs(sampled.coeffs[n] - s.coeffs[n]) < 1e-10);

  const auto refined = refined_extremal_coeffs(a, d, 40);
  CHECK(refined.coeffs[0] == Complex(0.0));
  CHECK(refined.coeffs[1] == s.coeffs[0]);
  CHECK(refined.coeffs[5] == s.coeffs[4]);
  CHECK_FALSE(refined.member_gamma.has_value());
}

TEST_CASE("closed-form majorant of the extremal family") {
  const GammaDomain d = make_domain(0.0);
  // 0.99 + (0.0199/0.99) * 0.3465/0.6535
  CHECK(extremal_majorant_closed_form(0.99, d, 0.35) ==
        doctest::Approx(0.99 + 0.0199 / 0.99 * 0.3465 / 0.6535).epsilon(1e-14));
  CHECK_THROWS_AS(extremal_majorant_closed_form(0.99, d, 1.02), Error);
}

TEST_CASE("zero pinning") {
  const GammaDomain d = make_domain(0.2);
  FunctionSpec spec = random_schur_spec(11, 4);
  const auto s = zero_pinned_member(spec, d);
  CHECK(std::abs(s.coeffs[0]) < 1e-10);
  spec.zero_pinned = true;
  const auto r = realize(spec, d);
  CHECK(std::abs(r.coeffs[3] - s.coeffs[3]) < 1e-14);

  FunctionSpec unimodular;
  unimodular.constant = std::polar(1.0, 0.3);
  const auto z = zero_pinned_member(unimodular, d);
  for (const Complex& c : z.coeffs) CHECK(c == Complex(0.0));
}

TEST_CASE("realize uses closed forms for constants") {
  FunctionSpec c;
  c.constant = Complex(0.6, -0.8);
  const auto s = realize(c, make_domain(0.5));
  CHECK(s.coeffs[0] == Complex(0.6, -0.8));
  CHECK(s.coeff_error == 0.0);
  CHECK(s.tail_constant == 0.0);
}

TEST_CASE("spec validation") {
  const GammaDomain d = make_domain(0.1);
  FunctionSpec c;
  c.constant = Complex(1.1);
  CHECK_THROWS_AS(validate(c, d), Error);
  FunctionSpec e;
  e.kind = FunctionKind::Extremal;
  e.a = 1.0;
  CHECK_THROWS_AS(validate(e, d), Error);
  e.a = 0.5;
  CHECK_NOTHROW(validate(e, d));
  FunctionSpec b = random_blaschke_spec(1, 2);
  b.parameters[0] = Complex(1.0);
  CHECK_THROWS_AS(validate(b, d), Error);
}

TEST_CASE("serialization round trip") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    FunctionSpec spec = seed % 2 ? random_schur_spec(seed, seed % 7) : random_blaschke_spec(seed, 1 + seed % 5);
    spec.zero_pinned = seed % 3 == 0;
    const std::string text = serialize(spec);
    const FunctionSpec back = parse_function_spec(text);
    CHECK(back.kind == spec.kind);
    CHECK(back.seed == spec.seed);
    CHECK(back.zero_pinned == spec.zero_pinned);
    CHECK(back.rotation == spec.rotation);
    CHECK(back.parameters == spec.parameters);
    CHECK(serialize(back) == text);
  }
  FunctionSpec ext;
  ext.kind = FunctionKind::Extremal;
  ext.a = 0.1 + 0.2;
  CHECK(parse_function_spec(serialize(ext)).a == ext.a);
  CHECK_THROWS_AS(parse_function_spec("kind=unknown\n"), Error);
  CHECK(parse_function_kind("refined-extremal") == FunctionKind::RefinedExtremal);
}

TEST_CASE("random members are deterministic") {
  const GammaDomain d = make_domain(0.4);
  const auto a = random_blaschke_member(17, 3, d);
  const auto b = random_blaschke_member(17, 3, d);
  CHECK(a.series.coeffs == b.series.coeffs);
  CHECK(serialize(a.spec) == serialize(b.spec));
  const auto c = random_schur_member(17, 3, d);
  CHECK(check_coeff_bound(c.series, 0.4).holds);
}
