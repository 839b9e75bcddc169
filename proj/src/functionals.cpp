#include "bohr/functionals.hpp"

#include <cmath>
#include <string>

#include "bohr/error.hpp"
#include "bohr/radii.hpp"

namespace bohr {

namespace {

void require_radius(const TruncatedPowerSeries& series, double r) {
  if (!(r >= 0.0 && r < series.max_radius())) {
    throw Error(ErrorKind::InvalidRadius,
                "radius " + std::to_string(r) + " outside [0, " +
                    std::to_string(series.max_radius()) + ")");
  }
}

FunctionalValue finish(double value, double upper, double tail, double r) {
  const double slack = (upper - value) + tail + kRoundingAllowance * upper;
  return {value, slack, r};
}

}  // namespace

FunctionalValue majorant(const TruncatedPowerSeries& series, double r) {
  require_radius(series, r);
  double value = 0.0;
  double upper = 0.0;
  double power = 1.0;
  for (std::size_t n = 0; n < series.coeffs.size(); ++n) {
    value += std::abs(series.coeffs[n]) * power;
    upper += series.abs_upper(n) * power;
    power *= r;
  }
  return finish(value, upper, power_tail_bound(series, r, 1, false), r);
}

FunctionalValue improved_majorant_m(const TruncatedPowerSeries& series, double r, int m,
                                    const GammaDomain& domain) {
  require_radius(series, r);
  const double beta = beta_coefficient(m, domain);
  if (beta < 0.0) {
    throw Error(ErrorKind::InapplicableParameter,
                "beta < 0: gamma lies beyond gamma_*(" + std::to_string(m) + ")");
  }
  // |a_n|^m (r / (1-gamma)^{m-1})^n = (|a_n| x^{n/m})^m keeps the terms finite
  // when x > 1 and |a_n| is tiny.
  const double x = r / std::pow(1.0 - domain.gamma(), m - 1);
  FunctionalValue base = majorant(series, r);
  double extra = 0.0;
  double extra_upper = 0.0;
  for (std::size_t n = 1; n < series.coeffs.size(); ++n) {
    const double weight = std::pow(x, static_cast<double>(n) / m);
    extra += std::pow(std::abs(series.coeffs[n]) * weight, m);
    extra_upper += std::pow(series.abs_upper(n) * weight, m);
  }
  const double tail = beta * power_tail_bound(series, x, m, false);
  const double value = base.value + beta * extra;
  const double upper = base.upper() + beta * extra_upper;
  return finish(value, upper, tail, r);
}

FunctionalValue dirichlet_area_ratio(const TruncatedPowerSeries& series, double r) {
  require_radius(series, r);
  const double r2 = r * r;
  double value = 0.0;
  double upper = 0.0;
  double power = r2;
  for (std::size_t n = 1; n < series.coeffs.size(); ++n) {
    const double a = std::abs(series.coeffs[n]);
    const double au = series.abs_upper(n);
    value += static_cast<double>(n) * a * a * power;
    upper += static_cast<double>(n) * au * au * power;
    power *= r2;
  }
  return finish(value, upper, power_tail_bound(series, r2, 2, true), r);
}

FunctionalValue area_improved_sum(const TruncatedPowerSeries& series, double r, double lambda,
                                  const GammaDomain& domain) {
  (void)domain;
  const double k = area_lambda_coeff(lambda);
  const FunctionalValue m = majorant(series, r);
  const FunctionalValue s = dirichlet_area_ratio(series, r);
  const double value = m.value + k * s.value + lambda * s.value * s.value;
  const double s_up = s.upper();
  const double upper = m.upper() + k * s_up + lambda * s_up * s_up;
  return finish(value, upper, 0.0, r);
}

FunctionalValue rogosinski_sum(const TruncatedPowerSeries& series, Complex z, double r, int N) {
  require_radius(series, r);
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "N must be at least 1");
  if (std::abs(z) > r * (1.0 + 1e-12)) {
    throw Error(ErrorKind::InvalidRadius, "evaluation point outside the disk of radius r");
  }
  const Evaluation at = eval(series, z);
  double value = std::abs(at.value);
  double upper = value + at.error;
  double power = std::pow(r, N);
  for (std::size_t n = static_cast<std::size_t>(N); n < series.coeffs.size(); ++n) {
    value += std::abs(series.coeffs[n]) * power;
    upper += series.abs_upper(n) * power;
    power *= r;
  }
  // The tail bound starts at K+1; coefficients between K+1 and N-1 only add
  // to it, so it stays valid for N > K+1.
  return finish(value, upper, power_tail_bound(series, r, 1, false), r);
}

FunctionalValue refined_sum(const TruncatedPowerSeries& series, double r) {
  require_radius(series, r);
  if (!series.coeffs.empty() &&
      std::abs(series.coeffs[0]) > series.coeff_error + kRoundingAllowance) {
    throw Error(ErrorKind::NonzeroConstantTerm, "refined sum needs f(0) = 0");
  }
  const std::size_t size = series.coeffs.size();
  double first = 0.0;
  double first_upper = 0.0;
  double power = 1.0;
  for (std::size_t n = 1; n < size; ++n) {
    first += std::abs(series.coeffs[n]) * power;
    first_upper += series.abs_upper(n) * power;
    power *= r;
  }
  const double r2 = r * r;
  double second = 0.0;
  double second_upper = 0.0;
  power = r2;
  for (std::size_t n = 2; n < size; ++n) {
    const double a = std::abs(series.coeffs[n]);
    const double au = series.abs_upper(n);
    second += a * a * power;
    second_upper += au * au * power;
    power *= r2;
  }
  const double a1 = size > 1 ? std::abs(series.coeffs[1]) : 0.0;
  const double weight = 1.0 / (1.0 + a1) + r / (1.0 - r);
  const double weight_upper = 1.0 / (1.0 + series.abs_lower(1)) + r / (1.0 - r);

  double tail_first = 0.0;
  double tail_second = 0.0;
  if (r > 0.0) {
    tail_first = power_tail_bound(series, r, 1, false) / r;
    tail_second = power_tail_bound(series, r2, 2, false) / r2;
  }
  const double value = first + weight * second;
  const double upper = first_upper + weight_upper * second_upper;
  return finish(value, upper, tail_first + weight_upper * tail_second, r);
}

}  // namespace bohr
