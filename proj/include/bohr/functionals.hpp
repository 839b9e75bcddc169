#pragma once

#include "bohr/domain.hpp"
#include "bohr/series.hpp"

namespace bohr {

/// A left-hand side of one of the Bohr-type inequalities, evaluated on a
/// truncated series. The exact infinite-series value never exceeds
/// value + upper_slack; the slack covers coefficient errors, the truncated
/// tail and rounding in the finite sums.
struct FunctionalValue {
  double value = 0.0;
  double upper_slack = 0.0;
  double radius_used = 0.0;

  double upper() const noexcept { return value + upper_slack; }
};

/// sum_n |a_n| r^n
FunctionalValue majorant(const TruncatedPowerSeries& series, double r);

/// |a_0| + sum_{n>=1} (|a_n| + beta |a_n|^m / (1-gamma)^{(m-1)n}) r^n with
/// beta = beta_coefficient(m, gamma). Throws InapplicableParameter when beta < 0.
FunctionalValue improved_majorant_m(const TruncatedPowerSeries& series, double r, int m,
                                    const GammaDomain& domain);

/// Multiplicity-counted area of f(|w| < r) divided by pi: sum_{n>=1} n |a_n|^2 r^{2n}.
FunctionalValue dirichlet_area_ratio(const TruncatedPowerSeries& series, double r);

/// majorant + (8/9 - 27 lambda/64) S + lambda S^2 with S = dirichlet_area_ratio.
FunctionalValue area_improved_sum(const TruncatedPowerSeries& series, double r, double lambda,
                                  const GammaDomain& domain);

/// |f(z)| + sum_{n>=N} |a_n| r^n for |z| <= r.
FunctionalValue rogosinski_sum(const TruncatedPowerSeries& series, Complex z, double r, int N);

/// sum_{n>=0} |a_{n+1}| r^n + (1/(1+|a_1|) + r/(1-r)) sum_{n>=2} |a_n|^2 r^{2(n-1)}
/// for a series vanishing at the origin.
FunctionalValue refined_sum(const TruncatedPowerSeries& series, double r);

}  // namespace bohr
