#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "bohr/domain.hpp"

namespace bohr {

using Evaluator = std::function<Complex(Complex)>;

/// Taylor coefficients a_0..a_K at the origin together with a certified
/// envelope for everything that was not stored:
///
///   |a_n - coeffs[n]| <= coeff_error          for n <= K
///   |a_n|             <= tail_constant / tail_radius^n   for n > K
///
/// tail_radius is the radius of the circle on which tail_constant bounds the
/// function (the Cauchy sampling radius), or the reciprocal of the exact
/// geometric ratio for closed-form families.
struct TruncatedPowerSeries {
  std::vector<Complex> coeffs;
  double tail_constant = 0.0;
  double tail_radius = 1.0;
  double coeff_error = 0.0;
  // Set when the series is known to come from a member of B(Omega_gamma), so
  // that |a_n| <= (1 - |a_0|^2) / (1 + gamma) may be used for the tail.
  std::optional<double> member_gamma;

  std::size_t order() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  double abs_lower(std::size_t n) const;
  double abs_upper(std::size_t n) const;

  // Largest radius at which the functionals may be evaluated.
  double max_radius() const noexcept;
};

struct CauchyOptions {
  std::size_t order = 64;
  double sample_radius = 0.995;
  std::size_t samples = 8192;
};

/// Coefficients of f on the circle |w| = sample_radius by a uniform discrete
/// Cauchy transform. f must be analytic on Omega_gamma with |f| <= 1, so that
/// |a_n| <= 1 for every n; the aliasing error is then at most
/// rho^N / (1 - rho^N), which is recorded in coeff_error together with a
/// rounding allowance for the transform.
TruncatedPowerSeries coeffs_via_cauchy(const Evaluator& f, const GammaDomain& domain,
                                       const CauchyOptions& options = {});

/// Series of f(w) = h((1 - gamma) w + gamma) for h bounded by 1 on the unit disk.
TruncatedPowerSeries compose_affine(const Evaluator& h, const GammaDomain& domain,
                                    const CauchyOptions& options = {});

struct TailBound {
  double value = 0.0;
  double valid_up_to_r = 0.0;
};

/// Bound on sum_{n>K} |a_n| r^n: the smaller of the coefficient-bound branch
/// (1 - a0_abs^2)/(1 + gamma) * r^{K+1}/(1 - r) and the envelope branch
/// M (r/rho)^{K+1} / (1 - r/rho). The envelope branch is skipped when r >= rho.
TailBound majorant_tail_bound(const TruncatedPowerSeries& series, double r, double gamma,
                              double a0_abs);

/// Bound on sum_{n>K} n^w |a_n|^p x^n with w = 1 when weighted, else 0.
///
/// Uses the envelope and, when member_gamma is set, the coefficient bound
/// with a conservative lower estimate of |a_0|. Returns +inf when neither
/// branch converges.
double power_tail_bound(const TruncatedPowerSeries& series, double x, int power, bool weighted);

/// sum_{n>=first} c q^n (times n when weighted) for 0 <= q < 1, +inf otherwise.
double geometric_tail(double c, double q, std::size_t first, bool weighted = false);

struct Evaluation {
  Complex value;
  double error = 0.0;
};

Evaluation eval(const TruncatedPowerSeries& series, Complex z);

struct CoeffBoundCheck {
  bool holds = true;
  std::size_t worst_index = 0;
  // max over n of |a_n| - bound (negative when the bound holds with room).
  double worst_excess = 0.0;
};

/// Checks |a_n| <= (1 - |a_0|^2)/(1 + gamma) for 1 <= n <= K up to the
/// series' coefficient error budget.
CoeffBoundCheck check_coeff_bound(const TruncatedPowerSeries& series, double gamma);

// Relative allowance for rounding in the finite sums of this library.
inline constexpr double kRoundingAllowance = 1.0e-14;

}  // namespace bohr
