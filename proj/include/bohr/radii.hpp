#pragma once

#include <functional>

#include "bohr/domain.hpp"

namespace bohr {

inline constexpr double kDefaultRootTol = 1e-10;
inline constexpr double kAreaLambdaMax = 512.0 / 243.0;

/// The two printed forms of the Bohr-Rogosinski root equation. They differ
/// only in the leading factor: 2(1+gamma) rho^N versus 2(1+rho) rho^N.
enum class RogosinskiVariant { LemmaForm, TheoremForm };

const char* to_string(RogosinskiVariant variant);
RogosinskiVariant parse_variant(const char* text);

/// (1 + gamma) / (3 + gamma).
RadiusResult classical_radius(const GammaDomain& domain);

/// ((1-gamma)^m (3+gamma) - (1-gamma^2)) / (8(m-1)); negative past gamma_*(m).
double beta_coefficient(int m, const GammaDomain& domain);

/// Q(gamma) = (1-gamma)^m (3+gamma) - (1-gamma^2), whose smallest root in
/// (0,1) is gamma_*(m).
double gamma_star_polynomial(int m, double gamma);

/// Smallest root of Q in (0,1): scan in steps of 1/1024 for the first sign
/// change, then bisect.
RadiusResult gamma_star(int m, double tol = kDefaultRootTol);

/// F_N(gamma, rho) = c rho^N + (1+gamma)(1-gamma)^{N-1} (rho-1)(1-gamma-rho),
/// c = 2(1+gamma) for the lemma form and 2(1+rho) for the theorem form.
double rogosinski_equation(int N, double gamma, double rho, RogosinskiVariant variant);

/// Root of F_N in (0, 1 - gamma).
RadiusResult rho_N(int N, const GammaDomain& domain,
                   RogosinskiVariant variant = RogosinskiVariant::TheoremForm,
                   double tol = kDefaultRootTol);

/// rho_N / (1 - gamma).
RadiusResult rogosinski_radius(int N, const GammaDomain& domain,
                               RogosinskiVariant variant = RogosinskiVariant::TheoremForm,
                               double tol = kDefaultRootTol);

/// 8/9 - 27 lambda / 64 for lambda in [0, 512/243].
double area_lambda_coeff(double lambda);

/// Pure bisection; the midpoint is the arithmetic mean of the bracket.
/// Returns x with |x - x*| <= tol for a root x* in [lo, hi].
double find_root_bracketed(const std::function<double(double)>& f, double lo, double hi,
                           double tol);

/// Same as find_root_bracketed, also reporting the final bracket.
RadiusResult bracket_root(const std::function<double(double)>& f, double lo, double hi,
                          double tol);

}  // namespace bohr
