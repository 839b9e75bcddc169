#include "bohr/radii.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <string>

#include "bohr/error.hpp"

namespace bohr {

namespace {

double checked(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::NonFinite, std::string("non-finite value in ") + what);
  }
  return value;
}

}  // namespace

const char* to_string(RogosinskiVariant variant) {
  return variant == RogosinskiVariant::LemmaForm ? "lemma" : "theorem";
}

RogosinskiVariant parse_variant(const char* text) {
  if (std::strcmp(text, "lemma") == 0 || std::strcmp(text, "lemma-form") == 0) {
    return RogosinskiVariant::LemmaForm;
  }
  if (std::strcmp(text, "theorem") == 0 || std::strcmp(text, "theorem-form") == 0) {
    return RogosinskiVariant::TheoremForm;
  }
  throw Error(ErrorKind::Usage, std::string("unknown variant '") + text + "'");
}

RadiusResult classical_radius(const GammaDomain& domain) {
  const double g = domain.gamma();
  return {(1.0 + g) / (3.0 + g), RadiusMethod::ClosedForm, std::nullopt,
          std::numeric_limits<double>::epsilon()};
}

double gamma_star_polynomial(int m, double gamma) {
  return std::pow(1.0 - gamma, m) * (3.0 + gamma) - (1.0 - gamma * gamma);
}

double beta_coefficient(int m, const GammaDomain& domain) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "beta needs m >= 2");
  return gamma_star_polynomial(m, domain.gamma()) / (8.0 * (m - 1));
}

RadiusResult gamma_star(int m, double tol) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "gamma_star needs m >= 2");
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  auto q = [m](double g) { return gamma_star_polynomial(m, g); };
  constexpr int kSteps = 1024;
  double lo = 0.0;
  double q_lo = checked(q(lo), "gamma_star scan");
  for (int i = 1; i < kSteps; ++i) {
    const double hi = static_cast<double>(i) / kSteps;
    const double q_hi = checked(q(hi), "gamma_star scan");
    if (q_hi == 0.0) {
      return {hi, RadiusMethod::BracketedRoot, std::pair{hi, hi}, tol};
    }
    if ((q_lo > 0.0) != (q_hi > 0.0)) return bracket_root(q, lo, hi, tol);
    lo = hi;
    q_lo = q_hi;
  }
  throw Error(ErrorKind::RootNotFound,
              "no sign change of Q in [0,1) for m = " + std::to_string(m));
}

double rogosinski_equation(int N, double gamma, double rho, RogosinskiVariant variant) {
  const double lead = variant == RogosinskiVariant::LemmaForm ? 2.0 * (1.0 + gamma)
                                                              : 2.0 * (1.0 + rho);
  const double scale = (1.0 + gamma) * std::pow(1.0 - gamma, N - 1);
  return lead * std::pow(rho, N) + scale * (rho - 1.0) * (1.0 - gamma - rho);
}

RadiusResult rho_N(int N, const GammaDomain& domain, RogosinskiVariant variant, double tol) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "N must be at least 1");
  const double g = domain.gamma();
  auto f = [=](double rho) { return rogosinski_equation(N, g, rho, variant); };
  return bracket_root(f, 0.0, 1.0 - g, tol);
}

RadiusResult rogosinski_radius(int N, const GammaDomain& domain, RogosinskiVariant variant,
                               double tol) {
  RadiusResult root = rho_N(N, domain, variant, tol);
  const double scale = 1.0 / (1.0 - domain.gamma());
  root.value *= scale;
  if (root.bracket) {
    root.bracket->first *= scale;
    root.bracket->second *= scale;
  }
  root.tolerance *= scale;
  return root;
}

double area_lambda_coeff(double lambda) {
  if (!(lambda >= 0.0 && lambda <= kAreaLambdaMax)) {
    throw Error(ErrorKind::InapplicableParameter, "lambda must lie in [0, 512/243]");
  }
  return 8.0 / 9.0 - 27.0 * lambda / 64.0;
}

RadiusResult bracket_root(const std::function<double(double)>& f, double lo, double hi,
                          double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  double f_lo = checked(f(lo), "root bracket");
  const double f_hi = checked(f(hi), "root bracket");
  if (f_lo == 0.0) return {lo, RadiusMethod::BracketedRoot, std::pair{lo, lo}, tol};
  if (f_hi == 0.0) return {hi, RadiusMethod::BracketedRoot, std::pair{hi, hi}, tol};
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw Error(ErrorKind::RootNotFound, "bracket endpoints do not straddle a root");
  }
  while (hi - lo > 2.0 * tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket is down to adjacent doubles
    const double f_mid = checked(f(mid), "bisection");
    if (f_mid == 0.0) return {mid, RadiusMethod::BracketedRoot, std::pair{mid, mid}, tol};
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return {0.5 * (lo + hi), RadiusMethod::BracketedRoot, std::pair{lo, hi}, tol};
}

double find_root_bracketed(const std::function<double(double)>& f, double lo, double hi,
                           double tol) {
  return bracket_root(f, lo, hi, tol).value;
}

}  // namespace bohr
