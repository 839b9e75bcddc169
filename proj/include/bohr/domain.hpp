#pragma once

#include <complex>
#include <optional>
#include <string_view>
#include <utility>

namespace bohr {

using Complex = std::complex<double>;

/// The disk Omega_gamma = { z : |z + gamma/(1-gamma)| < 1/(1-gamma) }.
///
/// It always contains the unit disk and touches it at z = 1. Instances can
/// only be obtained through make_domain(), which is the single place where
/// the range 0 <= gamma < 1 is enforced.
class GammaDomain {
 public:
  double gamma() const noexcept { return gamma_; }
  double center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }

  bool contains(Complex z) const noexcept { return std::abs(z - center_) < radius_; }

  friend GammaDomain make_domain(double gamma);

 private:
  explicit GammaDomain(double gamma)
      : gamma_(gamma), center_(-gamma / (1.0 - gamma)), radius_(1.0 / (1.0 - gamma)) {}

  double gamma_;
  double center_;
  double radius_;
};

/// Throws Error(DomainParameter) unless gamma is finite and in [0, 1).
GammaDomain make_domain(double gamma);

inline bool contains(const GammaDomain& domain, Complex z) noexcept {
  return domain.contains(z);
}

enum class RadiusMethod { ClosedForm, BracketedRoot };

std::string_view to_string(RadiusMethod method);

struct RadiusResult {
  double value = 0.0;
  RadiusMethod method = RadiusMethod::ClosedForm;
  std::optional<std::pair<double, double>> bracket;
  double tolerance = 0.0;
};

}  // namespace bohr
