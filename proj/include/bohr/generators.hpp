#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bohr/domain.hpp"
#include "bohr/series.hpp"

namespace bohr {

enum class FunctionKind { Constant, Schur, Blaschke, Extremal, RefinedExtremal };

std::string_view to_string(FunctionKind kind);
FunctionKind parse_function_kind(std::string_view text);

/// A member of B(Omega_gamma), or the refined extremal family z f_a(z).
///
/// Constant, Schur and Blaschke kinds describe h on the unit disk; the
/// member is f = h o H with H(w) = (1 - gamma) w + gamma. The extremal
/// kinds carry only the parameter a.
struct FunctionSpec {
  FunctionKind kind = FunctionKind::Constant;
  std::optional<std::uint64_t> seed;
  Complex constant{0.0, 0.0};
  // Schur parameters p_0..p_d (|p_k| <= 1) or Blaschke zeros (|z_k| < 1).
  std::vector<Complex> parameters;
  Complex rotation{1.0, 0.0};
  double a = 0.5;
  // Post-compose with the disk automorphism sending f(0) to 0.
  bool zero_pinned = false;

  std::size_t degree() const noexcept;
};

/// Throws InvalidArgument when the payload breaks the kind's invariants.
void validate(const FunctionSpec& spec, const GammaDomain& domain);

/// h on the unit disk. Defined for the constant, Schur, Blaschke and
/// extremal kinds (the latter is the Moebius map (a - z)/(1 - a z)).
Evaluator disk_function(const FunctionSpec& spec);

/// f on Omega_gamma, including zero pinning.
Evaluator member_function(const FunctionSpec& spec, const GammaDomain& domain);

/// Schur continued-fraction evaluation:
/// h_d = p_d, h_k(z) = (p_k + z h_{k+1}(z)) / (1 + conj(p_k) z h_{k+1}(z)).
Complex schur_eval(const std::vector<Complex>& parameters, Complex z);

/// e^{i theta} prod (z - z_k) / (1 - conj(z_k) z)
Complex blaschke_eval(const std::vector<Complex>& zeros, Complex rotation, Complex z);

/// f_a = h o H with h(z) = (a - z)/(1 - a z): a_0 = C_0, a_n = -C_n, where
/// C_0 = (a - gamma)/(1 - a gamma) and
/// C_n = (1 - a^2)/(a (1 - a gamma)) * (a (1 - gamma)/(1 - a gamma))^n.
TruncatedPowerSeries extremal_coeffs(double a, const GammaDomain& domain, std::size_t order);

/// C_0 + sum_{n>=1} C_n r^n in closed form.
double extremal_majorant_closed_form(double a, const GammaDomain& domain, double r);

/// z f_a(z): a_0 = 0, a_1 = C_0, a_{n+1} = -C_n.
TruncatedPowerSeries refined_extremal_coeffs(double a, const GammaDomain& domain,
                                             std::size_t order);

/// Specs only, without realizing the series.
FunctionSpec random_schur_spec(std::uint64_t seed, std::size_t degree);
FunctionSpec random_blaschke_spec(std::uint64_t seed, std::size_t degree);

struct GeneratedMember {
  FunctionSpec spec;
  TruncatedPowerSeries series;
};

/// Schur parameters with moduli uniform in [0, 1] and uniform phases.
GeneratedMember random_schur_member(std::uint64_t seed, std::size_t degree,
                                    const GammaDomain& domain,
                                    const CauchyOptions& options = {});

/// Blaschke product with zero moduli uniform in [0, 0.95], uniform phases
/// and a uniform unimodular rotation.
GeneratedMember random_blaschke_member(std::uint64_t seed, std::size_t degree,
                                       const GammaDomain& domain,
                                       const CauchyOptions& options = {});

/// Series of (g - g(0)) / (1 - conj(g(0)) g) for the member g described by
/// base. Returns the zero function when |g(0)| = 1.
TruncatedPowerSeries zero_pinned_member(const FunctionSpec& base, const GammaDomain& domain,
                                        const CauchyOptions& options = {});

/// Taylor series of any spec: closed forms for the constant and extremal
/// kinds, discrete Cauchy transform otherwise.
TruncatedPowerSeries realize(const FunctionSpec& spec, const GammaDomain& domain,
                             const CauchyOptions& options = {});

/// Plain-text key=value record, numbers at 17 significant digits.
std::string serialize(const FunctionSpec& spec);
FunctionSpec parse_function_spec(std::string_view text);

}  // namespace bohr
