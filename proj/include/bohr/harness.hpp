#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bohr/domain.hpp"
#include "bohr/functionals.hpp"
#include "bohr/generators.hpp"
#include "bohr/radii.hpp"

namespace bohr {

inline constexpr double kDefaultTolVerify = 1e-9;

enum class TheoremTag { Classical, ImprovedM, Area, Rogosinski, Refined };

std::string_view to_string(TheoremTag tag);
TheoremTag parse_theorem_tag(std::string_view text);

/// One of the five inequalities plus the parameter it needs: m for the
/// improved form, lambda for the area form, N and the root-equation variant
/// for the Bohr-Rogosinski form.
struct TheoremId {
  TheoremTag tag = TheoremTag::Classical;
  int m = 2;
  double lambda = 0.0;
  int N = 1;
  RogosinskiVariant variant = RogosinskiVariant::TheoremForm;

  static TheoremId classical() { return {}; }
  static TheoremId improved(int m) { return {TheoremTag::ImprovedM, m}; }
  static TheoremId area(double lambda) { return {TheoremTag::Area, 2, lambda}; }
  static TheoremId rogosinski(int N,
                              RogosinskiVariant variant = RogosinskiVariant::TheoremForm) {
    return {TheoremTag::Rogosinski, 2, 0.0, N, variant};
  }
  static TheoremId refined() { return {TheoremTag::Refined}; }

  std::string describe() const;
};

/// Radius up to which the theorem claims its inequality.
double claimed_radius(const TheoremId& theorem, const GammaDomain& domain,
                      double tol_root = kDefaultRootTol);

/// Throws PreconditionViolation when the theorem's parameters do not apply
/// at this gamma (beta < 0, lambda out of range, N < 1).
void check_applicable(const TheoremId& theorem, const GammaDomain& domain);

/// 8 equally spaced radii in (0, claimed radius].
std::vector<double> default_r_grid(const TheoremId& theorem, const GammaDomain& domain,
                                   std::size_t points = 8);

struct HarnessOptions {
  std::size_t workers = 1;
  double tol_verify = kDefaultTolVerify;
  double tol_root = kDefaultRootTol;
  // Cauchy sampling radius and minimum sizes; the order grows with the
  // largest radius so that truncation tails stay negligible.
  double sample_radius = 0.995;
  std::size_t min_order = 64;
  std::size_t min_samples = 8192;
};

/// The functional that the theorem bounds by 1, at radius r. For the
/// Bohr-Rogosinski form the point z ranges over 16 equally spaced points on
/// |z| = r (one of them -r) and the largest certified upper value is kept.
FunctionalValue theorem_functional(const TheoremId& theorem, const GammaDomain& domain,
                                   const TruncatedPowerSeries& series, double r);

/// Truncation order whose tail is negligible for every radius up to r_max.
CauchyOptions series_options_for(const TheoremId& theorem, const GammaDomain& domain,
                                 double r_max, const HarnessOptions& options);

/// Generator kinds used in sweeps of this theorem. The refined form needs
/// f(0) = 0, so it uses zero-pinned random members and the refined family.
std::vector<FunctionKind> sweep_kinds(const TheoremId& theorem);

/// The index-th sample of a kind in a sweep seeded by master_seed.
FunctionSpec sample_spec(const TheoremId& theorem, const GammaDomain& domain, FunctionKind kind,
                         std::size_t index, std::uint64_t master_seed);

struct SampleOutcome {
  std::size_t sample_index = 0;
  FunctionSpec spec;
  double r = 0.0;
  double value = 0.0;
  double upper_slack = 0.0;
  bool pass = true;
};

struct VerificationReport {
  TheoremId theorem;
  double gamma = 0.0;
  double claimed_radius = 0.0;
  double tol_verify = kDefaultTolVerify;
  std::uint64_t master_seed = 0;
  std::vector<SampleOutcome> samples;  // sorted by (sample_index, r)
  std::size_t violations = 0;
  double max_value_inside_radius = 0.0;
  // Not serialized: it differs from run to run.
  double runtime_seconds = 0.0;
  std::size_t workers = 1;
};

/// Evaluates the theorem's functional for n_samples draws of every sweep
/// kind at every radius of r_grid. Sample indices are kind_position *
/// n_samples + i. A sample passes iff value + upper_slack <= 1 + tol_verify.
VerificationReport verify_theorem(const TheoremId& theorem, const GammaDomain& domain,
                                  std::size_t n_samples, const std::vector<double>& r_grid,
                                  std::uint64_t master_seed, const HarnessOptions& options = {});

/// Same sweep over explicitly given functions (sample index = position).
VerificationReport verify_specs(const TheoremId& theorem, const GammaDomain& domain,
                                const std::vector<FunctionSpec>& specs,
                                const std::vector<double>& r_grid,
                                const HarnessOptions& options = {});

/// The theorem's functional on its extremal family at (a, r): f_a for the
/// classical, improved, area and Bohr-Rogosinski forms (the latter at
/// z = -r), z f_a(z) for the refined form.
double sharpness_probe(const TheoremId& theorem, const GammaDomain& domain, double a, double r);

/// Largest r in (0, 0.99 * max radius] with value + upper_slack <= 1, found
/// by bisection to tol; the cap is returned when the functional never
/// reaches 1 there.
double radius_scan(const TheoremId& theorem, const GammaDomain& domain,
                   const TruncatedPowerSeries& series, double tol = 1e-10);

struct GammaStarRow {
  int m = 0;
  double gamma_star = 0.0;
};

std::vector<GammaStarRow> figure1_data(std::vector<int> m_values, double tol = kDefaultRootTol);

}  // namespace bohr
