#include "bohr/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "bohr/error.hpp"
#include "bohr/rng.hpp"

namespace bohr {

namespace {

constexpr std::size_t kRogosinskiPoints = 16;
constexpr std::size_t kMaxOrder = 1024;

// Smallest K with q^{K+1}/(1-q) below 1e-17, i.e. a negligible tail.
std::size_t order_for_ratio(double q) {
  if (!(q > 0.0)) return 0;
  if (q >= 1.0) return kMaxOrder;
  const double k = std::log(1e-17 * (1.0 - q)) / std::log(q);
  if (!(k < static_cast<double>(kMaxOrder))) return kMaxOrder;
  return static_cast<std::size_t>(std::ceil(std::max(k, 0.0)));
}

std::uint64_t kind_stream(FunctionKind kind) { return static_cast<std::uint64_t>(kind) + 1; }

// Applies fn(i) for i in [0, count) on up to `workers` threads. The first
// exception by index is rethrown, whichever thread raised it.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::string_view to_string(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::Classical: return "classical";
    case TheoremTag::ImprovedM: return "improved-m";
    case TheoremTag::Area: return "area";
    case TheoremTag::Rogosinski: return "rogosinski";
    case TheoremTag::Refined: return "refined";
  }
  return "unknown";
}

TheoremTag parse_theorem_tag(std::string_view text) {
  for (TheoremTag tag : {TheoremTag::Classical, TheoremTag::ImprovedM, TheoremTag::Area,
                         TheoremTag::Rogosinski, TheoremTag::Refined}) {
    if (to_string(tag) == text) return tag;
  }
  if (text == "improved") return TheoremTag::ImprovedM;
  throw Error(ErrorKind::Usage, "unknown theorem '" + std::string(text) + "'");
}

std::string TheoremId::describe() const {
  std::string out(to_string(tag));
  char buf[64];
  switch (tag) {
    case TheoremTag::ImprovedM:
      out += " m=" + std::to_string(m);
      break;
    case TheoremTag::Area:
      std::snprintf(buf, sizeof buf, " lambda=%.17g", lambda);
      out += buf;
      break;
    case TheoremTag::Rogosinski:
      out += " N=" + std::to_string(N) + " variant=" + to_string(variant);
      break;
    default:
      break;
  }
  return out;
}

void check_applicable(const TheoremId& theorem, const GammaDomain& domain) {
  switch (theorem.tag) {
    case TheoremTag::ImprovedM:
      if (theorem.m < 2) throw Error(ErrorKind::PreconditionViolation, "m must be >= 2");
      if (beta_coefficient(theorem.m, domain) < 0.0) {
        throw Error(ErrorKind::PreconditionViolation,
                    "gamma lies beyond gamma_*(m): beta is negative");
      }
      break;
    case TheoremTag::Area:
      if (!(theorem.lambda >= 0.0 && theorem.lambda <= kAreaLambdaMax)) {
        throw Error(ErrorKind::PreconditionViolation, "lambda must lie in [0, 512/243]");
      }
      break;
    case TheoremTag::Rogosinski:
      if (theorem.N < 1) throw Error(ErrorKind::PreconditionViolation, "N must be >= 1");
      break;
    default:
      break;
  }
}

double claimed_radius(const TheoremId& theorem, const GammaDomain& domain, double tol_root) {
  if (theorem.tag == TheoremTag::Rogosinski) {
    return rogosinski_radius(theorem.N, domain, theorem.variant, tol_root).value;
  }
  return classical_radius(domain).value;
}

std::vector<double> default_r_grid(const TheoremId& theorem, const GammaDomain& domain,
                                   std::size_t points) {
  const double radius = claimed_radius(theorem, domain);
  std::vector<double> grid;
  grid.reserve(points);
  for (std::size_t k = 1; k <= points; ++k) {
    grid.push_back(k == points ? radius : radius * static_cast<double>(k) / points);
  }
  return grid;
}

CauchyOptions series_options_for(const TheoremId& theorem, const GammaDomain& domain,
                                 double r_max, const HarnessOptions& options) {
  const double rho = options.sample_radius;
  double q = r_max / rho;
  if (theorem.tag == TheoremTag::ImprovedM) {
    const double x = r_max / std::pow(1.0 - domain.gamma(), theorem.m - 1);
    const double envelope = x / std::pow(rho, theorem.m);
    q = std::max(q, envelope < 1.0 ? envelope : x);
  }
  CauchyOptions cauchy;
  cauchy.sample_radius = rho;
  cauchy.order = std::max(options.min_order, order_for_ratio(q));
  cauchy.samples = std::max(options.min_samples, std::bit_ceil(4 * (cauchy.order + 1)));
  return cauchy;
}

FunctionalValue theorem_functional(const TheoremId& theorem, const GammaDomain& domain,
                                   const TruncatedPowerSeries& series, double r) {
  switch (theorem.tag) {
    case TheoremTag::Classical:
      return majorant(series, r);
    case TheoremTag::ImprovedM:
      return improved_majorant_m(series, r, theorem.m, domain);
    case TheoremTag::Area:
      return area_improved_sum(series, r, theorem.lambda, domain);
    case TheoremTag::Refined:
      return refined_sum(series, r);
    case TheoremTag::Rogosinski: {
      if (r == 0.0) return rogosinski_sum(series, Complex{0.0, 0.0}, r, theorem.N);
      FunctionalValue worst;
      bool first = true;
      for (std::size_t k = 0; k < kRogosinskiPoints; ++k) {
        const double theta =
            2.0 * std::numbers::pi * static_cast<double>(k) / kRogosinskiPoints;
        // k = 8 is exactly -r, the extremal evaluation point.
        const Complex z = k == kRogosinskiPoints / 2 ? Complex{-r, 0.0} : std::polar(r, theta);
        const FunctionalValue v = rogosinski_sum(series, z, r, theorem.N);
        if (first || v.upper() > worst.upper()) worst = v;
        first = false;
      }
      return worst;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unhandled theorem");
}

std::vector<FunctionKind> sweep_kinds(const TheoremId& theorem) {
  if (theorem.tag == TheoremTag::Refined) {
    return {FunctionKind::Schur, FunctionKind::Blaschke, FunctionKind::RefinedExtremal};
  }
  return {FunctionKind::Constant, FunctionKind::Schur, FunctionKind::Blaschke,
          FunctionKind::Extremal};
}

FunctionSpec sample_spec(const TheoremId& theorem, const GammaDomain& domain, FunctionKind kind,
                         std::size_t index, std::uint64_t master_seed) {
  const std::uint64_t seed = derive_seed(master_seed, kind_stream(kind), index);
  const std::uint64_t shape = derive_seed(master_seed, kind_stream(kind) + 100, index);
  FunctionSpec spec;
  switch (kind) {
    case FunctionKind::Constant: {
      SampleRng rng(seed);
      const double modulus = index % 4 == 0 ? 1.0 : rng.uniform();
      const double phase = index == 0 ? 0.0 : 2.0 * std::numbers::pi * rng.uniform();
      spec.kind = FunctionKind::Constant;
      spec.seed = seed;
      spec.constant = std::polar(modulus, phase);
      break;
    }
    case FunctionKind::Schur:
      spec = random_schur_spec(seed, shape % 9);
      break;
    case FunctionKind::Blaschke:
      spec = random_blaschke_spec(seed, 1 + shape % 8);
      break;
    case FunctionKind::Extremal:
    case FunctionKind::RefinedExtremal: {
      // a spreads log-uniformly towards 1, where the extremal behaviour sits.
      SampleRng rng(seed);
      const double g = domain.gamma();
      spec.kind = kind;
      spec.seed = seed;
      spec.a = g + (1.0 - g) * (1.0 - std::pow(10.0, -0.01 - 4.0 * rng.uniform()));
      break;
    }
  }
  if (theorem.tag == TheoremTag::Refined && kind != FunctionKind::RefinedExtremal) {
    spec.zero_pinned = true;
  }
  return spec;
}

VerificationReport verify_specs(const TheoremId& theorem, const GammaDomain& domain,
                                const std::vector<FunctionSpec>& specs,
                                const std::vector<double>& r_grid,
                                const HarnessOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  check_applicable(theorem, domain);
  std::vector<double> grid = r_grid;
  std::sort(grid.begin(), grid.end());

  VerificationReport report;
  report.theorem = theorem;
  report.gamma = domain.gamma();
  report.claimed_radius = claimed_radius(theorem, domain, options.tol_root);
  report.tol_verify = options.tol_verify;
  report.workers = std::max<std::size_t>(1, options.workers);

  const double r_max = grid.empty() ? 0.0 : grid.back();
  const CauchyOptions cauchy = series_options_for(theorem, domain, r_max, options);

  std::vector<std::vector<SampleOutcome>> rows(specs.size());
  parallel_for(specs.size(), report.workers, [&](std::size_t i) {
    const TruncatedPowerSeries series = realize(specs[i], domain, cauchy);
    rows[i].reserve(grid.size());
    for (double r : grid) {
      const FunctionalValue v = theorem_functional(theorem, domain, series, r);
      SampleOutcome out;
      out.sample_index = i;
      out.spec = specs[i];
      out.r = r;
      out.value = v.value;
      out.upper_slack = v.upper_slack;
      out.pass = v.upper() <= 1.0 + options.tol_verify;
      rows[i].push_back(std::move(out));
    }
  });

  for (auto& row : rows) {
    for (auto& out : row) {
      if (!out.pass) ++report.violations;
      report.max_value_inside_radius = std::max(report.max_value_inside_radius, out.value);
      report.samples.push_back(std::move(out));
    }
  }
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify_theorem(const TheoremId& theorem, const GammaDomain& domain,
                                  std::size_t n_samples, const std::vector<double>& r_grid,
                                  std::uint64_t master_seed, const HarnessOptions& options) {
  check_applicable(theorem, domain);
  const double radius = claimed_radius(theorem, domain, options.tol_root);
  for (double r : r_grid) {
    if (!(r >= 0.0 && r <= radius * (1.0 + 1e-12))) {
      throw Error(ErrorKind::PreconditionViolation,
                  "radius " + std::to_string(r) + " lies beyond the claimed radius " +
                      std::to_string(radius));
    }
  }
  const std::vector<FunctionKind> kinds = sweep_kinds(theorem);
  std::vector<FunctionSpec> specs;
  specs.reserve(kinds.size() * n_samples);
  for (FunctionKind kind : kinds) {
    for (std::size_t i = 0; i < n_samples; ++i) {
      specs.push_back(sample_spec(theorem, domain, kind, i, master_seed));
    }
  }
  VerificationReport report = verify_specs(theorem, domain, specs, r_grid, options);
  report.master_seed = master_seed;
  return report;
}

double sharpness_probe(const TheoremId& theorem, const GammaDomain& domain, double a, double r) {
  const double g = domain.gamma();
  if (!(a > g && a < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "sharpness probe needs gamma < a < 1");
  }
  if (!(r > 0.0 && r < 1.0)) {
    throw Error(ErrorKind::InvalidRadius, "sharpness probe needs 0 < r < 1");
  }
  check_applicable(theorem, domain);
  const double ratio = a * (1.0 - g) / (1.0 - a * g);
  double q = ratio * r;
  if (theorem.tag == TheoremTag::ImprovedM) {
    q = std::max(q, r / std::pow(1.0 - g, theorem.m - 1) * std::pow(ratio, theorem.m));
  }
  if (!(q < 1.0)) {
    throw Error(ErrorKind::DivergentSeries, "extremal series diverges at this radius");
  }
  const std::size_t order = std::max<std::size_t>(
      64, static_cast<std::size_t>(std::ceil(std::log(1e-18 * (1.0 - q)) / std::log(q))));
  const TruncatedPowerSeries series = theorem.tag == TheoremTag::Refined
                                          ? refined_extremal_coeffs(a, domain, order)
                                          : extremal_coeffs(a, domain, order);
  if (theorem.tag == TheoremTag::Rogosinski) {
    return rogosinski_sum(series, Complex{-r, 0.0}, r, theorem.N).value;
  }
  return theorem_functional(theorem, domain, series, r).value;
}

double radius_scan(const TheoremId& theorem, const GammaDomain& domain,
                   const TruncatedPowerSeries& series, double tol) {
  check_applicable(theorem, domain);
  const double cap = 0.99 * series.max_radius();
  auto excess = [&](double r) {
    return theorem_functional(theorem, domain, series, r).upper() - 1.0;
  };
  if (excess(cap) <= 0.0) return cap;
  if (excess(0.0) > 0.0) return 0.0;
  double lo = 0.0;
  double hi = cap;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (excess(mid) <= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::vector<GammaStarRow> figure1_data(std::vector<int> m_values, double tol) {
  std::sort(m_values.begin(), m_values.end());
  std::vector<GammaStarRow> rows;
  rows.reserve(m_values.size());
  for (int m : m_values) rows.push_back({m, gamma_star(m, tol).value});
  return rows;
}

}  // namespace bohr
