#include "bohr/series.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bohr/error.hpp"

namespace bohr {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2.0;

// In-place iterative radix-2 transform computing sum_j x_j e^{-2 pi i j k / n}.
void fft(std::vector<Complex>& x) {
  const std::size_t n = x.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  std::vector<Complex> twiddle(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    twiddle[k] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) /
                                     static_cast<double>(n));
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Complex u = x[start + k];
        const Complex v = x[start + k + len / 2] * twiddle[k * stride];
        x[start + k] = u + v;
        x[start + k + len / 2] = u - v;
      }
    }
  }
}

Complex pairwise_sum(const std::vector<Complex>& terms, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = lo; i < hi; ++i) acc += terms[i];
    return acc;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(terms, lo, mid) + pairwise_sum(terms, mid, hi);
}

// Plain DFT for sample counts that are not a power of two.
std::vector<Complex> direct_dft(const std::vector<Complex>& samples, std::size_t count) {
  const std::size_t n = samples.size();
  std::vector<Complex> out(count);
  std::vector<Complex> terms(n);
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t idx = (j * k) % n;
      terms[j] = samples[j] * std::polar(1.0, -2.0 * std::numbers::pi *
                                                  static_cast<double>(idx) /
                                                  static_cast<double>(n));
    }
    out[k] = pairwise_sum(terms, 0, n);
  }
  return out;
}

double lemma_coeff_bound(const TruncatedPowerSeries& series, double gamma) {
  const double a0 = std::max(0.0, series.abs_lower(0));
  return std::max(0.0, (1.0 - a0 * a0) / (1.0 + gamma));
}

}  // namespace

double TruncatedPowerSeries::abs_lower(std::size_t n) const {
  if (n >= coeffs.size()) return 0.0;
  return std::max(0.0, std::abs(coeffs[n]) - coeff_error);
}

double TruncatedPowerSeries::abs_upper(std::size_t n) const {
  if (n >= coeffs.size()) return 0.0;
  return std::abs(coeffs[n]) + coeff_error;
}

double TruncatedPowerSeries::max_radius() const noexcept {
  if (tail_constant == 0.0) return 1.0;
  return std::min(1.0, tail_radius);
}

TruncatedPowerSeries coeffs_via_cauchy(const Evaluator& f, const GammaDomain& domain,
                                       const CauchyOptions& options) {
  const double rho = options.sample_radius;
  const std::size_t n_samples = options.samples;
  const std::size_t count = options.order + 1;
  if (!(rho > 0.0 && rho < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "sample radius must lie in (0, 1)");
  }
  if (n_samples < 4 * count) {
    throw Error(ErrorKind::InvalidArgument,
                "need at least 4(K+1) samples, got " + std::to_string(n_samples));
  }

  std::vector<Complex> samples(n_samples);
  for (std::size_t j = 0; j < n_samples; ++j) {
    const double theta =
        2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_samples);
    const Complex w = std::polar(rho, theta);
    const Complex value = f(w);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw Error(ErrorKind::SamplingFailure, "evaluator returned a non-finite value");
    }
    if (std::abs(value) > 1.0 + 1e-9) {
      throw Error(ErrorKind::SamplingFailure,
                  "evaluator exceeds 1 in modulus inside the unit disk");
    }
    samples[j] = value;
  }

  std::vector<Complex> transformed;
  if (std::has_single_bit(n_samples)) {
    fft(samples);
    transformed.assign(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(count));
  } else {
    transformed = direct_dft(samples, count);
  }

  TruncatedPowerSeries series;
  series.coeffs.resize(count);
  double scale = 1.0 / static_cast<double>(n_samples);
  for (std::size_t n = 0; n < count; ++n) {
    series.coeffs[n] = transformed[n] * scale;
    scale /= rho;
  }

  // |a_k| <= 1 for all k because the unit disk lies in Omega_gamma.
  const double rho_n = std::pow(rho, static_cast<double>(n_samples));
  const double aliasing = rho_n / (1.0 - rho_n);
  const double log2n = std::log2(static_cast<double>(n_samples));
  const double rounding = (8.0 * log2n + 16.0) * kUnitRoundoff *
                          std::pow(rho, -static_cast<double>(options.order));
  series.coeff_error = aliasing + rounding;
  series.tail_constant = 1.0;
  series.tail_radius = rho;
  (void)domain;
  return series;
}

TruncatedPowerSeries compose_affine(const Evaluator& h, const GammaDomain& domain,
                                    const CauchyOptions& options) {
  const double gamma = domain.gamma();
  auto composite = [&h, gamma](Complex w) { return h((1.0 - gamma) * w + gamma); };
  TruncatedPowerSeries series = coeffs_via_cauchy(composite, domain, options);
  series.member_gamma = gamma;
  return series;
}

double geometric_tail(double c, double q, std::size_t first, bool weighted) {
  if (c == 0.0) return 0.0;
  if (!(q >= 0.0 && q < 1.0)) return std::numeric_limits<double>::infinity();
  if (q == 0.0) return 0.0;
  const double k = static_cast<double>(first);
  const double head = std::pow(q, k);
  if (!weighted) return c * head / (1.0 - q);
  // sum_{n>=k} n q^n = q^k (k - (k - 1) q) / (1 - q)^2
  return c * head * (k - (k - 1.0) * q) / ((1.0 - q) * (1.0 - q));
}

TailBound majorant_tail_bound(const TruncatedPowerSeries& series, double r, double gamma,
                              double a0_abs) {
  if (!(r > 0.0 && r < 1.0)) {
    throw Error(ErrorKind::InvalidRadius, "tail bound needs 0 < r < 1");
  }
  const std::size_t first = series.order() + 1;
  const double coeff_bound = std::max(0.0, (1.0 - a0_abs * a0_abs) / (1.0 + gamma));
  double bound = geometric_tail(coeff_bound, r, first);
  if (series.tail_constant == 0.0) {
    bound = 0.0;
  } else if (r < series.tail_radius) {
    bound = std::min(bound, geometric_tail(series.tail_constant, r / series.tail_radius, first));
  }
  return {bound, r};
}

double power_tail_bound(const TruncatedPowerSeries& series, double x, int power, bool weighted) {
  if (x < 0.0) throw Error(ErrorKind::InvalidRadius, "negative tail argument");
  const std::size_t first = series.order() + 1;
  if (series.tail_constant == 0.0 || x == 0.0) return 0.0;
  const double p = static_cast<double>(power);
  double bound = geometric_tail(std::pow(series.tail_constant, p),
                                x / std::pow(series.tail_radius, p), first, weighted);
  if (series.member_gamma) {
    const double coeff_bound = lemma_coeff_bound(series, *series.member_gamma);
    bound = std::min(bound, geometric_tail(std::pow(coeff_bound, p), x, first, weighted));
  }
  return bound;
}

Evaluation eval(const TruncatedPowerSeries& series, Complex z) {
  const double modulus = std::abs(z);
  if (series.tail_constant != 0.0 && !(modulus < series.tail_radius)) {
    throw Error(ErrorKind::InvalidRadius, "evaluation point outside the envelope disk");
  }
  Complex acc{0.0, 0.0};
  double abs_sum = 0.0;
  double power_sum = 0.0;
  for (std::size_t n = series.coeffs.size(); n-- > 0;) {
    acc = acc * z + series.coeffs[n];
    abs_sum = abs_sum * modulus + std::abs(series.coeffs[n]);
    power_sum = power_sum * modulus + 1.0;
  }
  const double tail = power_tail_bound(series, modulus, 1, false);
  return {acc, series.coeff_error * power_sum + tail + kRoundingAllowance * abs_sum};
}

CoeffBoundCheck check_coeff_bound(const TruncatedPowerSeries& series, double gamma) {
  CoeffBoundCheck check;
  check.worst_excess = -std::numeric_limits<double>::infinity();
  const double bound = lemma_coeff_bound(series, gamma);
  for (std::size_t n = 1; n < series.coeffs.size(); ++n) {
    const double excess = series.abs_lower(n) - bound;
    if (excess > check.worst_excess) {
      check.worst_excess = excess;
      check.worst_index = n;
    }
  }
  if (series.coeffs.size() <= 1) check.worst_excess = -bound;
  check.holds = check.worst_excess <= kRoundingAllowance;
  return check;
}

}  // namespace bohr
