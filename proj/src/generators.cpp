#include "bohr/generators.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "bohr/error.hpp"
#include "bohr/rng.hpp"

namespace bohr {

namespace {

struct ExtremalShape {
  double c0;     // (a - gamma)/(1 - a gamma)
  double scale;  // (1 - a^2)/(a (1 - a gamma))
  double ratio;  // a (1 - gamma)/(1 - a gamma)
};

ExtremalShape extremal_shape(double a, double gamma) {
  if (!(a > 0.0 && a < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "extremal parameter a must lie in (0, 1)");
  }
  const double d = 1.0 - a * gamma;
  return {(a - gamma) / d, (1.0 - a * a) / (a * d), a * (1.0 - gamma) / d};
}

TruncatedPowerSeries zero_series(std::size_t order, double gamma) {
  TruncatedPowerSeries series;
  series.coeffs.assign(order + 1, Complex{0.0, 0.0});
  series.member_gamma = gamma;
  return series;
}

Complex random_in_disk(SampleRng& rng, double max_modulus) {
  const double modulus = max_modulus * rng.uniform();
  const double phase = 2.0 * std::numbers::pi * rng.uniform();
  return std::polar(modulus, phase);
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(Complex z) {
  return format_double(z.real()) + "," + format_double(z.imag());
}

double parse_double(std::string_view text) {
  std::string owned(text);
  char* end = nullptr;
  const double value = std::strtod(owned.c_str(), &end);
  if (owned.empty() || end != owned.c_str() + owned.size()) {
    throw Error(ErrorKind::InvalidArgument, "bad number '" + owned + "'");
  }
  return value;
}

Complex parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw Error(ErrorKind::InvalidArgument, "bad complex '" + std::string(text) + "'");
  }
  return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string_view to_string(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::Constant: return "constant";
    case FunctionKind::Schur: return "schur";
    case FunctionKind::Blaschke: return "blaschke";
    case FunctionKind::Extremal: return "extremal";
    case FunctionKind::RefinedExtremal: return "refined-extremal";
  }
  return "unknown";
}

FunctionKind parse_function_kind(std::string_view text) {
  for (FunctionKind kind : {FunctionKind::Constant, FunctionKind::Schur, FunctionKind::Blaschke,
                            FunctionKind::Extremal, FunctionKind::RefinedExtremal}) {
    if (to_string(kind) == text) return kind;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown function kind '" + std::string(text) + "'");
}

std::size_t FunctionSpec::degree() const noexcept {
  switch (kind) {
    case FunctionKind::Schur: return parameters.empty() ? 0 : parameters.size() - 1;
    case FunctionKind::Blaschke: return parameters.size();
    case FunctionKind::Constant: return 0;
    case FunctionKind::Extremal:
    case FunctionKind::RefinedExtremal: return 1;
  }
  return 0;
}

void validate(const FunctionSpec& spec, const GammaDomain& domain) {
  (void)domain;
  switch (spec.kind) {
    case FunctionKind::Constant:
      if (std::abs(spec.constant) > 1.0) {
        throw Error(ErrorKind::InvalidArgument, "constant must satisfy |c| <= 1");
      }
      break;
    case FunctionKind::Schur:
      if (spec.parameters.empty()) {
        throw Error(ErrorKind::InvalidArgument, "Schur function needs at least one parameter");
      }
      for (Complex p : spec.parameters) {
        if (!(std::abs(p) <= 1.0)) {
          throw Error(ErrorKind::InvalidArgument, "Schur parameters must satisfy |p| <= 1");
        }
      }
      break;
    case FunctionKind::Blaschke:
      if (spec.parameters.empty()) {
        throw Error(ErrorKind::InvalidArgument, "Blaschke product needs at least one zero");
      }
      for (Complex z : spec.parameters) {
        if (!(std::abs(z) < 1.0)) {
          throw Error(ErrorKind::InvalidArgument, "Blaschke zeros must satisfy |z| < 1");
        }
      }
      if (std::abs(std::abs(spec.rotation) - 1.0) > 1e-12) {
        throw Error(ErrorKind::InvalidArgument, "Blaschke rotation must be unimodular");
      }
      break;
    case FunctionKind::Extremal:
    case FunctionKind::RefinedExtremal:
      if (!(spec.a > 0.0 && spec.a < 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "extremal parameter a must lie in (0, 1)");
      }
      break;
  }
}

Complex schur_eval(const std::vector<Complex>& parameters, Complex z) {
  if (parameters.empty()) return {0.0, 0.0};
  Complex h = parameters.back();
  for (std::size_t k = parameters.size() - 1; k-- > 0;) {
    const Complex p = parameters[k];
    const Complex t = z * h;
    h = (p + t) / (1.0 + std::conj(p) * t);
  }
  return h;
}

Complex blaschke_eval(const std::vector<Complex>& zeros, Complex rotation, Complex z) {
  Complex value = rotation;
  for (Complex zk : zeros) value *= (z - zk) / (1.0 - std::conj(zk) * z);
  return value;
}

Evaluator disk_function(const FunctionSpec& spec) {
  switch (spec.kind) {
    case FunctionKind::Constant: {
      const Complex c = spec.constant;
      return [c](Complex) { return c; };
    }
    case FunctionKind::Schur: {
      const auto params = spec.parameters;
      return [params](Complex z) { return schur_eval(params, z); };
    }
    case FunctionKind::Blaschke: {
      const auto zeros = spec.parameters;
      const Complex rotation = spec.rotation;
      return [zeros, rotation](Complex z) { return blaschke_eval(zeros, rotation, z); };
    }
    case FunctionKind::Extremal: {
      const double a = spec.a;
      return [a](Complex z) { return (a - z) / (1.0 - a * z); };
    }
    case FunctionKind::RefinedExtremal:
      break;
  }
  throw Error(ErrorKind::InvalidArgument, "the refined extremal family has no disk form");
}

Evaluator member_function(const FunctionSpec& spec, const GammaDomain& domain) {
  const double gamma = domain.gamma();
  Evaluator f;
  if (spec.kind == FunctionKind::RefinedExtremal) {
    const double a = spec.a;
    f = [a, gamma](Complex w) {
      const Complex z = (1.0 - gamma) * w + gamma;
      return w * (a - z) / (1.0 - a * z);
    };
  } else {
    Evaluator h = disk_function(spec);
    f = [h = std::move(h), gamma](Complex w) { return h((1.0 - gamma) * w + gamma); };
  }
  if (!spec.zero_pinned) return f;
  const Complex f0 = f(Complex{0.0, 0.0});
  if (std::abs(f0) >= 1.0 - 1e-15) {
    return [](Complex) { return Complex{0.0, 0.0}; };
  }
  return [f = std::move(f), f0](Complex w) {
    const Complex v = f(w);
    return (v - f0) / (1.0 - std::conj(f0) * v);
  };
}

TruncatedPowerSeries extremal_coeffs(double a, const GammaDomain& domain, std::size_t order) {
  const ExtremalShape s = extremal_shape(a, domain.gamma());
  TruncatedPowerSeries series;
  series.coeffs.resize(order + 1);
  series.coeffs[0] = s.c0;
  double term = s.scale;
  for (std::size_t n = 1; n <= order; ++n) {
    term *= s.ratio;
    series.coeffs[n] = -term;
  }
  series.tail_constant = s.scale;
  series.tail_radius = 1.0 / s.ratio;
  series.member_gamma = domain.gamma();
  return series;
}

double extremal_majorant_closed_form(double a, const GammaDomain& domain, double r) {
  const ExtremalShape s = extremal_shape(a, domain.gamma());
  const double q = s.ratio * r;
  if (!(r >= 0.0 && q < 1.0)) {
    throw Error(ErrorKind::DivergentSeries, "geometric ratio a(1-gamma)r/(1-a gamma) >= 1");
  }
  return std::abs(s.c0) + s.scale * q / (1.0 - q);
}

TruncatedPowerSeries refined_extremal_coeffs(double a, const GammaDomain& domain,
                                             std::size_t order) {
  const ExtremalShape s = extremal_shape(a, domain.gamma());
  TruncatedPowerSeries series;
  series.coeffs.assign(order + 1, Complex{0.0, 0.0});
  if (order >= 1) series.coeffs[1] = s.c0;
  double term = s.scale;
  for (std::size_t n = 2; n <= order; ++n) {
    term *= s.ratio;
    series.coeffs[n] = -term;
  }
  // |a_k| = (scale / ratio) ratio^k for k >= 2.
  series.tail_constant = s.scale / s.ratio;
  series.tail_radius = 1.0 / s.ratio;
  return series;
}

FunctionSpec random_schur_spec(std::uint64_t seed, std::size_t degree) {
  SampleRng rng(seed);
  FunctionSpec spec;
  spec.kind = FunctionKind::Schur;
  spec.seed = seed;
  spec.parameters.reserve(degree + 1);
  for (std::size_t k = 0; k <= degree; ++k) spec.parameters.push_back(random_in_disk(rng, 1.0));
  return spec;
}

FunctionSpec random_blaschke_spec(std::uint64_t seed, std::size_t degree) {
  if (degree < 1) throw Error(ErrorKind::InvalidArgument, "Blaschke degree must be >= 1");
  SampleRng rng(seed);
  FunctionSpec spec;
  spec.kind = FunctionKind::Blaschke;
  spec.seed = seed;
  spec.parameters.reserve(degree);
  for (std::size_t k = 0; k < degree; ++k) spec.parameters.push_back(random_in_disk(rng, 0.95));
  spec.rotation = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
  return spec;
}

GeneratedMember random_schur_member(std::uint64_t seed, std::size_t degree,
                                    const GammaDomain& domain, const CauchyOptions& options) {
  FunctionSpec spec = random_schur_spec(seed, degree);
  return {spec, realize(spec, domain, options)};
}

GeneratedMember random_blaschke_member(std::uint64_t seed, std::size_t degree,
                                       const GammaDomain& domain, const CauchyOptions& options) {
  FunctionSpec spec = random_blaschke_spec(seed, degree);
  return {spec, realize(spec, domain, options)};
}

TruncatedPowerSeries zero_pinned_member(const FunctionSpec& base, const GammaDomain& domain,
                                        const CauchyOptions& options) {
  FunctionSpec pinned = base;
  pinned.zero_pinned = false;
  const Evaluator g = member_function(pinned, domain);
  const Complex g0 = g(Complex{0.0, 0.0});
  if (std::abs(g0) >= 1.0 - 1e-15) return zero_series(options.order, domain.gamma());
  if (base.kind == FunctionKind::Constant) return zero_series(options.order, domain.gamma());
  pinned.zero_pinned = true;
  TruncatedPowerSeries series = coeffs_via_cauchy(member_function(pinned, domain), domain, options);
  if (base.kind != FunctionKind::RefinedExtremal) series.member_gamma = domain.gamma();
  return series;
}

TruncatedPowerSeries realize(const FunctionSpec& spec, const GammaDomain& domain,
                             const CauchyOptions& options) {
  validate(spec, domain);
  if (spec.zero_pinned) return zero_pinned_member(spec, domain, options);
  switch (spec.kind) {
    case FunctionKind::Constant: {
      TruncatedPowerSeries series = zero_series(options.order, domain.gamma());
      series.coeffs[0] = spec.constant;
      return series;
    }
    case FunctionKind::Extremal:
      return extremal_coeffs(spec.a, domain, options.order);
    case FunctionKind::RefinedExtremal:
      return refined_extremal_coeffs(spec.a, domain, options.order);
    case FunctionKind::Schur:
    case FunctionKind::Blaschke:
      return compose_affine(disk_function(spec), domain, options);
  }
  throw Error(ErrorKind::InvalidArgument, "unhandled function kind");
}

std::string serialize(const FunctionSpec& spec) {
  std::ostringstream out;
  out << "kind=" << to_string(spec.kind) << '\n';
  if (spec.seed) out << "seed=" << *spec.seed << '\n';
  out << "degree=" << spec.degree() << '\n';
  out << "zero_pinned=" << (spec.zero_pinned ? 1 : 0) << '\n';
  switch (spec.kind) {
    case FunctionKind::Constant:
      out << "constant=" << format_complex(spec.constant) << '\n';
      break;
    case FunctionKind::Schur:
    case FunctionKind::Blaschke: {
      out << "parameters=";
      for (std::size_t i = 0; i < spec.parameters.size(); ++i) {
        if (i) out << ';';
        out << format_complex(spec.parameters[i]);
      }
      out << '\n';
      if (spec.kind == FunctionKind::Blaschke) {
        out << "rotation=" << format_complex(spec.rotation) << '\n';
      }
      break;
    }
    case FunctionKind::Extremal:
    case FunctionKind::RefinedExtremal:
      out << "a=" << format_double(spec.a) << '\n';
      break;
  }
  return out.str();
}

FunctionSpec parse_function_spec(std::string_view text) {
  FunctionSpec spec;
  bool have_kind = false;
  std::optional<std::size_t> degree;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::InvalidArgument, "expected key=value, got '" + std::string(line) + "'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "kind") {
      spec.kind = parse_function_kind(value);
      have_kind = true;
    } else if (key == "seed") {
      std::uint64_t seed = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), seed);
      if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw Error(ErrorKind::InvalidArgument, "bad seed '" + std::string(value) + "'");
      }
      spec.seed = seed;
    } else if (key == "degree") {
      degree = static_cast<std::size_t>(parse_double(value));
    } else if (key == "zero_pinned") {
      spec.zero_pinned = value == "1" || value == "true";
    } else if (key == "constant") {
      spec.constant = parse_complex(value);
    } else if (key == "rotation") {
      spec.rotation = parse_complex(value);
    } else if (key == "a") {
      spec.a = parse_double(value);
    } else if (key == "parameters") {
      spec.parameters.clear();
      std::string_view rest = value;
      while (!rest.empty()) {
        const auto semi = rest.find(';');
        spec.parameters.push_back(parse_complex(trim(rest.substr(0, semi))));
        rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
      }
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_kind) throw Error(ErrorKind::InvalidArgument, "function spec lacks a kind");
  if (degree && *degree != spec.degree()) {
    throw Error(ErrorKind::InvalidArgument, "degree does not match the parameter list");
  }
  return spec;
}

}  // namespace bohr
