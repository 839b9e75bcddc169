#include "bohr/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "bohr/error.hpp"
#include "bohr/harness.hpp"
#include "bohr/radii.hpp"
#include "bohr/report_io.hpp"

namespace bohr {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Usage, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <typename T>
T parse_value(const std::string& key, const std::string& text) {
  std::istringstream in(text);
  T value{};
  in >> value;
  if (!in || !(in >> std::ws).eof()) {
    throw Error(ErrorKind::Usage, "bad value '" + text + "' for config key '" + key + "'");
  }
  return value;
}

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Options that select a theorem's parameters, shared by several subcommands.
struct TheoremArgs {
  std::string theorem = "classical";
  double gamma = 0.0;
  int m = 2;
  double lambda = 0.0;
  int N = 1;
  std::string variant = "theorem";

  void attach(CLI::App* cmd, bool need_theorem) {
    auto* t = cmd->add_option("--theorem", theorem,
                              "classical|improved-m|area|rogosinski|refined");
    if (need_theorem) t->required();
    cmd->add_option("--gamma", gamma, "domain parameter in [0, 1)")->required();
    cmd->add_option("--m", m, "exponent of the improved form (>= 2)");
    cmd->add_option("--lambda", lambda, "area weight in [0, 512/243]");
    cmd->add_option("--N", N, "first index of the Bohr-Rogosinski tail");
    cmd->add_option("--variant", variant, "lemma|theorem root equation");
  }

  TheoremId id() const {
    TheoremId t;
    t.tag = parse_theorem_tag(theorem);
    t.m = m;
    t.lambda = lambda;
    t.N = N;
    t.variant = parse_variant(variant.c_str());
    return t;
  }
};

HarnessOptions harness_options(const CliConfig& config) {
  HarnessOptions options;
  options.workers = config.workers;
  options.tol_verify = config.tol_verify;
  options.tol_root = config.tol_root;
  options.sample_radius = config.sample_radius;
  options.min_order = config.order;
  options.min_samples = config.n_samples;
  return options;
}

std::size_t default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

void apply_config_text(CliConfig& config, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trimmed(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Usage, "expected key=value: " + line);
    const std::string key = trimmed(line.substr(0, eq));
    const std::string value = trimmed(line.substr(eq + 1));
    if (key == "seed") {
      config.seed = parse_value<std::uint64_t>(key, value);
    } else if (key == "workers") {
      config.workers = parse_value<std::size_t>(key, value);
    } else if (key == "K") {
      config.order = parse_value<std::size_t>(key, value);
    } else if (key == "rho_w") {
      config.sample_radius = parse_value<double>(key, value);
    } else if (key == "n_samples") {
      config.n_samples = parse_value<std::size_t>(key, value);
    } else if (key == "tol_verify") {
      config.tol_verify = parse_value<double>(key, value);
    } else if (key == "tol_root") {
      config.tol_root = parse_value<double>(key, value);
    } else {
      throw Error(ErrorKind::Usage, "unknown config key '" + key + "'");
    }
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bohr-type radii and inequality checks for bounded analytic functions on "
               "the disks Omega_gamma"};
  app.require_subcommand(1);

  CliConfig config;
  config.workers = default_workers();
  std::string config_path;
  std::uint64_t seed = 0;
  std::size_t workers = 0;
  std::size_t order = 0;
  double rho_w = 0.0;
  std::size_t n_samples = 0;
  double tol_verify = 0.0;
  double tol_root = 0.0;
  auto* o_config = app.add_option("--config", config_path, "key=value settings file");
  auto* o_seed = app.add_option("--seed", seed, "master seed (default 42)");
  auto* o_workers = app.add_option("--workers", workers, "worker threads");
  auto* o_order = app.add_option("--K", order, "minimum truncation order (default 64)");
  auto* o_rho = app.add_option("--rho-w", rho_w, "Cauchy sampling radius (default 0.995)");
  auto* o_nsamp = app.add_option("--n-samples", n_samples, "minimum Cauchy sample count");
  auto* o_tolv = app.add_option("--tol-verify", tol_verify, "pass threshold above 1");
  auto* o_tolr = app.add_option("--tol-root", tol_root, "root-finder tolerance");

  // radius
  auto* radius_cmd = app.add_subcommand("radius", "closed-form and bracketed radii");
  radius_cmd->require_subcommand(1);
  radius_cmd->fallthrough();
  double gamma = 0.0;
  int m = 2;
  int big_n = 1;
  std::string variant = "theorem";
  auto* classical_cmd = radius_cmd->add_subcommand("classical", "(1+gamma)/(3+gamma)");
  classical_cmd->add_option("--gamma", gamma)->required();
  auto* improved_cmd =
      radius_cmd->add_subcommand("improved", "radius, beta and gamma_*(m) of the improved form");
  improved_cmd->add_option("--gamma", gamma)->required();
  improved_cmd->add_option("--m", m)->required();
  auto* rogosinski_cmd =
      radius_cmd->add_subcommand("rogosinski", "Bohr-Rogosinski radius rho_N/(1-gamma)");
  rogosinski_cmd->add_option("--gamma", gamma)->required();
  rogosinski_cmd->add_option("--N", big_n, "tail start (default 1)");
  rogosinski_cmd->add_option("--variant", variant, "lemma|theorem (default theorem)");
  for (auto* c : {classical_cmd, improved_cmd, rogosinski_cmd}) c->fallthrough();

  // gamma-star
  auto* gs_cmd = app.add_subcommand("gamma-star", "table of gamma_*(m)");
  int m_min = 2;
  int m_max = 100;
  std::string out_path;
  std::string format;
  gs_cmd->add_option("--m-min", m_min);
  gs_cmd->add_option("--m-max", m_max);
  gs_cmd->add_option("--out", out_path);
  gs_cmd->add_option("--format", format, "csv|json|svg");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "sweep a theorem over generated functions");
  TheoremArgs verify_args;
  verify_args.attach(verify_cmd, true);
  std::size_t samples = 200;
  std::size_t points = 8;
  verify_cmd->add_option("--samples", samples, "samples per generator kind (default 200)");
  verify_cmd->add_option("--points", points, "radii per sample (default 8)");
  verify_cmd->add_option("--out", out_path);
  verify_cmd->add_option("--format", format, "csv|json");

  // sharpness
  auto* sharp_cmd = app.add_subcommand("sharpness", "functional on the extremal family");
  TheoremArgs sharp_args;
  sharp_args.attach(sharp_cmd, true);
  double a = 0.0;
  double r = 0.0;
  sharp_cmd->add_option("--a", a)->required();
  sharp_cmd->add_option("--r", r)->required();

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "empirical radius of one function");
  TheoremArgs scan_args;
  scan_args.attach(scan_cmd, true);
  std::string spec_path;
  scan_cmd->add_option("--spec", spec_path, "function spec file")->required();
  scan_cmd->add_option("--out", out_path);
  scan_cmd->add_option("--format", format, "svg|csv");

  for (auto* c : {gs_cmd, verify_cmd, sharp_cmd, scan_cmd}) c->fallthrough();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (const char* env = std::getenv("BOHR_LAB_WORKERS")) {
      config.workers = parse_value<std::size_t>("BOHR_LAB_WORKERS", env);
    }
    if (o_config->count()) apply_config_text(config, read_file(config_path));
    if (o_seed->count()) config.seed = seed;
    if (o_workers->count()) config.workers = workers;
    if (o_order->count()) config.order = order;
    if (o_rho->count()) config.sample_radius = rho_w;
    if (o_nsamp->count()) config.n_samples = n_samples;
    if (o_tolv->count()) config.tol_verify = tol_verify;
    if (o_tolr->count()) config.tol_root = tol_root;
    if (config.workers == 0) config.workers = 1;

    if (*classical_cmd) {
      const RadiusResult res = classical_radius(make_domain(gamma));
      out << "classical radius (gamma=" << format_text(gamma) << "): "
          << format_text(res.value) << '\n';
      return kExitOk;
    }
    if (*improved_cmd) {
      const GammaDomain domain = make_domain(gamma);
      const double beta = beta_coefficient(m, domain);
      const RadiusResult gs = gamma_star(m, config.tol_root);
      out << "r_0 = " << format_text(classical_radius(domain).value) << '\n'
          << "beta = " << format_text(beta) << '\n'
          << "gamma_*(" << m << ") = " << format_text(gs.value) << '\n';
      if (beta < 0.0) out << "note: gamma > gamma_*(m), the improved inequality does not apply\n";
      return kExitOk;
    }
    if (*rogosinski_cmd) {
      const GammaDomain domain = make_domain(gamma);
      const RogosinskiVariant v = parse_variant(variant.c_str());
      const RadiusResult root = rho_N(big_n, domain, v, config.tol_root);
      const RadiusResult radius = rogosinski_radius(big_n, domain, v, config.tol_root);
      out << "rho_N = " << format_text(root.value) << '\n'
          << "r_0 = " << format_text(radius.value) << '\n'
          << "variant = " << to_string(v) << '\n';
      return kExitOk;
    }
    if (*gs_cmd) {
      if (m_min < 2 || m_max < m_min) throw Error(ErrorKind::Usage, "need 2 <= m-min <= m-max");
      std::vector<int> ms;
      for (int k = m_min; k <= m_max; ++k) ms.push_back(k);
      const auto rows = figure1_data(ms, config.tol_root);
      OutputFormat fmt = format.empty() ? format_from_path(out_path, OutputFormat::Csv)
                                        : parse_output_format(format);
      std::ofstream file;
      std::ostream* sink = &out;
      if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) throw Error(ErrorKind::Io, "cannot open '" + out_path + "'");
        sink = &file;
      }
      switch (fmt) {
        case OutputFormat::Csv: write_gamma_star_csv(rows, *sink); break;
        case OutputFormat::Json: write_gamma_star_json(rows, *sink); break;
        case OutputFormat::Svg: write_gamma_star_svg(rows, *sink); break;
      }
      return kExitOk;
    }
    if (*verify_cmd) {
      const GammaDomain domain = make_domain(verify_args.gamma);
      const TheoremId theorem = verify_args.id();
      check_applicable(theorem, domain);
      const auto grid = default_r_grid(theorem, domain, points);
      const VerificationReport report =
          verify_theorem(theorem, domain, samples, grid, config.seed, harness_options(config));
      if (!out_path.empty()) {
        const OutputFormat fmt = format.empty() ? format_from_path(out_path, OutputFormat::Csv)
                                                : parse_output_format(format);
        emit_report(report, fmt, out_path);
      }
      out << "theorem: " << theorem.describe() << '\n'
          << "gamma: " << format_text(report.gamma) << '\n'
          << "claimed radius: " << format_text(report.claimed_radius) << '\n'
          << "evaluations: " << report.samples.size() << '\n'
          << "violations: " << report.violations << '\n'
          << "max value inside radius: " << format_text(report.max_value_inside_radius) << '\n';
      err << "runtime: " << report.runtime_seconds << " s on " << report.workers
          << " worker(s)\n";
      return report.violations == 0 ? kExitOk : kExitViolation;
    }
    if (*sharp_cmd) {
      const GammaDomain domain = make_domain(sharp_args.gamma);
      const TheoremId theorem = sharp_args.id();
      const double value = sharpness_probe(theorem, domain, a, r);
      out << "theorem: " << theorem.describe() << '\n'
          << "claimed radius: " << format_text(claimed_radius(theorem, domain, config.tol_root))
          << '\n'
          << "value: " << format_text(value) << '\n'
          << "exceeds 1: " << (value > 1.0 ? "yes" : "no") << '\n';
      return kExitOk;
    }
    if (*scan_cmd) {
      const GammaDomain domain = make_domain(scan_args.gamma);
      const TheoremId theorem = scan_args.id();
      const FunctionSpec spec = parse_function_spec(read_file(spec_path));
      const HarnessOptions options = harness_options(config);
      const double claimed = claimed_radius(theorem, domain, config.tol_root);
      const CauchyOptions cauchy = series_options_for(theorem, domain, 0.985, options);
      const TruncatedPowerSeries series = realize(spec, domain, cauchy);
      const double scanned = radius_scan(theorem, domain, series);
      out << "theorem: " << theorem.describe() << '\n'
          << "claimed radius: " << format_text(claimed) << '\n'
          << "scanned radius: " << format_text(scanned) << '\n';
      if (!out_path.empty()) {
        const OutputFormat fmt = format.empty() ? format_from_path(out_path, OutputFormat::Svg)
                                                : parse_output_format(format);
        std::vector<CurvePoint> curve;
        const double cap = 0.99 * series.max_radius();
        for (int i = 0; i <= 200; ++i) {
          const double x = cap * i / 200.0;
          curve.push_back({x, theorem_functional(theorem, domain, series, x).upper()});
        }
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw Error(ErrorKind::Io, "cannot open '" + out_path + "'");
        if (fmt == OutputFormat::Svg) {
          write_scan_svg(curve, scanned, claimed, theorem.describe(), file);
        } else if (fmt == OutputFormat::Csv) {
          file << "r,upper_value\n";
          for (const auto& pt : curve) {
            file << format_exact(pt.r) << ',' << format_exact(pt.value) << '\n';
          }
        } else {
          throw Error(ErrorKind::Usage, "scan curves are written as svg or csv");
        }
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.is_numerical() ? kExitNumerical : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace bohr
