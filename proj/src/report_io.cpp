#include "bohr/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "bohr/error.hpp"

namespace bohr {

namespace {

std::string format_with(const char* pattern, double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

nlohmann::json theorem_to_json(const TheoremId& theorem) {
  nlohmann::json doc{{"tag", std::string(to_string(theorem.tag))}};
  switch (theorem.tag) {
    case TheoremTag::ImprovedM: doc["m"] = theorem.m; break;
    case TheoremTag::Area: doc["lambda"] = theorem.lambda; break;
    case TheoremTag::Rogosinski:
      doc["N"] = theorem.N;
      doc["variant"] = to_string(theorem.variant);
      break;
    default: break;
  }
  return doc;
}

TheoremId theorem_from_json(const nlohmann::json& doc) {
  TheoremId theorem;
  theorem.tag = parse_theorem_tag(doc.at("tag").get<std::string>());
  if (doc.contains("m")) theorem.m = doc.at("m").get<int>();
  if (doc.contains("lambda")) theorem.lambda = doc.at("lambda").get<double>();
  if (doc.contains("N")) theorem.N = doc.at("N").get<int>();
  if (doc.contains("variant")) {
    theorem.variant = parse_variant(doc.at("variant").get<std::string>().c_str());
  }
  return theorem;
}

// Maps data coordinates onto an SVG canvas with the origin at the bottom left.
struct Plot {
  double width = 640, height = 420, left = 70, right = 20, top = 40, bottom = 55;
  double x0, x1, y0, y1;

  double px(double x) const { return left + (x - x0) / (x1 - x0) * (width - left - right); }
  double py(double y) const {
    return height - bottom - (y - y0) / (y1 - y0) * (height - top - bottom);
  }
};

void svg_axes(const Plot& p, std::string_view title, std::string_view x_label,
              std::string_view y_label, int x_ticks, int y_ticks, std::ostream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << p.width << "\" height=\""
      << p.height << "\" viewBox=\"0 0 " << p.width << ' ' << p.height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << p.width / 2 << "\" y=\"22\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"14\">"
      << title << "</text>\n";
  const double xa = p.px(p.x0), xb = p.px(p.x1), ya = p.py(p.y0), yb = p.py(p.y1);
  out << "<line x1=\"" << xa << "\" y1=\"" << ya << "\" x2=\"" << xb << "\" y2=\"" << ya
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << xa << "\" y1=\"" << ya << "\" x2=\"" << xa << "\" y2=\"" << yb
      << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= x_ticks; ++i) {
    const double x = p.x0 + (p.x1 - p.x0) * i / x_ticks;
    out << "<line x1=\"" << p.px(x) << "\" y1=\"" << ya << "\" x2=\"" << p.px(x) << "\" y2=\""
        << ya + 5 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << p.px(x) << "\" y=\"" << ya + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << format_with("%.4g", x) << "</text>\n";
  }
  for (int i = 0; i <= y_ticks; ++i) {
    const double y = p.y0 + (p.y1 - p.y0) * i / y_ticks;
    out << "<line x1=\"" << xa - 5 << "\" y1=\"" << p.py(y) << "\" x2=\"" << xa << "\" y2=\""
        << p.py(y) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << xa - 8 << "\" y=\"" << p.py(y) + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << format_with("%.3g", y) << "</text>\n";
  }
  out << "<text x=\"" << (xa + xb) / 2 << "\" y=\"" << p.height - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << x_label
      << "</text>\n";
  out << "<text x=\"16\" y=\"" << (ya + yb) / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 16 "
      << (ya + yb) / 2 << ")\">" << y_label << "</text>\n";
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  if (text == "svg") return OutputFormat::Svg;
  throw Error(ErrorKind::Usage, "unknown format '" + std::string(text) + "'");
}

OutputFormat format_from_path(std::string_view path, OutputFormat fallback) {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return fallback;
  const std::string_view ext = path.substr(dot + 1);
  if (ext == "csv") return OutputFormat::Csv;
  if (ext == "json") return OutputFormat::Json;
  if (ext == "svg") return OutputFormat::Svg;
  return fallback;
}

std::string format_exact(double x) { return format_with("%.17g", x); }
std::string format_text(double x) { return format_with("%.15g", x); }

void write_report_csv(const VerificationReport& report, std::ostream& out) {
  out << kReportCsvHeader << '\n';
  for (const SampleOutcome& s : report.samples) {
    out << s.sample_index << ',' << to_string(s.spec.kind) << ',';
    if (s.spec.seed) out << *s.spec.seed;
    out << ',' << format_exact(s.r) << ',' << format_exact(s.value) << ','
        << format_exact(s.upper_slack) << ',' << (s.pass ? "true" : "false") << '\n';
  }
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json samples = nlohmann::json::array();
  for (const SampleOutcome& s : report.samples) {
    samples.push_back({{"sample_index", s.sample_index},
                       {"spec", serialize(s.spec)},
                       {"r", s.r},
                       {"value", s.value},
                       {"upper_slack", s.upper_slack},
                       {"pass", s.pass}});
  }
  return {{"schema_version", kReportSchemaVersion},
          {"theorem", theorem_to_json(report.theorem)},
          {"gamma", report.gamma},
          {"claimed_radius", report.claimed_radius},
          {"tol_verify", report.tol_verify},
          {"master_seed", report.master_seed},
          {"violations", report.violations},
          {"max_value_inside_radius", report.max_value_inside_radius},
          {"samples", std::move(samples)}};
}

VerificationReport report_from_json(const nlohmann::json& doc) {
  if (doc.at("schema_version").get<int>() != kReportSchemaVersion) {
    throw Error(ErrorKind::InvalidArgument, "unsupported report schema version");
  }
  VerificationReport report;
  report.theorem = theorem_from_json(doc.at("theorem"));
  report.gamma = doc.at("gamma").get<double>();
  report.claimed_radius = doc.at("claimed_radius").get<double>();
  report.tol_verify = doc.at("tol_verify").get<double>();
  report.master_seed = doc.at("master_seed").get<std::uint64_t>();
  report.violations = doc.at("violations").get<std::size_t>();
  report.max_value_inside_radius = doc.at("max_value_inside_radius").get<double>();
  for (const auto& s : doc.at("samples")) {
    SampleOutcome out;
    out.sample_index = s.at("sample_index").get<std::size_t>();
    out.spec = parse_function_spec(s.at("spec").get<std::string>());
    out.r = s.at("r").get<double>();
    out.value = s.at("value").get<double>();
    out.upper_slack = s.at("upper_slack").get<double>();
    out.pass = s.at("pass").get<bool>();
    report.samples.push_back(std::move(out));
  }
  return report;
}

void write_report_json(const VerificationReport& report, std::ostream& out) {
  out << report_to_json(report).dump(2) << '\n';
}

void write_gamma_star_csv(const std::vector<GammaStarRow>& rows, std::ostream& out) {
  out << "m,gamma_star\n";
  for (const auto& row : rows) out << row.m << ',' << format_exact(row.gamma_star) << '\n';
}

void write_gamma_star_json(const std::vector<GammaStarRow>& rows, std::ostream& out) {
  nlohmann::json table = nlohmann::json::array();
  for (const auto& row : rows) table.push_back({{"m", row.m}, {"gamma_star", row.gamma_star}});
  out << nlohmann::json{{"schema_version", kReportSchemaVersion}, {"rows", std::move(table)}}
             .dump(2)
      << '\n';
}

void write_gamma_star_svg(const std::vector<GammaStarRow>& rows, std::ostream& out) {
  Plot p;
  p.x0 = rows.empty() ? 0.0 : rows.front().m;
  p.x1 = rows.empty() ? 1.0 : rows.back().m;
  if (p.x1 <= p.x0) p.x1 = p.x0 + 1.0;
  p.y0 = 0.0;
  p.y1 = 0.0;
  for (const auto& row : rows) p.y1 = std::max(p.y1, row.gamma_star);
  p.y1 = p.y1 > 0.0 ? p.y1 * 1.05 : 1.0;
  svg_axes(p, "Roots of (1-g)^m (3+g) + g^2 - 1 = 0", "m", "gamma_*(m)", 7, 6, out);
  out << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.8\" points=\"";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out << ' ';
    out << format_with("%.2f", p.px(rows[i].m)) << ',' << format_with("%.2f", p.py(rows[i].gamma_star));
  }
  out << "\"/>\n</svg>\n";
}

void write_scan_svg(const std::vector<CurvePoint>& curve, double scanned_radius,
                    double claimed, std::string_view title, std::ostream& out) {
  Plot p;
  p.x0 = 0.0;
  p.x1 = curve.empty() ? 1.0 : curve.back().r;
  p.y0 = 0.0;
  p.y1 = 1.2;
  for (const auto& pt : curve) {
    if (std::isfinite(pt.value)) p.y1 = std::max(p.y1, std::min(pt.value, 2.0));
  }
  svg_axes(p, title, "r", "functional", 6, 6, out);
  out << "<line x1=\"" << p.px(p.x0) << "\" y1=\"" << p.py(1.0) << "\" x2=\"" << p.px(p.x1)
      << "\" y2=\"" << p.py(1.0) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  for (double x : {claimed, scanned_radius}) {
    if (x > p.x0 && x < p.x1) {
      out << "<line x1=\"" << p.px(x) << "\" y1=\"" << p.py(p.y0) << "\" x2=\"" << p.px(x)
          << "\" y2=\"" << p.py(p.y1) << "\" stroke=\""
          << (x == claimed ? "#b03030" : "#208020") << "\" stroke-dasharray=\"2 2\"/>\n";
    }
  }
  out << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.8\" points=\"";
  bool first = true;
  for (const auto& pt : curve) {
    if (!std::isfinite(pt.value)) continue;
    if (!first) out << ' ';
    first = false;
    out << format_with("%.2f", p.px(pt.r)) << ','
        << format_with("%.2f", p.py(std::min(pt.value, p.y1)));
  }
  out << "\"/>\n</svg>\n";
}

void emit_report(const VerificationReport& report, OutputFormat format, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  switch (format) {
    case OutputFormat::Csv: write_report_csv(report, file); break;
    case OutputFormat::Json: write_report_json(report, file); break;
    case OutputFormat::Svg:
      throw Error(ErrorKind::Usage, "verification reports are written as csv or json");
  }
  file.flush();
  if (!file) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

}  // namespace bohr
