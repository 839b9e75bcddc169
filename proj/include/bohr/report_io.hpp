#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bohr/harness.hpp"
#include "json.hpp"

namespace bohr {

enum class OutputFormat { Csv, Json, Svg };

OutputFormat parse_output_format(std::string_view text);
/// Format implied by a file extension; fallback when there is none.
OutputFormat format_from_path(std::string_view path, OutputFormat fallback);

inline constexpr int kReportSchemaVersion = 1;
inline constexpr std::string_view kReportCsvHeader =
    "sample_index,kind,seed,r,value,upper_slack,pass";

/// printf("%.17g"), which round-trips every binary64 value.
std::string format_exact(double x);
/// printf("%.15g") for human-facing text.
std::string format_text(double x);

void write_report_csv(const VerificationReport& report, std::ostream& out);

nlohmann::json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& doc);
void write_report_json(const VerificationReport& report, std::ostream& out);

void write_gamma_star_csv(const std::vector<GammaStarRow>& rows, std::ostream& out);
void write_gamma_star_json(const std::vector<GammaStarRow>& rows, std::ostream& out);
/// Polyline of gamma_* against m with labelled axes.
void write_gamma_star_svg(const std::vector<GammaStarRow>& rows, std::ostream& out);

struct CurvePoint {
  double r = 0.0;
  double value = 0.0;
};
/// Functional against r, with the level 1 and the scanned radius marked.
void write_scan_svg(const std::vector<CurvePoint>& curve, double scanned_radius,
                    double claimed_radius, std::string_view title, std::ostream& out);

/// Writes a verification report as CSV or JSON to path.
void emit_report(const VerificationReport& report, OutputFormat format, const std::string& path);

}  // namespace bohr
