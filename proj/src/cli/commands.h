#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ppwell/oracle.h"
#include "ppwell/timedomain.h"

namespace ppwell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitCheckFailed = 3;

/// Everything that determines the output of one run.
struct RunManifest {
    std::string scenario_path;
    std::string subcommand;
    std::optional<timedomain::ModelVariant> variant;
    std::optional<double> ts_min;
    std::optional<double> ts_max;
    std::optional<int> per_decade;
    std::optional<int> inv_terms;
    std::optional<double> inv_tol;
    unsigned threads = 1;
    std::string out;  ///< file (curve), directory (figure) or empty for stdout
};

/// One curve of a figure family.
struct FigureCurve {
    std::string label;
    DimensionlessScenario scenario;
    timedomain::ModelVariant variant = timedomain::ModelVariant::Unified;
};

/// Curves for figure n in 2..7; throws ValidationError otherwise.
/// fig7_storage selects C_wD for figure 7 (1e3 by default).
std::vector<FigureCurve> figure_family(int n, double fig7_storage = 1e3);

/// Provenance comment line (no trailing newline).
std::string provenance_line(const DimensionlessScenario& sc, timedomain::ModelVariant variant,
                            const timedomain::SolverConfig& cfg);

/// Provenance line, header and one row per point, 17 significant digits.
void write_csv(std::ostream& out, const timedomain::DrawdownCurve& curve,
               const timedomain::SolverConfig& cfg);

/// One line per check plus a summary line.
void write_report_table(std::ostream& out, const std::vector<oracle::CheckReport>& reports);
/// Same reports as CSV with a header row.
void write_report_csv(std::ostream& out, const std::vector<oracle::CheckReport>& reports);

/// Entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ppwell::cli
