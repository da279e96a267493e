#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ppwell/laplace_inv.h"
#include "ppwell/lapsol.h"
#include "ppwell/model.h"

namespace ppwell::timedomain {

enum class ModelVariant { Unified, PapadopulosCooper, Yang, Hantush, Theis };

/// "unified", "papadopulos-cooper", "yang", "hantush", "theis".
std::string variant_name(ModelVariant v);
/// Accepts the names above (also "pc"); throws ValidationError otherwise.
ModelVariant parse_variant(std::string_view name);

struct SolverConfig {
    laplace_inv::InversionConfig inversion;
    lapsol::SeriesOptions series;
    unsigned threads = 1;  ///< curve evaluation only; output order is fixed
};

struct PointDiagnostics {
    int series_terms = 0;              ///< max over contour nodes
    double series_tail = 0.0;          ///< max relative tail estimate
    std::size_t inversion_terms = 0;   ///< transform evaluations on the contour
    double inversion_increment = 0.0;  ///< last continued-fraction increment
    bool clamped = false;              ///< tiny negative value set to zero
};

struct DrawdownPoint {
    double t_s = 0.0;
    double s_D = 0.0;
    PointDiagnostics diagnostics;
};

struct DrawdownCurve {
    std::vector<DrawdownPoint> points;
    DimensionlessScenario scenario;
    ModelVariant variant = ModelVariant::Unified;
};

/// Values in [-kNegativeFloor, 0) are clamped to zero; below that is an error.
inline constexpr double kNegativeFloor = 1e-10;

/// Laplace-space drawdown of the variant as a function of p' (conjugate to t_s).
/// Series diagnostics are folded into `sink` when given (not thread-safe).
laplace_inv::Transform transform(const DimensionlessScenario& sc, ModelVariant variant,
                                 const lapsol::SeriesOptions& series,
                                 PointDiagnostics* sink = nullptr);

/// s_D(t_s) by inversion in p'.
DrawdownPoint drawdown_point(double t_s, const DimensionlessScenario& sc, ModelVariant variant,
                             const SolverConfig& cfg = {});
double drawdown(double t_s, const DimensionlessScenario& sc, ModelVariant variant,
                const SolverConfig& cfg = {});

/// s_D(t_s) by inverting G(p_D) = sbar(p_D / t_s) / t_s at unit time.
DrawdownPoint drawdown_unit_time(double t_s, const DimensionlessScenario& sc,
                                 ModelVariant variant, const SolverConfig& cfg = {});

/// Screen-averaged drawdown at the well face; requires r_wD = 1.
double pumping_well_drawdown(double t_s, const DimensionlessScenario& sc,
                             const SolverConfig& cfg = {});

/// Log-spaced grid including both endpoints.
std::vector<double> log_grid(double t_min, double t_max, int points_per_decade);

/// Curve on log_grid; one inversion contour per decade of t_s.
DrawdownCurve curve(const DimensionlessScenario& sc, ModelVariant variant, double t_min,
                    double t_max, int points_per_decade, const SolverConfig& cfg = {});

/// 4 t_s / (C_wD r_wD^2): drawdown while the well is fed from storage alone.
double early_asymptote(double t_s, const DimensionlessScenario& sc);

} // namespace ppwell::timedomain
