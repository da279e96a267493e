#pragma once

#include "ppwell/model.h"
#include "ppwell/specfun.h"

namespace ppwell::lapsol {

/// Controls truncation of the vertical-mode series.
struct SeriesOptions {
    double tolerance = 1e-12;  ///< relative to the magnitude of the full value
    int max_terms = 100000;
    bool accelerate = true;    ///< tail acceleration for slowly decaying modes
    bool strict = true;        ///< throw NumericalError when not converged
};

struct SeriesDiagnostics {
    int terms_used = 0;
    double tail_estimate = 0.0;  ///< estimated relative remainder
    bool converged = true;
};

struct LaplaceValue {
    Complex value;
    SeriesDiagnostics diagnostics;
};

/// sqrt(p' + beta^2 pi^2 n^2), principal branch.
Complex phi_n(int n, Complex p_prime, double beta);

/// Point drawdown of the full model (finite radius, storage, partial
/// penetration, anisotropy). Requires a point observation.
LaplaceValue sbar_unified(Complex p_prime, const DimensionlessScenario& sc,
                          const SeriesOptions& opts = {});

/// Drawdown averaged over [z_D1, z_D2]; the scenario's own observation is ignored.
LaplaceValue sbar_averaged(Complex p_prime, const DimensionlessScenario& sc, double z_D1,
                           double z_D2, const SeriesOptions& opts = {});

/// Dispatches on the scenario's observation (point or interval).
LaplaceValue sbar_observed(Complex p_prime, const DimensionlessScenario& sc,
                           const SeriesOptions& opts = {});

/// Fully penetrating finite-radius well with storage.
Complex sbar_papadopulos_cooper(Complex p_prime, double r_wD, double C_wD);

/// Partial penetration and finite radius, no wellbore storage. Point or interval
/// observation per the scenario.
LaplaceValue sbar_yang(Complex p_prime, const DimensionlessScenario& sc,
                       const SeriesOptions& opts = {});

/// Partial penetration, line sink, no storage. Point or interval observation.
LaplaceValue sbar_hantush(Complex p_prime, const DimensionlessScenario& sc,
                          const SeriesOptions& opts = {});

/// Fully penetrating line sink: 2 K0(sqrt p') / p'.
Complex sbar_theis(Complex p_prime);

} // namespace ppwell::lapsol
