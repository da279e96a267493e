#pragma once

// Summation engine for the vertical-mode series shared by the partially
// penetrating solutions. Internal to the library.

#include <vector>

#include "ppwell/lapsol.h"

namespace ppwell::detail {

enum class ModeKind {
    Storage,  ///< K0(phi) / (w phi K1(w phi) + c w^2 phi^2 K0(w phi))
    LineSink  ///< K0(phi)
};

/// Amplitude of mode n (n may be non-integer for quadrature).
struct ModeModel {
    Complex p;
    double beta = 0.0;
    double w = 1.0;  ///< r_wD
    double c = 0.0;  ///< C_wD / (2 (l_D - d_D))
    ModeKind kind = ModeKind::Storage;

    Complex phi(double n) const;
    Complex value(double n) const;
};

/// Vertical weights: point observation at z, or interval [z1, z2].
struct SeriesGeometry {
    double l = 1.0;
    double d = 0.0;
    bool averaged = false;
    double z = 0.0;
    double z1 = 0.0;
    double z2 = 1.0;
};

/// One trigonometric component amp * {cos|sin}(n pi theta), theta in [0, 1].
struct TrigComponent {
    bool cosine = true;
    double theta = 0.0;
    double amp = 0.0;
};

std::vector<TrigComponent> trig_components(const SeriesGeometry& g);

struct SeriesOutcome {
    Complex sum;
    lapsol::SeriesDiagnostics diagnostics;
};

/// Sums  S = sum_{n>=1} mode(n) W(n) / n^q  where W is the product of sine
/// differences (and the cosine for a point observation) and q = 1 for a point,
/// 2 for an interval. Convergence is judged relative to |head + S|.
SeriesOutcome sum_modes(const ModeModel& mode, const SeriesGeometry& geom, Complex head,
                        const lapsol::SeriesOptions& opts);

} // namespace ppwell::detail
