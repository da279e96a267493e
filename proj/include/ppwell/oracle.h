#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ppwell/lapsol.h"
#include "ppwell/timedomain.h"

namespace ppwell::oracle {

/// Outcome of one verification check. pass <=> max_rel_error <= tolerance.
struct CheckReport {
    std::string check;
    std::string scenario;
    double max_rel_error = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    std::string worst_location;
};

/// Laplace transform with a closed-form original.
struct AnalyticPair {
    std::string name;       ///< short key, e.g. "exp"
    std::string transform;  ///< e.g. "1/(p+1)"
    laplace_inv::Transform f;
    double (*original)(double);
};

/// unit, ramp, exp, sin, diffusion, erfc.
const std::vector<AnalyticPair>& analytic_pairs();
/// Throws ValidationError for an unknown name.
const AnalyticPair& analytic_pair(const std::string& name);

/// Folds one observed error into a report.
void record(CheckReport& r, double rel_error, const std::string& location);

/// E1(1 / (4 t_s)).
double theis_time_domain(double t_s);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Quadrature of the point solution over [z1, z2] against the closed-form average.
CheckReport quadrature_average_check(const DimensionlessScenario& sc, double z1, double z2,
                                     Complex p_prime, int nodes = 64, double tolerance = 1e-10,
                                     const lapsol::SeriesOptions& series = {});

struct ReductionTolerances {
    double exact = 1e-13;          ///< algebraic identities
    double hantush_limit = 1e-4;   ///< r_wD = 1e-6 against the line sink
    double time_domain = 1e-8;     ///< identities after inversion
};

/// Reproducible random scenarios with point observations.
std::vector<DimensionlessScenario> random_family(int count, std::uint64_t seed);

/// Nodes of a default inversion contour for a time drawn from [1e-1, 1e1].
std::vector<Complex> contour_points(int count, double t_s);

/// All four reduction identities in Laplace space (and, when asked, in time).
std::vector<CheckReport> reduction_suite(const std::vector<DimensionlessScenario>& family,
                                         int points_per_scenario,
                                         const ReductionTolerances& tol = {},
                                         bool time_domain = true);

/// Named suites: reductions, averaging, asymptotes, inversion, bessel, all.
/// Throws ValidationError for an unknown name.
std::vector<CheckReport> run_suite(const std::string& name);

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Reference scenarios used throughout the checks.
DimensionlessScenario figure2_well();       ///< pumping well, screen-averaged
DimensionlessScenario figure2_point();      ///< pumping well face at z_D = 0.25
DimensionlessScenario figure4_piezometer(); ///< r_D = 0.2, r_wD = 0.1, z_D = 0.5

} // namespace ppwell::oracle
