#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppwell/timedomain.h"

namespace ppwell {

/// One scenario document: parameters, solver settings and optional run
/// settings. JSON layout:
///
///   {
///     "id": "fig2",
///     "dimensionless": {"r_D": 0.02, "r_wD": 1, "C_wD": 100, "d_D": 0, "l_D": 0.5,
///                       "K_D": 1, "z_D": 0.25},          // or "z_D1"/"z_D2"
///     "dimensional":   {"Q": .., "K_r": .., "K_z": .., "S_s": .., "b": .., "r_w": ..,
///                       "d": .., "l": .., "C_w": .., "r": .., "z": ..},  // or "z1"/"z2"
///     "inversion": {"terms_m": 20, "alpha": 0, "period_factor": 2, "tolerance": 1e-9},
///     "series": {"tolerance": 1e-12, "max_terms": 100000},
///     "variant": "unified",
///     "t_s": {"min": 1e-6, "max": 1e6, "per_decade": 20}
///   }
///
/// At least one of "dimensionless"/"dimensional" is required; when both are
/// present the dimensionless block is used and the two must agree.
struct ScenarioDocument {
    std::string id;
    DimensionlessScenario scenario;
    std::optional<DimensionalScenario> dimensional;
    std::optional<ObservationSpec> observation;
    timedomain::SolverConfig solver;
    std::optional<timedomain::ModelVariant> variant;
    std::optional<double> ts_min;
    std::optional<double> ts_max;
    std::optional<int> per_decade;
};

/// Parses a single document or an array of documents. Throws ValidationError.
std::vector<ScenarioDocument> parse_scenarios(const std::string& json_text);
std::vector<ScenarioDocument> load_scenarios(const std::string& path);

/// Canonical text of the resolved parameters (used for provenance hashing).
std::string canonical_form(const DimensionlessScenario& sc);

/// 64-bit FNV-1a of a string, as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

} // namespace ppwell
