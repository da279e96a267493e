#include "ppwell/scenario_io.h"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ppwell {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what)
{
    throw ValidationError("scenario: " + what);
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where)
{
    if (!obj.is_object()) {
        fail(where + " must be an object");
    }
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.count(key)) {
            fail("unknown key '" + key + "' in " + where);
        }
    }
}

double number(const json& obj, const std::string& key, const std::string& where)
{
    if (!obj.contains(key)) {
        fail("missing key '" + key + "' in " + where);
    }
    const auto& v = obj.at(key);
    if (!v.is_number()) {
        fail("'" + key + "' in " + where + " must be a number");
    }
    return v.get<double>();
}

std::optional<double> optional_number(const json& obj, const std::string& key,
                                      const std::string& where)
{
    if (!obj.contains(key)) {
        return std::nullopt;
    }
    return number(obj, key, where);
}

Depth parse_depth(const json& obj, const char* point, const char* lo, const char* hi,
                  const std::string& where)
{
    const bool has_point = obj.contains(point);
    const bool has_interval = obj.contains(lo) || obj.contains(hi);
    if (has_point == has_interval) {
        fail(where + " needs exactly one of '" + point + "' or '" + lo + "'/'" + hi + "'");
    }
    if (has_point) {
        return PointDepth{number(obj, point, where)};
    }
    return DepthInterval{number(obj, lo, where), number(obj, hi, where)};
}

DimensionlessScenario parse_dimensionless(const json& obj)
{
    const std::string where = "dimensionless block";
    check_keys(obj, {"r_D", "r_wD", "C_wD", "d_D", "l_D", "K_D", "z_D", "z_D1", "z_D2"}, where);
    DimensionlessScenario sc;
    sc.r_D = number(obj, "r_D", where);
    sc.r_wD = number(obj, "r_wD", where);
    sc.C_wD = number(obj, "C_wD", where);
    sc.d_D = number(obj, "d_D", where);
    sc.l_D = number(obj, "l_D", where);
    sc.K_D = number(obj, "K_D", where);
    sc.observation = parse_depth(obj, "z_D", "z_D1", "z_D2", where);
    sc.validate();
    return sc;
}

std::pair<DimensionalScenario, ObservationSpec> parse_dimensional(const json& obj)
{
    const std::string where = "dimensional block";
    check_keys(obj, {"Q", "K_r", "K_z", "S_s", "b", "r_w", "d", "l", "C_w", "r_c", "r", "z", "z1", "z2"},
               where);
    DimensionalScenario dim;
    dim.Q = number(obj, "Q", where);
    dim.K_r = number(obj, "K_r", where);
    dim.K_z = number(obj, "K_z", where);
    dim.S_s = number(obj, "S_s", where);
    dim.b = number(obj, "b", where);
    dim.r_w = number(obj, "r_w", where);
    dim.d = number(obj, "d", where);
    dim.l = number(obj, "l", where);
    if (obj.contains("C_w") && obj.contains("r_c")) {
        fail("give either 'C_w' or the casing radius 'r_c', not both");
    }
    dim.C_w = obj.contains("r_c") ? DimensionalScenario::casing_storage(number(obj, "r_c", where))
                                  : number(obj, "C_w", where);
    ObservationSpec obs;
    obs.r = number(obj, "r", where);
    obs.depth = parse_depth(obj, "z", "z1", "z2", where);
    return {dim, obs};
}

bool close(double a, double b)
{
    return std::abs(a - b) <= 1e-9 * std::max(std::abs(a), std::abs(b)) + 1e-14;
}

void check_consistent(const DimensionlessScenario& given, const DimensionlessScenario& derived)
{
    auto compare = [](double a, double b, const char* name) {
        if (!close(a, b)) {
            std::ostringstream msg;
            msg << "dimensional and dimensionless blocks disagree on " << name << " (" << a
                << " vs " << b << ")";
            fail(msg.str());
        }
    };
    compare(given.r_D, derived.r_D, "r_D");
    compare(given.r_wD, derived.r_wD, "r_wD");
    compare(given.C_wD, derived.C_wD, "C_wD");
    compare(given.d_D, derived.d_D, "d_D");
    compare(given.l_D, derived.l_D, "l_D");
    compare(given.K_D, derived.K_D, "K_D");
    if (given.is_point() != derived.is_point()) {
        fail("dimensional and dimensionless blocks disagree on the observation kind");
    }
    if (given.is_point()) {
        compare(std::get<PointDepth>(given.observation).z,
                std::get<PointDepth>(derived.observation).z, "z_D");
    } else {
        const auto& a = std::get<DepthInterval>(given.observation);
        const auto& b = std::get<DepthInterval>(derived.observation);
        compare(a.z1, b.z1, "z_D1");
        compare(a.z2, b.z2, "z_D2");
    }
}

ScenarioDocument parse_document(const json& obj, std::size_t index)
{
    check_keys(obj, {"id", "dimensionless", "dimensional", "inversion", "series", "variant", "t_s"},
               "scenario document");
    ScenarioDocument doc;
    if (obj.contains("id")) {
        if (!obj["id"].is_string()) {
            fail("'id' must be a string");
        }
        doc.id = obj["id"].get<std::string>();
    } else {
        doc.id = "scenario" + std::to_string(index);
    }

    const bool has_dimless = obj.contains("dimensionless");
    const bool has_dim = obj.contains("dimensional");
    if (!has_dimless && !has_dim) {
        fail("document '" + doc.id + "' needs a 'dimensionless' or 'dimensional' block");
    }
    if (has_dim) {
        auto [dim, obs] = parse_dimensional(obj["dimensional"]);
        doc.dimensional = dim;
        doc.observation = obs;
        doc.scenario = nondimensionalize(dim, obs);
    }
    if (has_dimless) {
        const auto given = parse_dimensionless(obj["dimensionless"]);
        if (has_dim) {
            check_consistent(given, doc.scenario);
        }
        doc.scenario = given;
    }

    if (obj.contains("inversion")) {
        const auto& inv = obj["inversion"];
        check_keys(inv, {"terms_m", "alpha", "period_factor", "tolerance", "adaptive_shift"},
                   "inversion block");
        auto& c = doc.solver.inversion;
        if (inv.contains("terms_m")) {
            if (!inv["terms_m"].is_number_integer()) {
                fail("'terms_m' must be an integer");
            }
            c.terms_m = inv["terms_m"].get<int>();
        }
        c.contour_shift_alpha =
            optional_number(inv, "alpha", "inversion block").value_or(c.contour_shift_alpha);
        c.scaled_period_factor = optional_number(inv, "period_factor", "inversion block")
                                     .value_or(c.scaled_period_factor);
        c.tolerance = optional_number(inv, "tolerance", "inversion block").value_or(c.tolerance);
        if (inv.contains("adaptive_shift")) {
            if (!inv["adaptive_shift"].is_boolean()) {
                fail("'adaptive_shift' must be a boolean");
            }
            c.adaptive_shift = inv["adaptive_shift"].get<bool>();
        }
        c.validate();
    }
    if (obj.contains("series")) {
        const auto& ser = obj["series"];
        check_keys(ser, {"tolerance", "max_terms"}, "series block");
        auto& s = doc.solver.series;
        s.tolerance = optional_number(ser, "tolerance", "series block").value_or(s.tolerance);
        if (!(s.tolerance > 0.0 && s.tolerance < 1.0)) {
            fail("series tolerance must lie in (0, 1)");
        }
        if (ser.contains("max_terms")) {
            if (!ser["max_terms"].is_number_integer() || ser["max_terms"].get<long long>() < 64) {
                fail("series 'max_terms' must be an integer >= 64");
            }
            s.max_terms = ser["max_terms"].get<int>();
        }
    }
    if (obj.contains("variant")) {
        if (!obj["variant"].is_string()) {
            fail("'variant' must be a string");
        }
        doc.variant = timedomain::parse_variant(obj["variant"].get<std::string>());
    }
    if (obj.contains("t_s")) {
        const auto& ts = obj["t_s"];
        check_keys(ts, {"min", "max", "per_decade"}, "t_s block");
        doc.ts_min = optional_number(ts, "min", "t_s block");
        doc.ts_max = optional_number(ts, "max", "t_s block");
        if (ts.contains("per_decade")) {
            if (!ts["per_decade"].is_number_integer()) {
                fail("'per_decade' must be an integer");
            }
            doc.per_decade = ts["per_decade"].get<int>();
        }
    }
    return doc;
}

} // namespace

std::vector<ScenarioDocument> parse_scenarios(const std::string& json_text)
{
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
    std::vector<ScenarioDocument> docs;
    if (root.is_array()) {
        if (root.empty()) {
            fail("empty scenario array");
        }
        for (std::size_t i = 0; i < root.size(); ++i) {
            docs.push_back(parse_document(root[i], i));
        }
    } else {
        docs.push_back(parse_document(root, 0));
    }
    return docs;
}

std::vector<ScenarioDocument> load_scenarios(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        fail("cannot open '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_scenarios(text.str());
}

std::string canonical_form(const DimensionlessScenario& sc)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, "r_D=%.17g;r_wD=%.17g;C_wD=%.17g;d_D=%.17g;l_D=%.17g;K_D=%.17g;",
                  sc.r_D, sc.r_wD, sc.C_wD, sc.d_D, sc.l_D, sc.K_D);
    std::string out = buf;
    if (const auto* pt = std::get_if<PointDepth>(&sc.observation)) {
        std::snprintf(buf, sizeof buf, "z_D=%.17g", pt->z);
    } else {
        const auto& iv = std::get<DepthInterval>(sc.observation);
        std::snprintf(buf, sizeof buf, "z_D1=%.17g;z_D2=%.17g", iv.z1, iv.z2);
    }
    return out + buf;
}

std::string fnv1a_hex(const std::string& text)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace ppwell
