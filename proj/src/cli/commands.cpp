#include "cli/commands.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ppwell/scenario_io.h"
#include "ppwell/specfun.h"

namespace ppwell::cli {

namespace {

using timedomain::ModelVariant;

constexpr double kDefaultTsMin = 1e-6;
constexpr double kDefaultTsMax = 1e6;
constexpr int kDefaultPerDecade = 20;

std::string g17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Shortest text that round-trips; used for settings in the provenance line.
std::string shortest(double v)
{
    char buf[40];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

// 15 significant digits, trailing zeros kept.
std::string g15(double v)
{
    std::ostringstream s;
    s << std::setprecision(15) << std::showpoint << v;
    return s.str();
}

// Labels such as "0.25" or "1000" for file names.
std::string label_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string one_line(std::string s)
{
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

double parse_number(const std::string& text, const std::string& what)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw ValidationError(what + " must be a number, got '" + text + "'");
    }
    return v;
}

void apply_overrides(timedomain::SolverConfig& cfg, const RunManifest& m)
{
    if (m.inv_terms) {
        cfg.inversion.terms_m = *m.inv_terms;
    }
    if (m.inv_tol) {
        cfg.inversion.tolerance = *m.inv_tol;
    }
    cfg.inversion.validate();
    cfg.threads = std::max(1u, m.threads);
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw ValidationError("cannot open output file '" + path + "'");
    }
    return file;
}

timedomain::DrawdownCurve compute(const DimensionlessScenario& sc, ModelVariant variant,
                                  double ts_min, double ts_max, int per_decade,
                                  const timedomain::SolverConfig& cfg)
{
    return timedomain::curve(sc, variant, ts_min, ts_max, per_decade, cfg);
}

int cmd_curve(const RunManifest& m, std::ostream& out)
{
    const auto docs = load_scenarios(m.scenario_path);
    if (docs.size() > 1 && m.out.empty()) {
        throw ValidationError("scenario file holds " + std::to_string(docs.size()) +
                              " documents; give --out <directory>");
    }
    for (const auto& doc : docs) {
        auto cfg = doc.solver;
        apply_overrides(cfg, m);
        const ModelVariant variant = m.variant.value_or(doc.variant.value_or(ModelVariant::Unified));
        const double lo = m.ts_min.value_or(doc.ts_min.value_or(kDefaultTsMin));
        const double hi = m.ts_max.value_or(doc.ts_max.value_or(kDefaultTsMax));
        const int density = m.per_decade.value_or(doc.per_decade.value_or(kDefaultPerDecade));
        const auto c = compute(doc.scenario, variant, lo, hi, density, cfg);

        if (m.out.empty()) {
            write_csv(out, c, cfg);
        } else if (docs.size() == 1) {
            auto file = open_output(m.out);
            write_csv(file, c, cfg);
        } else {
            std::filesystem::create_directories(m.out);
            const auto path = (std::filesystem::path(m.out) / (doc.id + ".csv")).string();
            auto file = open_output(path);
            write_csv(file, c, cfg);
            out << path << "\n";
        }
    }
    return kExitOk;
}

int cmd_figure(int n, double fig7_storage, const RunManifest& m, std::ostream& out)
{
    const auto family = figure_family(n, fig7_storage);
    timedomain::SolverConfig cfg;
    apply_overrides(cfg, m);
    const double lo = m.ts_min.value_or(kDefaultTsMin);
    const double hi = m.ts_max.value_or(kDefaultTsMax);
    const int density = m.per_decade.value_or(kDefaultPerDecade);
    const std::string dir = m.out.empty() ? "." : m.out;
    std::filesystem::create_directories(dir);
    for (const auto& fc : family) {
        const auto c = compute(fc.scenario, fc.variant, lo, hi, density, cfg);
        const auto path =
            (std::filesystem::path(dir) / ("fig" + std::to_string(n) + "_" + fc.label + ".csv"))
                .string();
        auto file = open_output(path);
        write_csv(file, c, cfg);
        out << path << "\n";
    }
    return kExitOk;
}

int cmd_check(const std::string& suite, const std::string& csv_path, std::ostream& out)
{
    const auto reports = oracle::run_suite(suite);
    write_report_table(out, reports);
    if (!csv_path.empty()) {
        auto file = open_output(csv_path);
        write_report_csv(file, reports);
    }
    const bool ok = std::all_of(reports.begin(), reports.end(),
                                [](const oracle::CheckReport& r) { return r.pass; });
    return ok ? kExitOk : kExitCheckFailed;
}

double invert_pair(const std::string& name, const std::string& t_text, const RunManifest& m)
{
    const auto& pair = oracle::analytic_pair(name);
    const double t = parse_number(t_text, "time");
    if (!(t > 0.0)) {
        throw ValidationError("time must be positive, got " + t_text);
    }
    timedomain::SolverConfig cfg;
    apply_overrides(cfg, m);
    return laplace_inv::invert_at(pair.f, t, cfg.inversion).value;
}

int cmd_eval(const std::string& kind, const std::vector<std::string>& args, const RunManifest& m,
             std::ostream& out)
{
    if (kind == "k0" || kind == "k1") {
        if (args.empty() || args.size() > 2) {
            throw ValidationError(kind + " expects <re> [im]");
        }
        const Complex z(parse_number(args[0], "re"),
                        args.size() == 2 ? parse_number(args[1], "im") : 0.0);
        const Complex v = kind == "k0" ? specfun::bessel_k0(z) : specfun::bessel_k1(z);
        out << g15(v.real());
        if (args.size() == 2) {
            out << " " << g15(v.imag());
        }
        out << "\n";
        return kExitOk;
    }
    if (kind == "e1") {
        if (args.size() != 1) {
            throw ValidationError("e1 expects <u>");
        }
        const double u = parse_number(args[0], "u");
        if (!(u > 0.0)) {
            throw DomainError("e1 requires u > 0, got " + args[0]);
        }
        out << g15(specfun::exp_integral_e1(u)) << "\n";
        return kExitOk;
    }
    if (kind == "invert-pair") {
        if (args.size() != 2) {
            throw ValidationError("invert-pair expects <name> <t>");
        }
        out << g15(invert_pair(args[0], args[1], m)) << "\n";
        return kExitOk;
    }
    throw ValidationError("unknown eval kind '" + kind + "' (expected k0, k1, e1 or invert-pair)");
}

DimensionlessScenario pumping_well(double c)
{
    auto sc = oracle::figure2_well();
    sc.C_wD = c;
    return sc;
}

DimensionlessScenario piezometer(double c, double l)
{
    auto sc = oracle::figure4_piezometer();
    sc.C_wD = c;
    sc.l_D = l;
    return sc;
}

} // namespace

std::vector<FigureCurve> figure_family(int n, double fig7_storage)
{
    const std::vector<double> storage{0.0, 10.0, 1e2, 1e3, 1e4};
    std::vector<FigureCurve> out;
    switch (n) {
    case 2:
        for (auto v : {ModelVariant::Unified, ModelVariant::PapadopulosCooper, ModelVariant::Yang,
                       ModelVariant::Hantush, ModelVariant::Theis}) {
            out.push_back({timedomain::variant_name(v), pumping_well(1e2), v});
        }
        break;
    case 3:
        for (double c : storage) {
            out.push_back({"cwd_" + label_number(c), pumping_well(c), ModelVariant::Unified});
        }
        break;
    case 4:
        for (double c : storage) {
            out.push_back({"cwd_" + label_number(c), piezometer(c, 0.5), ModelVariant::Unified});
        }
        out.push_back({"yang", piezometer(0.0, 0.5), ModelVariant::Yang});
        out.push_back({"hantush", piezometer(0.0, 0.5), ModelVariant::Hantush});
        break;
    case 5:
        for (double l : {0.25, 0.5, 0.75, 1.0}) {
            out.push_back({"ld_" + label_number(l), piezometer(1e2, l), ModelVariant::Unified});
        }
        break;
    case 6:
        for (double k : {0.01, 0.1, 1.0}) {
            auto sc = piezometer(1e2, 0.25);
            sc.K_D = k;
            out.push_back({"kd_" + label_number(k), sc, ModelVariant::Unified});
        }
        break;
    case 7: {
        if (!(fig7_storage >= 0.0)) {
            throw ValidationError("figure 7 storage must be >= 0");
        }
        // Well radius fixed at 0.02 b, so r_wD = 0.02 / r_D.
        for (double r : {0.04, 0.1, 0.2, 0.5, 1.0}) {
            auto sc = piezometer(fig7_storage, 0.25);
            sc.r_D = r;
            sc.r_wD = 0.02 / r;
            out.push_back({"rd_" + label_number(r), sc, ModelVariant::Unified});
        }
        out.push_back({"theis", piezometer(fig7_storage, 0.25), ModelVariant::Theis});
        break;
    }
    default:
        throw ValidationError("figure number must be in 2..7, got " + std::to_string(n));
    }
    return out;
}

std::string provenance_line(const DimensionlessScenario& sc, ModelVariant variant,
                            const timedomain::SolverConfig& cfg)
{
    const auto& inv = cfg.inversion;
    std::ostringstream s;
    s << "# ppwell " << PPWELL_VERSION << " scenario=" << fnv1a_hex(canonical_form(sc))
      << " variant=" << timedomain::variant_name(variant) << " inversion=dehoog(M=" << inv.terms_m
      << ",alpha=" << shortest(inv.contour_shift_alpha)
      << ",factor=" << shortest(inv.scaled_period_factor) << ",tol=" << shortest(inv.tolerance)
      << ",adaptive=" << (inv.adaptive_shift ? 1 : 0)
      << ") series_tol=" << shortest(cfg.series.tolerance) << " params=" << canonical_form(sc);
    return s.str();
}

void write_csv(std::ostream& out, const timedomain::DrawdownCurve& curve,
               const timedomain::SolverConfig& cfg)
{
    out << provenance_line(curve.scenario, curve.variant, cfg) << "\n";
    out << "t_s,s_D,variant,series_terms,inversion_terms\n";
    const std::string name = timedomain::variant_name(curve.variant);
    for (const auto& pt : curve.points) {
        out << g17(pt.t_s) << "," << g17(pt.s_D) << "," << name << ","
            << pt.diagnostics.series_terms << "," << pt.diagnostics.inversion_terms << "\n";
    }
}

void write_report_table(std::ostream& out, const std::vector<oracle::CheckReport>& reports)
{
    std::size_t passed = 0;
    for (const auto& r : reports) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3e <= %.1e", r.max_rel_error, r.tolerance);
        out << (r.pass ? "PASS  " : "FAIL  ") << r.check << "  [" << buf << "]";
        if (!r.pass && !r.worst_location.empty()) {
            out << "  worst: " << r.worst_location;
        }
        out << "\n";
        passed += r.pass ? 1 : 0;
    }
    out << passed << "/" << reports.size() << " checks passed\n";
}

void write_report_csv(std::ostream& out, const std::vector<oracle::CheckReport>& reports)
{
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            q += c == '"' ? std::string("\"\"") : std::string(1, c);
        }
        return q + "\"";
    };
    out << "check,scenario,max_rel_error,tolerance,pass,worst_location\n";
    for (const auto& r : reports) {
        out << quote(r.check) << "," << quote(r.scenario) << "," << g17(r.max_rel_error) << ","
            << g17(r.tolerance) << "," << (r.pass ? "true" : "false") << ","
            << quote(r.worst_location) << "\n";
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Drawdown from a partially penetrating, finite-radius well with storage"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(PPWELL_VERSION));

    RunManifest m;
    std::string variant_text;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    m.threads = std::min(hw, 8u);

    auto add_solver_flags = [&](CLI::App* sub) {
        sub->add_option("--ts-min", m.ts_min, "smallest t_s");
        sub->add_option("--ts-max", m.ts_max, "largest t_s");
        sub->add_option("--per-decade", m.per_decade, "points per decade of t_s");
        sub->add_option("--out", m.out, "output path");
        sub->add_option("--inv-terms", m.inv_terms, "inversion terms M");
        sub->add_option("--tol", m.inv_tol, "inversion tolerance");
        sub->add_option("--threads", m.threads, "worker threads (output is order independent)");
    };

    auto* curve = app.add_subcommand("curve", "drawdown curve for a scenario file, as CSV");
    curve->add_option("--scenario", m.scenario_path, "scenario JSON file")->required();
    curve->add_option("--variant", variant_text,
                      "unified, papadopulos-cooper, yang, hantush or theis");
    add_solver_flags(curve);

    int figure_n = 0;
    double fig7_storage = 1e3;
    auto* figure = app.add_subcommand("figure", "write one CSV per curve of figure n (2..7)");
    figure->add_option("n", figure_n, "figure number")->required();
    figure->add_option("--fig7-cwd", fig7_storage,
                       "C_wD for figure 7 (default 1e3; 1e2 is the alternative)");
    add_solver_flags(figure);

    std::string suite;
    std::string check_csv;
    auto* check = app.add_subcommand("check", "run a verification suite");
    check->add_option("suite", suite, "reductions, averaging, asymptotes, inversion, bessel, all")
        ->required();
    check->add_option("--out", check_csv, "also write the report as CSV");

    std::string eval_kind;
    std::vector<std::string> eval_args;
    auto* eval = app.add_subcommand("eval", "evaluate k0, k1, e1 or invert-pair");
    eval->add_option("kind", eval_kind, "k0, k1, e1 or invert-pair")->required();
    eval->add_option("args", eval_args, "arguments");
    eval->add_option("--inv-terms", m.inv_terms, "inversion terms M");
    eval->add_option("--tol", m.inv_tol, "inversion tolerance");

    std::string pair_name, pair_time;
    auto* invert = app.add_subcommand("invert", "invert an analytic transform pair at time t");
    invert->add_option("pair", pair_name, "unit, ramp, exp, sin, diffusion or erfc")->required();
    invert->add_option("t", pair_time, "time")->required();
    invert->add_option("--inv-terms", m.inv_terms, "inversion terms M");
    invert->add_option("--tol", m.inv_tol, "inversion tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << PPWELL_VERSION << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "ppwell: error[validation]: " << one_line(e.what()) << "\n";
        return kExitValidation;
    }

    try {
        if (!variant_text.empty()) {
            m.variant = timedomain::parse_variant(variant_text);
        }
        if (*curve) {
            m.subcommand = "curve";
            return cmd_curve(m, out);
        }
        if (*figure) {
            m.subcommand = "figure";
            return cmd_figure(figure_n, fig7_storage, m, out);
        }
        if (*check) {
            return cmd_check(suite, check_csv, out);
        }
        if (*eval) {
            return cmd_eval(eval_kind, eval_args, m, out);
        }
        if (*invert) {
            out << g15(invert_pair(pair_name, pair_time, m)) << "\n";
            return kExitOk;
        }
    } catch (const ValidationError& e) {
        err << "ppwell: error[validation]: " << one_line(e.what()) << "\n";
        return kExitValidation;
    } catch (const DomainError& e) {
        err << "ppwell: error[validation]: " << one_line(e.what()) << "\n";
        return kExitValidation;
    } catch (const NumericalError& e) {
        err << "ppwell: error[numerical]: " << one_line(e.what()) << "\n";
        return kExitNumerical;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "ppwell: error[validation]: " << one_line(e.what()) << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}

} // namespace ppwell::cli
