#include "ppwell/timedomain.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <optional>
#include <sstream>
#include <thread>

namespace ppwell::timedomain {

namespace {

void check_time(double t_s)
{
    if (!(t_s > 0.0) || !std::isfinite(t_s)) {
        std::ostringstream msg;
        msg << "t_s must be positive and finite, got " << t_s;
        throw ValidationError(msg.str());
    }
}

void fold(PointDiagnostics* sink, const lapsol::SeriesDiagnostics& d)
{
    if (sink) {
        sink->series_terms = std::max(sink->series_terms, d.terms_used);
        sink->series_tail = std::max(sink->series_tail, d.tail_estimate);
    }
}

// Applies the nonnegativity contract; attaches t_s to numerical failures.
void finish(DrawdownPoint& pt)
{
    if (pt.s_D < 0.0) {
        if (pt.s_D >= -kNegativeFloor) {
            pt.s_D = 0.0;
            pt.diagnostics.clamped = true;
        } else {
            std::ostringstream msg;
            msg << "negative drawdown " << pt.s_D << " at t_s = " << pt.t_s;
            throw NumericalError(msg.str());
        }
    }
}

[[noreturn]] void rethrow_at(const NumericalError& e, double t_s)
{
    std::ostringstream msg;
    msg << e.what() << " (at t_s = " << t_s << ")";
    throw NumericalError(msg.str());
}

} // namespace

std::string variant_name(ModelVariant v)
{
    switch (v) {
    case ModelVariant::Unified: return "unified";
    case ModelVariant::PapadopulosCooper: return "papadopulos-cooper";
    case ModelVariant::Yang: return "yang";
    case ModelVariant::Hantush: return "hantush";
    case ModelVariant::Theis: return "theis";
    }
    return "unknown";
}

ModelVariant parse_variant(std::string_view name)
{
    if (name == "unified") return ModelVariant::Unified;
    if (name == "papadopulos-cooper" || name == "pc") return ModelVariant::PapadopulosCooper;
    if (name == "yang") return ModelVariant::Yang;
    if (name == "hantush") return ModelVariant::Hantush;
    if (name == "theis") return ModelVariant::Theis;
    throw ValidationError("unknown model variant '" + std::string(name) +
                          "' (expected unified, papadopulos-cooper, yang, hantush or theis)");
}

laplace_inv::Transform transform(const DimensionlessScenario& sc, ModelVariant variant,
                                 const lapsol::SeriesOptions& series, PointDiagnostics* sink)
{
    if (variant != ModelVariant::Theis) {
        sc.validate();
    }
    switch (variant) {
    case ModelVariant::Unified:
        return [sc, series, sink](Complex p) {
            const auto v = lapsol::sbar_observed(p, sc, series);
            fold(sink, v.diagnostics);
            return v.value;
        };
    case ModelVariant::Yang:
        return [sc, series, sink](Complex p) {
            const auto v = lapsol::sbar_yang(p, sc, series);
            fold(sink, v.diagnostics);
            return v.value;
        };
    case ModelVariant::Hantush:
        return [sc, series, sink](Complex p) {
            const auto v = lapsol::sbar_hantush(p, sc, series);
            fold(sink, v.diagnostics);
            return v.value;
        };
    case ModelVariant::PapadopulosCooper: {
        const double w = sc.r_wD, c = sc.C_wD;
        return [w, c](Complex p) { return lapsol::sbar_papadopulos_cooper(p, w, c); };
    }
    case ModelVariant::Theis:
        return [](Complex p) { return lapsol::sbar_theis(p); };
    }
    throw ValidationError("unknown model variant");
}

DrawdownPoint drawdown_point(double t_s, const DimensionlessScenario& sc, ModelVariant variant,
                             const SolverConfig& cfg)
{
    check_time(t_s);
    DrawdownPoint pt;
    pt.t_s = t_s;
    try {
        const auto f = transform(sc, variant, cfg.series, &pt.diagnostics);
        const auto r = laplace_inv::invert_at(f, t_s, cfg.inversion);
        pt.s_D = r.value;
        pt.diagnostics.inversion_terms = r.evaluations;
        pt.diagnostics.inversion_increment = r.last_increment;
        finish(pt);
    } catch (const NumericalError& e) {
        rethrow_at(e, t_s);
    }
    return pt;
}

double drawdown(double t_s, const DimensionlessScenario& sc, ModelVariant variant,
                const SolverConfig& cfg)
{
    return drawdown_point(t_s, sc, variant, cfg).s_D;
}

DrawdownPoint drawdown_unit_time(double t_s, const DimensionlessScenario& sc,
                                 ModelVariant variant, const SolverConfig& cfg)
{
    check_time(t_s);
    DrawdownPoint pt;
    pt.t_s = t_s;
    try {
        const auto f = transform(sc, variant, cfg.series, &pt.diagnostics);
        // p_D = p' t_s; the 1/t_s keeps the original at unit time equal to s_D(t_s).
        const laplace_inv::Transform g = [&f, t_s](Complex p_d) { return f(p_d / t_s) / t_s; };
        const auto r = laplace_inv::invert_unit_time(g, cfg.inversion);
        pt.s_D = r.value;
        pt.diagnostics.inversion_terms = r.evaluations;
        pt.diagnostics.inversion_increment = r.last_increment;
        finish(pt);
    } catch (const NumericalError& e) {
        rethrow_at(e, t_s);
    }
    return pt;
}

double pumping_well_drawdown(double t_s, const DimensionlessScenario& sc, const SolverConfig& cfg)
{
    if (sc.r_wD != 1.0) {
        std::ostringstream msg;
        msg << "pumping-well drawdown requires r_wD = 1 (observation at the well face), got "
            << sc.r_wD;
        throw ValidationError(msg.str());
    }
    DimensionlessScenario well = sc;
    well.observation = DepthInterval{sc.d_D, sc.l_D};
    return drawdown(t_s, well, ModelVariant::Unified, cfg);
}

std::vector<double> log_grid(double t_min, double t_max, int points_per_decade)
{
    if (!(t_min > 0.0) || !(t_max > t_min) || !std::isfinite(t_max)) {
        std::ostringstream msg;
        msg << "t_s range must satisfy 0 < t_s_min < t_s_max, got [" << t_min << ", " << t_max
            << "]";
        throw ValidationError(msg.str());
    }
    if (points_per_decade < 1) {
        throw ValidationError("points per decade must be >= 1");
    }
    const double lo = std::log10(t_min);
    const double span = std::log10(t_max) - lo;
    const int intervals = std::max(1, static_cast<int>(std::ceil(span * points_per_decade - 1e-9)));
    std::vector<double> grid(intervals + 1);
    for (int i = 0; i <= intervals; ++i) {
        grid[i] = std::pow(10.0, lo + span * i / intervals);
    }
    grid.front() = t_min;
    grid.back() = t_max;
    return grid;
}

DrawdownCurve curve(const DimensionlessScenario& sc, ModelVariant variant, double t_min,
                    double t_max, int points_per_decade, const SolverConfig& cfg)
{
    cfg.inversion.validate();
    const auto grid = log_grid(t_min, t_max, points_per_decade);

    // Points within one decade share a contour.
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0; i < grid.size();) {
        std::size_t j = i + 1;
        while (j < grid.size() && grid[j] <= 10.0 * grid[i] * (1.0 + 1e-9)) {
            ++j;
        }
        groups.emplace_back(i, j);
        i = j;
    }

    DrawdownCurve out;
    out.scenario = sc;
    out.variant = variant;
    out.points.resize(grid.size());

    auto run_group = [&](std::size_t g) {
        const auto [begin, end] = groups[g];
        const double lo = grid[begin], hi = grid[end - 1];
        PointDiagnostics diag;
        const auto f = transform(sc, variant, cfg.series, &diag);
        const double period = cfg.inversion.scaled_period_factor * hi;

        // A large adaptive shift means f grows by orders of magnitude across the
        // decade; one contour would then lose precision at the top end.
        auto base_cfg = cfg.inversion;
        base_cfg.adaptive_shift = false;
        const double base = laplace_inv::contour_abscissa(f, period, lo, base_cfg);
        const double shifted = laplace_inv::contour_abscissa(f, period, lo, cfg.inversion);
        const bool shared = (shifted - base) * hi < std::log(1e3);

        // A decade-wide contour serves t down to T / (10 factor); twice the
        // terms keep it as accurate there as a per-point contour.
        std::optional<laplace_inv::FourierContour> contour;
        if (shared) {
            auto wide = cfg.inversion;
            wide.terms_m = std::min(200, 2 * cfg.inversion.terms_m);
            contour.emplace(f, period, wide, lo);
        }
        for (std::size_t i = begin; i < end; ++i) {
            DrawdownPoint& pt = out.points[i];
            pt.t_s = grid[i];
            try {
                if (shared) {
                    const auto r = contour->evaluate(grid[i]);
                    pt.s_D = r.value;
                    pt.diagnostics = diag;
                    pt.diagnostics.inversion_terms = r.evaluations;
                    pt.diagnostics.inversion_increment = r.last_increment;
                    finish(pt);
                } else {
                    pt = drawdown_point(grid[i], sc, variant, cfg);
                }
            } catch (const NumericalError& e) {
                rethrow_at(e, grid[i]);
            }
        }
    };

    const unsigned threads = std::max(1u, std::min<unsigned>(cfg.threads, groups.size()));
    if (threads == 1) {
        for (std::size_t g = 0; g < groups.size(); ++g) {
            run_group(g);
        }
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(groups.size());
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) {
        pool.emplace_back([&] {
            for (std::size_t g = next++; g < groups.size(); g = next++) {
                try {
                    run_group(g);
                } catch (...) {
                    errors[g] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    // Report the earliest failing group so the error is order independent.
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

double early_asymptote(double t_s, const DimensionlessScenario& sc)
{
    check_time(t_s);
    if (!(sc.C_wD > 0.0)) {
        throw ValidationError("early-time asymptote requires C_wD > 0 (no wellbore storage)");
    }
    return 4.0 * t_s / (sc.C_wD * sc.r_wD * sc.r_wD);
}

} // namespace ppwell::timedomain
