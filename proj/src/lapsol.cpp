#include "ppwell/lapsol.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "series.h"

namespace ppwell::lapsol {

namespace {

constexpr double kPi = std::numbers::pi;

void check_p(Complex p)
{
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag()) || !(p.real() > 0.0)) {
        std::ostringstream msg;
        msg << "Laplace variable must have positive real part, got (" << p.real() << ", "
            << p.imag() << ")";
        throw DomainError(msg.str());
    }
}

void check_interval(double z1, double z2)
{
    if (!(z1 >= 0.0 && z1 < z2 && z2 <= 1.0)) {
        std::ostringstream msg;
        msg << "observation interval must satisfy 0 <= z_D1 < z_D2 <= 1, got [" << z1 << ", "
            << z2 << "]";
        throw ValidationError(msg.str());
    }
}

detail::ModeModel storage_model(Complex p, const DimensionlessScenario& sc, double c_wd)
{
    detail::ModeModel m;
    m.p = p;
    m.beta = sc.beta();
    m.w = sc.r_wD;
    m.c = c_wd / (2.0 * (sc.l_D - sc.d_D));
    m.kind = detail::ModeKind::Storage;
    return m;
}

detail::ModeModel line_sink_model(Complex p, const DimensionlessScenario& sc)
{
    detail::ModeModel m;
    m.p = p;
    m.beta = sc.beta();
    m.kind = detail::ModeKind::LineSink;
    return m;
}

detail::SeriesGeometry geometry(const DimensionlessScenario& sc)
{
    detail::SeriesGeometry g;
    g.l = sc.l_D;
    g.d = sc.d_D;
    if (const auto* pt = std::get_if<PointDepth>(&sc.observation)) {
        g.z = pt->z;
    } else {
        const auto& iv = std::get<DepthInterval>(sc.observation);
        g.averaged = true;
        g.z1 = iv.z1;
        g.z2 = iv.z2;
    }
    return g;
}

// head + prefactor * S, where head = (2/p') mode(0) and
// prefactor = 4 / (p' pi (l-d))  [point]  or  4 / (p' pi^2 (l-d)(z2-z1))  [interval].
LaplaceValue assemble(Complex p, const detail::ModeModel& mode, const detail::SeriesGeometry& g,
                      const SeriesOptions& opts)
{
    const Complex head = 2.0 / p * mode.value(0.0);
    Complex prefactor = 4.0 / (p * kPi * (g.l - g.d));
    if (g.averaged) {
        prefactor /= kPi * (g.z2 - g.z1);
    }
    const auto series = detail::sum_modes(mode, g, head / prefactor, opts);
    return {head + prefactor * series.sum, series.diagnostics};
}

} // namespace

Complex phi_n(int n, Complex p_prime, double beta)
{
    const double k = beta * kPi * n;
    return std::sqrt(p_prime + k * k);
}

LaplaceValue sbar_unified(Complex p_prime, const DimensionlessScenario& sc,
                          const SeriesOptions& opts)
{
    check_p(p_prime);
    sc.validate();
    if (!sc.is_point()) {
        throw ValidationError("sbar_unified requires a point observation (use sbar_averaged)");
    }
    return assemble(p_prime, storage_model(p_prime, sc, sc.C_wD), geometry(sc), opts);
}

LaplaceValue sbar_averaged(Complex p_prime, const DimensionlessScenario& sc, double z_D1,
                           double z_D2, const SeriesOptions& opts)
{
    check_p(p_prime);
    check_interval(z_D1, z_D2);
    DimensionlessScenario s = sc;
    s.observation = DepthInterval{z_D1, z_D2};
    s.validate();
    return assemble(p_prime, storage_model(p_prime, s, s.C_wD), geometry(s), opts);
}

LaplaceValue sbar_observed(Complex p_prime, const DimensionlessScenario& sc,
                           const SeriesOptions& opts)
{
    if (const auto* iv = std::get_if<DepthInterval>(&sc.observation)) {
        return sbar_averaged(p_prime, sc, iv->z1, iv->z2, opts);
    }
    return sbar_unified(p_prime, sc, opts);
}

Complex sbar_papadopulos_cooper(Complex p_prime, double r_wD, double C_wD)
{
    check_p(p_prime);
    if (!(r_wD > 0.0 && r_wD <= 1.0) || !(C_wD >= 0.0) || !std::isfinite(C_wD)) {
        std::ostringstream msg;
        msg << "Papadopulos-Cooper requires 0 < r_wD <= 1 and C_wD >= 0, got r_wD = " << r_wD
            << ", C_wD = " << C_wD;
        throw ValidationError(msg.str());
    }
    // Scaled Bessel values: e^{-sqrt p'} K0 over e^{-r_wD sqrt p'} (...).
    const Complex s = std::sqrt(p_prime);
    const Complex ws = r_wD * s;
    const Complex k0 = specfun::bessel_k0_scaled(s);
    const auto kw = specfun::bessel_k01_scaled(ws);
    const Complex den = ws * kw.k1 + 0.5 * C_wD * ws * ws * kw.k0;
    return 2.0 / p_prime * std::exp(-(1.0 - r_wD) * s) * k0 / den;
}

LaplaceValue sbar_yang(Complex p_prime, const DimensionlessScenario& sc, const SeriesOptions& opts)
{
    check_p(p_prime);
    sc.validate();
    return assemble(p_prime, storage_model(p_prime, sc, 0.0), geometry(sc), opts);
}

LaplaceValue sbar_hantush(Complex p_prime, const DimensionlessScenario& sc,
                          const SeriesOptions& opts)
{
    check_p(p_prime);
    sc.validate();
    return assemble(p_prime, line_sink_model(p_prime, sc), geometry(sc), opts);
}

Complex sbar_theis(Complex p_prime)
{
    check_p(p_prime);
    return 2.0 / p_prime * specfun::bessel_k0(std::sqrt(p_prime));
}

} // namespace ppwell::lapsol
