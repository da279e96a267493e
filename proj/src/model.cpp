#include "ppwell/model.h"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace ppwell {

namespace {

[[noreturn]] void fail(const std::string& what)
{
    throw ValidationError(what);
}

void require_finite(double v, const char* name)
{
    if (!std::isfinite(v)) {
        fail(std::string(name) + " must be finite");
    }
}

void require_positive(double v, const char* name)
{
    require_finite(v, name);
    if (!(v > 0.0)) {
        std::ostringstream msg;
        msg << name << " must be > 0, got " << v;
        fail(msg.str());
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Dimensional scenario
// ---------------------------------------------------------------------------

void DimensionalScenario::validate() const
{
    require_positive(Q, "Q");
    require_positive(K_r, "K_r");
    require_positive(K_z, "K_z");
    require_positive(S_s, "S_s");
    require_positive(b, "b");
    require_positive(r_w, "r_w");
    require_finite(d, "d");
    require_finite(l, "l");
    require_finite(C_w, "C_w");
    if (C_w < 0.0) {
        fail("C_w must be >= 0");
    }
    if (!(d >= 0.0 && d < l && l <= b)) {
        std::ostringstream msg;
        msg << "screen must satisfy 0 <= d < l <= b, got d = " << d << ", l = " << l
            << ", b = " << b;
        fail(msg.str());
    }
}

double DimensionalScenario::casing_storage(double r_c)
{
    require_positive(r_c, "casing radius r_c");
    return std::numbers::pi * r_c * r_c;
}

// ---------------------------------------------------------------------------
// Dimensionless scenario
// ---------------------------------------------------------------------------

double DimensionlessScenario::beta() const
{
    return r_D * std::sqrt(K_D);
}

void DimensionlessScenario::validate() const
{
    require_positive(r_D, "r_D");
    require_positive(K_D, "K_D");
    require_finite(r_wD, "r_wD");
    require_finite(C_wD, "C_wD");
    require_finite(d_D, "d_D");
    require_finite(l_D, "l_D");
    if (!(r_wD > 0.0 && r_wD <= 1.0)) {
        std::ostringstream msg;
        msg << "r_wD must satisfy 0 < r_wD <= 1 (observation outside the well), got " << r_wD;
        fail(msg.str());
    }
    if (C_wD < 0.0) {
        fail("C_wD must be >= 0");
    }
    if (!(d_D >= 0.0 && d_D < l_D && l_D <= 1.0)) {
        std::ostringstream msg;
        msg << "screen must satisfy 0 <= d_D < l_D <= 1, got d_D = " << d_D << ", l_D = " << l_D;
        fail(msg.str());
    }
    if (const auto* pt = std::get_if<PointDepth>(&observation)) {
        require_finite(pt->z, "z_D");
        if (!(pt->z >= 0.0 && pt->z <= 1.0)) {
            std::ostringstream msg;
            msg << "z_D must satisfy 0 <= z_D <= 1, got " << pt->z;
            fail(msg.str());
        }
    } else {
        const auto& iv = std::get<DepthInterval>(observation);
        require_finite(iv.z1, "z_D1");
        require_finite(iv.z2, "z_D2");
        if (!(iv.z1 >= 0.0 && iv.z1 < iv.z2 && iv.z2 <= 1.0)) {
            std::ostringstream msg;
            msg << "observation interval must satisfy 0 <= z_D1 < z_D2 <= 1, got [" << iv.z1
                << ", " << iv.z2 << "]";
            fail(msg.str());
        }
    }
}

// ---------------------------------------------------------------------------
// Conversions
// ---------------------------------------------------------------------------

DimensionlessScenario nondimensionalize(const DimensionalScenario& dim, const ObservationSpec& obs)
{
    dim.validate();
    require_positive(obs.r, "observation radius r");
    if (obs.r < dim.r_w) {
        std::ostringstream msg;
        msg << "observation radius r must be >= r_w, got r = " << obs.r << ", r_w = " << dim.r_w;
        fail(msg.str());
    }

    DimensionlessScenario sc;
    sc.r_D = obs.r / dim.b;
    sc.r_wD = dim.r_w / obs.r;
    // b-normalized so that the storage group is dimensionless.
    sc.C_wD = dim.C_w / (std::numbers::pi * dim.S_s * dim.r_w * dim.r_w * dim.b);
    sc.d_D = dim.d / dim.b;
    sc.l_D = dim.l / dim.b;
    sc.K_D = dim.K_z / dim.K_r;
    if (const auto* pt = std::get_if<PointDepth>(&obs.depth)) {
        sc.observation = PointDepth{pt->z / dim.b};
    } else {
        const auto& iv = std::get<DepthInterval>(obs.depth);
        sc.observation = DepthInterval{iv.z1 / dim.b, iv.z2 / dim.b};
    }
    sc.validate();
    return sc;
}

std::pair<DimensionalScenario, ObservationSpec> redimensionalize(const DimensionlessScenario& sc,
                                                                 const ReferenceScales& ref)
{
    sc.validate();
    require_positive(ref.Q, "Q");
    require_positive(ref.K_r, "K_r");
    require_positive(ref.S_s, "S_s");
    require_positive(ref.b, "b");

    DimensionalScenario dim;
    ObservationSpec obs;
    obs.r = sc.r_D * ref.b;
    dim.Q = ref.Q;
    dim.K_r = ref.K_r;
    dim.K_z = sc.K_D * ref.K_r;
    dim.S_s = ref.S_s;
    dim.b = ref.b;
    dim.r_w = sc.r_wD * obs.r;
    dim.d = sc.d_D * ref.b;
    dim.l = sc.l_D * ref.b;
    dim.C_w = sc.C_wD * std::numbers::pi * ref.S_s * dim.r_w * dim.r_w * ref.b;
    if (const auto* pt = std::get_if<PointDepth>(&sc.observation)) {
        obs.depth = PointDepth{pt->z * ref.b};
    } else {
        const auto& iv = std::get<DepthInterval>(sc.observation);
        obs.depth = DepthInterval{iv.z1 * ref.b, iv.z2 * ref.b};
    }
    return {dim, obs};
}

TimeScaling dimensionless_time(const DimensionalScenario& dim, double r, double t)
{
    require_positive(dim.K_r, "K_r");
    require_positive(dim.S_s, "S_s");
    require_positive(r, "r");
    require_positive(t, "t");
    TimeScaling ts;
    ts.alpha_s = dim.K_r / dim.S_s;
    ts.t_s = ts.alpha_s * t / (r * r);
    return ts;
}

double dimensional_drawdown(double s_D, const DimensionalScenario& dim)
{
    return s_D * dim.Q / (4.0 * std::numbers::pi * dim.K_r * dim.b);
}

} // namespace ppwell
