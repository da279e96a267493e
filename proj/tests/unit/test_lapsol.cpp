#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fixtures.h"
#include "ppwell/lapsol.h"
#include "ppwell/oracle.h"

using namespace ppwell;
using fixtures::rel;

namespace {

DimensionlessScenario from_params(const nlohmann::json& p)
{
    DimensionlessScenario sc;
    sc.r_D = p["r_D"];
    sc.r_wD = p["r_wD"];
    sc.C_wD = p["C_wD"];
    sc.d_D = p["d_D"];
    sc.l_D = p["l_D"];
    sc.K_D = p["K_D"];
    if (p.contains("z_D")) {
        sc.observation = PointDepth{p["z_D"].get<double>()};
    } else {
        sc.observation = DepthInterval{p["z_D1"].get<double>(), p["z_D2"].get<double>()};
    }
    return sc;
}

lapsol::LaplaceValue evaluate(const std::string& form, Complex p, const DimensionlessScenario& sc)
{
    if (form == "unified") return lapsol::sbar_observed(p, sc);
    if (form == "yang") return lapsol::sbar_yang(p, sc);
    if (form == "hantush") return lapsol::sbar_hantush(p, sc);
    if (form == "pc") return {lapsol::sbar_papadopulos_cooper(p, sc.r_wD, sc.C_wD), {}};
    return {lapsol::sbar_theis(p), {}};
}

} // namespace

TEST_SUITE("lapsol")
{
    TEST_CASE("golden Laplace-space values from the arbitrary-precision oracle")
    {
        const auto recs = fixtures::load("laplace.jsonl");
        REQUIRE(!recs.empty());
        for (const auto& r : recs) {
            const auto sc = from_params(r["params"]);
            const Complex p = fixtures::cplx(r["p"]);
            const std::string form = r["form"];
            const auto v = evaluate(form, p, sc);
            const Complex ref = fixtures::cplx(r["value"]);
            // Well-face references are truncated direct sums; their own
            // truncation uncertainty widens the band.
            const double band = std::max(1e-10, 2.0 * r["uncertainty"].get<double>());
            // Far from the screen the value is what is left after O(1) terms
            // cancel; measure against the line-sink scale there.
            const double scale = std::max(std::abs(ref), std::abs(lapsol::sbar_theis(p)));
            CAPTURE(r.dump());
            CHECK(std::abs(v.value - ref) / scale <= band);
        }
    }

    TEST_CASE("tail estimates bound the error against long direct sums")
    {
        const auto recs = fixtures::load("laplace.jsonl");
        int checked = 0;
        for (const auto& r : recs) {
            if (r["terms"].get<int>() < 1000000) {
                continue;
            }
            const auto sc = from_params(r["params"]);
            const Complex p = fixtures::cplx(r["p"]);
            const auto v = evaluate(r["form"], p, sc);
            const double err = rel(v.value, fixtures::cplx(r["value"]));
            const double allowed = 10.0 * v.diagnostics.tail_estimate +
                                   r["uncertainty"].get<double>() + 1e-13;
            CAPTURE(r.dump());
            CHECK(v.diagnostics.converged);
            CHECK(err <= allowed);
            ++checked;
        }
        CHECK(checked > 0);
    }

    TEST_CASE("reduction identities")
    {
        const auto family = oracle::random_family(8, 99);
        const auto reports = oracle::reduction_suite(family, 10, {}, false);
        for (const auto& r : reports) {
            CAPTURE(r.check);
            CAPTURE(r.worst_location);
            CHECK(r.pass);
        }
    }

    TEST_CASE("averaging: quadrature, [0, 1] collapse and narrow limit")
    {
        auto sc = oracle::figure4_piezometer();
        for (const Complex p : {Complex(1.0, 0.0), Complex(0.3, 4.0)}) {
            CHECK(oracle::quadrature_average_check(sc, 0.3, 0.6, p).pass);
            const auto whole = lapsol::sbar_averaged(p, sc, 0.0, 1.0);
            CHECK(whole.diagnostics.terms_used == 0);
            auto full = sc;
            full.d_D = 0.0;
            full.l_D = 1.0;
            // Full penetration at l_D - d_D = 1 reduces to Papadopulos-Cooper.
            CHECK(rel(lapsol::sbar_averaged(p, full, 0.0, 1.0).value,
                      lapsol::sbar_papadopulos_cooper(p, sc.r_wD, sc.C_wD)) < 1e-14);
            auto point = sc;
            point.observation = PointDepth{0.4 + 0.5e-6};
            CHECK(rel(lapsol::sbar_averaged(p, sc, 0.4, 0.4 + 1e-6).value,
                      lapsol::sbar_unified(p, point).value) <= 1e-5);
        }
    }

    TEST_CASE("well-face screen average against Gauss-Legendre")
    {
        const auto face = oracle::figure2_point();
        const auto r = oracle::quadrature_average_check(face, face.d_D, face.l_D, Complex(1.0, 0.0));
        CAPTURE(r.worst_location);
        CHECK(r.max_rel_error <= 1e-10);
    }

    TEST_CASE("conjugate symmetry of every variant")
    {
        const auto sc = oracle::figure4_piezometer();
        for (const Complex p : {Complex(0.7, 0.4), Complex(3.0, 25.0)}) {
            for (const char* form : {"unified", "yang", "hantush", "pc", "theis"}) {
                const auto a = evaluate(form, std::conj(p), sc).value;
                const auto b = evaluate(form, p, sc).value;
                CHECK(rel(a, std::conj(b)) < 1e-13);
            }
        }
    }

    TEST_CASE("phi_n principal branch")
    {
        const Complex phi = lapsol::phi_n(3, Complex(0.5, -3.0), 0.2);
        CHECK(phi.real() > 0.0);
        CHECK(std::abs(phi * phi - (Complex(0.5, -3.0) + 0.36 * std::numbers::pi * std::numbers::pi)) < 1e-14);
    }

    TEST_CASE("storage lowers drawdown in Laplace space on the real axis")
    {
        auto sc = oracle::figure4_piezometer();
        double prev = 1e300;
        for (double c : {0.0, 1.0, 10.0, 100.0}) {
            sc.C_wD = c;
            const double v = lapsol::sbar_unified(Complex(10.0, 0.0), sc).value.real();
            CHECK(v < prev);
            prev = v;
        }
    }

    TEST_CASE("argument validation")
    {
        auto sc = oracle::figure4_piezometer();
        CHECK_THROWS_AS(lapsol::sbar_unified(Complex(0.0, 1.0), sc), DomainError);
        CHECK_THROWS_AS(lapsol::sbar_averaged(Complex(1.0, 0.0), sc, 0.5, 0.2), ValidationError);
        CHECK_THROWS_AS(lapsol::sbar_unified(Complex(1.0, 0.0), oracle::figure2_well()),
                        ValidationError);
        CHECK_THROWS_AS(lapsol::sbar_papadopulos_cooper(Complex(1.0, 0.0), 1.5, 1.0),
                        ValidationError);
        sc.l_D = 0.0;
        CHECK_THROWS_AS(lapsol::sbar_unified(Complex(1.0, 0.0), sc), ValidationError);
    }

    TEST_CASE("strict series reports non-convergence")
    {
        lapsol::SeriesOptions opts;
        opts.max_terms = 64;
        opts.accelerate = false;
        CHECK_THROWS_AS(lapsol::sbar_unified(Complex(1.0, 0.0), oracle::figure2_point(), opts),
                        NumericalError);
        opts.strict = false;
        const auto v = lapsol::sbar_unified(Complex(1.0, 0.0), oracle::figure2_point(), opts);
        CHECK(!v.diagnostics.converged);
        CHECK(v.diagnostics.tail_estimate > 0.0);
    }
}
