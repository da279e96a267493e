#include <cmath>

#include "doctest.h"
#include "fixtures.h"
#include "ppwell/oracle.h"
#include "ppwell/timedomain.h"

using namespace ppwell;
using fixtures::rel;
using timedomain::ModelVariant;

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

ModelVariant variant_of(const std::string& form)
{
    return timedomain::parse_variant(form);
}

// Nondecreasing up to the clamp floor.
void check_monotone(const timedomain::DrawdownCurve& c)
{
    for (std::size_t i = 1; i < c.points.size(); ++i) {
        CAPTURE(c.points[i].t_s);
        CHECK(c.points[i].s_D >= c.points[i - 1].s_D - timedomain::kNegativeFloor);
    }
}

} // namespace

TEST_SUITE("timedomain")
{
    TEST_CASE("golden time-domain values from an independent inverter")
    {
        const auto recs = fixtures::load("timedomain.jsonl");
        REQUIRE(!recs.empty());
        for (const auto& r : recs) {
            const double t = r["t_s"];
            const std::string form = r["form"];
            const auto sc = form == "theis" ? DimensionlessScenario{} : from_params(r["params"]);
            CAPTURE(r.dump());
            const double ref = r["s_D"];
            const double got = timedomain::drawdown(t, sc, variant_of(form));
            CHECK(std::abs(got - ref) <= 1e-8 * std::abs(ref) + 1e-12);
            const double unit = timedomain::drawdown_unit_time(t, sc, variant_of(form)).s_D;
            CHECK(std::abs(unit - got) <= 1e-8 * std::abs(got) + 1e-12);
        }
    }

    TEST_CASE("curve matches pointwise inversion and is monotone")
    {
        for (const auto& sc : {oracle::figure2_well(), oracle::figure4_piezometer()}) {
            for (auto v : {ModelVariant::Unified, ModelVariant::Hantush, ModelVariant::Yang}) {
                timedomain::SolverConfig cfg;
                cfg.threads = 4;
                const auto c = timedomain::curve(sc, v, 1e-4, 1e4, 20, cfg);
                REQUIRE(c.points.size() == 161);
                check_monotone(c);
                for (std::size_t i = 0; i < c.points.size(); i += 17) {
                    const double t = c.points[i].t_s;
                    const double ref = timedomain::drawdown(t, sc, v);
                    CAPTURE(t);
                    // Early-time values sit at the inversion noise floor; compare absolutely there.
                    CHECK(std::abs(c.points[i].s_D - ref) <=
                          1e-8 * std::abs(ref) + timedomain::kNegativeFloor);
                }
            }
        }
    }

    TEST_CASE("thread count does not change the output")
    {
        const auto sc = oracle::figure4_piezometer();
        timedomain::SolverConfig one, many;
        many.threads = 6;
        const auto a = timedomain::curve(sc, ModelVariant::Unified, 1e-3, 1e3, 10, one);
        const auto b = timedomain::curve(sc, ModelVariant::Unified, 1e-3, 1e3, 10, many);
        REQUIRE(a.points.size() == b.points.size());
        for (std::size_t i = 0; i < a.points.size(); ++i) {
            CHECK(a.points[i].s_D == b.points[i].s_D);
        }
    }

    TEST_CASE("early-time storage regime")
    {
        const auto well = oracle::figure2_well();
        for (double t : {1e-6, 1e-5, 1e-4}) {
            const double s = timedomain::drawdown(t, well, ModelVariant::Unified);
            CHECK(rel(s, timedomain::early_asymptote(t, well)) < 1e-2);
        }
        auto dry = well;
        dry.C_wD = 0.0;
        CHECK_THROWS_AS(timedomain::early_asymptote(1e-3, dry), ValidationError);
    }

    TEST_CASE("pumping-well drawdown is the screen average at the well face")
    {
        const auto face = oracle::figure2_point();
        const double a = timedomain::pumping_well_drawdown(10.0, face);
        const double b = timedomain::drawdown(10.0, oracle::figure2_well(), ModelVariant::Unified);
        CHECK(a == b);
        CHECK_THROWS_AS(timedomain::pumping_well_drawdown(10.0, oracle::figure4_piezometer()),
                        ValidationError);
    }

    TEST_CASE("diagnostics are populated")
    {
        // With z_D = l_D = 0.5 every vertical mode vanishes; move the piezometer.
        auto sc = oracle::figure4_piezometer();
        sc.observation = PointDepth{0.3};
        const auto pt = timedomain::drawdown_point(1.0, sc, ModelVariant::Unified);
        CHECK(pt.diagnostics.series_terms > 0);
        CHECK(pt.diagnostics.inversion_terms >= 41);
        CHECK(pt.s_D > 0.0);
    }

    TEST_CASE("log grid")
    {
        const auto g = timedomain::log_grid(1e-6, 1e6, 20);
        CHECK(g.size() == 241);
        CHECK(g.front() == 1e-6);
        CHECK(g.back() == 1e6);
        CHECK(rel(g[20], 1e-5) < 1e-14);
        CHECK_THROWS_AS(timedomain::log_grid(1.0, 1.0, 20), ValidationError);
        CHECK_THROWS_AS(timedomain::log_grid(0.0, 1.0, 20), ValidationError);
        CHECK_THROWS_AS(timedomain::log_grid(1.0, 10.0, 0), ValidationError);
    }

    TEST_CASE("variant names round-trip")
    {
        for (auto v : {ModelVariant::Unified, ModelVariant::PapadopulosCooper, ModelVariant::Yang,
                       ModelVariant::Hantush, ModelVariant::Theis}) {
            CHECK(timedomain::parse_variant(timedomain::variant_name(v)) == v);
        }
        CHECK(timedomain::parse_variant("pc") == ModelVariant::PapadopulosCooper);
        CHECK_THROWS_AS(timedomain::parse_variant("talbot"), ValidationError);
    }

    TEST_CASE("invalid inputs")
    {
        const auto sc = oracle::figure4_piezometer();
        CHECK_THROWS_AS(timedomain::drawdown(0.0, sc, ModelVariant::Unified), ValidationError);
        CHECK_THROWS_AS(timedomain::drawdown(-1.0, sc, ModelVariant::Unified), ValidationError);
        auto bad = sc;
        bad.l_D = 0.0;
        CHECK_THROWS_AS(timedomain::drawdown(1.0, bad, ModelVariant::Unified), ValidationError);
    }
}
