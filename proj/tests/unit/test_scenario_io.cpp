#include "doctest.h"
#include "ppwell/scenario_io.h"

using namespace ppwell;

TEST_SUITE("scenario_io")
{
    TEST_CASE("dimensionless document with solver settings")
    {
        const auto docs = parse_scenarios(R"({
            "id": "fig2",
            "dimensionless": {"r_D": 0.02, "r_wD": 1, "C_wD": 100, "d_D": 0, "l_D": 0.5,
                              "K_D": 1, "z_D1": 0, "z_D2": 0.5},
            "inversion": {"terms_m": 24, "tolerance": 1e-10, "adaptive_shift": true},
            "series": {"tolerance": 1e-11},
            "variant": "pc",
            "t_s": {"min": 1e-3, "max": 1e3, "per_decade": 5}
        })");
        REQUIRE(docs.size() == 1);
        const auto& d = docs[0];
        CHECK(d.id == "fig2");
        CHECK(d.scenario.C_wD == 100.0);
        CHECK(!d.scenario.is_point());
        CHECK(d.solver.inversion.terms_m == 24);
        CHECK(d.solver.inversion.tolerance == 1e-10);
        CHECK(d.solver.series.tolerance == 1e-11);
        CHECK(d.variant == timedomain::ModelVariant::PapadopulosCooper);
        CHECK(*d.ts_min == 1e-3);
        CHECK(*d.per_decade == 5);
    }

    TEST_CASE("dimensional document and consistency with a dimensionless block")
    {
        const std::string dim = R"("dimensional": {"Q": 0.01, "K_r": 1e-4, "K_z": 1e-4,
            "S_s": 1e-5, "b": 10, "r_w": 0.2, "d": 0, "l": 5, "r_c": 0.2, "r": 2, "z": 5})";
        const auto docs = parse_scenarios("[{" + dim + "}]");
        REQUIRE(docs.size() == 1);
        const auto& sc = docs[0].scenario;
        CHECK(sc.r_D == doctest::Approx(0.2));
        CHECK(sc.r_wD == doctest::Approx(0.1));
        CHECK(sc.C_wD == doctest::Approx(1.0 / (1e-5 * 10.0)));
        CHECK(docs[0].dimensional.has_value());
        CHECK(docs[0].id == "scenario0");

        const std::string agree = R"("dimensionless": {"r_D": 0.2, "r_wD": 0.1, "C_wD": 10000,
            "d_D": 0, "l_D": 0.5, "K_D": 1, "z_D": 0.5})";
        CHECK_NOTHROW(parse_scenarios("{" + dim + "," + agree + "}"));
        const std::string disagree = R"("dimensionless": {"r_D": 0.3, "r_wD": 0.1, "C_wD": 10000,
            "d_D": 0, "l_D": 0.5, "K_D": 1, "z_D": 0.5})";
        CHECK_THROWS_AS(parse_scenarios("{" + dim + "," + disagree + "}"), ValidationError);
    }

    TEST_CASE("rejections")
    {
        const std::string ok = R"("r_D": 0.2, "r_wD": 0.1, "C_wD": 1, "d_D": 0, "l_D": 0.5, "K_D": 1)";
        CHECK_THROWS_AS(parse_scenarios("{"), ValidationError);
        CHECK_THROWS_AS(parse_scenarios("[]"), ValidationError);
        CHECK_THROWS_AS(parse_scenarios("{}"), ValidationError);
        CHECK_THROWS_AS(parse_scenarios(R"({"dimensionless": {)" + ok + R"(, "z_D": 0.5, "x": 1}})"),
                        ValidationError);
        CHECK_THROWS_AS(parse_scenarios(R"({"dimensionless": {)" + ok + R"(}})"), ValidationError);
        CHECK_THROWS_AS(parse_scenarios(R"({"dimensionless": {)" + ok +
                                        R"(, "z_D": 0.5, "z_D1": 0.1, "z_D2": 0.2}})"),
                        ValidationError);
        CHECK_THROWS_AS(parse_scenarios(R"({"dimensionless": {)" + ok +
                                        R"(, "z_D": 0.5}, "variant": "stehfest"})"),
                        ValidationError);
        CHECK_THROWS_AS(parse_scenarios(R"({"dimensionless": {)" + ok +
                                        R"(, "z_D": 0.5}, "inversion": {"terms_m": 1}})"),
                        ValidationError);
        CHECK_THROWS_AS(parse_scenarios(R"({"dimensionless": {"r_D": 0.2, "r_wD": 0.1, "C_wD": 1,
            "d_D": 0.6, "l_D": 0.5, "K_D": 1, "z_D": 0.5}})"),
                        ValidationError);
        CHECK_THROWS_AS(load_scenarios("/nonexistent/scenario.json"), ValidationError);
    }

    TEST_CASE("canonical form and hash are stable")
    {
        DimensionlessScenario sc;
        sc.r_D = 0.2;
        const auto a = fnv1a_hex(canonical_form(sc));
        CHECK(a.size() == 16);
        CHECK(a == fnv1a_hex(canonical_form(sc)));
        sc.r_D = 0.2000000000000001;
        CHECK(a != fnv1a_hex(canonical_form(sc)));
        CHECK(fnv1a_hex("") == "cbf29ce484222325");
    }
}
