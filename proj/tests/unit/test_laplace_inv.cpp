#include <cmath>

#include "doctest.h"
#include "fixtures.h"
#include "ppwell/lapsol.h"
#include "ppwell/laplace_inv.h"
#include "ppwell/oracle.h"

using namespace ppwell;
using fixtures::rel;
namespace li = ppwell::laplace_inv;

TEST_SUITE("laplace_inv")
{
    TEST_CASE("analytic pairs at t = 0.1, 1, 10")
    {
        for (const auto& pair : oracle::analytic_pairs()) {
            for (double t : {0.1, 1.0, 10.0}) {
                CAPTURE(pair.transform);
                CAPTURE(t);
                const double exact = pair.original(t);
                const double got = li::invert_at(pair.f, t).value;
                CHECK(std::abs(got - exact) <= 1e-8 * std::max(std::abs(exact), 1e-2));
            }
        }
    }

    TEST_CASE("Theis anchor over [1e-2, 1e4]")
    {
        const li::Transform f = [](Complex p) { return lapsol::sbar_theis(p); };
        for (int i = 0; i < 40; ++i) {
            const double t = std::pow(10.0, -2.0 + 6.0 * i / 39.0);
            CAPTURE(t);
            CHECK(rel(li::invert_at(f, t).value, oracle::theis_time_domain(t)) <= 1e-8);
        }
    }

    TEST_CASE("doubling M changes a converged result by at most 10x tolerance")
    {
        const li::Transform f = [](Complex p) { return lapsol::sbar_theis(p); };
        li::InversionConfig coarse, fine;
        fine.terms_m = 40;
        for (double t : {0.05, 1.0, 500.0}) {
            CHECK(rel(li::invert_at(f, t, coarse).value, li::invert_at(f, t, fine).value) <=
                  10.0 * coarse.tolerance);
        }
    }

    TEST_CASE("unit-time inversion equals inversion at t")
    {
        const li::Transform f = [](Complex p) { return 1.0 / (p * p + 1.0); };
        for (double t : {0.3, 2.0}) {
            const li::Transform g = [&](Complex q) { return f(q / t) / t; };
            CHECK(rel(li::invert_unit_time(g).value, li::invert_at(f, t).value) < 1e-8);
        }
    }

    TEST_CASE("shared contour serves a decade")
    {
        const li::Transform f = [](Complex p) { return lapsol::sbar_theis(p); };
        li::InversionConfig cfg;
        cfg.terms_m = 40;
        const li::FourierContour contour(f, 2.0 * 10.0, cfg, 1.0);
        for (double t : {1.0, 2.0, 5.0, 10.0}) {
            const auto r = contour.evaluate(t);
            CHECK(rel(r.value, oracle::theis_time_domain(t)) < 1e-8);
            CHECK(r.evaluations == contour.samples().size());
        }
    }

    TEST_CASE("plain de Hoog without the adaptive shift still inverts mid-range times")
    {
        li::InversionConfig cfg;
        cfg.adaptive_shift = false;
        const li::Transform f = [](Complex p) { return lapsol::sbar_theis(p); };
        CHECK(rel(li::invert_at(f, 10.0, cfg).value, oracle::theis_time_domain(10.0)) < 1e-8);
    }

    TEST_CASE("conjugate-symmetry residue")
    {
        const li::Transform real_original = [](Complex p) { return 1.0 / (p + 1.0); };
        const li::Transform complex_original = [](Complex p) { return 1.0 / (p - Complex(0, 1)); };
        const std::vector<Complex> pts{{1.0, 1.0}, {2.0, 5.0}, {0.5, 30.0}};
        CHECK(li::conjugate_symmetry_residue(real_original, pts) < 1e-15);
        CHECK(li::conjugate_symmetry_residue(complex_original, pts) > 1e-2);

        li::InversionConfig cfg;
        cfg.verify_symmetry = true;
        const li::FourierContour contour(real_original, 2.0, cfg);
        CHECK(contour.symmetry_residue() < 1e-15);
    }

    TEST_CASE("configuration validation")
    {
        const li::Transform f = [](Complex p) { return 1.0 / p; };
        li::InversionConfig cfg;
        cfg.terms_m = 2;
        CHECK_THROWS_AS(li::invert_at(f, 1.0, cfg), ValidationError);
        cfg = {};
        cfg.tolerance = 0.0;
        CHECK_THROWS_AS(li::invert_at(f, 1.0, cfg), ValidationError);
        cfg = {};
        cfg.contour_shift_alpha = -1.0;
        CHECK_THROWS_AS(li::invert_at(f, 1.0, cfg), ValidationError);
        cfg = {};
        cfg.scaled_period_factor = 0.5;
        CHECK_THROWS_AS(li::invert_at(f, 1.0, cfg), ValidationError);
        CHECK_THROWS_AS(li::invert_at(f, 0.0), ValidationError);
        CHECK_THROWS_AS(li::invert_at(f, -1.0), ValidationError);
    }

    TEST_CASE("non-finite transform values are numerical errors")
    {
        const li::Transform f = [](Complex) { return Complex(std::nan(""), 0.0); };
        CHECK_THROWS_AS(li::invert_at(f, 1.0), NumericalError);
    }

    TEST_CASE("evaluation count is reported")
    {
        std::size_t calls = 0;
        li::InversionConfig cfg;
        cfg.adaptive_shift = false;
        const li::Transform f = [&](Complex p) {
            ++calls;
            return 1.0 / (p + 1.0);
        };
        const auto r = li::invert_at(f, 1.0, cfg);
        CHECK(r.evaluations == 2 * static_cast<std::size_t>(cfg.terms_m) + 1);
        CHECK(calls == r.evaluations);
    }
}
