#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fixtures.h"
#include "ppwell/specfun.h"

using namespace ppwell;
using fixtures::rel;

TEST_SUITE("specfun")
{
    TEST_CASE("K0 and K1 match high-precision references")
    {
        const auto recs = fixtures::load("bessel.jsonl");
        REQUIRE(recs.size() >= 200);
        double worst0 = 0.0, worst1 = 0.0, worst_scaled = 0.0;
        for (const auto& r : recs) {
            const Complex z = fixtures::cplx(r["z"]);
            const Complex k0 = fixtures::cplx(r["k0"]);
            const Complex k1 = fixtures::cplx(r["k1"]);
            const auto v0 = specfun::bessel_k0_checked(z);
            const auto v1 = specfun::bessel_k1_checked(z);
            if (k0 == Complex(0.0)) {
                // Below the smallest normal double: exact zero, flagged.
                CHECK(v0.underflow);
                CHECK(v0.value == Complex(0.0));
            } else {
                worst0 = std::max(worst0, rel(v0.value, k0));
                worst1 = std::max(worst1, rel(v1.value, k1));
            }
            worst_scaled = std::max(worst_scaled,
                                    rel(specfun::bessel_k0_scaled(z), fixtures::cplx(r["k0_scaled"])));
            worst_scaled = std::max(worst_scaled,
                                    rel(specfun::bessel_k1_scaled(z), fixtures::cplx(r["k1_scaled"])));
        }
        CHECK(worst0 <= 1e-12);
        CHECK(worst1 <= 1e-12);
        CHECK(worst_scaled <= 1e-14);
    }

    TEST_CASE("E1 matches high-precision references on [1e-10, 50]")
    {
        const auto recs = fixtures::load("e1.jsonl");
        REQUIRE(recs.size() >= 100);
        double worst = 0.0;
        for (const auto& r : recs) {
            const double u = r["u"].get<double>();
            worst = std::max(worst, rel(specfun::exp_integral_e1(u), r["e1"].get<double>()));
        }
        CHECK(worst <= 1e-13);
    }

    TEST_CASE("small-argument laws")
    {
        for (double x : {1e-6, 1e-8, 1e-10}) {
            CHECK(rel(specfun::bessel_k0(x), -std::log(x / 2.0) - std::numbers::egamma) < 1e-9);
            CHECK(rel(specfun::bessel_k1(x), 1.0 / x) < 1e-9);
            CHECK(rel(specfun::exp_integral_e1(x), -std::numbers::egamma - std::log(x) + x) <
                  1e-12);
        }
    }

    TEST_CASE("K0' = -K1 by finite difference")
    {
        for (double x : {0.1, 1.0, 3.0, 10.0, 30.0}) {
            for (double arg : {0.0, 0.8}) {
                const Complex z = std::polar(x, arg);
                const double h = 1e-5 * x;
                const Complex d =
                    (specfun::bessel_k0(z + h) - specfun::bessel_k0(z - h)) / (2.0 * h);
                CHECK(rel(d, -specfun::bessel_k1(z)) < 1e-7);
            }
        }
    }

    TEST_CASE("conjugate symmetry")
    {
        for (const Complex z : {Complex(0.3, 0.2), Complex(4.0, 3.0), Complex(40.0, -20.0)}) {
            CHECK(rel(specfun::bessel_k0(std::conj(z)), std::conj(specfun::bessel_k0(z))) < 1e-15);
            CHECK(rel(specfun::bessel_k1(std::conj(z)), std::conj(specfun::bessel_k1(z))) < 1e-15);
        }
    }

    TEST_CASE("monotonic decay on the positive real axis")
    {
        double prev0 = specfun::bessel_k0(1e-6).real();
        double prev1 = specfun::bessel_k1(1e-6).real();
        double prev_e = specfun::exp_integral_e1(1e-6);
        for (int i = 1; i <= 300; ++i) {
            const double x = 1e-6 * std::pow(10.0, 8.0 * i / 300.0);
            const double k0 = specfun::bessel_k0(x).real();
            const double k1 = specfun::bessel_k1(x).real();
            const double e = specfun::exp_integral_e1(x);
            CHECK(k0 < prev0);
            CHECK(k1 < prev1);
            CHECK(e < prev_e);
            prev0 = k0;
            prev1 = k1;
            prev_e = e;
        }
    }

    TEST_CASE("underflow is reported, scaled forms stay finite")
    {
        const auto v = specfun::bessel_k0_checked(Complex(800.0, 0.0));
        CHECK(v.underflow);
        CHECK(v.value == Complex(0.0));
        const Complex s = specfun::bessel_k0_scaled(Complex(800.0, 0.0));
        CHECK(rel(s, std::sqrt(std::numbers::pi / 1600.0) * (1.0 - 1.0 / 6400.0)) < 1e-6);
    }

    TEST_CASE("domain errors")
    {
        CHECK_THROWS_AS(specfun::bessel_k0(Complex(0.0, 0.0)), DomainError);
        CHECK_THROWS_AS(specfun::bessel_k1(Complex(-1.0, 0.5)), DomainError);
        CHECK_THROWS_AS(specfun::bessel_k0(Complex(std::nan(""), 0.0)), DomainError);
        CHECK_THROWS_AS(specfun::exp_integral_e1(0.0), DomainError);
        CHECK_THROWS_AS(specfun::exp_integral_e1(-2.0), DomainError);
    }

    TEST_CASE("sinpi and cospi are exact at lattice points")
    {
        CHECK(specfun::sinpi(3.0) == 0.0);
        CHECK(specfun::cospi(2.5) == 0.0);
        CHECK(specfun::sinpi(0.5) == 1.0);
        CHECK(specfun::cospi(1.0) == -1.0);
        CHECK(std::abs(specfun::sinpi(0.25) - std::sqrt(0.5)) <= 1.2e-16);
    }
}
