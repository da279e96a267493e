#include "ppwell/specfun.h"

#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace ppwell::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;

// Regime boundaries in |z|.
constexpr double kSeriesRadius = 2.0;
constexpr double kAsymptoticRadius = 25.0;

void check_domain(Complex z, const char* name)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || z.real() <= 0.0) {
        std::ostringstream msg;
        msg << name << ": argument must be finite with positive real part, got (" << z.real()
            << ", " << z.imag() << ")";
        throw DomainError(msg.str());
    }
}

// Ascending series about z = 0, unscaled.
ScaledBesselPair series_k01(Complex z)
{
    const Complex q = 0.25 * z * z;
    const Complex lg = std::log(0.5 * z) + kEulerGamma;

    // K0 = -(ln(z/2) + gamma) I0 + sum_{k>=1} H_k (z^2/4)^k / (k!)^2
    Complex term = 1.0;
    Complex i0 = 1.0;
    Complex harm_sum = 0.0;
    double harmonic = 0.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / static_cast<double>(k * k);
        harmonic += 1.0 / k;
        i0 += term;
        harm_sum += term * harmonic;
        if (std::abs(term) * (1.0 + harmonic) < 0.1 * kEps * std::abs(i0)) {
            break;
        }
    }
    const Complex k0 = -lg * i0 + harm_sum;

    // K1 = 1/z + (z/2)(ln(z/2) + gamma) S1 - (z/4) S2 with
    // S1 = sum u_k, S2 = sum u_k (H_k + H_{k+1}), u_k = (z^2/4)^k / (k!(k+1)!)
    Complex u = 1.0;
    Complex s1 = 1.0;
    Complex s2 = 1.0;
    double hk = 0.0;
    double hk1 = 1.0;
    for (int k = 1; k < 200; ++k) {
        u *= q / static_cast<double>(k * (k + 1));
        hk = hk1;
        hk1 += 1.0 / (k + 1);
        s1 += u;
        s2 += u * (hk + hk1);
        if (std::abs(u) * (1.0 + hk + hk1) < 0.1 * kEps * std::abs(s1)) {
            break;
        }
    }
    const Complex k1 = 1.0 / z + 0.5 * z * lg * s1 - 0.25 * z * s2;
    return {k0, k1};
}

// Steed's continued fraction (Temme's CF2) for order zero, scaled by e^z.
ScaledBesselPair steed_k01_scaled(Complex z)
{
    constexpr double a1 = 0.25;
    Complex b = 2.0 * (1.0 + z);
    Complex d = 1.0 / b;
    Complex h = d;
    Complex delh = d;
    Complex q1 = 0.0;
    Complex q2 = 1.0;
    Complex q = a1;
    Complex c = a1;
    double a = -a1;
    Complex s = 1.0 + q * delh;
    bool converged = false;
    for (int i = 1; i < 100000; ++i) {
        a -= 2.0 * i;
        c = -a * c / (i + 1.0);
        const Complex qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const Complex dels = q * delh;
        s += dels;
        if (std::abs(dels) < 0.5 * kEps * std::abs(s)) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw NumericalError("bessel K: continued fraction failed to converge");
    }
    h *= a1;
    const Complex k0 = std::sqrt(kPi / (2.0 * z)) / s;
    const Complex k1 = k0 * (z + 0.5 - h) / z;
    return {k0, k1};
}

// Hankel expansion, scaled by e^z.
ScaledBesselPair asymptotic_k01_scaled(Complex z)
{
    const Complex inv = 1.0 / z;
    Complex t0 = 1.0;
    Complex t1 = 1.0;
    Complex s0 = 1.0;
    Complex s1 = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        const Complex f = inv / (8.0 * k);
        t0 *= -odd * odd * f;
        t1 *= (4.0 - odd * odd) * f;
        const double size = std::max(std::abs(t0), std::abs(t1));
        if (size > prev) {
            break;
        }
        s0 += t0;
        s1 += t1;
        if (size < 0.1 * kEps) {
            break;
        }
        prev = size;
    }
    const Complex pre = std::sqrt(kPi / (2.0 * z));
    return {pre * s0, pre * s1};
}

BesselValue unscale(Complex scaled, Complex z)
{
    // e^{-z} underflows once Re z exceeds ~745; the product is below DBL_MIN
    // somewhat earlier depending on the magnitude of the scaled value.
    if (z.real() > 700.0) {
        const double log_mag = -z.real() + std::log(std::abs(scaled));
        if (log_mag < std::log(DBL_MIN)) {
            return {Complex(0.0, 0.0), true};
        }
    }
    const Complex v = std::exp(-z) * scaled;
    if (std::abs(v) < DBL_MIN) {
        return {Complex(0.0, 0.0), true};
    }
    return {v, false};
}

} // namespace

ScaledBesselPair bessel_k01_scaled(Complex z)
{
    check_domain(z, "bessel_k");
    const double r = std::abs(z);
    if (r <= kSeriesRadius) {
        const auto [k0, k1] = series_k01(z);
        const Complex e = std::exp(z);
        return {e * k0, e * k1};
    }
    if (r <= kAsymptoticRadius) {
        return steed_k01_scaled(z);
    }
    return asymptotic_k01_scaled(z);
}

Complex bessel_k0_scaled(Complex z) { return bessel_k01_scaled(z).k0; }
Complex bessel_k1_scaled(Complex z) { return bessel_k01_scaled(z).k1; }

BesselValue bessel_k0_checked(Complex z)
{
    check_domain(z, "bessel_k0");
    if (std::abs(z) <= kSeriesRadius) {
        return {series_k01(z).k0, false};
    }
    return unscale(bessel_k01_scaled(z).k0, z);
}

BesselValue bessel_k1_checked(Complex z)
{
    check_domain(z, "bessel_k1");
    if (std::abs(z) <= kSeriesRadius) {
        return {series_k01(z).k1, false};
    }
    return unscale(bessel_k01_scaled(z).k1, z);
}

Complex bessel_k0(Complex z) { return bessel_k0_checked(z).value; }
Complex bessel_k1(Complex z) { return bessel_k1_checked(z).value; }

double exp_integral_e1(double u)
{
    if (!(u > 0.0) || !std::isfinite(u)) {
        std::ostringstream msg;
        msg << "exp_integral_e1: argument must be positive and finite, got " << u;
        throw DomainError(msg.str());
    }
    // Extended precision absorbs the cancellation of the series near u ~ 1.
    using ld = long double;
    const ld x = u;
    if (u <= 2.0) {
        // E1(u) = -gamma - ln u - sum_{k>=1} (-u)^k / (k k!)
        ld term = 1.0L;
        ld sum = 0.0L;
        for (int k = 1; k < 100; ++k) {
            term *= -x / k;
            const ld add = term / k;
            sum += add;
            if (std::abs(add) < 1e-21L * std::abs(sum)) {
                break;
            }
        }
        return static_cast<double>(-0.577215664901532860606512090082402431L - std::log(x) - sum);
    }
    // Continued fraction, modified Lentz evaluation.
    constexpr ld tiny = 1e-300L;
    ld b = x + 1.0L;
    ld c = 1.0L / tiny;
    ld d = 1.0L / b;
    ld h = d;
    for (int i = 1; i < 10000; ++i) {
        const ld an = -static_cast<ld>(i) * i;
        b += 2.0L;
        d = 1.0L / (an * d + b);
        c = b + an / c;
        const ld del = c * d;
        h *= del;
        if (std::abs(del - 1.0L) < 1e-20L) {
            return static_cast<double>(h * std::exp(-x));
        }
    }
    throw NumericalError("exp_integral_e1: continued fraction failed to converge");
}

double sinpi(double x)
{
    double r = std::remainder(x, 2.0); // [-1, 1]
    if (r > 0.5) {
        r = 1.0 - r;
    } else if (r < -0.5) {
        r = -1.0 - r;
    }
    return std::sin(kPi * r);
}

double cospi(double x)
{
    const double r = std::abs(std::remainder(x, 2.0)); // [0, 1]
    return std::sin(kPi * (0.5 - r));
}

} // namespace ppwell::specfun
