#pragma once

#include <complex>

#include "ppwell/errors.h"

namespace ppwell {

using Complex = std::complex<double>;

namespace specfun {

/// Value of K0 or K1 together with an underflow indicator. When the true
/// result is below the smallest normal double the value is exactly zero and
/// `underflow` is set.
struct BesselValue {
    Complex value;
    bool underflow = false;
};

/// Exponentially scaled pair e^z K0(z), e^z K1(z).
struct ScaledBesselPair {
    Complex k0;
    Complex k1;
};

/// Modified Bessel functions of the second kind for Re(z) > 0.
///
/// Three evaluation regimes are used: the ascending series for |z| <= 2,
/// Steed's continued fraction for 2 < |z| <= 25 and the Hankel asymptotic
/// expansion beyond. All throw DomainError for z = 0 or Re(z) <= 0.
BesselValue bessel_k0_checked(Complex z);
BesselValue bessel_k1_checked(Complex z);

/// Same as the checked forms, discarding the underflow flag.
Complex bessel_k0(Complex z);
Complex bessel_k1(Complex z);

/// e^z K0(z) and e^z K1(z); never underflow for |z| in the supported range.
Complex bessel_k0_scaled(Complex z);
Complex bessel_k1_scaled(Complex z);
ScaledBesselPair bessel_k01_scaled(Complex z);

/// Exponential integral E1(u) = int_u^inf e^-t / t dt for real u > 0.
double exp_integral_e1(double u);

/// sin(pi x) and cos(pi x) with exact zeros at integers / half integers.
double sinpi(double x);
double cospi(double x);

} // namespace specfun
} // namespace ppwell
