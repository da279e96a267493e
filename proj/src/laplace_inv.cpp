#include "ppwell/laplace_inv.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace ppwell::laplace_inv {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Continued-fraction coefficients d_0..d_2M from the power-series
// coefficients a_0..a_2M by the quotient-difference algorithm. Returns the
// number of usable levels (may be < m if a coefficient vanishes).
int qd_coefficients(const std::vector<Complex>& a, int m, std::vector<Complex>& d)
{
    d.assign(2 * m + 1, Complex(0.0));
    d[0] = a[0];
    const int n = 2 * m;

    // q and e of the current level, indexed by i.
    std::vector<Complex> q(n), e(n + 1, Complex(0.0)), e_prev(n + 1, Complex(0.0));
    for (int i = 0; i < n; ++i) {
        q[i] = a[i + 1] / a[i];
        if (!finite(q[i])) {
            return 0;
        }
    }
    for (int r = 1; r <= m; ++r) {
        // e_r^{(i)}, i = 0..2M-2r
        const int ne = n - 2 * r + 1;
        for (int i = 0; i < ne; ++i) {
            e[i] = q[i + 1] - q[i] + e_prev[i + 1];
        }
        d[2 * r - 1] = -q[0];
        d[2 * r] = -e[0];
        if (!finite(d[2 * r - 1]) || !finite(d[2 * r]) || e[0] == Complex(0.0)) {
            return r - 1;
        }
        if (r == m) {
            break;
        }
        // q_{r+1}^{(i)}, i = 0..2M-2r-1
        const int nq = n - 2 * r;
        for (int i = 0; i < nq; ++i) {
            q[i] = q[i + 1] * e[i + 1] / e[i];
        }
        std::swap(e, e_prev);
    }
    return m;
}

} // namespace

void InversionConfig::validate() const
{
    std::ostringstream msg;
    if (terms_m < 4 || terms_m > 200) {
        msg << "inversion terms M must lie in [4, 200], got " << terms_m;
    } else if (!(tolerance > 0.0) || tolerance > 1e-2) {
        msg << "inversion tolerance must lie in (0, 1e-2], got " << tolerance;
    } else if (!std::isfinite(contour_shift_alpha) || contour_shift_alpha < 0.0) {
        msg << "contour shift alpha must be finite and >= 0, got " << contour_shift_alpha;
    } else if (!std::isfinite(scaled_period_factor) || scaled_period_factor < 1.0) {
        msg << "scaled period factor must be >= 1, got " << scaled_period_factor;
    } else {
        return;
    }
    throw ValidationError(msg.str());
}

TransformEvaluator::TransformEvaluator(Transform f) : f_(std::move(f)) {}

Complex TransformEvaluator::operator()(Complex p) const
{
    count_.fetch_add(1, std::memory_order_relaxed);
    return f_(p);
}

namespace {

struct RealAxisMinimum {
    double value = std::numeric_limits<double>::quiet_NaN();
    double gamma = std::numeric_limits<double>::quiet_NaN();
};

RealAxisMinimum real_axis_minimum(const Transform& f, double t)
{
    RealAxisMinimum nan_result;
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    // ln F is convex for the transform of a positive function, so the
    // objective is unimodal in u = ln gamma.
    auto objective = [&](double u) {
        const double g = std::exp(u);
        const double v = f(Complex(g, 0.0)).real();
        if (!(v > 0.0) || !std::isfinite(v)) {
            return nan;
        }
        return std::log(v) + g * t;
    };
    double u1 = -std::log(t);
    double step = 1.0;
    double u0 = u1 - step, u2 = u1 + step;
    double f0 = objective(u0), f1 = objective(u1), f2 = objective(u2);
    for (int guard = 0; !(f1 <= f0 && f1 <= f2); ++guard) {
        if (std::isnan(f0) || std::isnan(f1) || std::isnan(f2) || guard > 60) {
            return nan_result;
        }
        step *= 1.6;
        if (f0 < f1) {
            u2 = u1;
            f2 = f1;
            u1 = u0;
            f1 = f0;
            u0 = u1 - step;
            f0 = objective(u0);
        } else {
            u0 = u1;
            f0 = f1;
            u1 = u2;
            f1 = f2;
            u2 = u1 + step;
            f2 = objective(u2);
        }
    }
    // Golden-section refinement of the bracket [u0, u2].
    constexpr double r = 0.6180339887498949;
    double a = u0, b = u2;
    double x1 = b - r * (b - a), x2 = a + r * (b - a);
    double g1 = objective(x1), g2 = objective(x2);
    while (b - a > 1e-3) {
        if (std::isnan(g1) || std::isnan(g2)) {
            return nan_result;
        }
        if (g1 < g2) {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - r * (b - a);
            g1 = objective(x1);
        } else {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + r * (b - a);
            g2 = objective(x2);
        }
    }
    RealAxisMinimum out;
    out.value = std::min({f1, g1, g2});
    out.gamma = std::exp(0.5 * (a + b));
    return out;
}

} // namespace

double log_magnitude_estimate(const Transform& f, double t)
{
    return real_axis_minimum(f, t).value;
}

double contour_abscissa(const Transform& f, double period, double t_ref,
                        const InversionConfig& cfg)
{
    const double base = cfg.contour_shift_alpha - std::log(cfg.tolerance) / (2.0 * period);
    if (!cfg.adaptive_shift) {
        return base;
    }
    // The first alias contributes tol * f(t + 2T); compare it with f(t).
    // Where f(t) is exponentially small the real-axis saddle point of
    // F(p) e^{pt} is the better abscissa: it balances the alias against
    // round-off in the e^{gamma t} amplified sum.
    const auto here = real_axis_minimum(f, t_ref);
    const double alias = log_magnitude_estimate(f, t_ref + 2.0 * period);
    if (std::isnan(here.value) || std::isnan(alias)) {
        return base;
    }
    const double growth = std::clamp(alias - here.value, 0.0, 1400.0);
    return std::max(base + growth / (2.0 * period), here.gamma);
}

FourierContour::FourierContour(const Transform& f, double period, const InversionConfig& cfg,
                               double t_ref)
    : period_(period), m_(cfg.terms_m)
{
    cfg.validate();
    if (!(period > 0.0) || !std::isfinite(period)) {
        std::ostringstream msg;
        msg << "inversion period must be positive and finite, got " << period;
        throw ValidationError(msg.str());
    }
    if (!(t_ref > 0.0)) {
        t_ref = period / cfg.scaled_period_factor;
    }
    gamma_ = contour_abscissa(f, period, t_ref, cfg);

    const int n = 2 * m_;
    samples_.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        const Complex p(gamma_, std::numbers::pi * k / period);
        const Complex v = f(p);
        ++evaluations_;
        if (!finite(v)) {
            std::ostringstream msg;
            msg << "transform returned a non-finite value at p = (" << p.real() << ", "
                << p.imag() << ")";
            throw NumericalError(msg.str());
        }
        samples_[k] = v;
        if (cfg.verify_symmetry && k > 0) {
            const Complex w = f(std::conj(p));
            ++evaluations_;
            const double scale = std::abs(v);
            if (scale > 0.0) {
                symmetry_residue_ =
                    std::max(symmetry_residue_, std::abs(w - std::conj(v)) / scale);
            }
        }
    }

    // Trailing zeros (underflow at large |p|) shorten the usable table.
    std::vector<Complex> a = samples_;
    a[0] *= 0.5;
    int usable = n;
    for (int k = 0; k <= n; ++k) {
        if (a[k] == Complex(0.0)) {
            usable = k - 1;
            break;
        }
    }
    const int m_eff = usable >= 2 ? usable / 2 : 0;
    m_ = m_eff > 0 ? qd_coefficients(a, m_eff, d_) : 0;
}

InversionResult FourierContour::evaluate(double t) const
{
    if (!(t > 0.0) || t > period_ * (1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "inversion time must lie in (0, " << period_ << "], got " << t;
        throw ValidationError(msg.str());
    }
    InversionResult out;
    out.evaluations = evaluations_;
    const double scale = std::exp(gamma_ * t) / period_;
    const Complex z = std::polar(1.0, std::numbers::pi * t / period_);

    if (m_ == 0) {
        // Degenerate table: plain trapezoidal Fourier sum over nonzero samples.
        Complex sum = 0.5 * samples_[0];
        Complex zk = 1.0;
        for (std::size_t k = 1; k < samples_.size(); ++k) {
            zk *= z;
            sum += samples_[k] * zk;
        }
        out.value = scale * sum.real();
        return out;
    }

    const int n = 2 * m_;
    Complex a_prev2 = 0.0, a_prev1 = d_[0];
    Complex b_prev2 = 1.0, b_prev1 = 1.0;
    Complex a_n = a_prev1, b_n = b_prev1;
    Complex ratio_prev = a_prev1 / b_prev1;
    for (int k = 1; k < n; ++k) {
        a_n = a_prev1 + d_[k] * z * a_prev2;
        b_n = b_prev1 + d_[k] * z * b_prev2;
        a_prev2 = a_prev1;
        a_prev1 = a_n;
        b_prev2 = b_prev1;
        b_prev1 = b_n;
    }
    ratio_prev = a_prev1 / b_prev1;

    // Remainder estimate for the tail of the continued fraction.
    const Complex h = 0.5 * (1.0 + (d_[n - 1] - d_[n]) * z);
    const Complex r = -h * (1.0 - std::sqrt(1.0 + d_[n] * z / (h * h)));
    a_n = a_prev1 + r * a_prev2;
    b_n = b_prev1 + r * b_prev2;
    const Complex ratio = a_n / b_n;
    if (!finite(ratio)) {
        throw NumericalError("inversion continued fraction produced a non-finite value");
    }
    out.value = scale * ratio.real();
    const double mag = std::abs(ratio);
    out.last_increment = mag > 0.0 ? std::abs(ratio - ratio_prev) / mag : 0.0;
    return out;
}

InversionResult invert_at(const Transform& f, double t, const InversionConfig& cfg)
{
    if (!(t > 0.0) || !std::isfinite(t)) {
        std::ostringstream msg;
        msg << "inversion time must be positive and finite, got " << t;
        throw ValidationError(msg.str());
    }
    cfg.validate();
    const FourierContour contour(f, cfg.scaled_period_factor * t, cfg);
    return contour.evaluate(t);
}

InversionResult invert_unit_time(const Transform& g, const InversionConfig& cfg)
{
    return invert_at(g, 1.0, cfg);
}

double conjugate_symmetry_residue(const Transform& f, const std::vector<Complex>& points)
{
    double worst = 0.0;
    for (const Complex& p : points) {
        const Complex v = f(p);
        const double scale = std::abs(v);
        if (scale > 0.0) {
            worst = std::max(worst, std::abs(f(std::conj(p)) - std::conj(v)) / scale);
        }
    }
    return worst;
}

} // namespace ppwell::laplace_inv
