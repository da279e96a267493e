#include "series.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace ppwell::detail {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kBlock = 64;
constexpr int kDifferences = 8;
constexpr double kThetaMerge = 1e-15;

using specfun::cospi;
using specfun::sinpi;

double power_weight(double n, int q)
{
    return q == 1 ? n : n * n;
}

// Trigonometric weight of term n in product form.
double trig_weight(const SeriesGeometry& g, double n)
{
    const double screen = sinpi(n * g.l) - sinpi(n * g.d);
    if (g.averaged) {
        return screen * (sinpi(n * g.z2) - sinpi(n * g.z1));
    }
    return screen * cospi(n * g.z);
}

void add_component(std::vector<TrigComponent>& out, bool cosine, double theta, double amp)
{
    double t = std::fmod(theta, 2.0);
    if (t < 0.0) {
        t += 2.0;
    }
    if (t > 1.0) {
        t = 2.0 - t;
        if (!cosine) {
            amp = -amp;
        }
    }
    if (t < kThetaMerge) {
        t = 0.0;
    } else if (t > 1.0 - kThetaMerge) {
        t = 1.0;
    }
    if (!cosine && (t == 0.0 || t == 1.0)) {
        return;  // sin(n pi) vanishes for every integer n
    }
    for (auto& c : out) {
        if (c.cosine == cosine && std::abs(c.theta - t) <= kThetaMerge) {
            c.amp += amp;
            return;
        }
    }
    out.push_back({cosine, t, amp});
}

// Exp-sinh quadrature of f over [a, inf) with the scale s.
template <class F>
std::pair<Complex, double> exp_sinh(F&& f, double a, double s, double abs_tol)
{
    constexpr double t_max = 4.5;
    auto node = [&](double t) {
        const double e = std::exp(0.5 * kPi * std::sinh(t));
        const double x = a + s * e;
        const double dx = s * 0.5 * kPi * std::cosh(t) * e;
        if (!(dx > 0.0) || !std::isfinite(x)) {
            return Complex(0.0);
        }
        return f(x) * dx;
    };
    double h = 0.5;
    Complex sum = 0.0;
    for (double t = -t_max; t <= t_max + 1e-12; t += h) {
        sum += node(t);
    }
    Complex estimate = h * sum;
    double err = std::numeric_limits<double>::infinity();
    for (int level = 0; level < 7; ++level) {
        h *= 0.5;
        for (double t = -t_max + h; t < t_max; t += 2.0 * h) {
            sum += node(t);
        }
        const Complex next = h * sum;
        err = std::abs(next - estimate);
        estimate = next;
        if (err <= abs_tol && level >= 1) {
            break;
        }
    }
    return {estimate, err};
}

struct TailAttempt {
    Complex value;
    double error = std::numeric_limits<double>::infinity();
};

// Estimate of sum_{n>N} g(n) W(n) from smoothness of g, where
// g(x) = mode(x) / x^q. Oscillatory components use summation by parts
// (an Euler-type transform in differences of g); the non-oscillatory
// component uses the midpoint Euler-Maclaurin formula.
TailAttempt accelerate_tail(const ModeModel& mode, int q,
                            const std::vector<TrigComponent>& comps, int n_direct,
                            double abs_tol)
{
    auto g = [&](double x) { return mode.value(x) / power_weight(x, q); };

    // g(N), g(N+1), ..., g(N+1+kDifferences)
    std::array<Complex, kDifferences + 2> vals;
    for (int j = 0; j < kDifferences + 2; ++j) {
        vals[j] = g(static_cast<double>(n_direct + j));
    }
    // Forward differences at m = N+1.
    std::array<Complex, kDifferences + 1> diff;
    {
        std::array<Complex, kDifferences + 1> work;
        for (int j = 0; j <= kDifferences; ++j) {
            work[j] = vals[j + 1];
        }
        for (int j = 0; j <= kDifferences; ++j) {
            diff[j] = work[0];
            for (int i = 0; i + j < kDifferences; ++i) {
                work[i] = work[i + 1] - work[i];
            }
        }
    }

    const double m = n_direct + 1.0;
    TailAttempt out;
    out.value = 0.0;
    double err = 0.0;
    double flat_amp = 0.0;

    for (const auto& c : comps) {
        if (c.cosine && c.theta == 0.0) {
            flat_amp += c.amp;
            continue;
        }
        Complex e_val[2];
        double e_err[2];
        for (int side = 0; side < 2; ++side) {
            const double sgn = side == 0 ? 1.0 : -1.0;
            const Complex zeta(cospi(c.theta), sgn * sinpi(c.theta));
            const Complex zeta_m(cospi(m * c.theta), sgn * sinpi(m * c.theta));
            const Complex one_minus = 1.0 - zeta;
            const Complex w = zeta / one_minus;
            Complex acc = 0.0;
            Complex wj = 1.0;
            double prev = std::numeric_limits<double>::infinity();
            double omitted = 0.0;
            bool broke = false;
            for (int j = 0; j <= kDifferences; ++j) {
                const Complex term = wj * diff[j];
                const double size = std::abs(term);
                if (j > 0 && size > prev) {
                    omitted = size;
                    broke = true;
                    break;
                }
                acc += term;
                prev = size;
                wj *= w;
            }
            if (!broke) {
                omitted = prev;
            }
            const Complex pre = zeta_m / one_minus;
            e_val[side] = pre * acc;
            e_err[side] = 2.0 * std::abs(pre) * omitted;
        }
        Complex v;
        if (c.cosine) {
            v = 0.5 * (e_val[0] + e_val[1]);
        } else {
            v = (e_val[0] - e_val[1]) / Complex(0.0, 2.0);
        }
        out.value += c.amp * v;
        err += std::abs(c.amp) * 0.5 * (e_err[0] + e_err[1]);
    }

    if (flat_amp != 0.0) {
        const double a = n_direct + 0.5;
        auto [integral, quad_err] = exp_sinh(g, a, a, 0.1 * abs_tol / std::abs(flat_amp));
        const Complex slope = vals[1] - vals[0];
        const Complex d3 = vals[3] - 3.0 * vals[2] + 3.0 * vals[1] - vals[0];
        const Complex tail = integral + slope / 24.0;
        out.value += flat_amp * tail;
        err += std::abs(flat_amp) * (4.0 * 7.0 / 5760.0 * std::abs(d3) + quad_err);
    }
    out.error = err;
    return out;
}

// Bound on sum_{n>N} |...| once the modes decay monotonically.
double direct_tail_bound(const ModeModel& mode, int q, const std::vector<TrigComponent>& comps,
                         int n, Complex g_n)
{
    const double a_n = std::abs(g_n);
    if (a_n == 0.0) {
        return 0.0;
    }
    double rate;
    if (mode.kind == ModeKind::LineSink) {
        rate = mode.phi(n + 1.0).real() - mode.phi(n).real();
    } else {
        rate = (1.0 - mode.w) * (mode.phi(n + 1.0).real() - mode.phi(n).real());
    }
    const double k = mode.kind == ModeKind::LineSink ? q + 0.5 : q + 1.0;
    double abs_bound = a_n * n / (k - 1.0);
    if (rate > 0.0) {
        abs_bound = std::min(abs_bound, a_n / std::expm1(rate));
    }
    double bound = 0.0;
    for (const auto& c : comps) {
        double b = abs_bound;
        if (!(c.cosine && c.theta == 0.0)) {
            b = std::min(b, 3.0 * a_n / std::abs(sinpi(0.5 * c.theta)));
        }
        bound += std::abs(c.amp) * b;
    }
    return bound;
}

} // namespace

Complex ModeModel::phi(double n) const
{
    const double k = beta * kPi * n;
    return std::sqrt(p + k * k);
}

Complex ModeModel::value(double n) const
{
    const Complex ph = phi(n);
    if (kind == ModeKind::LineSink) {
        return std::exp(-ph) * specfun::bessel_k0_scaled(ph);
    }
    const Complex wph = w * ph;
    Complex k0_phi, k0_w, k1_w;
    if (w == 1.0) {
        const auto pair = specfun::bessel_k01_scaled(ph);
        k0_phi = k0_w = pair.k0;
        k1_w = pair.k1;
    } else {
        k0_phi = specfun::bessel_k0_scaled(ph);
        const auto pair = specfun::bessel_k01_scaled(wph);
        k0_w = pair.k0;
        k1_w = pair.k1;
    }
    const Complex den = wph * k1_w + c * wph * wph * k0_w;
    const Complex decay = w == 1.0 ? Complex(1.0) : std::exp(-(1.0 - w) * ph);
    return decay * k0_phi / den;
}

std::vector<TrigComponent> trig_components(const SeriesGeometry& g)
{
    std::vector<TrigComponent> out;
    if (g.averaged) {
        // (sin l - sin d)(sin z2 - sin z1), each product of sines as cosines.
        const std::array<std::array<double, 3>, 4> pairs{{
            {g.l, g.z2, 1.0}, {g.l, g.z1, -1.0}, {g.d, g.z2, -1.0}, {g.d, g.z1, 1.0}}};
        for (const auto& [a, b, s] : pairs) {
            add_component(out, true, a - b, 0.5 * s);
            add_component(out, true, a + b, -0.5 * s);
        }
    } else {
        add_component(out, false, g.l + g.z, 0.5);
        add_component(out, false, g.l - g.z, 0.5);
        add_component(out, false, g.d + g.z, -0.5);
        add_component(out, false, g.d - g.z, -0.5);
    }
    std::erase_if(out, [](const TrigComponent& c) { return std::abs(c.amp) < 1e-15; });
    return out;
}

SeriesOutcome sum_modes(const ModeModel& mode, const SeriesGeometry& geom, Complex head,
                        const lapsol::SeriesOptions& opts)
{
    SeriesOutcome out;
    out.sum = 0.0;

    const bool vanishes = (geom.d == 0.0 && geom.l == 1.0) ||
                          (geom.averaged && geom.z1 == 0.0 && geom.z2 == 1.0);
    const auto comps = trig_components(geom);
    if (vanishes || comps.empty()) {
        return out;
    }

    const int q = geom.averaged ? 2 : 1;
    const double bpi = mode.beta * kPi;
    const double regime_n = std::max(8.0, 2.0 * std::sqrt(std::abs(mode.p)) / bpi);
    const double tol = opts.tolerance;

    Complex sum = 0.0;
    int n = 0;
    int next_attempt = kBlock;
    double tail_rel = std::numeric_limits<double>::infinity();
    // Best unconverged estimate, returned when not strict.
    Complex best = 0.0;
    double best_rel = std::numeric_limits<double>::infinity();
    while (n < opts.max_terms) {
        Complex last_g = 0.0;
        for (int i = 0; i < kBlock; ++i) {
            ++n;
            const double x = n;
            const double w = trig_weight(geom, x);
            const bool last = i == kBlock - 1;
            if (w != 0.0 || last) {
                const Complex gx = mode.value(x) / power_weight(x, q);
                sum += gx * w;
                if (last) {
                    last_g = gx;
                }
            }
        }
        const double ref = std::abs(head + sum);

        if (n >= regime_n && bpi * n >= 1.0) {
            const double bound = direct_tail_bound(mode, q, comps, n, last_g);
            if (bound == 0.0 || bound <= tol * ref) {
                out.sum = sum;
                out.diagnostics = {n, ref > 0.0 ? bound / ref : 0.0, true};
                return out;
            }
            tail_rel = ref > 0.0 ? bound / ref : std::numeric_limits<double>::infinity();
            if (tail_rel < best_rel) {
                best = sum;
                best_rel = tail_rel;
            }
        }

        const bool final_block = n + kBlock > opts.max_terms;
        if (opts.accelerate && (n == next_attempt || final_block)) {
            next_attempt *= 2;
            const TailAttempt t = accelerate_tail(mode, q, comps, n, tol * ref);
            if (std::isfinite(t.error) && std::isfinite(t.value.real()) &&
                std::isfinite(t.value.imag())) {
                const double ref2 = std::abs(head + sum + t.value);
                if (t.error <= tol * ref2) {
                    out.sum = sum + t.value;
                    out.diagnostics = {n, ref2 > 0.0 ? t.error / ref2 : 0.0, true};
                    return out;
                }
                if (ref2 > 0.0) {
                    tail_rel = std::min(tail_rel, t.error / ref2);
                    if (t.error / ref2 < best_rel) {
                        best = sum + t.value;
                        best_rel = t.error / ref2;
                    }
                }
            }
        }
    }

    out.sum = std::isfinite(best_rel) ? best : sum;
    out.diagnostics = {n, tail_rel, false};
    if (opts.strict) {
        std::ostringstream msg;
        msg << "mode series did not converge after " << n << " terms at p' = (" << mode.p.real()
            << ", " << mode.p.imag() << "); tail estimate " << tail_rel;
        throw NumericalError(msg.str());
    }
    return out;
}

} // namespace ppwell::detail
