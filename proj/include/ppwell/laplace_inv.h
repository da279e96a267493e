#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <vector>

#include "ppwell/specfun.h"

namespace ppwell::laplace_inv {

/// Settings of the accelerated Fourier-series (de Hoog) inversion.
struct InversionConfig {
    int terms_m = 20;                   ///< M; the contour uses 2M+1 points
    double contour_shift_alpha = 0.0;   ///< alpha, right of every singularity
    double scaled_period_factor = 2.0;  ///< T = factor * t
    double tolerance = 1e-9;            ///< sets gamma = alpha - ln(tol) / (2T)
    bool verify_symmetry = false;       ///< check F(conj p) = conj F(p) on the contour
    /// Raise gamma so the first alias f(t + 2T) is suppressed relative to f(t)
    /// rather than in absolute terms (matters where f(t) is exponentially small).
    bool adaptive_shift = true;

    /// Throws ValidationError on out-of-range settings.
    void validate() const;
};

using Transform = std::function<Complex(Complex)>;

/// Wraps a transform and counts evaluations (thread-safe).
class TransformEvaluator {
public:
    explicit TransformEvaluator(Transform f);

    Complex operator()(Complex p) const;
    std::size_t evaluations() const { return count_.load(); }

private:
    Transform f_;
    mutable std::atomic<std::size_t> count_{0};
};

struct InversionResult {
    double value = 0.0;
    std::size_t evaluations = 0;
    double last_increment = 0.0;  ///< |A_2M/B_2M - A_2M-1/B_2M-1|, relative
};

/// Transform sampled once on a contour of period T; may be evaluated at any
/// 0 < t <= T (accuracy is best for t near T / factor).
class FourierContour {
public:
    /// t_ref is the smallest time the contour will serve (defaults to
    /// period / scaled_period_factor); it only affects the adaptive shift.
    FourierContour(const Transform& f, double period, const InversionConfig& cfg,
                   double t_ref = 0.0);

    InversionResult evaluate(double t) const;

    double period() const { return period_; }
    double gamma() const { return gamma_; }
    const std::vector<Complex>& samples() const { return samples_; }
    /// Largest relative conjugate-symmetry residue seen (0 unless verified).
    double symmetry_residue() const { return symmetry_residue_; }

private:
    double period_;
    double gamma_;
    int m_;
    std::vector<Complex> samples_;
    std::vector<Complex> d_;  ///< continued-fraction coefficients
    std::size_t evaluations_ = 0;
    double symmetry_residue_ = 0.0;
};

/// f(t) from its transform F(p).
InversionResult invert_at(const Transform& f, double t, const InversionConfig& cfg = {});

/// Inverts G at unit time: G(p) is a transform whose original is wanted at 1.
InversionResult invert_unit_time(const Transform& g, const InversionConfig& cfg = {});

/// min over real gamma > 0 of ln|F(gamma)| + gamma t, an upper estimate of
/// ln f(t) for positive f. NaN if F is not positive on the real axis.
double log_magnitude_estimate(const Transform& f, double t);

/// Contour abscissa used for period T when the smallest served time is t_ref.
double contour_abscissa(const Transform& f, double period, double t_ref,
                        const InversionConfig& cfg);

/// max over the given points of |F(conj p) - conj F(p)| / |F(p)|.
double conjugate_symmetry_residue(const Transform& f, const std::vector<Complex>& points);

} // namespace ppwell::laplace_inv
