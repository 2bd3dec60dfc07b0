#pragma once

// Selberg/Harish-Chandra transform: a radial profile Phi(x), x = |z-w|^2/(Im z Im w),
// goes to Q(y), then to the even test function g(u) = Q(2(cosh u - 1)), then to
// its cosine transform H(r). Inverse steps recover Q from g and Phi from Q'.
// The wave test functions g_s(u) = Gamma(s-1/2)/Gamma(s) cosh(u)^{-(s-1/2)} have
// closed-form transforms with a Pochhammer recurrence that continues them
// meromorphically in s.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "poincare/quadrature.hpp"
#include "poincare/specfun.hpp"

namespace poincare::shc {

using RealFn = std::function<Complex(double)>;

/// A value with its estimated absolute error.
struct Evaluation {
    Complex value;
    double error = 0.0;
};

struct ProfileFunction {
    RealFn phi;
    double decay_exponent = 0.0; ///< delta with |Phi(x)| <= C (4 + x)^{-delta}
};

struct EvenTestFunction {
    RealFn g;
    double decay_a = 0.0; ///< g(u) exp(a|u|) bounded
    int smooth_order = 0;
    /// Optional closed form of Q'(y) for Q = q_inverse(g); empty means
    /// finite differences are used.
    RealFn q_prime;
};

struct FourierSide {
    std::function<Complex(Complex)> h;
    double delta = 0.0; ///< h(r) << (1 + |r|)^{-2-delta}
};

/// s with Re(s) > max{1, |k|}, checked by validate(). h_continued lifts the
/// restriction.
struct WaveTestParams {
    Complex s;
    double k = 0.0;

    void validate() const;
};

/// g_s together with its decay rate a = Re(s) - 1/2 and closed-form Q'.
EvenTestFunction wave_test_function(Complex s);

/// Q(y) = int Phi(y + v^2) ((sqrt(y+4) + iv)/(sqrt(y+4) - iv))^k dv over the
/// real line. With v = sqrt(y+4) tan(theta) the weight becomes exp(2ik theta)
/// and the range is [0, pi/2) after folding v -> -v.
Evaluation q_forward(const ProfileFunction& phi, double y, double k,
                     const quad::Options& opt = {});

/// g(u) = Q(2(cosh u - 1)).
Complex g_from_q(const RealFn& q, double u);

/// H(r) = 2 int_0^inf cos(ur) g(u) du for |Im r| <= decay_a.
Evaluation fourier_h(const EvenTestFunction& g, Complex r, const quad::Options& opt = {});

/// g(u) = (1/pi) int_0^inf cos(ur) H(r) dr for an even, rapidly decaying H.
Evaluation g_from_h(const std::function<Complex(double)>& h, double u,
                    const quad::Options& opt = {});

/// H(r, g_s) = 2^{s-3/2} Gamma((s-1/2-ir)/2) Gamma((s-1/2+ir)/2) / Gamma(s).
Complex h_gs_closed(const WaveTestParams& p, Complex r);

/// 2^{-2n} (s)_{2n} / ((s/2-1/4-ir/2)_n (s/2-1/4+ir/2)_n), so that
/// H(r, g_s) = factor * H(r, g_{s+2n}).
Complex h_recurrence_factor(const WaveTestParams& p, Complex r, int n);

/// Continuation of s -> H(r, g_s) through factor * H(r, g_{s+2n}), valid for
/// Re(s) + 2n > max{1, |k|} + 1/2. PoleError within 1e-3 of s = 1/2 +- ir - 2m,
/// 0 <= m < n.
Complex h_continued(const WaveTestParams& p, Complex r, int n);

/// Q(y) = g(2 log(sqrt(y+4)/2 + sqrt(y)/2)).
Complex q_inverse(const EvenTestFunction& g, double y);

/// Q'(y) from the closed form when available, otherwise five-point
/// differences with step 1e-5 (1 + |y|). Sets *analytic accordingly.
Complex q_prime(const EvenTestFunction& g, double y, bool* analytic = nullptr);

/// Phi(x) = -(1/pi) int Q'(x+t^2) ((sqrt(x+4+t^2) - t)/(sqrt(x+4+t^2) + t))^k dt,
/// computed with t = sqrt(x+4) sinh(tau), which turns the weight into exp(-2k tau).
Evaluation phi_inverse(const RealFn& q_prime, double x, double k, const quad::Options& opt = {});

struct DecayReport {
    bool even = false;
    bool bounded = false;
    double a = 0.0;
    int n = 0;
    double delta = 0.0;          ///< n - 2
    double max_head = 0.0;       ///< max over u <= head of |g^(j)(u)| exp(a u)
    double max_tail = 0.0;       ///< the same over the tail grid
    FourierSide fourier;
};

/// Samples g and its first n derivatives (finite differences) on a grid;
/// throws ClassViolation naming the first failing sample if g is not even or
/// g^(j)(u) exp(a|u|) grows along the grid.
DecayReport decay_class_check(const EvenTestFunction& g, double a, int n);

struct TracePoint {
    double x = 0.0;
    Complex value;
    double error = 0.0;
};

/// CSV with columns x,value_re,value_im,error_estimate.
void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace);

}  // namespace poincare::shc
