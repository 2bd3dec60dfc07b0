#include "poincare/shc.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include "poincare/errors.hpp"

namespace poincare::shc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRequiredError = 1e-10;
constexpr Complex kI{0.0, 1.0};

// log cosh u without overflow.
double log_cosh(double u) {
    const double a = std::abs(u);
    return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// D^j f(u) with a centred stencil of step h; accurate to O(h^2).
Complex derivative(const RealFn& f, double u, int j, double h) {
    Complex acc = 0.0;
    double binom = 1.0;
    for (int i = 0; i <= j; ++i) {
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        acc += sign * binom * f(u + (0.5 * j - i) * h);
        binom = binom * (j - i) / (i + 1);
    }
    return acc / std::pow(h, j);
}

}  // namespace

void WaveTestParams::validate() const {
    if (!(s.real() > std::max(1.0, std::abs(k))))
        throw DomainError("WaveTestParams: requires Re(s) > max{1, |k|}");
}

EvenTestFunction wave_test_function(Complex s) {
    const Complex nu = s - 0.5;
    const Complex log_c = specfun::log_gamma(nu) - specfun::log_gamma(s);
    EvenTestFunction out;
    out.g = [nu, log_c](double u) { return std::exp(log_c - nu * log_cosh(u)); };
    out.decay_a = s.real() - 0.5;
    out.smooth_order = 4;
    // Q(y) = c (1 + y/2)^{-nu}
    out.q_prime = [nu, log_c](double y) {
        return -0.5 * nu * std::exp(log_c - (nu + 1.0) * std::log1p(0.5 * y));
    };
    return out;
}

Evaluation q_forward(const ProfileFunction& phi, double y, double k, const quad::Options& opt) {
    if (!(y >= 0.0)) throw DomainError("q_forward: y must be nonnegative");
    const double m = std::sqrt(y + 4.0);
    auto f = [&](double theta) -> Complex {
        const double c = std::cos(theta);
        const double t = std::sin(theta) / c;
        return 2.0 * m * phi.phi(y + (y + 4.0) * t * t) * std::cos(2.0 * k * theta) / (c * c);
    };
    const quad::Result r = quad::integrate(f, 0.0, 0.5 * kPi, opt);
    quad::require_accuracy(r, kRequiredError, 0.0, "q_forward");
    return {r.value, r.error};
}

Complex g_from_q(const RealFn& q, double u) { return q(2.0 * (std::cosh(u) - 1.0)); }

Evaluation fourier_h(const EvenTestFunction& g, Complex r, const quad::Options& opt) {
    if (std::abs(r.imag()) > g.decay_a + 1e-15)
        throw DomainError("fourier_h: |Im r| exceeds the decay rate of g");
    quad::Options o = opt;
    if (r.real() != 0.0) o.max_panel_width = std::min(o.max_panel_width, std::max(0.5, 4.0 * kPi / std::abs(r.real())));
    auto f = [&](double u) { return 2.0 * std::cos(u * r) * g.g(u); };
    const quad::Result res = quad::integrate_to_infinity(f, 0.0, o);
    quad::require_accuracy(res, kRequiredError, 0.0, "fourier_h");
    return {res.value, res.error};
}

Evaluation g_from_h(const std::function<Complex(double)>& h, double u, const quad::Options& opt) {
    quad::Options o = opt;
    if (u != 0.0) o.max_panel_width = std::min(o.max_panel_width, std::max(0.5, 4.0 * kPi / std::abs(u)));
    auto f = [&](double r) { return std::cos(u * r) * h(r) / kPi; };
    const quad::Result res = quad::integrate_to_infinity(f, 0.0, o);
    quad::require_accuracy(res, kRequiredError, 0.0, "g_from_h");
    return {res.value, res.error};
}

Complex h_gs_closed(const WaveTestParams& p, Complex r) {
    const Complex s = p.s;
    if (!(s.real() - 0.5 > std::abs(r.imag())))
        throw DomainError("h_gs_closed: requires Re(s) - 1/2 > |Im r|");
    const Complex a = 0.5 * (s - 0.5 - kI * r);
    const Complex b = 0.5 * (s - 0.5 + kI * r);
    const Complex log_v = (s - 1.5) * std::numbers::ln2 + specfun::log_gamma(a) + specfun::log_gamma(b) -
                          specfun::log_gamma(s);
    const Complex v = std::exp(log_v);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw OverflowError("h_gs_closed: overflow");
    return v;
}

Complex h_recurrence_factor(const WaveTestParams& p, Complex r, int n) {
    if (n < 0) throw DomainError("h_recurrence_factor: n must be nonnegative");
    if (n == 0) return 1.0;
    const Complex s = p.s;
    const Complex am = 0.5 * s - 0.25 - 0.5 * kI * r;
    const Complex ap = 0.5 * s - 0.25 + 0.5 * kI * r;
    for (int j = 0; j < n; ++j)
        if (std::abs(am + double(j)) < 1e-12 || std::abs(ap + double(j)) < 1e-12)
            throw PoleError("h_recurrence_factor: denominator Pochhammer vanishes");
    return std::pow(2.0, -2.0 * n) * specfun::pochhammer(s, 2 * n) /
           (specfun::pochhammer(am, n) * specfun::pochhammer(ap, n));
}

Complex h_continued(const WaveTestParams& p, Complex r, int n) {
    if (n < 0) throw DomainError("h_continued: n must be nonnegative");
    if (!(p.s.real() + 2.0 * n > std::max(1.0, std::abs(p.k)) + 0.5))
        throw DomainError("h_continued: Re(s) + 2n must exceed max{1, |k|} + 1/2");
    for (int m = 0; m < n; ++m) {
        for (double sign : {1.0, -1.0}) {
            const Complex pole = 0.5 + sign * kI * r - 2.0 * m;
            if (std::abs(p.s - pole) < 1e-3) {
                std::ostringstream msg;
                msg << "h_continued: s lies within 1e-3 of the pole 1/2 " << (sign > 0 ? "+" : "-") << " ir - "
                    << 2 * m;
                throw PoleError(msg.str());
            }
        }
    }
    WaveTestParams shifted = p;
    shifted.s = p.s + 2.0 * n;
    return h_recurrence_factor(p, r, n) * h_gs_closed(shifted, r);
}

Complex q_inverse(const EvenTestFunction& g, double y) {
    if (!(y >= 0.0)) throw DomainError("q_inverse: y must be nonnegative");
    return g.g(2.0 * std::log(0.5 * std::sqrt(y + 4.0) + 0.5 * std::sqrt(y)));
}

Complex q_prime(const EvenTestFunction& g, double y, bool* analytic) {
    if (g.q_prime) {
        if (analytic) *analytic = true;
        return g.q_prime(y);
    }
    if (analytic) *analytic = false;
    const double h = 1e-5 * (1.0 + std::abs(y));
    auto q = [&](double t) { return q_inverse(g, t); };
    if (y >= 2.0 * h)
        return (-q(y + 2 * h) + 8.0 * q(y + h) - 8.0 * q(y - h) + q(y - 2 * h)) / (12.0 * h);
    return (-25.0 * q(y) + 48.0 * q(y + h) - 36.0 * q(y + 2 * h) + 16.0 * q(y + 3 * h) - 3.0 * q(y + 4 * h)) /
           (12.0 * h);
}

Evaluation phi_inverse(const RealFn& qp, double x, double k, const quad::Options& opt) {
    if (!(x >= 0.0)) throw DomainError("phi_inverse: x must be nonnegative");
    const double m = std::sqrt(x + 4.0);
    // Folding tau -> -tau turns exp(-2k tau) into 2 cosh(2k tau).
    auto f = [&](double tau) -> Complex {
        const double sh = std::sinh(tau);
        return qp(x + (x + 4.0) * sh * sh) * (std::cosh(2.0 * k * tau) * std::cosh(tau));
    };
    const quad::Result r = quad::integrate_to_infinity(f, 0.0, opt);
    const double scale = 2.0 * m / kPi;
    const Evaluation out{-scale * r.value, scale * r.error};
    if (!(out.error <= kRequiredError)) throw QuadratureFailure("phi_inverse: error estimate above limit", out.error);
    return out;
}

DecayReport decay_class_check(const EvenTestFunction& g, double a, int n) {
    if (n < 0) throw DomainError("decay_class_check: n must be nonnegative");
    constexpr double head_end = 5.0;
    constexpr double tail_end = 40.0;
    constexpr double step = 0.25;
    constexpr double fd_step = 0.01;

    DecayReport rep;
    rep.a = a;
    rep.n = n;
    rep.delta = n - 2.0;

    for (double u = step; u <= tail_end; u += step) {
        const Complex p = g.g(u);
        const Complex q = g.g(-u);
        if (!(std::abs(p - q) <= 1e-13 * std::max(1.0, std::abs(p)))) {
            throw ClassViolation("decay_class_check: g(u) != g(-u) at u = " + fmt(u));
        }
    }
    rep.even = true;

    for (int j = 0; j <= n; ++j) {
        double head = 0.0;
        for (double u = 0.0; u <= head_end; u += step)
            head = std::max(head, std::abs(derivative(g.g, u, j, fd_step)) * std::exp(a * u));
        rep.max_head = std::max(rep.max_head, head);
        for (double u = head_end + step; u <= tail_end; u += step) {
            const double v = std::abs(derivative(g.g, u, j, fd_step)) * std::exp(a * u);
            rep.max_tail = std::max(rep.max_tail, v);
            if (!std::isfinite(v) || v > 10.0 * head + 1e-300) {
                throw ClassViolation("decay_class_check: derivative of order " + std::to_string(j) +
                                     " times exp(a|u|) grows at u = " + fmt(u) + " (value " + fmt(v) +
                                     ", head maximum " + fmt(head) + ")");
            }
        }
    }
    rep.bounded = true;
    const EvenTestFunction copy = g;
    rep.fourier.h = [copy](Complex r) { return fourier_h(copy, r).value; };
    rep.fourier.delta = rep.delta;
    return rep;
}

void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace) {
    out << "x,value_re,value_im,error_estimate\n";
    for (const auto& p : trace)
        out << fmt(p.x) << ',' << fmt(p.value.real()) << ',' << fmt(p.value.imag()) << ',' << fmt(p.error) << '\n';
}

}  // namespace poincare::shc
