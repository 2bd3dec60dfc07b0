#include <cmath>

#include "poincare/errors.hpp"
#include "poincare/specfun.hpp"

namespace poincare::specfun {

namespace {

constexpr double kSeriesRadius = 0.75;
constexpr double kStartPoint = 0.5;

bool is_nonpositive_integer(Complex z) {
    return std::abs(z.imag()) <= 1e-12 && z.real() <= 1e-12 &&
           std::abs(z.real() - std::round(z.real())) <= 1e-12;
}

// 1 / Gamma(z), zero at the poles of Gamma.
Complex rgamma(Complex z) {
    if (is_nonpositive_integer(z)) return 0.0;
    return std::exp(-log_gamma(z));
}

Complex series(Complex a, Complex b, Complex c, double z, const SeriesControl& ctl) {
    Complex term = 1.0;
    Complex sum = 1.0;
    for (int j = 0; j < ctl.max_terms; ++j) {
        const double jd = static_cast<double>(j);
        const Complex ratio = (a + jd) * (b + jd) / ((c + jd) * (jd + 1.0)) * z;
        term *= ratio;
        if (term == Complex(0.0)) return sum;
        sum += term;
        if (std::abs(term) <= ctl.rel_tol * std::abs(sum) && std::abs(ratio) < 1.0) return sum;
    }
    throw NoConvergence("gauss_2f1: series did not converge within max_terms");
}

struct ValueAndSlope {
    Complex value;
    Complex slope;
};

// One Taylor step of z(1-z)F'' + [c-(a+b+1)z]F' - abF = 0 from z0 to z0 + h.
// Coefficients are kept pre-multiplied by h^n.
ValueAndSlope ode_step(Complex a, Complex b, Complex c, double z0, double h, ValueAndSlope start,
                       const SeriesControl& ctl) {
    const double p0 = z0 * (1.0 - z0);
    const double p1 = 1.0 - 2.0 * z0;
    const double p2 = -1.0;
    const Complex q0 = c - (a + b + 1.0) * z0;
    const Complex q1 = -(a + b + 1.0);
    const Complex ab = a * b;

    Complex g_prev = start.value;       // g_n
    Complex g_curr = start.slope * h;   // g_{n+1}
    Complex value = g_prev + g_curr;
    Complex slope = g_curr;             // sum n g_n, divided by h at the end
    int quiet = 0;
    for (int n = 0; n < ctl.max_terms; ++n) {
        const double nd = static_cast<double>(n);
        const Complex next =
            -((p1 * nd * (nd + 1.0) + q0 * (nd + 1.0)) * g_curr * h +
              (p2 * nd * (nd - 1.0) + q1 * nd - ab) * g_prev * h * h) /
            (p0 * (nd + 1.0) * (nd + 2.0));
        value += next;
        slope += (nd + 2.0) * next;
        g_prev = g_curr;
        g_curr = next;
        const double scale = std::abs(value) + std::abs(slope);
        if (std::abs(next) * (nd + 2.0) <= ctl.rel_tol * scale) {
            if (++quiet >= 3 && n > 8) return {value, slope / h};
        } else {
            quiet = 0;
        }
    }
    throw NoConvergence("gauss_2f1: Taylor continuation did not converge");
}

}  // namespace

Complex gauss_2f1(Complex a, Complex b, Complex c, double z, const SeriesControl& ctl) {
    ctl.validate();
    if (is_nonpositive_integer(c)) throw PoleError("gauss_2f1: c is a nonpositive integer");
    if (!(z >= -kSeriesRadius && z <= 1.0))
        throw DomainError("gauss_2f1: z outside the supported range [-3/4, 1]");
    if (z == 0.0) return 1.0;
    if (std::abs(z) <= kSeriesRadius) return series(a, b, c, z, ctl);
    if (z == 1.0) {
        const Complex m = c - a - b;
        if (!(m.real() > 0.0))
            throw DomainError("gauss_2f1: z = 1 requires Re(c - a - b) > 0");
        return std::exp(log_gamma(c) + log_gamma(m)) * rgamma(c - a) * rgamma(c - b);
    }
    ValueAndSlope state{series(a, b, c, kStartPoint, ctl),
                        a * b / c * series(a + 1.0, b + 1.0, c + 1.0, kStartPoint, ctl)};
    double at = kStartPoint;
    while (at < z) {
        const double h = std::min(z - at, 0.5 * (1.0 - at));
        state = ode_step(a, b, c, at, h, state, ctl);
        at = (z - at == h) ? z : at + h;
    }
    const Complex v = state.value;
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw OverflowError("gauss_2f1: result overflows");
    return v;
}

double gauss_2f1_abs_series(Complex a, Complex b, Complex c, double z, const SeriesControl& ctl) {
    ctl.validate();
    if (is_nonpositive_integer(c)) throw PoleError("gauss_2f1_abs_series: c is a nonpositive integer");
    if (!(z >= 0.0 && z < 1.0)) throw DomainError("gauss_2f1_abs_series: requires 0 <= z < 1");
    double term = 1.0;
    double sum = 1.0;
    for (int j = 0; j < ctl.max_terms; ++j) {
        const double jd = static_cast<double>(j);
        const double ratio = std::abs((a + jd) * (b + jd) / ((c + jd) * (jd + 1.0))) * z;
        term *= ratio;
        if (term == 0.0) return sum;
        sum += term;
        if (ratio < 1.0 && term / (1.0 - ratio) <= ctl.rel_tol * sum) return sum;
    }
    throw NoConvergence("gauss_2f1_abs_series: series did not converge within max_terms");
}

}  // namespace poincare::specfun
