#include <cmath>
#include <numbers>

#include "poincare/errors.hpp"
#include "poincare/kernels.hpp"
#include "poincare/parallel.hpp"

namespace poincare::kernels {

namespace {

constexpr double kPi = std::numbers::pi;

// ((z - conj w)/(w - conj z))^{e}: the ratio has argument 2 arg(z - conj w) - pi.
Complex heat_phase(const Point& z, const Point& w, double e) {
    const double arg_zw = std::atan2(z.y + w.y, z.x - w.x);
    return geom::unit_power(2.0 * arg_zw - kPi, e);
}

double log_cosh(double a) {
    a = std::abs(a);
    return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

// log sinh(a) for a > 0.
double log_sinh(double a) {
    if (a < 1.0) return std::log(std::sinh(a));
    return a + std::log1p(-std::exp(-2.0 * a)) - std::numbers::ln2;
}

Complex stencil_first(const Complex* f, double h, int points) {
    if (points == 3) return (f[3] - f[1]) / (2.0 * h);
    return (-f[4] + 8.0 * f[3] - 8.0 * f[1] + f[0]) / (12.0 * h);
}

Complex stencil_second(const Complex* f, double h, int points) {
    if (points == 3) return (f[3] - 2.0 * f[2] + f[1]) / (h * h);
    return (-f[4] + 16.0 * f[3] - 30.0 * f[2] + 16.0 * f[1] - f[0]) / (12.0 * h * h);
}

}  // namespace

double heat_pointpair(double t, double rho, double k) {
    if (!(t > 0.0)) throw DomainError("heat_pointpair: t must be positive");
    if (!(rho >= 0.0)) throw DomainError("heat_pointpair: rho must be nonnegative");
    const double pref = std::sqrt(2.0) * std::exp(-0.25 * t) / std::pow(4.0 * kPi * t, 1.5);
    if (pref == 0.0 || rho * rho / (4.0 * t) > 800.0) return 0.0;
    const double cosh_half_rho = std::cosh(0.5 * rho);
    const double log_cosh_half_rho = log_cosh(0.5 * rho);
    // r = rho + v^2; cosh r - cosh rho = 2 sinh((r + rho)/2) sinh(v^2/2).
    auto f = [&](double v) -> Complex {
        const double v2 = v * v;
        const double r = rho + v2;
        const double log_gauss = -r * r / (4.0 * t);
        if (log_gauss < -800.0) return 0.0;
        if (r < 40.0) {
            const double den = std::sqrt(2.0 * std::sinh(rho + 0.5 * v2) * std::sinh(0.5 * v2));
            const double cheb = specfun::cheb_T2k(std::cosh(0.5 * r) / cosh_half_rho, k);
            return 2.0 * v * r * std::exp(log_gauss) * cheb / den;
        }
        // Far out everything is carried in logarithms.
        const double log_x = log_cosh(0.5 * r) - log_cosh_half_rho;
        const double x = std::exp(std::min(log_x, 700.0));
        const double acosh_x = log_x > 20.0 ? log_x + std::numbers::ln2 : std::acosh(x);
        const double log_cheb = log_cosh(2.0 * k * acosh_x);
        const double log_den = 0.5 * (std::numbers::ln2 + log_sinh(rho + 0.5 * v2) + log_sinh(0.5 * v2));
        return std::exp(std::log(2.0 * v * r) + log_gauss + log_cheb - log_den);
    };
    quad::Options opt;
    opt.abs_tol = 0.0;
    opt.rel_tol = 1e-13;
    const double scale = rho > 0.0 ? std::min(std::pow(4.0 * t, 0.25), std::sqrt(2.0 * t / rho))
                                   : std::pow(4.0 * t, 0.25);
    opt.first_panel_width = 0.5 * scale;
    const quad::Result res = quad::integrate_to_infinity(f, 0.0, opt);
    return pref * res.value.real();
}

Complex heat_identity_term(double t, const Point& z, const Point& w, double k, int sign) {
    return heat_phase(z, w, sign * k) * heat_pointpair(t, geom::pair_metrics(z, w).dist, k);
}

KernelValue heat_kernel_M(double t, const Point& z, const Point& w, double R, const MultiplierSystem& ms,
                          double tail_coeff) {
    if (!(t > 0.0)) throw DomainError("heat_kernel_M: t must be positive");
    if (!(R > 1.0)) throw DomainError("heat_kernel_M: R must exceed 1");
    const double k = ms.k();
    const geom::WeightContext& ctx = ms.weight();
    const fuchsian::BallResult ball = fuchsian::enumerate_ball(z, w, R);
    const Complex sum = parallel::sum(ball.elements.size(), [&](std::size_t i) -> Complex {
        const auto& g = ball.elements[i];
        const geom::Mat2 m = g.mat();
        const Point gw = geom::moebius_act(m, w);
        const double d = geom::pair_metrics(z, gw).dist;
        // ((c conj w + d)/(cw + d))^k = J_{g,k}(w)^{-1}
        return std::conj(ms.chi(g)) * std::conj(geom::j_phase(m, w, ctx)) * heat_phase(z, gw, k) *
               heat_pointpair(t, d, k);
    });
    KernelValue out;
    out.value = 0.5 * sum;
    out.terms_used = static_cast<long>(ball.elements.size());
    out.counting_constant = counting_constant(z, w, R, tail_coeff);
    out.tail_bound = envelope_tail([&](double rho) { return 0.5 * heat_pointpair(t, rho, k); },
                                   std::acosh(2.0 * R - 1.0), out.counting_constant);
    return out;
}

HeatPdeResult heat_pde_residual(double t, const Point& z, const Point& w, double k, const PdeOptions& opt) {
    if (opt.stencil_points != 3 && opt.stencil_points != 5)
        throw DomainError("heat_pde_residual: stencil_points must be 3 or 5");
    if (!(opt.h > 0.0) || !(t > 2.0 * opt.h) || !(z.y > 2.0 * opt.h))
        throw DomainError("heat_pde_residual: step too large for (t, z)");
    if (geom::pair_metrics(z, w).u == 0.0) throw DomainError("heat_pde_residual: requires z != w");
    const double h = opt.h;
    const int np = opt.stencil_points;

    auto residual = [&](int sign) {
        Complex ft[5], fx[5], fy[5];
        for (int i = 0; i < 5; ++i) {
            const double o = (i - 2) * h;
            if (np == 3 && (i == 0 || i == 4)) {
                ft[i] = fx[i] = fy[i] = 0.0;
                continue;
            }
            ft[i] = heat_identity_term(t + o, z, w, k, sign);
            fx[i] = heat_identity_term(t, Point(z.x + o, z.y), w, k, sign);
            fy[i] = heat_identity_term(t, Point(z.x, z.y + o), w, k, sign);
        }
        const Complex dt = stencil_first(ft, h, np);
        const Complex dx = stencil_first(fx, h, np);
        const Complex dxx = stencil_second(fx, h, np);
        const Complex dyy = stencil_second(fy, h, np);
        const Complex lap = -z.y * z.y * (dxx + dyy) + Complex(0.0, 2.0 * k * z.y) * dx;
        return std::abs(dt + lap);
    };

    HeatPdeResult out;
    out.residual_plus = residual(1);
    out.residual_minus = residual(-1);
    if (out.residual_minus < out.residual_plus) {
        out.residual = out.residual_minus;
        out.sign = -1;
    } else {
        out.residual = out.residual_plus;
        out.sign = 1;
    }
    return out;
}

Complex subordinate(const std::function<Complex(double)>& F, double u, Complex Z, double* error) {
    if (!(u > 0.0)) throw DomainError("subordinate: u must be positive");
    // t = e^x; the weight e^{-u^2/4t} t^{-3/2} dt peaks at t = u^2/6.
    auto f = [&](double x) -> Complex {
        const double t = std::exp(x);
        const double w = std::exp(-u * u / (4.0 * t) - 0.5 * x);
        if (w == 0.0) return 0.0;
        const Complex damp = std::exp(-Z * t);
        if (damp == Complex(0.0)) return 0.0;
        return F(t) * damp * w;
    };
    quad::Options opt;
    opt.abs_tol = 0.0;
    opt.rel_tol = 1e-12;
    const quad::Result r = quad::integrate_real_line(f, std::log(u * u / 6.0), opt);
    const double pref = u / std::sqrt(4.0 * kPi);
    if (error) *error = pref * r.error;
    return pref * r.value;
}

double subordination_check(double lambda, double a) {
    if (!(a > 0.0) || !(lambda >= 0.0)) throw DomainError("subordination_check: requires a > 0, lambda >= 0");
    const Complex v = subordinate([&](double t) { return Complex(std::exp(-t * lambda)); }, a, 0.0);
    return std::abs(v - std::exp(-a * std::sqrt(lambda)));
}

Complex poisson_free(double u, Complex Z, const Point& z, const Point& w, double k) {
    const geom::WeightContext ctx(k);
    if (!(Z.real() >= -ctx.lambda0())) throw DomainError("poisson_free: requires Re(Z) >= -lambda0");
    const double d = geom::pair_metrics(z, w).dist;
    const Complex phase = heat_phase(z, w, k);
    return phase * subordinate([&](double t) { return Complex(heat_pointpair(t, d, k)); }, u, Z);
}

Complex poisson_pointpair(double rho, double u, Complex Z, double k) {
    if (!(u > 0.0)) throw DomainError("poisson_pointpair: u must be positive");
    const double alpha = 0.25 + Z.real();
    if (Z.imag() != 0.0 || !(alpha > 1e-8)) {
        return subordinate([&](double t) { return Complex(heat_pointpair(t, rho, k)); }, u, Z);
    }
    // Swapping the t- and r-integrals leaves int_0^inf t^{-3} e^{-alpha t - beta/t} dt
    // = 2 (alpha/beta) K_2(2 sqrt(alpha beta)) with beta = (r^2 + u^2)/4.
    const double cosh_half_rho = std::cosh(0.5 * rho);
    const double log_cosh_half_rho = log_cosh(0.5 * rho);
    auto f = [&](double v) -> Complex {
        const double v2 = v * v;
        const double r = rho + v2;
        const double beta = 0.25 * (r * r + u * u);
        const double arg = 2.0 * std::sqrt(alpha * beta);
        if (arg > 700.0) return 0.0;
        const double inner = 2.0 * (alpha / beta) * std::cyl_bessel_k(2.0, arg);
        if (r < 40.0) {
            const double den = std::sqrt(2.0 * std::sinh(rho + 0.5 * v2) * std::sinh(0.5 * v2));
            const double cheb = specfun::cheb_T2k(std::cosh(0.5 * r) / cosh_half_rho, k);
            return 2.0 * v * r * cheb / den * inner;
        }
        const double log_x = log_cosh(0.5 * r) - log_cosh_half_rho;
        const double acosh_x = log_x > 20.0 ? log_x + std::numbers::ln2 : std::acosh(std::exp(log_x));
        const double log_rest = std::log(2.0 * v * r) + log_cosh(2.0 * k * acosh_x) -
                   0.5 * (std::numbers::ln2 + log_sinh(rho + 0.5 * v2) + log_sinh(0.5 * v2));
        return std::exp(log_rest) * inner;
    };
    quad::Options opt;
    opt.abs_tol = 0.0;
    opt.rel_tol = 1e-12;
    opt.first_panel_width = 0.5;
    const quad::Result res = quad::integrate_to_infinity(f, 0.0, opt);
    const double pref = (u / std::sqrt(4.0 * kPi)) * std::sqrt(2.0) / std::pow(4.0 * kPi, 1.5);
    return pref * res.value;
}

KernelValue poisson_kernel_M(double u, Complex Z, const Point& z, const Point& w, double R,
                             const MultiplierSystem& ms, double tol, double tail_coeff) {
    const double k = ms.k();
    const geom::WeightContext& ctx = ms.weight();
    if (!(Z.real() >= -ctx.lambda0())) throw DomainError("poisson_kernel_M: requires Re(Z) >= -lambda0");
    if (!(R > 1.0)) throw DomainError("poisson_kernel_M: R must exceed 1");

    KernelValue out;
    out.counting_constant = counting_constant(z, w, R, tail_coeff);
    // |e^{-Zt}| = e^{-Re(Z) t}, so the real-Z profile dominates every summand.
    out.tail_bound = envelope_tail([&](double rho) { return 0.5 * std::abs(poisson_pointpair(rho, u, Z.real(), k)); },
                                   std::acosh(2.0 * R - 1.0), out.counting_constant);
    if (!(out.tail_bound <= tol))
        throw ConvergenceError("poisson_kernel_M: tail bound " + std::to_string(out.tail_bound) +
                               " exceeds the requested tolerance");

    const fuchsian::BallResult ball = fuchsian::enumerate_ball(z, w, R);
    const Complex sum = parallel::sum(ball.elements.size(), [&](std::size_t i) -> Complex {
        const auto& g = ball.elements[i];
        const geom::Mat2 m = g.mat();
        const Point gw = geom::moebius_act(m, w);
        const double d = geom::pair_metrics(z, gw).dist;
        return std::conj(ms.chi(g)) * std::conj(geom::j_phase(m, w, ctx)) * heat_phase(z, gw, k) *
               poisson_pointpair(d, u, Z, k);
    });
    out.value = 0.5 * sum;
    out.terms_used = static_cast<long>(ball.elements.size());
    return out;
}

}  // namespace poincare::kernels
