#include <cmath>
#include <numbers>

#include "poincare/errors.hpp"
#include "poincare/kernels.hpp"
#include "poincare/parallel.hpp"

namespace poincare::kernels {

namespace {

constexpr double kPi = std::numbers::pi;

void require_sum_params(const KernelParams& p, const char* what) {
    if (!(p.s.real() > 1.0 + 1e-9))
        throw ConvergenceError(std::string(what) + ": the group sum converges only for Re(s) > 1");
    if (!(p.trunc_R > 1.0) || !std::isfinite(p.trunc_R))
        throw DomainError(std::string(what) + ": trunc_R must be finite and > 1");
    if (!(p.tail_coeff >= 0.0)) throw DomainError(std::string(what) + ": tail_coeff must be >= 0");
}

void require_weight(const MultiplierSystem& ms, double k, const char* what) {
    if (std::abs(ms.k() - k) > 1e-14)
        throw DomainError(std::string(what) + ": multiplier weight differs from the kernel weight");
}

// Tail of c_N C sigma^{-a} summed beyond rho_R, using sigma >= e^rho / 4.
double sigma_power_tail(double C, double a, double R, double c_N) {
    const double rho_R = std::acosh(2.0 * R - 1.0);
    return c_N * C *
           (std::pow(R, -a) * std::exp(rho_R) + std::pow(4.0, a) * std::exp(-(a - 1.0) * rho_R) / (a - 1.0));
}

}  // namespace

KernelValue geometric_kernel(const Point& z, const Point& w, const KernelParams& p, const MultiplierSystem& ms) {
    require_sum_params(p, "geometric_kernel");
    require_weight(ms, p.k, "geometric_kernel");
    const Complex s = p.s;
    const double k = p.k;
    const geom::WeightContext& ctx = ms.weight();
    const Complex pref = std::exp(specfun::log_gamma(s - k) + specfun::log_gamma(s + k) -
                                  2.0 * specfun::log_gamma(s)) /
                         std::sqrt(2.0 * kPi);

    const fuchsian::BallResult ball = fuchsian::enumerate_ball(z, w, p.trunc_R);
    const Complex sum = parallel::sum(ball.elements.size(), [&](std::size_t i) -> Complex {
        const auto& g = ball.elements[i];
        const geom::Mat2 m = g.mat();
        const Point gw = geom::moebius_act(m, w);
        const double cosh_d = geom::pair_metrics(z, gw).cosh_d;
        const Complex radial =
            std::exp(-s * std::log(cosh_d)) * specfun::gauss_2f1(-k, k, s, 1.0 / (1.0 + cosh_d));
        return ms.chi(g) * radial * geom::j_phase(m, w, ctx) * geom::h_k(z, gw, ctx);
    });

    KernelValue out;
    out.value = pref * sum;
    out.terms_used = static_cast<long>(ball.elements.size());
    out.counting_constant = counting_constant(z, w, p.trunc_R, p.tail_coeff);
    // cosh(d)^{-a} <= 2^a e^{-a rho}; |F(-k,k;s;x)| <= its absolute series at x = 1/2.
    const double a = s.real();
    const double f_max = specfun::gauss_2f1_abs_series(-k, k, a, 0.5);
    const double rho_R = std::acosh(2.0 * p.trunc_R - 1.0);
    out.tail_bound = out.counting_constant * std::abs(pref) * f_max *
                     (std::pow(std::cosh(rho_R), -a) * std::exp(rho_R) +
                      std::pow(2.0, a) * std::exp(-(a - 1.0) * rho_R) / (a - 1.0));
    return out;
}

KernelValue resolvent_kernel(const Point& z, const Point& w, const KernelParams& p, const MultiplierSystem& ms) {
    require_sum_params(p, "resolvent_kernel");
    require_weight(ms, p.k, "resolvent_kernel");
    const Complex s = p.s;
    const double k = p.k;
    const geom::WeightContext& ctx = ms.weight();

    const fuchsian::BallResult ball = fuchsian::enumerate_ball(z, w, p.trunc_R);
    const Complex sum = parallel::sum(ball.elements.size(), [&](std::size_t i) -> Complex {
        const auto& g = ball.elements[i];
        const geom::Mat2 m = g.mat();
        const Point gw = geom::moebius_act(m, w);
        const double sigma = geom::sigma(z, gw);
        if (!(sigma > 1.0 + 1e-10))
            throw SingularityError("resolvent_kernel: z coincides with a translate of w");
        return ms.chi(g) * ks_pointpair(sigma, s, k) * geom::j_phase(m, w, ctx) * geom::h_k(z, gw, ctx);
    });

    KernelValue out;
    out.value = 0.5 * sum;
    out.terms_used = static_cast<long>(ball.elements.size());
    out.counting_constant = counting_constant(z, w, p.trunc_R, p.tail_coeff);
    const double a = s.real();
    const double pref = std::exp((specfun::log_gamma(s - k) + specfun::log_gamma(s + k) -
                                  specfun::log_gamma(2.0 * s)).real()) /
                        (4.0 * kPi);
    const double f_R = specfun::gauss_2f1_abs_series(s + k, s - k, 2.0 * s, 1.0 / p.trunc_R);
    out.tail_bound = sigma_power_tail(0.5 * pref * f_R, a, p.trunc_R, out.counting_constant);
    return out;
}

PretraceResult pretrace_rhs(const Point& z, double s, double t, double R, const MultiplierSystem& ms,
                            double tail_coeff) {
    const double k = ms.k();
    const double ak = std::abs(k);
    if (!(s > std::max(1.0, ak)) || !(t > s)) throw DomainError("pretrace_rhs: requires max{1,|k|} < s < t");
    if (!(R > 1.0)) throw DomainError("pretrace_rhs: R must exceed 1");
    const geom::WeightContext& ctx = ms.weight();

    PretraceResult out;
    out.digamma_term = pretrace_digamma_term(s, t, k, ms.d_dim());

    const fuchsian::BallResult ball = fuchsian::enumerate_ball(z, z, R);
    const Complex sum = parallel::sum(ball.elements.size(), [&](std::size_t i) -> Complex {
        const auto& g = ball.elements[i];
        if (g.b == 0 && g.c == 0) return 0.0;  // +-I
        const geom::Mat2 m = g.mat();
        const Point gz = geom::moebius_act(m, z);
        const double sigma = geom::sigma(z, gz);
        if (!(sigma > 1.0 + 1e-10))
            throw SingularityError("pretrace_rhs: z is fixed by a nontrivial group element");
        const Complex diff = ks_pointpair(sigma, s, k) - ks_pointpair(sigma, t, k);
        return ms.chi(g) * diff * geom::j_phase(m, z, ctx) * geom::h_k(z, gz, ctx);
    });
    const Complex total = out.digamma_term + 0.5 * sum;
    out.value = total.real();
    out.imag_residual = std::abs(total.imag());
    out.terms_used = static_cast<long>(ball.elements.size()) - 2;

    // Envelope C sigma^{-s} for |k_s - k_t| on sigma >= R.
    double C;
    if (std::abs(t - s - 1.0) < 1e-12) {
        C = s / (2.0 * kPi * (s * s - k * k));
    } else {
        auto env = [&](double x) {
            const double pref = std::exp((specfun::log_gamma(x - k) + specfun::log_gamma(x + k) -
                                          specfun::log_gamma(2.0 * x)).real()) /
                                (4.0 * kPi);
            return pref * specfun::gauss_2f1_abs_series(x + k, x - k, 2.0 * x, 1.0 / R);
        };
        C = env(s) + env(t) * std::pow(R, -(t - s));
    }
    const double c_N = counting_constant(z, z, R, tail_coeff);
    out.tail_bound = sigma_power_tail(0.5 * C, s, R, c_N);
    return out;
}

}  // namespace poincare::kernels
