#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "poincare/errors.hpp"
#include "poincare/kernels.hpp"

namespace poincare::kernels {

namespace {

constexpr double kPi = std::numbers::pi;

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

void require_half_plane(Complex s, double k, const char* what) {
    if (!(s.real() > std::max(1.0, std::abs(k))))
        throw DomainError(std::string(what) + ": requires Re(s) > max{1, |k|}");
}

}  // namespace

double counting_constant(const Point& z, const Point& w, double R, double tail_coeff) {
    const double rho_R = std::acosh(2.0 * R - 1.0);
    const double rho_h = std::max(rho_R, 6.0);
    const double R_h = 0.5 * (1.0 + std::cosh(rho_h));
    const fuchsian::BallResult ball = fuchsian::enumerate_ball(z, w, R_h);
    std::vector<double> dist;
    dist.reserve(ball.elements.size());
    for (const auto& g : ball.elements)
        dist.push_back(geom::pair_metrics(z, geom::moebius_act(g.mat(), w)).dist);
    std::sort(dist.begin(), dist.end());
    double c = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        // N(rho) at rho = dist[i] counts every element up to and including ties.
        std::size_t j = i;
        while (j + 1 < dist.size() && dist[j + 1] == dist[i]) ++j;
        c = std::max(c, static_cast<double>(j + 1) / std::exp(dist[i]));
        i = j;
    }
    return tail_coeff * c;
}

double envelope_tail(const std::function<double(double)>& f, double rho_R, double c_N) {
    quad::Options opt;
    opt.abs_tol = 0.0;
    opt.rel_tol = 1e-6;
    opt.max_panels = 200;
    try {
        const quad::Result r = quad::integrate_to_infinity(
            [&](double rho) { return Complex(f(rho) * std::exp(rho)); }, rho_R, opt);
        return c_N * (f(rho_R) * std::exp(rho_R) + std::abs(r.value) + r.error);
    } catch (const QuadratureFailure&) {
        return std::numeric_limits<double>::infinity();
    }
}

Complex ks_pointpair(double sigma, Complex s, double k) {
    if (!(sigma > 1.0 + 1e-12)) throw SingularityError("ks_pointpair: sigma must exceed 1");
    const Complex log_pref = specfun::log_gamma(s - k) + specfun::log_gamma(s + k) -
                             specfun::log_gamma(2.0 * s) - s * std::log(sigma);
    const Complex f = specfun::gauss_2f1(s + k, s - k, 2.0 * s, 1.0 / sigma);
    const Complex v = std::exp(log_pref) * f / (4.0 * kPi);
    if (!finite(v)) throw OverflowError("ks_pointpair: overflow");
    return v;
}

GkDifference gk_difference(double sigma, double s, double k) {
    if (!(s > std::abs(k))) throw DomainError("gk_difference: requires s > |k|");
    if (!(sigma >= 1.0)) throw DomainError("gk_difference: requires sigma >= 1");
    GkDifference out;
    const double log_pref = (specfun::log_gamma(s - k) + specfun::log_gamma(s + k) -
                             specfun::log_gamma(2.0 * s)).real() - s * std::log(sigma);
    out.value = std::exp(log_pref) * specfun::gauss_2f1(s + k, s - k, 2.0 * s + 1.0, 1.0 / sigma).real() /
                (4.0 * kPi);
    out.two_eval = sigma > 1.0 + 1e-12
                       ? (ks_pointpair(sigma, s, k) - ks_pointpair(sigma, s + 1.0, k)).real()
                       : std::numeric_limits<double>::quiet_NaN();
    out.bound = s * std::pow(sigma, -s) / (2.0 * kPi * (s * s - k * k));
    out.bound_ok = std::abs(out.value) <= out.bound * (1.0 + 1e-12);
    return out;
}

Complex phi_s_closed(double u, Complex s, double k) {
    require_half_plane(s, k, "phi_s_closed");
    if (!(u >= 0.0)) throw DomainError("phi_s_closed: u must be nonnegative");
    const Complex log_pref = specfun::log_gamma(s - k) + specfun::log_gamma(s + k) -
                             2.0 * specfun::log_gamma(s) - s * std::log1p(2.0 * u);
    const Complex f = specfun::gauss_2f1(-k, k, s, 0.5 / (1.0 + u));
    return std::exp(log_pref) * f / std::sqrt(2.0 * kPi);
}

Complex phi_s_integral(double u, Complex s, double k, double* error) {
    require_half_plane(s, k, "phi_s_integral");
    if (!(u >= 0.0)) throw DomainError("phi_s_integral: u must be nonnegative");
    // t = sqrt(4u+4) sinh(tau): the k-th power becomes exp(-2k tau); fold tau -> -tau.
    const double m2 = 4.0 * u + 4.0;
    auto f = [&](double tau) -> Complex {
        const double sh = std::sinh(tau);
        const double base = 4.0 * u + 2.0 + m2 * sh * sh;
        return std::exp(-(s + 0.5) * std::log(base)) * (std::cosh(2.0 * k * tau) * std::cosh(tau));
    };
    quad::Options opt;
    opt.abs_tol = 0.0;
    opt.rel_tol = 1e-13;
    const quad::Result r = quad::integrate_to_infinity(f, 0.0, opt);
    const Complex pref = std::exp(specfun::log_gamma(s + 0.5) - specfun::log_gamma(s) +
                                  (s - 0.5) * std::numbers::ln2) /
                         kPi * 2.0 * std::sqrt(m2);
    if (error) *error = std::abs(pref) * r.error;
    return pref * r.value;
}

Complex phi_s_legendre(double u, Complex s, double k) {
    require_half_plane(s, k, "phi_s_legendre");
    if (!(u > 0.0)) throw DomainError("phi_s_legendre: requires u > 0");
    const double x = u / (1.0 + u);
    const Complex pref = std::exp(specfun::log_gamma(s + k) + specfun::log_gamma(s - k) -
                                  specfun::log_gamma(s) - 0.5 * s * std::log1p(2.0 * u)) /
                         (2.0 * std::sqrt(2.0) * std::sqrt(kPi));
    return pref * ((s + k) * specfun::legendre_P(k, -s, x) + (s - k) * specfun::legendre_P(-k, -s, x));
}

double pretrace_digamma_term(double s, double t, double k, int d_dim) {
    using specfun::digamma;
    return -(d_dim / (4.0 * kPi)) * (digamma(s + k) + digamma(s - k) - digamma(t + k) - digamma(t - k));
}

SupNormConstants sup_norm_constants(const SupNormInputs& inp) {
    if (!(inp.vol > 0.0) || !(inp.diam > 0.0) || inp.d_dim < 1)
        throw DomainError("sup_norm_constants: vol, diam and d must be positive");
    const double ak = std::abs(inp.k);
    const double d = inp.d_dim;
    SupNormConstants c;
    c.A = std::max(0.5, ak - 0.5);
    const double q = (ak + 2.0) / (ak + 1.0);
    c.C = d * (ak + 2.0) / (8.0 * kPi * (ak + 1.0)) + q * q * (d / (2.0 * inp.vol)) * std::exp(1.5 * inp.diam);
    c.script_C = std::sqrt(c.C * (ak + 2.0));
    return c;
}

SupNormInputs modular_domain_inputs(double k, double Y, int d_dim) {
    const double y0 = std::sqrt(3.0) / 2.0;
    if (!(Y > y0)) throw DomainError("modular_domain_inputs: Y must exceed sqrt(3)/2");
    constexpr int n = 120;
    std::vector<Point> boundary;
    for (int i = 0; i <= n; ++i) {
        const double f = static_cast<double>(i) / n;
        boundary.emplace_back(-0.5, y0 + f * (Y - y0));
        boundary.emplace_back(0.5, y0 + f * (Y - y0));
        boundary.emplace_back(-0.5 + f, Y);
        const double th = kPi / 3.0 + f * kPi / 3.0;
        boundary.emplace_back(std::cos(th), std::sin(th));
    }
    double diam = 0.0;
    for (std::size_t i = 0; i < boundary.size(); ++i)
        for (std::size_t j = i + 1; j < boundary.size(); ++j)
            diam = std::max(diam, geom::pair_metrics(boundary[i], boundary[j]).dist);
    return {k, d_dim, kPi / 3.0, diam};
}

}  // namespace poincare::kernels
