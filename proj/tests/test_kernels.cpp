#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "poincare/errors.hpp"
#include "poincare/kernels.hpp"

using namespace poincare;
using namespace poincare::kernels;
using fuchsian::GroupElement;
using fuchsian::MultiplierSystem;
using geom::Point;

constexpr double kPi = std::numbers::pi;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

// Heat profile at k = 0 by Boost quadrature in r = rho + v^2.
double heat_oracle(double t, double rho) {
    boost::math::quadrature::exp_sinh<double> es;
    const double I = es.integrate([&](double v) {
        const double r = rho + v * v;
        // Near v = 0 the integrand tends to 2 rho e^{-rho^2/4t} / sqrt(sinh rho).
        if (v * v < 1e-20) return rho > 0 ? 2 * rho * std::exp(-rho * rho / (4 * t)) / std::sqrt(std::sinh(rho)) : 0.0;
        const double gap = 2.0 * std::sinh(0.5 * (r + rho)) * std::sinh(0.5 * v * v);
        const double e = std::exp(-r * r / (4 * t));
        return e == 0.0 ? 0.0 : 2 * v * r * e / std::sqrt(gap);
    });
    return std::sqrt(2.0) * std::exp(-t / 4) / std::pow(4 * kPi * t, 1.5) * I;
}

}  // namespace

TEST_CASE("resolvent point pair") {
    CHECK(rel(ks_pointpair(1.7, 3.0, 0.5), 0.0019302875809788539) < 1e-13);
    // s = 1, k = 0: k_1(sigma) = log(sigma/(sigma-1)) / (4 pi).
    CHECK(rel(ks_pointpair(2.0, 1.0, 0.0), std::log(2.0) / (4 * kPi)) < 1e-13);
    CHECK_THROWS_AS(ks_pointpair(1.0, 2.0, 0.0), SingularityError);
}

TEST_CASE("g_k difference") {
    const auto g = gk_difference(2.3, 2.2, 0.7);
    CHECK(std::abs(g.value - 0.0031047113691870816) < 1e-15);
    CHECK(std::abs(g.two_eval - g.value) < 1e-14);
    CHECK(g.bound_ok);
    // The bound is attained at sigma = 1.
    const auto g1 = gk_difference(1.0, 2.2, 0.7);
    CHECK(g1.value == doctest::Approx(g1.bound).epsilon(1e-12));
    CHECK(g1.bound_ok);
}

TEST_CASE("Phi_s closed form and its representations") {
    CHECK(rel(phi_s_closed(0.6, 2.5, 0.3), 0.057405127392829784) < 1e-14);
    double err = 0;
    CHECK(rel(phi_s_integral(0.6, 2.5, 0.3, &err), 0.057405127392829784) < 1e-12);
    CHECK(err < 1e-12);
    CHECK(rel(phi_s_legendre(0.6, 2.5, 0.3), 0.057405127392829784) < 1e-12);
    CHECK_THROWS_AS(phi_s_closed(0.6, 1.2, 1.3), DomainError);
}

TEST_CASE("heat profile against reference values") {
    CHECK(std::abs(heat_pointpair(1.0, 1.0, 0.0) - 0.041491183957822218) < 1e-13);
    CHECK(std::abs(heat_pointpair(1.0, 1.0, 0.5) - 0.050820642711356232) < 1e-13);
    for (double rho : {0.0, 0.5, 2.0, 4.0})
        CHECK(std::abs(heat_pointpair(0.7, rho, 0.0) - heat_oracle(0.7, rho)) < 1e-10 * heat_oracle(0.7, rho));
}

TEST_CASE("heat profile is positive and decreasing") {
    for (double k : {0.0, 0.5, 1.0}) {
        double prev = heat_pointpair(0.5, 0.0, k);
        for (double rho = 0.2; rho < 6.0; rho += 0.2) {
            const double v = heat_pointpair(0.5, rho, k);
            CHECK(v > 0.0);
            CHECK(v < prev);
            prev = v;
        }
    }
}

TEST_CASE("heat equation holds for one exponent sign") {
    const Point z(0, 1), w(1, 2);
    CHECK(heat_pde_residual(1.0, z, w, 0.0).residual < 1e-6);
    const auto r = heat_pde_residual(1.0, z, w, 0.5);
    CHECK(r.residual < 1e-6);
    CHECK(r.sign == -1);
    CHECK(r.residual_plus > 1e-3);
    // Three-point stencils converge at second order.
    const double a = heat_pde_residual(1.0, z, w, 0.0, {1e-2, 3}).residual;
    const double b = heat_pde_residual(1.0, z, w, 0.0, {5e-3, 3}).residual;
    CHECK(b < a / 3.0);
}

TEST_CASE("subordination identity") {
    for (double lambda : {0.0, 2.0, 7.5})
        for (double a : {0.2, 1.5}) CHECK(subordination_check(lambda, a) < 1e-10);
}

TEST_CASE("Poisson identity term against nested quadrature") {
    const Point z(0, 1), w(1, 2);
    const double u = 1.0, Z = 0.3;
    const double rho = geom::pair_metrics(z, w).dist;
    boost::math::quadrature::exp_sinh<double> es;
    const double outer = es.integrate([&](double t) {
        if (t < 1e-3 || t > 400) return 0.0;  // both ends are below 1e-50
        return heat_oracle(t, rho) * std::exp(-Z * t - u * u / (4 * t)) * std::pow(t, -1.5);
    });
    const double oracle = u / std::sqrt(4 * kPi) * outer;
    CHECK(rel(poisson_free(u, Z, z, w, 0.0), oracle) < 1e-6);
    CHECK(std::abs(poisson_pointpair(rho, u, Z, 0.0) - oracle) < 1e-6 * oracle);
}

TEST_CASE("geometric kernel equals the Phi_s group sum") {
    const auto ms = MultiplierSystem::eta_power(0.5);
    const Point z(0.1, 1.0), w(0.0, 2.0);
    const double R = 8.0;
    const auto v = geometric_kernel(z, w, {3.0, 0.5, R, 2.0}, ms);
    Complex sum = 0;
    for (const auto& g : fuchsian::enumerate_ball(z, w, R).elements) {
        const Point gw = geom::moebius_act(g.mat(), w);
        sum += ms.chi(g) * phi_s_closed(geom::pair_metrics(z, gw).u, 3.0, 0.5) * geom::j_phase(g.mat(), w, ms.weight()) *
               geom::h_k(z, gw, ms.weight());
    }
    CHECK(std::abs(v.value - sum) < 1e-13);
    CHECK(v.terms_used > 0);
    CHECK(v.tail_bound > 0.0);
}

TEST_CASE("group sums are automorphic and their tails are honest") {
    const auto ms = MultiplierSystem::eta_power(0.5);
    const Point z(-0.2, 1.3), w(0.3, 0.9);
    const KernelParams p{2.5, 0.5, 12.0, 2.0};
    for (const GroupElement& eta : {GroupElement::T(), GroupElement::S()}) {
        const Point ez = geom::moebius_act(eta.mat(), z);
        const Complex f = geom::j_phase(eta.mat(), z, ms.weight()) * ms.chi(eta);
        const auto a = geometric_kernel(z, w, p, ms), b = geometric_kernel(ez, w, p, ms);
        CHECK(std::abs(b.value - f * a.value) < 10 * a.tail_bound);
        const auto c = resolvent_kernel(z, w, p, ms), d = resolvent_kernel(ez, w, p, ms);
        CHECK(std::abs(d.value - f * c.value) < 10 * c.tail_bound);
        const auto h1 = heat_kernel_M(0.4, z, w, 5.0, ms), h2 = heat_kernel_M(0.4, ez, w, 5.0, ms);
        CHECK(std::abs(h2.value - h1.value / f) < 10 * h1.tail_bound);
    }
    const auto r1 = resolvent_kernel(z, w, p, ms);
    const auto r2 = resolvent_kernel(z, w, {2.5, 0.5, 24.0, 2.0}, ms);
    CHECK(std::abs(r1.value - r2.value) <= r1.tail_bound);
}

TEST_CASE("group sum preconditions") {
    const auto ms = MultiplierSystem::eta_power(0.5);
    const Point z(0.1, 1.0);
    CHECK_THROWS_AS(geometric_kernel(z, z, {1.0, 0.5, 5.0, 2.0}, ms), ConvergenceError);
    CHECK_THROWS_AS(geometric_kernel(z, z, {3.0, 0.3, 5.0, 2.0}, ms), DomainError);
    CHECK_THROWS_AS(resolvent_kernel(z, z, {3.0, 0.5, 5.0, 2.0}, ms), SingularityError);
    CHECK_THROWS_AS(poisson_kernel_M(1.0, 1.0, z, Point(0, 2), 3.0, ms, 1e-8), ConvergenceError);
}

TEST_CASE("Poisson group sum radius doubling") {
    const auto ms = MultiplierSystem::eta_power(0.0);
    const Point z(0.1, 1.0), w(0.0, 2.0);
    const auto a = poisson_kernel_M(1.0, 1.0, z, w, 20.0, ms, 1.0);
    const auto b = poisson_kernel_M(1.0, 1.0, z, w, 40.0, ms, 1.0);
    CHECK(std::abs(a.value - b.value) <= a.tail_bound);
}

TEST_CASE("pre-trace right side") {
    for (double k : {0.0, 0.5}) {
        const double s = std::abs(k) + 2;
        CHECK(std::abs(pretrace_digamma_term(s, s + 1, k) - (std::abs(k) + 2) / (8 * kPi * (std::abs(k) + 1))) < 1e-14);
        const auto ms = MultiplierSystem::eta_power(k);
        const auto r = pretrace_rhs(Point(0.0, 2.0), s, s + 1, 20.0, ms);
        CHECK(r.value - r.tail_bound > 0.0);
        CHECK(r.imag_residual < 1e-12);
        CHECK(r.value + r.tail_bound < sup_norm_constants(modular_domain_inputs(k)).C);
    }
    CHECK_THROWS_AS(pretrace_rhs(Point(0.0, 1.0), 2.0, 3.0, 10.0, MultiplierSystem::eta_power(0.0)), SingularityError);
}

TEST_CASE("sup-norm constants") {
    const auto in = modular_domain_inputs(0.5);
    CHECK(in.vol == doctest::Approx(kPi / 3));
    CHECK(in.diam == doctest::Approx(std::log(3.0)).epsilon(1e-6));
    const auto c = sup_norm_constants({0.0, 1, 1.0, 1.0});
    CHECK(c.A == doctest::Approx(0.5));
    const double expected = 2.0 / (8 * kPi) + 4.0 * 0.5 * std::exp(1.5);
    CHECK(c.C == doctest::Approx(expected).epsilon(1e-14));
    CHECK(c.script_C == doctest::Approx(std::sqrt(2 * expected)).epsilon(1e-14));
    CHECK_THROWS_AS(sup_norm_constants({0.0, 1, 0.0, 1.0}), DomainError);
}
