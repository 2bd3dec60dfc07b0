#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "poincare/errors.hpp"
#include "poincare/kernels.hpp"
#include "poincare/shc.hpp"

using namespace poincare;
using namespace poincare::shc;

constexpr double kPi = std::numbers::pi;

TEST_CASE("closed-form h against mpmath") {
    CHECK(std::abs(h_gs_closed({2.5, 0.0}, 2.0) - 0.40926922464869175) < 1e-14);
}

TEST_CASE("fourier_h against Boost double-exponential quadrature") {
    for (double s : {1.6, 3.0})
        for (double r : {0.0, 1.5}) {
            const auto g = wave_test_function(s);
            // Oracle: 2 int_0^inf cos(ur) g(u) du by exp-sinh.
            boost::math::quadrature::exp_sinh<double> es;
            const double lg = std::lgamma(s - 0.5) - std::lgamma(s);
            const double oracle = 2 * es.integrate([&](double u) {
                return std::cos(u * r) * std::exp(lg - (s - 0.5) * std::log(std::cosh(u)));
            });
            CAPTURE(s);
            CAPTURE(r);
            CHECK(std::abs(fourier_h(g, r).value - oracle) < 1e-9 * std::abs(oracle));
        }
}

TEST_CASE("validate rejects the non-convergent half-plane") {
    CHECK_THROWS_AS((WaveTestParams{0.9, 0.0}.validate()), DomainError);
    CHECK_THROWS_AS((WaveTestParams{1.2, 1.5}.validate()), DomainError);
    CHECK_NOTHROW((WaveTestParams{1.6, 0.5}.validate()));
}

TEST_CASE("recurrence and continuation") {
    for (int n : {1, 2, 3}) {
        const Complex s(2.2, 0.4);
        const Complex lhs = h_gs_closed({s, 0.0}, 1.3);
        const Complex rhs = h_recurrence_factor({s, 0.0}, 1.3, n) * h_gs_closed({s + 2.0 * n, 0.0}, 1.3);
        CHECK(std::abs(lhs - rhs) < 1e-13 * std::abs(lhs));
    }
    const Complex a = h_continued({0.1, 0.0}, 2.0, 2), b = h_continued({0.1, 0.0}, 2.0, 3);
    CHECK(std::abs(a - b) < 1e-12 * std::abs(a));
    CHECK(std::abs(a.real() - 0.0102065133612899) < 1e-13);
    CHECK_THROWS_AS(h_continued({0.1, 0.0}, 2.0, 0), DomainError);
    CHECK_THROWS_AS(h_continued({Complex(0.5 - 2.0, 0.7)}, 0.7, 2), PoleError);
}

TEST_CASE("forward transform of an analytic profile") {
    // Phi(x) = exp(-x) gives Q(y) = sqrt(pi) exp(-y) at k = 0.
    ProfileFunction P{[](double x) { return Complex(std::exp(-x)); }, 10.0};
    for (double y : {0.0, 1.0, 5.0})
        CHECK(std::abs(q_forward(P, y, 0.0).value - std::sqrt(kPi) * std::exp(-y)) < 1e-13);
}

TEST_CASE("forward transform with weight against Boost tanh-sinh") {
    const double k = 0.5, y = 1.0;
    ProfileFunction P{[](double x) { return Complex(1.0 / std::pow(4.0 + x, 3.0)); }, 3.0};
    // Oracle: the real part of the weight is cos(2k atan(v/sqrt(y+4))), integrated over v in R.
    boost::math::quadrature::tanh_sinh<double> ts;
    const double m = std::sqrt(y + 4);
    const double oracle = 2 * ts.integrate(
                                  [&](double v) {
                                      return std::cos(2 * k * std::atan(v / m)) / std::pow(4.0 + y + v * v, 3.0);
                                  },
                                  0.0, std::numeric_limits<double>::infinity());
    const auto e = q_forward(P, y, k);
    CHECK(std::abs(e.value.real() - oracle) < 1e-12);
    CHECK(std::abs(e.value.imag()) < 1e-14);
}

TEST_CASE("inverse transform of an analytic pair") {
    for (double x : {0.0, 1.0, 4.0}) {
        const auto e = phi_inverse([](double y) { return Complex(-std::exp(-y)); }, x, 0.0);
        CHECK(std::abs(e.value - std::exp(-x) / std::sqrt(kPi)) < 1e-12);
    }
}

TEST_CASE("q_inverse and g_from_q are inverse substitutions") {
    const auto g = wave_test_function(2.5);
    for (double u : {0.0, 0.4, 2.0}) {
        auto q = [&](double y) { return q_inverse(g, y); };
        CHECK(std::abs(g_from_q(q, u) - g.g(u)) < 1e-14);
    }
}

TEST_CASE("q_prime closed form against differences") {
    auto g = wave_test_function(2.5);
    bool analytic = false;
    const Complex exact = q_prime(g, 1.3, &analytic);
    CHECK(analytic);
    g.q_prime = nullptr;
    const Complex fd = q_prime(g, 1.3, &analytic);
    CHECK_FALSE(analytic);
    CHECK(std::abs(exact - fd) < 1e-9);
}

TEST_CASE("pipeline from Phi_s to h") {
    for (double k : {0.0, 1.3}) {
        const double s = 2.5, r = 1.0;
        ProfileFunction P{[&](double x) { return kernels::phi_s_closed(x / 4.0, s, k); }, s};
        auto q = [&](double y) { return q_forward(P, y, k).value; };
        EvenTestFunction g{[&](double u) { return g_from_q(q, u); }, s - 0.5, 4, {}};
        const Complex h = fourier_h(g, r).value, c = h_gs_closed({s, k}, r);
        CHECK(std::abs(h - c) < 1e-8 * std::abs(c));
    }
}

TEST_CASE("decay class check") {
    const auto rep = decay_class_check(wave_test_function(2.5), 0.5, 4);
    CHECK(rep.even);
    CHECK(rep.bounded);
    CHECK(rep.delta == doctest::Approx(2.0));
    EvenTestFunction slow{[](double u) { return Complex(1.0 / (1.0 + u * u)); }, 0.0, 0, {}};
    CHECK_THROWS_AS(decay_class_check(slow, 1.0, 0), ClassViolation);
    EvenTestFunction odd{[](double u) { return Complex(u * std::exp(-u * u)); }, 1.0, 2, {}};
    CHECK_THROWS_AS(decay_class_check(odd, 1.0, 0), ClassViolation);
}

TEST_CASE("trace csv") {
    std::ostringstream os;
    write_trace_csv(os, {{0.5, Complex(1.0, -2.0), 1e-12}});
    CHECK(os.str() == "x,value_re,value_im,error_estimate\n0.5,1,-2,9.9999999999999998e-13\n");
}
