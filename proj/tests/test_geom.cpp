#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "poincare/errors.hpp"
#include "poincare/fuchsian.hpp"
#include "poincare/geom.hpp"

using namespace poincare;
using namespace poincare::geom;

constexpr double kPi = std::numbers::pi;

TEST_CASE("point and matrix validation") {
    CHECK_THROWS_AS(Point(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(Point(0.0, -1.0), DomainError);
    CHECK_THROWS_AS(Mat2(1, 1, 1, 1), DomainError);
    CHECK_NOTHROW(Mat2(2, 1, 1, 1));
}

TEST_CASE("moebius action") {
    const Point z = moebius_act(Mat2(0, -1, 1, 0), Point(0.0, 2.0));
    CHECK(z.x == doctest::Approx(0.0));
    CHECK(z.y == doctest::Approx(0.5));
}

TEST_CASE("pair metrics against textbook distance") {
    // d(i, yi) = |log y|.
    const auto m = pair_metrics(Point(0, 1), Point(0, 3));
    CHECK(m.dist == doctest::Approx(std::log(3.0)).epsilon(1e-14));
    CHECK(m.cosh_d == doctest::Approx(std::cosh(std::log(3.0))).epsilon(1e-14));
    CHECK(m.sigma == doctest::Approx(1.0 + m.u));
    CHECK(sigma(Point(0, 1), Point(0, 3)) == doctest::Approx(m.sigma));
}

TEST_CASE("weight context branch split") {
    const WeightContext a(1.3);
    CHECK(a.k1() == 1);
    CHECK(a.k2() == doctest::Approx(0.3));
    const WeightContext b(1.5);
    CHECK(b.k1() + b.k2() == doctest::Approx(1.5));
    CHECK(b.k2() <= 0.5);
    CHECK(b.k2() > -0.5);
    CHECK(WeightContext(0.5).lambda0() == doctest::Approx(0.25));
    CHECK(WeightContext(2.0).A() == doctest::Approx(1.5));
}

TEST_CASE("j_phase is exp(2ik arg(cz+d))") {
    const WeightContext ctx(0.5);
    const Point z(0.3, 0.8);
    const Complex cz = Complex(2.0) * z.complex() + 1.0;
    const Complex expected = std::exp(Complex(0, 2 * 0.5 * std::arg(cz)));
    CHECK(std::abs(j_phase(Mat2(1, 0, 2, 1), z, ctx) - expected) < 1e-15);
}

TEST_CASE("H_k on the diagonal and its transformation rule") {
    const WeightContext ctx(0.7);
    CHECK(std::abs(h_k(Point(0.2, 1.1), Point(0.2, 1.1), ctx) - 1.0) < 1e-15);
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> U(0.5, 2.0);
    for (int i = 0; i < 200; ++i) {
        const Mat2 g = fuchsian::random_word(rng, 8).mat();
        const Point z(U(rng) - 1.0, U(rng)), w(U(rng) - 1.0, U(rng));
        const Complex lhs = h_k(moebius_act(g, z), moebius_act(g, w), ctx);
        const Complex rhs = j_phase(g, z, ctx) * h_k(z, w, ctx) / j_phase(g, w, ctx);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("winding numbers") {
    const Mat2 S(0, -1, 1, 0), T(1, 1, 0, 1);
    CHECK(winding_w(T, T) == 0);
    // S^2 = -I: arg(-1) = pi against two arguments pi/2.
    CHECK(winding_w(S, S) == 0);
    CHECK(winding_w(-Mat2(), -Mat2()) == 1);
    const WeightContext ctx(0.25);
    CHECK(std::abs(omega_k(-Mat2(), -Mat2(), ctx) - std::exp(Complex(0, 4 * kPi * 0.25))) < 1e-15);
}

TEST_CASE("unit power branch rule") {
    CHECK(std::abs(unit_power(kPi, 0.5) - Complex(0, 1)) < 1e-15);
    CHECK(std::abs(unit_power(-kPi / 2, 2.0) - Complex(-1, 0)) < 1e-15);
}
