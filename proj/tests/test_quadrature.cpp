#include <doctest.h>

#include <cmath>
#include <numbers>

#include "poincare/errors.hpp"
#include "poincare/parallel.hpp"
#include "poincare/quadrature.hpp"

using namespace poincare;
using quad::Complex;

TEST_CASE("finite interval") {
    const auto r = quad::integrate([](double x) { return Complex(std::sin(x)); }, 0.0, std::numbers::pi);
    CHECK(std::abs(r.value - 2.0) < 1e-13);
    CHECK(r.error < 1e-12);
}

TEST_CASE("half line with algebraic decay") {
    quad::Options o;
    o.abs_tol = 0.0;
    o.rel_tol = 1e-12;
    const auto r = quad::integrate_to_infinity([](double x) { return Complex(1.0 / (1.0 + x * x)); }, 0.0, o);
    CHECK(std::abs(r.value - std::numbers::pi / 2) < 1e-9);
}

TEST_CASE("real line Gaussian") {
    const auto r = quad::integrate_real_line([](double x) { return Complex(std::exp(-x * x)); }, 0.0);
    CHECK(std::abs(r.value - std::sqrt(std::numbers::pi)) < 1e-13);
}

TEST_CASE("oscillatory cosine transform with capped panels") {
    quad::Options o;
    o.abs_tol = 0.0;
    o.rel_tol = 1e-12;
    o.max_panel_width = 1.0;
    const auto r = quad::integrate_to_infinity(
        [](double x) { return Complex(std::cos(5.0 * x) * std::exp(-x)); }, 0.0, o);
    CHECK(std::abs(r.value - 1.0 / 26.0) < 1e-12);
}

TEST_CASE("require_accuracy") {
    quad::Result r;
    r.value = 1.0;
    r.error = 1e-3;
    CHECK_THROWS_AS(quad::require_accuracy(r, 1e-6, 1e-6, "test"), QuadratureFailure);
    CHECK_NOTHROW(quad::require_accuracy(r, 1e-2, 0.0, "test"));
}

TEST_CASE("deterministic repeated integration") {
    auto f = [](double x) { return Complex(std::exp(-x) * std::sin(3 * x), std::cos(x) * std::exp(-x * x)); };
    const auto a = quad::integrate_to_infinity(f, 0.0);
    const auto b = quad::integrate_to_infinity(f, 0.0);
    CHECK(a.value == b.value);
}

TEST_CASE("parallel sum is ordered and rethrows") {
    const auto v = parallel::sum(1000, [](std::size_t i) { return Complex(static_cast<double>(i)); });
    CHECK(v.real() == 499500.0);
    CHECK_THROWS_AS(parallel::sum(300,
                                  [](std::size_t i) -> Complex {
                                      if (i == 250) throw DomainError("boom");
                                      return 1.0;
                                  }),
                    DomainError);
}
