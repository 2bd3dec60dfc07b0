#pragma once

// Adaptive Gauss-Kronrod quadrature on dyadic panel trees.
//
// Every routine is deterministic: subdivision depends only on the integrand
// values, and panel contributions are combined by pairwise summation in
// left-to-right order, so a fixed configuration is bit-reproducible.

#include <complex>
#include <functional>

namespace poincare::quad {

using Complex = std::complex<double>;
using Integrand = std::function<Complex(double)>;

struct Options {
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;
    int max_depth = 60;
    /// Half-line routines: width of the first panel; later panels double up to
    /// max_panel_width (keep that below a few periods for oscillatory integrands).
    double first_panel_width = 1.0;
    double max_panel_width = 1e300;
    /// Half-line routines never stop before covering this much of the axis.
    double min_extent = 0.0;
    int max_panels = 4000;
};

struct Result {
    Complex value;
    double error = 0.0;       ///< estimated absolute error
    double abs_integral = 0.0; ///< estimate of the integral of |f|
    long evaluations = 0;
};

/// Integral of f over [a, b].
Result integrate(const Integrand& f, double a, double b, const Options& opt = {});

/// Integral of f over [a, inf); panels are added until two consecutive panels
/// carry a negligible share of the integral of |f|.
Result integrate_to_infinity(const Integrand& f, double a, const Options& opt = {});

/// Integral of f over the whole real line, split at `center`.
Result integrate_real_line(const Integrand& f, double center, const Options& opt = {});

/// Throws QuadratureFailure when r.error exceeds max(abs_limit, rel_limit * |r.value|).
void require_accuracy(const Result& r, double abs_limit, double rel_limit, const char* what);

}  // namespace poincare::quad
