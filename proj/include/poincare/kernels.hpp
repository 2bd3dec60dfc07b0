#pragma once

// Point-pair kernels and their automorphic group sums over SL(2,Z).
//
// Group sums run over a displacement ball sigma(z, g w) <= R. Each summand is
// bounded by a decreasing envelope f(rho) of the distance, and the truncation
// error is bounded by
//     c_N [ f(rho_R) e^{rho_R} + int_{rho_R}^inf f(rho) e^rho drho ],
// which follows from N(rho) <= c_N e^rho by Stieltjes integration by parts.
// c_N is measured on the actual pair (z, w) and inflated by tail_coeff.

#include <functional>

#include "poincare/fuchsian.hpp"
#include "poincare/geom.hpp"
#include "poincare/quadrature.hpp"
#include "poincare/specfun.hpp"

namespace poincare::kernels {

using geom::Point;
using fuchsian::MultiplierSystem;

struct KernelParams {
    Complex s = 2.0;
    double k = 0.0;
    double trunc_R = 10.0;   ///< sigma radius of the summation ball
    double tail_coeff = 2.0; ///< inflation applied to the measured counting constant
};

struct KernelValue {
    Complex value;         ///< d_dim = 1
    double tail_bound = 0.0;
    long terms_used = 0;
    double counting_constant = 0.0; ///< inflated c_N used by tail_bound
    int d_dim = 1;
};

/// tail_coeff * max N(rho)/e^rho over the ball around (z, w), measured up to
/// distance max(rho_R, 6).
double counting_constant(const Point& z, const Point& w, double R, double tail_coeff);

/// c_N [ f(rho_R) e^{rho_R} + int_{rho_R}^inf f e^rho ] with the integral taken
/// by quadrature; +inf if it does not settle.
double envelope_tail(const std::function<double(double)>& f, double rho_R, double c_N);

// ---------------------------------------------------------------------------
// Resolvent point pair and its s-difference

/// k_s(sigma) = sigma^{-s} Gamma(s-k) Gamma(s+k) / (4 pi Gamma(2s)) F(s+k, s-k; 2s; 1/sigma).
Complex ks_pointpair(double sigma, Complex s, double k);

struct GkDifference {
    double value = 0.0;     ///< single-series form
    double two_eval = 0.0;  ///< k_s - k_{s+1} by two evaluations
    double bound = 0.0;     ///< s sigma^{-s} / (2 pi (s^2 - k^2))
    bool bound_ok = false;
};

/// g_k = k_s - k_{s+1} = sigma^{-s} Gamma(s-k)Gamma(s+k)/(4 pi Gamma(2s)) F(s+k, s-k; 2s+1; 1/sigma).
/// The bound is attained at sigma = 1, so bound_ok allows a relative 1e-12
/// rounding slack.
GkDifference gk_difference(double sigma, double s, double k);

// ---------------------------------------------------------------------------
// Phi_s profile

/// Phi_s as a function of u: Gamma(s-k)Gamma(s+k)/(sqrt(2 pi) Gamma(s)^2)
/// (1+2u)^{-s} F(-k, k; s; 1/(2(1+u))).
Complex phi_s_closed(double u, Complex s, double k);

/// The same function from its integral representation
/// Gamma(s+1/2)/(pi Gamma(s)) 2^{s-1/2} int (4u+t^2+2)^{-(s+1/2)}
///   ((sqrt(4u+4+t^2) - t)/(sqrt(4u+4+t^2) + t))^k dt.
Complex phi_s_integral(double u, Complex s, double k, double* error = nullptr);

/// The same function through Legendre functions on the cut,
/// 2^{-3/2}/sqrt(pi) Gamma(s+k)Gamma(s-k)/Gamma(s)
///   [(s+k) P_k^{-s}(x) + (s-k) P_{-k}^{-s}(x)] (1+2u)^{-s/2},  x = u/(1+u).
Complex phi_s_legendre(double u, Complex s, double k);

// ---------------------------------------------------------------------------
// Group sums with s

/// Gamma(s-k)Gamma(s+k)/(sqrt(2 pi) Gamma(s)^2) sum chi(g) cosh(d)^{-s}
///   F(-k, k; s; 1/(1 + cosh d)) J_{g,k}(w) H_k(z, g w),  d = d(z, g w).
KernelValue geometric_kernel(const Point& z, const Point& w, const KernelParams& p,
                             const MultiplierSystem& ms);

/// (1/2) sum chi(g) k_s(sigma(z, g w)) J_{g,k}(w) H_k(z, g w).
KernelValue resolvent_kernel(const Point& z, const Point& w, const KernelParams& p,
                             const MultiplierSystem& ms);

// ---------------------------------------------------------------------------
// Heat and Poisson kernels

/// sqrt(2) e^{-t/4} / (4 pi t)^{3/2} int_rho^inf r e^{-r^2/4t}
///   T_{2k}(cosh(r/2)/cosh(rho/2)) / sqrt(cosh r - cosh rho) dr.
double heat_pointpair(double t, double rho, double k);

/// (1/2) sum conj(chi(g)) ((c conj(w) + d)/(cw + d))^k ((z - conj(g w))/(g w - conj(z)))^k
///   heat_pointpair(t, d(z, g w), k).
KernelValue heat_kernel_M(double t, const Point& z, const Point& w, double R,
                          const MultiplierSystem& ms, double tail_coeff = 2.0);

/// ((z - conj w)/(w - conj z))^{sign k} heat_pointpair(t, d(z, w), k).
Complex heat_identity_term(double t, const Point& z, const Point& w, double k, int sign = 1);

struct PdeOptions {
    double h = 1e-3;       ///< spatial and time step
    int stencil_points = 5; ///< 3 or 5
};

struct HeatPdeResult {
    double residual = 0.0; ///< the smaller of the two
    int sign = 0;          ///< sign of the exponent that achieved it
    double residual_plus = 0.0;
    double residual_minus = 0.0;
};

/// |(d/dt + Delta_k) f| at (t, z) by finite differences, for
/// f = heat_identity_term(t, ., w, k, +-1), where
/// Delta_k = -y^2 (d_x^2 + d_y^2) + 2iky d_x.
HeatPdeResult heat_pde_residual(double t, const Point& z, const Point& w, double k,
                                const PdeOptions& opt = {});

/// |(a/sqrt(4 pi)) int_0^inf e^{-t lambda} e^{-a^2/4t} t^{-3/2} dt - e^{-a sqrt(lambda)}|.
double subordination_check(double lambda, double a);

/// (u/sqrt(4 pi)) int_0^inf F(t) e^{-Z t} e^{-u^2/4t} t^{-3/2} dt for a given F.
Complex subordinate(const std::function<Complex(double)>& F, double u, Complex Z,
                    double* error = nullptr);

/// Subordinated identity term of the heat kernel.
Complex poisson_free(double u, Complex Z, const Point& z, const Point& w, double k);

/// Radial profile of the subordinated heat kernel at distance rho. For real Z > -1/4
/// the t-integral is done first in closed form (Bessel K_2); otherwise nested quadrature.
Complex poisson_pointpair(double rho, double u, Complex Z, double k);

/// Group-summed Poisson kernel; throws ConvergenceError when the tail bound
/// exceeds tol.
KernelValue poisson_kernel_M(double u, Complex Z, const Point& z, const Point& w, double R,
                             const MultiplierSystem& ms, double tol, double tail_coeff = 2.0);

// ---------------------------------------------------------------------------
// Pre-trace formula and sup-norm constants

/// -(d/4pi)(psi(s+k) + psi(s-k) - psi(t+k) - psi(t-k)).
double pretrace_digamma_term(double s, double t, double k, int d_dim = 1);

struct PretraceResult {
    double value = 0.0;
    double imag_residual = 0.0;
    double digamma_term = 0.0;
    double tail_bound = 0.0;
    long terms_used = 0;
};

/// Digamma term + (1/2) sum over g != +-I of chi(g) (k_s - k_t)(sigma(z, g z)) J_{g,k}(z) H_k(z, g z).
PretraceResult pretrace_rhs(const Point& z, double s, double t, double R, const MultiplierSystem& ms,
                            double tail_coeff = 2.0);

struct SupNormInputs {
    double k = 0.0;
    int d_dim = 1;
    double vol = 0.0;
    double diam = 0.0;
};

struct SupNormConstants {
    double A = 0.0;
    double C = 0.0;
    double script_C = 0.0;
};

SupNormConstants sup_norm_constants(const SupNormInputs& inp);

/// Inputs for the modular domain truncated at height Y: vol = pi/3 and the
/// hyperbolic diameter of {|x| <= 1/2, |z| >= 1, y <= Y} from its boundary.
SupNormInputs modular_domain_inputs(double k, double Y = 2.0, int d_dim = 1);

}  // namespace poincare::kernels
