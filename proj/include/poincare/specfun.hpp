#pragma once

// Special functions used throughout the kernel and transform code: complex
// log-Gamma, digamma, Pochhammer symbols, the Gauss hypergeometric function
// on [0, 1], generalized Chebyshev functions and associated Legendre
// functions on (0, 1).

#include <complex>

namespace poincare {

using Complex = std::complex<double>;

namespace specfun {

struct SeriesControl {
    int max_terms = 4096;
    double rel_tol = 1e-15;

    /// Throws DomainError unless max_terms >= 64 and rel_tol in (0, 1e-6].
    void validate() const;
};

/// Principal branch of log Gamma(z) for z off the poles: real on the positive
/// axis and continuous off the negative axis (imaginary part is not reduced
/// modulo 2*pi).
Complex log_gamma(Complex z);

/// Gamma(z) as exp(log_gamma(z)); OverflowError if the result is not finite.
Complex gamma(Complex z);

/// psi(x) = Gamma'(x)/Gamma(x) for real x > 0.
double digamma(double x);

/// (a)_n = a (a+1) ... (a+n-1).
Complex pochhammer(Complex a, int n);

/// Gauss hypergeometric 2F1(a, b; c; z) for real z in [0, 1].
///
/// |z| <= 3/4 is summed directly. On (3/4, 1) the value is carried from the
/// series at z = 1/2 along the hypergeometric ODE by Taylor stepping, which
/// needs no case split for integer c - a - b. z = 1 uses Gauss summation and
/// requires Re(c - a - b) > 0.
Complex gauss_2f1(Complex a, Complex b, Complex c, double z,
                  const SeriesControl& ctl = {});

/// Sum of |(a)_j (b)_j / ((c)_j j!)| z^j, an upper bound for |2F1| on [0, z].
double gauss_2f1_abs_series(Complex a, Complex b, Complex c, double z,
                            const SeriesControl& ctl = {});

/// Generalized Chebyshev function (1/2)[(x + sqrt(x^2-1))^{2k} + (x - sqrt(x^2-1))^{2k}]
/// for x >= 1, evaluated as cosh(2k arccosh x).
double cheb_T2k(double x, double k);

/// Associated Legendre function of the first kind on the cut (0 < x < 1),
/// ((1+x)/(1-x))^{mu/2} / Gamma(1-mu) * 2F1(-nu, nu+1; 1-mu; (1-x)/2).
Complex legendre_P(double nu, Complex mu, double x, const SeriesControl& ctl = {});

/// |(1/s)[(s+k) F(-k,k+1;s+1;z) + (s-k) F(k,-k+1;s+1;z)] - 2 F(-k,k;s;z)|.
double contiguous_residual(double k, Complex s, double z, const SeriesControl& ctl = {});

}  // namespace specfun
}  // namespace poincare
