#include "poincare/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "poincare/errors.hpp"

namespace poincare::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos approximation with g = 607/128 and 14 correction terms.
constexpr double kLanczosShift = 5.24218750000000000;  // g + 1/2
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr std::array<double, 14> kLanczosCoeffs = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};
constexpr double kSqrtTwoPi = 2.5066282746310005;

Complex log_gamma_right(Complex z) {
    Complex y = z;
    Complex tmp = z + kLanczosShift;
    tmp = (z + 0.5) * std::log(tmp) - tmp;
    Complex ser = kLanczosC0;
    for (double c : kLanczosCoeffs) {
        y += 1.0;
        ser += c / y;
    }
    return tmp + std::log(kSqrtTwoPi * ser / z);
}

// log(sin w) without overflow for large |Im w|; branch fixed modulo 2*pi*i.
Complex log_sin(Complex w) {
    if (std::abs(w.imag()) < 20.0) return std::log(std::sin(w));
    if (w.imag() < 0.0) return std::conj(log_sin(std::conj(w)));
    const Complex i(0.0, 1.0);
    // sin w = e^{-iw} (e^{2iw} - 1) / (2i), and |e^{2iw}| < 1 here.
    return -i * w + std::log((std::exp(2.0 * i * w) - 1.0) / (2.0 * i));
}

bool near_nonpositive_integer(Complex z, double tol) {
    if (std::abs(z.imag()) > tol || z.real() > tol) return false;
    return std::abs(z.real() - std::round(z.real())) <= tol;
}

}  // namespace

void SeriesControl::validate() const {
    if (max_terms < 64) throw DomainError("SeriesControl: max_terms must be >= 64");
    if (!(rel_tol > 0.0 && rel_tol <= 1e-6))
        throw DomainError("SeriesControl: rel_tol must lie in (0, 1e-6]");
}

Complex log_gamma(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("log_gamma: non-finite argument");
    if (near_nonpositive_integer(z, 1e-12))
        throw PoleError("log_gamma: argument is a nonpositive integer");
    if (z.real() >= 0.5) return log_gamma_right(z);
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z). Its imaginary part is
    // moved onto the principal branch, which the recurrence
    // log Gamma(z) = log Gamma(z + n) - sum log(z + j) follows.
    Complex v = std::log(kPi) - log_sin(kPi * z) - log_gamma_right(1.0 - z);
    const int n = static_cast<int>(std::ceil(0.5 - z.real()));
    double im = log_gamma_right(z + static_cast<double>(n)).imag();
    for (int j = 0; j < n; ++j) im -= std::arg(z + static_cast<double>(j));
    v.imag(v.imag() + 2.0 * kPi * std::round((im - v.imag()) / (2.0 * kPi)));
    return v;
}

Complex gamma(Complex z) {
    const Complex v = std::exp(log_gamma(z));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw OverflowError("gamma: result overflows");
    return v;
}

double digamma(double x) {
    if (!(x > 0.0)) throw DomainError("digamma: requires x > 0");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // Asymptotic series with Bernoulli coefficients B_{2n} / (2n).
    const double tail =
        inv2 * (1.0 / 12 -
                inv2 * (1.0 / 120 -
                        inv2 * (1.0 / 252 -
                                inv2 * (1.0 / 240 -
                                        inv2 * (1.0 / 132 - inv2 * (691.0 / 32760 - inv2 / 12))))));
    return acc + std::log(x) - 0.5 * inv - tail;
}

Complex pochhammer(Complex a, int n) {
    if (n < 0) throw DomainError("pochhammer: n must be nonnegative");
    Complex p = 1.0;
    for (int j = 0; j < n; ++j) p *= a + static_cast<double>(j);
    return p;
}

double cheb_T2k(double x, double k) {
    if (!(x >= 1.0)) throw DomainError("cheb_T2k: requires x >= 1");
    const double v = std::cosh(2.0 * k * std::acosh(x));
    if (!std::isfinite(v)) throw OverflowError("cheb_T2k: result overflows");
    return v;
}

Complex legendre_P(double nu, Complex mu, double x, const SeriesControl& ctl) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("legendre_P: requires 0 < x < 1");
    const Complex pref = std::exp(0.5 * mu * std::log((1.0 + x) / (1.0 - x)) - log_gamma(1.0 - mu));
    return pref * gauss_2f1(-nu, nu + 1.0, 1.0 - mu, 0.5 * (1.0 - x), ctl);
}

double contiguous_residual(double k, Complex s, double z, const SeriesControl& ctl) {
    if (near_nonpositive_integer(s, 1e-12))
        throw PoleError("contiguous_residual: s is a nonpositive integer");
    const Complex lhs = ((s + k) * gauss_2f1(-k, k + 1.0, s + 1.0, z, ctl) +
                         (s - k) * gauss_2f1(k, 1.0 - k, s + 1.0, z, ctl)) /
                        s;
    return std::abs(lhs - 2.0 * gauss_2f1(-k, k, s, z, ctl));
}

}  // namespace poincare::specfun
