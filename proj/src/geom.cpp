#include "poincare/geom.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

#include "poincare/errors.hpp"

namespace poincare::geom {

namespace {
constexpr double kPi = std::numbers::pi;
}

Point::Point(double x_, double y_) : x(x_), y(y_) {
    if (!(y_ > 0.0) || !std::isfinite(x_) || !std::isfinite(y_))
        throw DomainError("Point: imaginary part must be positive and finite");
}

Point::Point(Complex z) : Point(z.real(), z.imag()) {}

Mat2::Mat2(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
    if (std::abs(det() - 1.0) > 1e-12) throw DomainError("Mat2: determinant must be 1");
}

Mat2 Mat2::operator*(const Mat2& o) const {
    Mat2 r;
    r.a = a * o.a + b * o.c;
    r.b = a * o.b + b * o.d;
    r.c = c * o.a + d * o.c;
    r.d = c * o.b + d * o.d;
    return r;
}

WeightContext::WeightContext(double k) : k_(k) {
    if (!std::isfinite(k)) throw DomainError("WeightContext: weight must be finite");
    k1_ = static_cast<int>(std::ceil(k - 0.5));
    k2_ = k - k1_;
    const double ak = std::abs(k);
    a_ = std::max(0.5, ak - 0.5);
    lambda0_ = ak * (1.0 - ak);
}

Point moebius_act(const Mat2& g, const Point& z) {
    const Complex zc = z.complex();
    const Complex den = g.c * zc + g.d;
    const Complex num = g.a * zc + g.b;
    const Complex v = num / den;
    // Im(gz) = Im z / |cz+d|^2 exactly, avoiding cancellation in num/den.
    return {v.real(), z.y / std::norm(den)};
}

PairMetrics pair_metrics(const Point& z, const Point& w) {
    const double dx = z.x - w.x;
    const double dy = z.y - w.y;
    PairMetrics m;
    m.u = (dx * dx + dy * dy) / (4.0 * z.y * w.y);
    m.sigma = 1.0 + m.u;
    m.cosh_d = 1.0 + 2.0 * m.u;
    // arccosh(1 + 2u) = 2 asinh(sqrt(u)) keeps digits for small u.
    m.dist = 2.0 * std::asinh(std::sqrt(m.u));
    return m;
}

double sigma(const Point& z, const Point& w) {
    const double dx = z.x - w.x;
    const double sy = z.y + w.y;
    return (dx * dx + sy * sy) / (4.0 * z.y * w.y);
}

Complex unit_power(double theta, double k) { return std::polar(1.0, k * theta); }

// arg(cz + d) in (-pi, pi]; a signed zero imaginary part (c = -0.0) must not
// flip arg(negative real) to -pi.
double arg_j(double c, double d, const Point& z) {
    double im = c * z.y;
    if (im == 0.0) im = 0.0;
    return std::arg(Complex(c * z.x + d, im));
}

Complex j_phase(const Mat2& g, const Point& z, const WeightContext& ctx) {
    return unit_power(2.0 * arg_j(g.c, g.d, z), ctx.k());
}

Complex h_k(const Point& z, const Point& w, const WeightContext& ctx) {
    // 1 - zeta = 2i Im(w) / (z - conj w); arg(z - conj w) lies in (0, pi).
    const double arg_zw = std::atan2(z.y + w.y, z.x - w.x);
    assert(arg_zw > 0.0 && arg_zw < kPi);
    const double arg_r = 0.5 * kPi - arg_zw;
    return unit_power(2.0 * arg_r, ctx.k());
}

double winding_raw(const Mat2& g1, const Mat2& g2, const Point& z) {
    const Mat2 g12 = g1 * g2;
    const Point g2z = moebius_act(g2, z);
    const double s = arg_j(g1.c, g1.d, g2z) + arg_j(g2.c, g2.d, z) - arg_j(g12.c, g12.d, z);
    return s / (2.0 * kPi);
}

int winding_w(const Mat2& g1, const Mat2& g2) {
    const double w1 = winding_raw(g1, g2, Point(0.0, 2.0));
    const double w2 = winding_raw(g1, g2, Point(1.0, 3.0));
    const double r1 = std::round(w1);
    const double r2 = std::round(w2);
    if (std::abs(w1 - r1) > 1e-6 || std::abs(w2 - r2) > 1e-6 || r1 != r2)
        throw ConsistencyError("winding_w: defining expression is not a z-independent integer");
    return static_cast<int>(r1);
}

Complex omega_k(const Mat2& g1, const Mat2& g2, const WeightContext& ctx) {
    const int w = winding_w(g1, g2);
    if (w == 0) return 1.0;
    return std::polar(1.0, 4.0 * kPi * ctx.k() * w);
}

}  // namespace poincare::geom
