#pragma once

// Upper half-plane geometry: points, SL(2,R) matrices and their Moebius
// action, the displacement function, the weight-k automorphy factor
// J_{g,k}(z) = exp(2ik arg(cz+d)), the point-pair invariant H_k and the
// factor system omega_k.

#include <complex>

namespace poincare {

using Complex = std::complex<double>;

namespace geom {

/// A point x + iy of the upper half-plane (y > 0).
struct Point {
    double x = 0.0;
    double y = 1.0;

    Point() = default;
    Point(double x_, double y_);
    explicit Point(Complex z);

    Complex complex() const { return {x, y}; }
};

/// A real 2x2 matrix of determinant one.
struct Mat2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    Mat2() = default;
    Mat2(double a_, double b_, double c_, double d_);

    double det() const { return a * d - b * c; }
    Mat2 operator*(const Mat2& o) const;
    Mat2 operator-() const { return Mat2(-a, -b, -c, -d); }
    Mat2 inverse() const { return Mat2(d, -b, -c, a); }

    static Mat2 identity() { return {}; }
};

/// A real weight with its branch decomposition k = k1 + k2, k1 integer and
/// k2 in (-1/2, 1/2], together with A = max{1/2, |k| - 1/2} and the spectral
/// floor lambda0 = |k|(1 - |k|).
class WeightContext {
public:
    explicit WeightContext(double k);

    double k() const { return k_; }
    int k1() const { return k1_; }
    double k2() const { return k2_; }
    double A() const { return a_; }
    double lambda0() const { return lambda0_; }

private:
    double k_;
    int k1_;
    double k2_;
    double a_;
    double lambda0_;
};

struct PairMetrics {
    double u = 0.0;      ///< |z-w|^2 / (4 Im z Im w)
    double sigma = 1.0;  ///< 1 + u
    double cosh_d = 1.0; ///< 1 + 2u
    double dist = 0.0;   ///< hyperbolic distance
};

Point moebius_act(const Mat2& g, const Point& z);

PairMetrics pair_metrics(const Point& z, const Point& w);

/// Displacement sigma(z, w) = |z - conj(w)|^2 / (4 Im z Im w).
double sigma(const Point& z, const Point& w);

/// Unit power exp(i k theta) of exp(i theta), theta in (-pi, pi]; this is the
/// k-th power under the k1 + k2 branch rule.
Complex unit_power(double theta, double k);

/// J_{g,k}(z) = exp(2ik arg(cz + d)), arg in (-pi, pi].
Complex j_phase(const Mat2& g, const Point& z, const WeightContext& ctx);

/// H_k(z, w) = ((1 - zeta)^2 / |1 - zeta|^2)^k with zeta = (z - w)/(z - conj w).
Complex h_k(const Point& z, const Point& w, const WeightContext& ctx);

/// The integer w(g1, g2) in {-1, 0, 1} defined by
/// 2 pi w = arg(c1 g2 z + d1) + arg(c2 z + d2) - arg(c12 z + d12).
/// Evaluated at z = 2i and cross-checked at z = 1 + 3i.
int winding_w(const Mat2& g1, const Mat2& g2);

/// The same defining expression at an arbitrary base point, unrounded.
double winding_raw(const Mat2& g1, const Mat2& g2, const Point& z);

/// omega_k(g1, g2) = exp(4 pi i k w(g1, g2)).
Complex omega_k(const Mat2& g1, const Mat2& g2, const WeightContext& ctx);

}  // namespace geom
}  // namespace poincare
