#include "poincare/fuchsian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "poincare/errors.hpp"

namespace poincare::fuchsian {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

struct Egcd {
    i64 g, x, y;
};

// x*a + y*b = g
Egcd egcd(i64 a, i64 b) {
    i64 old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
    while (r != 0) {
        const i64 q = old_r / r;
        std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
        std::tie(old_x, x) = std::make_tuple(x, old_x - q * x);
        std::tie(old_y, y) = std::make_tuple(y, old_y - q * y);
    }
    if (old_r < 0) return {-old_r, -old_x, -old_y};
    return {old_r, old_x, old_y};
}

i64 floor_mod(i64 a, i64 m) {
    const i64 r = a % m;
    return r < 0 ? r + m : r;
}

// One matrix with bottom row (c, d).
GroupElement lift(i64 c, i64 d) {
    const Egcd e = egcd(d, c);  // x d + y c = 1
    return {e.x, -e.y, c, d};
}

}  // namespace

GroupElement::GroupElement(i64 a_, i64 b_, i64 c_, i64 d_) : a(a_), b(b_), c(c_), d(d_) {
    if (static_cast<i128>(a) * d - static_cast<i128>(b) * c != 1)
        throw DomainError("GroupElement: determinant must be exactly 1");
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

geom::Mat2 GroupElement::mat() const {
    geom::Mat2 m;
    m.a = static_cast<double>(a);
    m.b = static_cast<double>(b);
    m.c = static_cast<double>(c);
    m.d = static_cast<double>(d);
    return m;
}

bool canonical_less(const GroupElement& x, const GroupElement& y) {
    return std::tie(x.c, x.d, x.a, x.b) < std::tie(y.c, y.d, y.a, y.b);
}

double min_height_ratio(double R) {
    const double m = 2.0 * R - 1.0;
    // Smaller root of t^2 - 2(2R-1) t + 1 = 0, written without cancellation.
    return 1.0 / (m + 2.0 * std::sqrt(R * (R - 1.0)));
}

BallResult enumerate_ball(const geom::Point& z, const geom::Point& w, double R, const BallOptions& opt) {
    if (!(R >= 1.0) || !std::isfinite(R)) throw DomainError("enumerate_ball: R must be finite and >= 1");
    BallResult out;
    out.radius_sigma = R;

    // sigma <= R forces Im(g w) >= q_- Im z, i.e. |cw + d|^2 <= Im w / (q_- Im z).
    const double pad = 1.0 + 1e-9;
    const double M = pad * w.y / (min_height_ratio(R) * z.y);
    const i64 c_max = static_cast<i64>(std::floor(std::sqrt(M) / w.y));

    auto sweep_row = [&](i64 c, i64 d) {
        const GroupElement g0 = lift(c, d);
        const geom::Point g0w = geom::moebius_act(g0.mat(), w);
        const double slack = 4.0 * z.y * g0w.y * R - (z.y + g0w.y) * (z.y + g0w.y);
        if (slack < -1e-9 * R) return;
        const double half = std::sqrt(std::max(0.0, slack)) * pad;
        const double centre = z.x - g0w.x;
        const i64 n_lo = static_cast<i64>(std::floor(centre - half)) - 1;
        const i64 n_hi = static_cast<i64>(std::ceil(centre + half)) + 1;
        out.candidates += n_hi - n_lo + 1;
        if (out.candidates > opt.budget)
            throw BudgetExceeded("enumerate_ball: candidate count exceeds budget");
        for (i64 n = n_lo; n <= n_hi; ++n) {
            const GroupElement g(g0.a + n * c, g0.b + n * d, c, d);
            if (geom::sigma(z, geom::moebius_act(g.mat(), w)) <= R) out.elements.push_back(g);
        }
    };

    sweep_row(0, 1);
    sweep_row(0, -1);
    for (i64 c = 1; c <= c_max; ++c) {
        const double cd = static_cast<double>(c);
        const double room = M - cd * cd * w.y * w.y;
        if (room < 0.0) continue;
        const double r = std::sqrt(room);
        const i64 d_lo = static_cast<i64>(std::floor(-cd * w.x - r));
        const i64 d_hi = static_cast<i64>(std::ceil(-cd * w.x + r));
        for (i64 d = d_lo; d <= d_hi; ++d) {
            if (std::gcd(c, d) != 1) continue;
            sweep_row(c, d);
            sweep_row(-c, -d);
        }
    }
    std::sort(out.elements.begin(), out.elements.end(), canonical_less);
    out.certified = true;
    return out;
}

long counting_N(double rho, const geom::Point& z, const geom::Point& w, const BallOptions& opt) {
    if (!(rho > 0.0)) throw DomainError("counting_N: rho must be positive");
    // cosh d = 2 sigma - 1
    const double R = 0.5 * (1.0 + std::cosh(rho));
    const BallResult ball = enumerate_ball(z, w, R, opt);
    long n = 0;
    for (const auto& g : ball.elements)
        if (geom::sigma(z, geom::moebius_act(g.mat(), w)) < R) ++n;
    return n;
}

Rational dedekind_sum(i64 d, i64 c) {
    if (c < 1) throw DomainError("dedekind_sum: c must be positive");
    if (std::gcd(d, c) != 1) throw DomainError("dedekind_sum: gcd(d, c) must be 1");
    // ((n/c)) ((dn/c)) = (2n - c)(2 (dn mod c) - c) / (4 c^2) for 0 < n < c.
    i128 num = 0;
    const i64 dm = floor_mod(d, c);
    for (i64 n = 1; n < c; ++n) {
        const i64 r = static_cast<i64>((static_cast<i128>(dm) * n) % c);
        num += static_cast<i128>(2 * n - c) * (2 * r - c);
    }
    i128 den = static_cast<i128>(4) * c * c;
    if (num == 0) return {0, 1};
    i128 g = num < 0 ? -num : num;
    i128 h = den;
    while (h != 0) {
        const i128 t = g % h;
        g = h;
        h = t;
    }
    return {static_cast<i64>(num / g), static_cast<i64>(den / g)};
}

double eta_phase(const GroupElement& g) {
    constexpr double pi = 3.141592653589793238462643383279502884;
    if (g.c > 0) {
        // (a+d)/(12c) - s(d,c) - 1/4 as one exact fraction.
        const Rational s = dedekind_sum(g.d, g.c);
        const i128 den = static_cast<i128>(12) * g.c * s.den;
        const i128 num = static_cast<i128>(g.a + g.d) * s.den - static_cast<i128>(s.num) * 12 * g.c -
                         static_cast<i128>(3) * g.c * s.den;
        return pi * static_cast<double>(num) / static_cast<double>(den);
    }
    if (g.c == 0 && g.d > 0) return pi * static_cast<double>(g.b) / 12.0;
    throw DomainError("eta_phase: requires c > 0, or c = 0 and d > 0");
}

}  // namespace poincare::fuchsian
