#include "poincare/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "poincare/errors.hpp"

namespace poincare::quad {

namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
    Complex value;
    double error;
    double abs_integral;
};

Panel kronrod21(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const Complex fc = f(center);
    Complex resk = fc * kWgk[10];
    Complex resg = 0.0;
    double resabs = std::abs(fc) * kWgk[10];
    std::array<Complex, 10> f1{};
    std::array<Complex, 10> f2{};
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = f(center - dx);
        f2[j] = f(center + dx);
        const Complex s = f1[j] + f2[j];
        resk += kWgk[j] * s;
        resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) resg += kWg[j / 2] * s;
    }
    const Complex mean = resk * 0.5;
    double resasc = kWgk[10] * std::abs(fc - mean);
    for (int j = 0; j < 10; ++j)
        resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
    const double ah = std::abs(half);
    resasc *= ah;
    resabs *= ah;
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(err, 50.0 * eps * resabs);
    return {resk * half, err, resabs};
}

void check_finite(const Panel& p, double a, double b) {
    if (!std::isfinite(p.value.real()) || !std::isfinite(p.value.imag()))
        throw QuadratureFailure("quadrature: non-finite integrand on [" + std::to_string(a) + ", " +
                                    std::to_string(b) + "]",
                                std::numeric_limits<double>::infinity());
}

struct Accumulator {
    long evaluations = 0;
};

Panel adapt(const Integrand& f, double a, double b, Panel whole, double tol, int depth,
            const Options& opt, Accumulator& acc) {
    if (whole.error <= tol || depth >= opt.max_depth) return whole;
    const double mid = 0.5 * (a + b);
    if (!(mid > a && mid < b)) return whole;
    Panel left = kronrod21(f, a, mid);
    Panel right = kronrod21(f, mid, b);
    acc.evaluations += 42;
    check_finite(left, a, mid);
    check_finite(right, mid, b);
    const double refined = left.error + right.error;
    // Once the children settle the parent, stop refining here.
    if (refined <= tol) {
        return {left.value + right.value, refined, left.abs_integral + right.abs_integral};
    }
    left = adapt(f, a, mid, left, 0.5 * tol, depth + 1, opt, acc);
    right = adapt(f, mid, b, right, 0.5 * tol, depth + 1, opt, acc);
    return {left.value + right.value, left.error + right.error, left.abs_integral + right.abs_integral};
}

Panel integrate_panel(const Integrand& f, double a, double b, const Options& opt, double scale,
                      Accumulator& acc) {
    Panel first = kronrod21(f, a, b);
    acc.evaluations += 21;
    check_finite(first, a, b);
    const double magnitude = std::max(std::abs(first.value), scale);
    const double tol = std::max(opt.abs_tol, opt.rel_tol * magnitude);
    return adapt(f, a, b, first, tol, 0, opt, acc);
}

Complex pairwise_sum(const std::vector<Complex>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return v[lo];
    if (hi == lo) return 0.0;
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

}  // namespace

Result integrate(const Integrand& f, double a, double b, const Options& opt) {
    if (a == b) return {};
    Accumulator acc;
    const Panel p = integrate_panel(f, a, b, opt, 0.0, acc);
    return {p.value, p.error, p.abs_integral, acc.evaluations};
}

Result integrate_to_infinity(const Integrand& f, double a, const Options& opt) {
    Accumulator acc;
    std::vector<Complex> parts;
    double error = 0.0;
    double abs_total = 0.0;
    double left = a;
    double width = opt.first_panel_width;
    int negligible = 0;
    for (int n = 0; n < opt.max_panels; ++n) {
        const double right = left + width;
        const Panel p = integrate_panel(f, left, right, opt, abs_total, acc);
        parts.push_back(p.value);
        error += p.error;
        abs_total += p.abs_integral;
        const bool small = p.abs_integral <= 0.1 * std::max(opt.abs_tol, opt.rel_tol * abs_total);
        negligible = small ? negligible + 1 : 0;
        left = right;
        if (negligible >= 2 && left - a >= opt.min_extent) {
            return {pairwise_sum(parts, 0, parts.size()), error, abs_total, acc.evaluations};
        }
        width = std::min(2.0 * width, opt.max_panel_width);
    }
    throw QuadratureFailure("quadrature: half-line integral did not settle within max_panels", error);
}

Result integrate_real_line(const Integrand& f, double center, const Options& opt) {
    const Result right = integrate_to_infinity(f, center, opt);
    const Result left = integrate_to_infinity([&](double t) { return f(2.0 * center - t); }, center, opt);
    return {left.value + right.value, left.error + right.error, left.abs_integral + right.abs_integral,
            left.evaluations + right.evaluations};
}

void require_accuracy(const Result& r, double abs_limit, double rel_limit, const char* what) {
    const double limit = std::max(abs_limit, rel_limit * std::abs(r.value));
    if (!(r.error <= limit)) throw QuadratureFailure(std::string(what) + ": error estimate above limit", r.error);
}

}  // namespace poincare::quad
