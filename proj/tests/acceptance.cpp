// Acceptance criteria, one line each. Exit status is nonzero if any fails.

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "poincare/checks.hpp"
#include "poincare/errors.hpp"
#include "poincare/fuchsian.hpp"
#include "poincare/kernels.hpp"
#include "poincare/shc.hpp"

using namespace poincare;
using fuchsian::GroupElement;
using fuchsian::MultiplierSystem;
using geom::Point;

namespace {

constexpr double kPi = std::numbers::pi;

int failures = 0;

void report(int id, const char* what, bool ok, const std::string& detail) {
    std::printf("[%s] %2d %-44s %s\n", ok ? "PASS" : "FAIL", id, what, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

// Runs a criterion; an exception counts as failure with its message.
void criterion(int id, const char* what, const std::function<std::pair<bool, std::string>()>& body) {
    try {
        const auto [ok, detail] = body();
        report(id, what, ok, detail);
    } catch (const std::exception& e) {
        report(id, what, false, std::string("threw: ") + e.what());
    }
}

Point rand_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> x(-0.5, 0.5), y(0.8, 1.8);
    const double a = x(rng);
    return Point(a, y(rng));
}

std::vector<GroupElement> brute_force_ball(const Point& z, const Point& w, double R) {
    const Point i(0, 1);
    const double reach = std::acosh(2 * R - 1) + geom::pair_metrics(i, z).dist + geom::pair_metrics(i, w).dist;
    const double B = 2 * std::cosh(reach) + 1e-6;
    const int m = static_cast<int>(std::sqrt(B));
    std::vector<GroupElement> out;
    for (int a = -m; a <= m; ++a)
        for (int c = -m; c <= m; ++c) {
            if (a * a + c * c > B) continue;
            for (int b = -m; b <= m; ++b)
                for (int d = -m; d <= m; ++d) {
                    if (a * d - b * c != 1 || a * a + b * b + c * c + d * d > B) continue;
                    const GroupElement g(a, b, c, d);
                    if (geom::sigma(z, geom::moebius_act(g.mat(), w)) <= R) out.push_back(g);
                }
        }
    std::sort(out.begin(), out.end(), fuchsian::canonical_less);
    return out;
}

double heat_oracle(double t, double rho) {
    boost::math::quadrature::exp_sinh<double> es;
    const double I = es.integrate([&](double v) {
        const double r = rho + v * v;
        // Near v = 0 the integrand tends to 2 rho e^{-rho^2/4t} / sqrt(sinh rho).
        if (v * v < 1e-20) return rho > 0 ? 2 * rho * std::exp(-rho * rho / (4 * t)) / std::sqrt(std::sinh(rho)) : 0.0;
        const double gap = 2.0 * std::sinh(0.5 * (r + rho)) * std::sinh(0.5 * v * v);
        const double e = std::exp(-r * r / (4 * t));
        return e == 0.0 ? 0.0 : 2 * v * r * e / std::sqrt(gap);
    });
    return std::sqrt(2.0) * std::exp(-t / 4) / std::pow(4 * kPi * t, 1.5) * I;
}

}  // namespace

int main() {
    criterion(1, "Fourier transform of g_s in closed form", [] {
        const auto t0 = std::chrono::steady_clock::now();
        double worst = 0;
        for (double s : {1.6, 2.5, 4.0}) {
            const auto g = shc::wave_test_function(s);
            for (double r : {0.0, 0.5, 2.0, 5.0})
                worst = std::max(worst, rel(shc::fourier_h(g, r).value, shc::h_gs_closed({s, 0.0}, r)));
        }
        const double dt = seconds_since(t0);
        return std::pair{worst <= 1e-8 && dt <= 60.0, fmt("max rel %.2e (<= 1e-8), %.2f s (<= 60 s)", worst, dt)};
    });

    criterion(2, "h recurrence and continuation", [] {
        double worst = 0;
        int points = 0;
        for (double s : {1.6, 2.0, 2.5, 3.2, 4.0})
            for (double r : {0.0, 0.3, 0.7, 1.2, 2.0, 3.0, 4.5, 6.0, 8.0, 10.0}) {
                ++points;
                const Complex h = shc::h_gs_closed({s, 0.0}, r);
                for (int n : {1, 2}) {
                    const Complex rhs = shc::h_recurrence_factor({s, 0.0}, r, n) * shc::h_gs_closed({s + 2.0 * n, 0.0}, r);
                    worst = std::max(worst, std::abs(h - rhs) / std::max(1.0, std::abs(h)));
                }
            }
        double cont = 0;
        const std::pair<Complex, double> pts[] = {{{0.1, 0}, 2.0},  {{0.3, 0.2}, 1.0},  {{-0.4, 0}, 0.5},
                                                  {{0.7, 0}, 3.0},  {{-1.3, 0.5}, 1.5}, {{0.9, 0}, 0.25},
                                                  {{0.2, -0.6}, 2.5}, {{-0.7, 0}, 4.0}, {{0.55, 0}, 0.8},
                                                  {{-2.1, 0}, 1.1}};
        for (const auto& [s, r] : pts) {
            int n0 = 1;
            while (s.real() + 2.0 * n0 <= 1.5 + 1e-9) ++n0;
            const Complex a = shc::h_continued({s, 0.0}, r, n0);
            for (int n = n0 + 1; n <= n0 + 2; ++n) cont = std::max(cont, rel(shc::h_continued({s, 0.0}, r, n), a));
        }
        return std::pair{points == 50 && worst <= 1e-11 && cont <= 1e-9,
                         fmt("recurrence %.2e (<= 1e-11), continuation %.2e (<= 1e-9)", worst, cont)};
    });

    criterion(3, "transform pipeline reproduces h", [] {
        const auto t0 = std::chrono::steady_clock::now();
        double worst = 0;
        for (double k : {0.0, 0.5, 1.3})
            for (double s : {2.5, 4.0}) {
                shc::ProfileFunction P{[&](double x) { return kernels::phi_s_closed(x / 4.0, s, k); }, s};
                auto q = [&](double y) { return shc::q_forward(P, y, k).value; };
                shc::EvenTestFunction g{[&](double u) { return shc::g_from_q(q, u); }, s - 0.5, 4, {}};
                for (double r : {0.0, 0.5, 1.0, 2.0})
                    worst = std::max(worst, rel(shc::fourier_h(g, r).value, shc::h_gs_closed({s, k}, r)));
            }
        const double dt = seconds_since(t0);
        return std::pair{worst <= 1e-5 && dt <= 300.0, fmt("max rel %.2e (<= 1e-5), %.2f s (<= 300 s)", worst, dt)};
    });

    criterion(4, "inverse chain round trip", [] {
        const double s = 2.5;
        double worst = 0;
        for (double k : {0.0, 0.5}) {
            shc::ProfileFunction P{[&](double x) { return kernels::phi_s_closed(x / 4.0, s, k); }, s};
            auto q = [&](double y) { return shc::q_forward(P, y, k).value; };
            // Q' of the computed Q by five-point differences, one-sided near 0.
            auto qp = [&](double y) -> Complex {
                const double h = 1e-3 * (1 + y);
                if (y >= 2 * h) return (q(y - 2 * h) - 8.0 * q(y - h) + 8.0 * q(y + h) - q(y + 2 * h)) / (12 * h);
                return (-25.0 * q(y) + 48.0 * q(y + h) - 36.0 * q(y + 2 * h) + 16.0 * q(y + 3 * h) - 3.0 * q(y + 4 * h)) /
                       (12 * h);
            };
            for (double y : {0.0, 1.0, 4.0}) worst = std::max(worst, rel(shc::phi_inverse(qp, y, k).value, P.phi(y)));
        }
        double pair = 0;
        shc::ProfileFunction E{[](double x) { return Complex(std::exp(-x) / std::sqrt(kPi)); }, 10.0};
        for (double y : {0.0, 1.0, 4.0}) {
            pair = std::max(pair, std::abs(shc::q_forward(E, y, 0.0).value - std::exp(-y)));
            pair = std::max(pair, std::abs(shc::phi_inverse([](double x) { return Complex(-std::exp(-x)); }, y, 0.0).value -
                                           std::exp(-y) / std::sqrt(kPi)));
        }
        return std::pair{worst <= 1e-7 && pair <= 1e-9,
                         fmt("round trip %.2e (<= 1e-7), analytic pair %.2e (<= 1e-9)", worst, pair)};
    });

    criterion(5, "g_k difference bound and positivity", [] {
        std::mt19937_64 rng(314159);
        std::uniform_real_distribution<double> U(0.0, 1.0);
        long violations = 0, nonpositive = 0;
        for (int i = 0; i < 10000; ++i) {
            const double k = -2 + 4 * U(rng);
            const double s = std::max(1.0, std::abs(k)) + 0.02 + 5 * U(rng);
            const double sigma = i % 50 == 0 ? 1.0 : 1.0 + std::pow(10.0, -6 + 9 * U(rng));
            const auto g = kernels::gk_difference(sigma, s, k);
            if (!g.bound_ok) ++violations;
            if (!(g.value > 0)) ++nonpositive;
        }
        return std::pair{violations == 0 && nonpositive == 0,
                         fmt("10^4 samples: %.0f violations, %.0f non-positive", double(violations), double(nonpositive))};
    });

    criterion(6, "Phi_s closed form equals its integral", [] {
        double worst = 0;
        int n = 0;
        for (double u : {0.0, 0.6, 3.0})
            for (double s : {2.5, 3.0, 4.5})
                for (double k : {0.0, 0.5, 1.3}) {
                    ++n;
                    worst = std::max(worst, rel(kernels::phi_s_integral(u, s, k), kernels::phi_s_closed(u, s, k)));
                }
        const double leg = rel(kernels::phi_s_legendre(0.6, 2.5, 0.3), kernels::phi_s_closed(0.6, 2.5, 0.3));
        return std::pair{n == 27 && worst <= 1e-7 && leg <= 1e-6,
                         fmt("27 points %.2e (<= 1e-7), Legendre route %.2e (<= 1e-6)", worst, leg)};
    });

    criterion(7, "H_k invariance and automorphy cocycle", [] {
        std::mt19937_64 rng(2718);
        std::uniform_real_distribution<double> K(-2.0, 2.0);
        double h = 0, cyc = 0;
        for (int i = 0; i < 1000; ++i) {
            const geom::Mat2 g = fuchsian::random_word(rng, 10).mat();
            const Point z = rand_point(rng), w = rand_point(rng);
            const geom::WeightContext ctx(K(rng));
            const Complex lhs = geom::h_k(geom::moebius_act(g, z), geom::moebius_act(g, w), ctx);
            h = std::max(h, std::abs(lhs - geom::j_phase(g, z, ctx) * geom::h_k(z, w, ctx) / geom::j_phase(g, w, ctx)));
        }
        for (int i = 0; i < 1000; ++i) {
            const geom::Mat2 g1 = fuchsian::random_word(rng, 10).mat(), g2 = fuchsian::random_word(rng, 10).mat();
            const Point z = rand_point(rng);
            const geom::WeightContext ctx(K(rng));
            const Complex lhs = geom::j_phase(g1, geom::moebius_act(g2, z), ctx) * geom::j_phase(g2, z, ctx);
            cyc = std::max(cyc, std::abs(lhs - geom::omega_k(g1, g2, ctx) * geom::j_phase(g1 * g2, z, ctx)));
        }
        return std::pair{h <= 1e-12 && cyc <= 1e-12, fmt("H_k %.2e (<= 1e-12), cocycle %.2e (<= 1e-12)", h, cyc)};
    });

    criterion(8, "multiplier system properties", [] {
        std::mt19937_64 rng(1618);
        double a = 0, b = 0;
        auto sweep = [&](const MultiplierSystem& ms) {
            a = std::max(a, std::abs(ms.chi(GroupElement::minus_identity()) - std::polar(1.0, -2 * kPi * ms.k())));
            for (int i = 0; i < 1000; ++i)
                b = std::max(b, fuchsian::consistency_residual(ms, fuchsian::random_word(rng, 12),
                                                               fuchsian::random_word(rng, 12)));
        };
        for (double k : {0.0, 0.5, 1.0, 1.3}) sweep(MultiplierSystem::eta_power(k));
        for (double k : {0.0, 2.0}) sweep(MultiplierSystem::trivial(k));
        return std::pair{a <= 1e-12 && b <= 1e-10, fmt("value at -I %.2e (<= 1e-12), consistency %.2e (<= 1e-10)", a, b)};
    });

    criterion(9, "ball enumeration and counting", [] {
        const std::pair<Point, Point> pairs[] = {{Point(0, 1), Point(0, 1)},
                                                  {Point(0, 2), Point(0, 2)},
                                                  {Point(0.1, 1.0), Point(0, 2)},
                                                  {Point(0.3, 1.7), Point(0, 2.4)},
                                                  {Point(-0.4, 0.9), Point(0.25, 1.3)}};
        int mismatch = 0, cases = 0;
        for (const auto& [z, w] : pairs)
            for (double R : {1.01, 2.0, 5.0, 12.0}) {
                ++cases;
                if (!(fuchsian::enumerate_ball(z, w, R).elements == brute_force_ball(z, w, R))) ++mismatch;
            }
        const long n1 = fuchsian::counting_N(0.1, Point(0, 1), Point(0, 1));
        const long n2 = fuchsian::counting_N(0.1, Point(0, 2), Point(0, 2));
        return std::pair{mismatch == 0 && n1 == 4 && n2 == 2,
                         fmt("%.0f mismatching balls, N(0.1;i,i)=%.0f, N(0.1;2i,2i)=%.0f", double(mismatch), double(n1),
                             double(n2))};
    });

    criterion(10, "automorphy and tail certificates", [] {
        double aut = 0, dbl = 0;
        const double k = 0.5;
        const auto ms = MultiplierSystem::eta_power(k);
        const Point z(0.1, 1.0), w(0.0, 2.0);
        const kernels::KernelParams p{3.0, k, 10.0, 2.0};
        for (const GroupElement& eta : {GroupElement::T(), GroupElement::S()}) {
            const Point ez = geom::moebius_act(eta.mat(), z);
            const Complex f = geom::j_phase(eta.mat(), z, ms.weight()) * ms.chi(eta);
            auto ratio = [&](const kernels::KernelValue& a, const kernels::KernelValue& b, Complex fac) {
                return std::abs(b.value - fac * a.value) / a.tail_bound;
            };
            aut = std::max(aut, ratio(kernels::geometric_kernel(z, w, p, ms), kernels::geometric_kernel(ez, w, p, ms), f));
            aut = std::max(aut, ratio(kernels::resolvent_kernel(z, w, p, ms), kernels::resolvent_kernel(ez, w, p, ms), f));
            aut = std::max(aut, ratio(kernels::heat_kernel_M(0.5, z, w, 6.0, ms),
                                      kernels::heat_kernel_M(0.5, ez, w, 6.0, ms), 1.0 / f));
        }
        std::mt19937_64 rng(4242);
        std::uniform_real_distribution<double> U(0.0, 1.0);
        const double weights[] = {0.0, 0.5, 1.0, 1.3, -0.7};
        int configs = 0;
        for (int kind = 0; kind < 3; ++kind)
            for (int i = 0; i < 10; ++i) {
                ++configs;
                const double kk = weights[static_cast<int>(U(rng) * 5) % 5];
                const auto m = MultiplierSystem::eta_power(kk);
                const Point a = rand_point(rng), b = rand_point(rng);
                const double s = std::max(1.0, std::abs(kk)) + 1 + 2 * U(rng);
                const double t = 0.3 + 0.5 * U(rng);
                kernels::KernelValue v1, v2;
                if (kind == 0) {
                    v1 = kernels::geometric_kernel(a, b, {s, kk, 10.0, 2.0}, m);
                    v2 = kernels::geometric_kernel(a, b, {s, kk, 20.0, 2.0}, m);
                } else if (kind == 1) {
                    v1 = kernels::resolvent_kernel(a, b, {s, kk, 10.0, 2.0}, m);
                    v2 = kernels::resolvent_kernel(a, b, {s, kk, 20.0, 2.0}, m);
                } else {
                    v1 = kernels::heat_kernel_M(t, a, b, 4.0, m);
                    v2 = kernels::heat_kernel_M(t, a, b, 8.0, m);
                }
                dbl = std::max(dbl, std::abs(v1.value - v2.value) / v1.tail_bound);
            }
        return std::pair{aut <= 10.0 && dbl <= 1.0 && configs == 30,
                         fmt("automorphy/tail %.2e (<= 10), doubling diff/tail %.3f (<= 1) over 30 configs", aut, dbl)};
    });

    criterion(11, "heat kernel monotonicity, mass and PDE", [] {
        long bad = 0;
        for (double k : {0.0, 0.5, 1.0})
            for (double t : {0.5, 1.0}) {
                double prev = INFINITY;
                for (int i = 0; i <= 24; ++i) {
                    const double v = kernels::heat_pointpair(t, 0.25 * i, k);
                    if (!(v > 0 && v < prev)) ++bad;
                    prev = v;
                }
            }
        boost::math::quadrature::exp_sinh<double> es;
        const double mass = es.integrate([](double r) {
            return r > 60 ? 0.0 : 2 * kPi * kernels::heat_pointpair(0.5, r, 0.0) * std::sinh(r);
        });
        const Point z(0, 1), w(1, 2);
        const double p0 = kernels::heat_pde_residual(1.0, z, w, 0.0).residual;
        const auto p5 = kernels::heat_pde_residual(1.0, z, w, 0.5);
        const bool ok = bad == 0 && std::abs(mass - 1) <= 1e-3 && p0 <= 1e-4 && p5.residual <= 1e-3;
        char buf[256];
        std::snprintf(buf, sizeof buf, "%ld monotonicity breaks, |mass-1| %.1e, PDE k=0 %.1e, k=0.5 %.1e (sign %d)", bad,
                      std::abs(mass - 1), p0, p5.residual, p5.sign);
        return std::pair{ok, std::string(buf)};
    });

    criterion(12, "subordination and Poisson identity term", [] {
        double sub = 0;
        for (double lambda : {0.0, 1.0, 5.0})
            for (double a : {0.1, 1.0, 3.0}) sub = std::max(sub, kernels::subordination_check(lambda, a));
        // Nested-quadrature oracle at k = 0: subordinate the heat profile in t.
        const Point z(0, 1), w(1, 2);
        const double u = 1.0, Z = 0.3, rho = geom::pair_metrics(z, w).dist;
        boost::math::quadrature::exp_sinh<double> es;
        const double outer = es.integrate([&](double t) {
            if (t < 1e-3 || t > 400) return 0.0;
            return heat_oracle(t, rho) * std::exp(-Z * t - u * u / (4 * t)) * std::pow(t, -1.5);
        });
        const double oracle = u / std::sqrt(4 * kPi) * outer;
        const double pf = rel(kernels::poisson_free(u, Z, z, w, 0.0), oracle);
        return std::pair{sub <= 1e-9 && pf <= 1e-6, fmt("identity %.2e (<= 1e-9), Poisson vs oracle %.2e (<= 1e-6)", sub, pf)};
    });

    criterion(13, "pre-trace right side", [] {
        double dig = 0, lo = INFINITY, margin = -INFINITY;
        for (double k : {0.0, 0.5, 1.0}) {
            const double s = std::abs(k) + 2;
            dig = std::max(dig, std::abs(kernels::pretrace_digamma_term(s, s + 1, k) -
                                         (std::abs(k) + 2) / (8 * kPi * (std::abs(k) + 1))));
            const auto ms = MultiplierSystem::eta_power(k);
            const double C = kernels::sup_norm_constants(kernels::modular_domain_inputs(k)).C;
            for (const Point z : {Point(0, 2), Point(0.3, 1.1), Point(-0.2, 1.6)}) {
                const auto r = kernels::pretrace_rhs(z, s, s + 1, 30.0, ms);
                lo = std::min(lo, r.value - r.tail_bound);
                margin = std::max(margin, r.value + r.tail_bound - C);
            }
        }
        return std::pair{dig <= 1e-12 && lo > 0 && margin <= 0,
                         fmt("digamma %.1e (<= 1e-12), min(RHS - tail) %.3f (> 0), max(RHS + tail - C) %.3f (<= 0)", dig,
                             lo, margin)};
    });

    criterion(14, "check all is deterministic", [] {
        const checks::CheckConfig cfg{0.5, 20240611};
        const std::string a = checks::report_json(checks::run_suites("all", cfg), cfg).dump(2);
        const std::string b = checks::report_json(checks::run_suites("all", cfg), cfg).dump(2);
        const bool pass = checks::Json::parse(a)["pass"].get<bool>();
        return std::pair{a == b, fmt("two runs, %.0f bytes, identical: ", double(a.size())) + (a == b ? "yes" : "no") +
                                     (pass ? ", all suites pass" : ", some suite fails")};
    });

    std::printf("%d failing criteria\n", failures);
    return failures == 0 ? 0 : 1;
}
