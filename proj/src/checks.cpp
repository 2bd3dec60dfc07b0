#include "poincare/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "poincare/errors.hpp"
#include "poincare/fuchsian.hpp"
#include "poincare/geom.hpp"
#include "poincare/kernels.hpp"
#include "poincare/shc.hpp"
#include "poincare/specfun.hpp"

namespace poincare::checks {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

using fuchsian::GroupElement;
using fuchsian::MultiplierSystem;
using geom::Point;

bool holds(Relation rel, double measured, double tol) {
    switch (rel) {
        case Relation::at_most: return measured <= tol;
        case Relation::at_least: return measured >= tol;
        case Relation::greater: return measured > tol;
        case Relation::equal: return measured == tol;
    }
    return false;
}

class Builder {
public:
    explicit Builder(std::string name) { rep_.name = std::move(name); }

    void check(std::string name, std::string anchor, Relation rel, double tol,
               const std::function<double()>& measure) {
        Assertion a;
        a.name = std::move(name);
        a.anchor = std::move(anchor);
        a.tolerance = tol;
        a.relation = rel;
        try {
            a.measured = measure();
            a.pass = holds(rel, a.measured, tol);
        } catch (const std::exception& e) {
            a.measured = kNaN;
            a.pass = false;
            a.detail = e.what();
        }
        rep_.assertions.push_back(std::move(a));
    }

    void note(const std::string& detail) { rep_.assertions.back().detail = detail; }

    SuiteReport done() { return std::move(rep_); }

private:
    SuiteReport rep_;
};

double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

std::mt19937_64 make_rng(const CheckConfig& cfg, std::uint64_t salt) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(salt)};
    return std::mt19937_64(seq);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Point random_point(std::mt19937_64& rng) { return {uniform(rng, -0.5, 0.5), uniform(rng, 0.8, 1.8)}; }

// ---------------------------------------------------------------------------

SuiteReport suite_specfun(const CheckConfig&) {
    Builder b("specfun");
    b.check("log_gamma_recurrence", "log-Gamma functional equation", Relation::at_most, 1e-12, [] {
        double worst = 0.0;
        for (double re : {0.3, 1.7, 5.5, 20.0})
            for (double im : {-3.0, 0.0, 0.5, 10.0}) {
                const Complex z(re, im);
                const Complex lhs = std::exp(specfun::log_gamma(z + 1.0) - specfun::log_gamma(z));
                worst = std::max(worst, rel_err(lhs, z));
            }
        return worst;
    });
    b.check("gamma_reflection", "Gamma reflection formula", Relation::at_most, 1e-12, [] {
        double worst = 0.0;
        for (double x : {0.1, 0.25, 0.4, 0.7}) {
            const Complex prod = specfun::gamma(x) * specfun::gamma(1.0 - x);
            worst = std::max(worst, rel_err(prod, kPi / std::sin(kPi * x)));
        }
        return worst;
    });
    b.check("digamma_recurrence", "digamma recurrence", Relation::at_most, 1e-13, [] {
        double worst = 0.0;
        for (double x : {0.2, 1.0, 3.7, 12.5, 80.0})
            worst = std::max(worst, std::abs(specfun::digamma(x + 1.0) - specfun::digamma(x) - 1.0 / x));
        return worst;
    });
    b.check("hypergeometric_elementary", "2F1 elementary reductions", Relation::at_most, 1e-13, [] {
        double worst = 0.0;
        for (double z : {0.1, 0.5, 0.9, 0.99}) {
            worst = std::max(worst, rel_err(specfun::gauss_2f1(1.0, 1.0, 2.0, z), -std::log1p(-z) / z));
            worst = std::max(worst, rel_err(specfun::gauss_2f1(0.7, 1.3, 1.3, z), std::pow(1.0 - z, -0.7)));
        }
        return worst;
    });
    b.check("contiguous_relation", "2F1 contiguous relation", Relation::at_most, 1e-12, [] {
        double worst = 0.0;
        for (double k : {0.0, 0.5, 1.3})
            for (double s : {2.5, 4.0})
                for (double z : {0.05, 0.25, 0.45}) worst = std::max(worst, specfun::contiguous_residual(k, s, z));
        return worst;
    });
    b.check("chebyshev_polynomials", "generalized Chebyshev at integer order", Relation::at_most, 1e-12, [] {
        double worst = 0.0;
        for (double x : {1.0, 1.3, 2.0, 4.5}) {
            worst = std::max(worst, std::abs(specfun::cheb_T2k(x, 1.0) - (2 * x * x - 1)) / (2 * x * x));
            worst = std::max(worst, std::abs(specfun::cheb_T2k(x, 1.5) - (4 * x * x * x - 3 * x)) / (4 * x * x * x));
        }
        return worst;
    });
    return b.done();
}

SuiteReport suite_invariance(const CheckConfig& cfg) {
    Builder b("invariance");
    b.check("hk_transformation", "H_k transformation rule", Relation::at_most, 1e-12, [&] {
        auto rng = make_rng(cfg, 7);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const geom::Mat2 g = fuchsian::random_word(rng, 10).mat();
            const Point z = random_point(rng), w = random_point(rng);
            const geom::WeightContext ctx(uniform(rng, -2.0, 2.0));
            const Complex lhs = geom::h_k(geom::moebius_act(g, z), geom::moebius_act(g, w), ctx);
            const Complex rhs = geom::j_phase(g, z, ctx) * geom::h_k(z, w, ctx) / geom::j_phase(g, w, ctx);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        return worst;
    });
    b.check("j_cocycle", "automorphy factor cocycle with omega_k", Relation::at_most, 1e-12, [&] {
        auto rng = make_rng(cfg, 8);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const geom::Mat2 g1 = fuchsian::random_word(rng, 10).mat();
            const geom::Mat2 g2 = fuchsian::random_word(rng, 10).mat();
            const Point z = random_point(rng);
            const geom::WeightContext ctx(uniform(rng, -2.0, 2.0));
            const Complex lhs = geom::j_phase(g1, geom::moebius_act(g2, z), ctx) * geom::j_phase(g2, z, ctx);
            const Complex rhs = geom::omega_k(g1, g2, ctx) * geom::j_phase(g1 * g2, z, ctx);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        return worst;
    });
    b.check("displacement_invariance", "displacement is group invariant", Relation::at_most, 1e-10, [&] {
        auto rng = make_rng(cfg, 9);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const geom::Mat2 g = fuchsian::random_word(rng, 8).mat();
            const Point z = random_point(rng), w = random_point(rng);
            const double s0 = geom::sigma(z, w);
            const double s1 = geom::sigma(geom::moebius_act(g, z), geom::moebius_act(g, w));
            worst = std::max(worst, std::abs(s1 - s0) / s0);
        }
        return worst;
    });
    return b.done();
}

SuiteReport suite_multiplier(const CheckConfig& cfg) {
    Builder b("multiplier");
    struct Case {
        const char* label;
        double k;
        bool eta;
    };
    const Case cases[] = {{"eta k=0", 0.0, true},  {"eta k=1/2", 0.5, true}, {"eta k=1", 1.0, true},
                          {"eta k=1.3", 1.3, true}, {"trivial k=0", 0.0, false}, {"trivial k=2", 2.0, false}};
    int idx = 0;
    for (const Case& c : cases) {
        const std::uint64_t salt = 100 + idx++;
        std::function<MultiplierSystem()> make = [c] {
            return c.eta ? MultiplierSystem::eta_power(c.k) : MultiplierSystem::trivial(c.k);
        };
        b.check(std::string("minus_identity ") + c.label, "multiplier value at -I", Relation::at_most, 1e-12,
                [&] {
                    const MultiplierSystem ms = make();
                    return std::abs(ms.chi(GroupElement::minus_identity()) - std::polar(1.0, -2.0 * kPi * c.k));
                });
        b.check(std::string("consistency ") + c.label, "multiplier consistency with omega_k", Relation::at_most,
                1e-10, [&] {
                    const MultiplierSystem ms = make();
                    auto rng = make_rng(cfg, salt);
                    double worst = 0.0;
                    for (int i = 0; i < 1000; ++i) {
                        const GroupElement g1 = fuchsian::random_word(rng, 12);
                        const GroupElement g2 = fuchsian::random_word(rng, 12);
                        worst = std::max(worst, fuchsian::consistency_residual(ms, g1, g2));
                    }
                    return worst;
                });
    }
    b.check("unitarity", "multiplier is unitary", Relation::at_most, 1e-14, [&] {
        const MultiplierSystem ms = MultiplierSystem::eta_power(cfg.k);
        auto rng = make_rng(cfg, 120);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i)
            worst = std::max(worst, std::abs(std::abs(ms.chi(fuchsian::random_word(rng, 16))) - 1.0));
        return worst;
    });
    return b.done();
}

// Every g with sigma(z, g w) <= R satisfies |g|^2 = 2 cosh d(i, g i) <= B.
std::vector<GroupElement> brute_force_ball(const Point& z, const Point& w, double R) {
    const Point i(0.0, 1.0);
    const double reach = std::acosh(2.0 * R - 1.0) + geom::pair_metrics(i, z).dist + geom::pair_metrics(i, w).dist;
    const double B = 2.0 * std::cosh(reach) * (1.0 + 1e-9);
    const auto m = static_cast<std::int64_t>(std::floor(std::sqrt(B)));
    std::vector<GroupElement> out;
    for (std::int64_t a = -m; a <= m; ++a)
        for (std::int64_t c = -m; c <= m; ++c)
            for (std::int64_t bb = -m; bb <= m; ++bb)
                for (std::int64_t d = -m; d <= m; ++d) {
                    if (a * d - bb * c != 1) continue;
                    if (static_cast<double>(a * a + bb * bb + c * c + d * d) > B) continue;
                    const GroupElement g(a, bb, c, d);
                    if (geom::sigma(z, geom::moebius_act(g.mat(), w)) <= R) out.push_back(g);
                }
    std::sort(out.begin(), out.end(), fuchsian::canonical_less);
    return out;
}

SuiteReport suite_ball(const CheckConfig&) {
    Builder b("ball");
    const std::pair<Point, Point> pairs[] = {{{0.0, 1.0}, {0.0, 1.0}},
                                              {{0.0, 2.0}, {0.0, 2.0}},
                                              {{0.1, 1.0}, {0.0, 2.0}},
                                              {{0.3, 1.7}, {0.0, 2.4}},
                                              {{-0.4, 0.9}, {0.25, 1.3}}};
    b.check("brute_force_agreement", "ball enumeration matches brute force", Relation::equal, 0.0, [&] {
        double mismatches = 0.0;
        for (const auto& [z, w] : pairs)
            for (double R : {1.01, 2.0, 5.0, 12.0}) {
                const auto ball = fuchsian::enumerate_ball(z, w, R);
                if (!(ball.elements == brute_force_ball(z, w, R))) mismatches += 1.0;
            }
        return mismatches;
    });
    b.check("count_i_i", "counting function small radius", Relation::equal, 4.0,
            [] { return static_cast<double>(fuchsian::counting_N(0.1, {0.0, 1.0}, {0.0, 1.0})); });
    b.check("count_2i_2i", "counting function small radius", Relation::equal, 2.0,
            [] { return static_cast<double>(fuchsian::counting_N(0.1, {0.0, 2.0}, {0.0, 2.0})); });
    b.check("negation_closure", "ball closed under negation", Relation::equal, 0.0, [] {
        const auto ball = fuchsian::enumerate_ball({0.1, 1.0}, {0.0, 2.0}, 30.0);
        double missing = 0.0;
        for (const auto& g : ball.elements)
            if (!std::binary_search(ball.elements.begin(), ball.elements.end(), -g, fuchsian::canonical_less))
                missing += 1.0;
        return missing;
    });
    return b.done();
}

SuiteReport suite_gk_bound(const CheckConfig& cfg) {
    Builder b("gk_bound");
    struct Sample {
        double k, s, sigma;
    };
    auto rng = make_rng(cfg, 200);
    std::vector<Sample> samples;
    for (int i = 0; i < 10000; ++i) {
        const double k = uniform(rng, -2.0, 2.0);
        const double s = std::max(1.0, std::abs(k)) + uniform(rng, 0.02, 5.0);
        const double sigma = i % 50 == 0 ? 1.0 : 1.0 + std::pow(10.0, uniform(rng, -6.0, 3.0));
        samples.push_back({k, s, sigma});
    }
    std::vector<kernels::GkDifference> vals;
    vals.reserve(samples.size());
    b.check("bound_violations", "g_k difference bound", Relation::equal, 0.0, [&] {
        double violations = 0.0;
        for (const Sample& x : samples) {
            vals.push_back(kernels::gk_difference(x.sigma, x.s, x.k));
            if (!vals.back().bound_ok) violations += 1.0;
        }
        return violations;
    });
    b.check("positivity", "g_k difference is positive", Relation::greater, 0.0, [&] {
        if (vals.size() != samples.size()) throw ConsistencyError("gk_bound: sweep incomplete");
        double lo = std::numeric_limits<double>::infinity();
        for (const auto& v : vals) lo = std::min(lo, v.value / v.bound);
        return lo;
    });
    b.check("two_evaluation_agreement", "g_k equals k_s - k_{s+1}", Relation::at_most, 1e-8, [&] {
        if (vals.size() != samples.size()) throw ConsistencyError("gk_bound: sweep incomplete");
        double worst = 0.0;
        for (std::size_t i = 0; i < samples.size(); ++i)
            if (samples[i].sigma > 1.01)
                worst = std::max(worst, std::abs(vals[i].value - vals[i].two_eval) / std::abs(vals[i].value));
        return worst;
    });
    return b.done();
}

SuiteReport suite_hrecurrence(const CheckConfig&) {
    Builder b("hrecurrence");
    for (int n : {1, 2}) {
        b.check("recurrence n=" + std::to_string(n), "h recurrence in s", Relation::at_most, 1e-11, [n] {
            double worst = 0.0;
            for (double s : {1.6, 2.0, 2.5, 3.2, 4.0})
                for (double r : {0.0, 0.3, 0.7, 1.2, 2.0, 3.0, 4.5, 6.0, 8.0, 10.0}) {
                    const Complex h = shc::h_gs_closed({s, 0.0}, r);
                    const Complex rhs = shc::h_recurrence_factor({s, 0.0}, r, n) * shc::h_gs_closed({s + 2.0 * n, 0.0}, r);
                    worst = std::max(worst, std::abs(h - rhs) / std::max(1.0, std::abs(h)));
                }
            return worst;
        });
    }
    b.check("continuation_n_independence", "h continuation independent of n", Relation::at_most, 1e-9, [] {
        const std::pair<Complex, double> pts[] = {{{0.1, 0.0}, 2.0},  {{0.3, 0.2}, 1.0},  {{-0.4, 0.0}, 0.5},
                                                  {{0.7, 0.0}, 3.0},  {{-1.3, 0.5}, 1.5}, {{0.9, 0.0}, 0.25},
                                                  {{0.2, -0.6}, 2.5}, {{-0.7, 0.0}, 4.0}, {{0.55, 0.0}, 0.8},
                                                  {{-2.1, 0.0}, 1.1}};
        double worst = 0.0;
        for (const auto& [s, r] : pts) {
            int n0 = 1;
            while (s.real() + 2.0 * n0 <= 1.5 + 1e-9) ++n0;
            const Complex base = shc::h_continued({s, 0.0}, r, n0);
            for (int n = n0 + 1; n <= n0 + 2; ++n)
                worst = std::max(worst, rel_err(shc::h_continued({s, 0.0}, r, n), base));
        }
        return worst;
    });
    return b.done();
}

SuiteReport suite_fourier(const CheckConfig&) {
    Builder b("fourier");
    b.check("closed_form", "Fourier transform of g_s", Relation::at_most, 1e-8, [] {
        double worst = 0.0;
        for (double s : {1.6, 2.5, 4.0}) {
            const auto g = shc::wave_test_function(s);
            for (double r : {0.0, 0.5, 2.0, 5.0})
                worst = std::max(worst, rel_err(shc::fourier_h(g, r).value, shc::h_gs_closed({s, 0.0}, r)));
        }
        return worst;
    });
    b.check("fourier_inversion", "cosine transform inversion", Relation::at_most, 1e-8, [] {
        const double s = 2.5;
        const auto g = shc::wave_test_function(s);
        auto h = [&](double r) { return shc::h_gs_closed({s, 0.0}, r); };
        double worst = 0.0;
        for (double u : {0.0, 0.5, 1.0, 3.0}) worst = std::max(worst, std::abs(shc::g_from_h(h, u).value - g.g(u)));
        return worst;
    });
    return b.done();
}

Complex pipeline_h(double s, double k, double r) {
    shc::ProfileFunction P{[&](double x) { return kernels::phi_s_closed(x / 4.0, s, k); }, s};
    auto q = [&](double y) { return shc::q_forward(P, y, k).value; };
    shc::EvenTestFunction g{[&](double u) { return shc::g_from_q(q, u); }, s - 0.5, 4, {}};
    return shc::fourier_h(g, r).value;
}

SuiteReport suite_pipeline(const CheckConfig&) {
    Builder b("pipeline");
    b.check("forward_pipeline", "transform pipeline reproduces h of g_s", Relation::at_most, 1e-5, [] {
        double worst = 0.0;
        for (double k : {0.0, 0.5, 1.3})
            for (double s : {2.5, 4.0})
                for (double r : {0.0, 0.5, 1.0, 2.0})
                    worst = std::max(worst, rel_err(pipeline_h(s, k, r), shc::h_gs_closed({s, k}, r)));
        return worst;
    });
    return b.done();
}

// Q' of a numerically computed Q by five-point differences (one-sided near 0).
Complex numeric_derivative(const std::function<Complex(double)>& q, double y) {
    const double h = 1e-3 * (1.0 + y);
    if (y >= 2.0 * h)
        return (q(y - 2 * h) - 8.0 * q(y - h) + 8.0 * q(y + h) - q(y + 2 * h)) / (12.0 * h);
    return (-25.0 * q(y) + 48.0 * q(y + h) - 36.0 * q(y + 2 * h) + 16.0 * q(y + 3 * h) - 3.0 * q(y + 4 * h)) /
           (12.0 * h);
}

SuiteReport suite_inverse(const CheckConfig&) {
    Builder b("inverse");
    b.check("profile_round_trip", "inverse transform round trip", Relation::at_most, 1e-7, [] {
        const double s = 2.5;
        double worst = 0.0;
        for (double k : {0.0, 0.5}) {
            shc::ProfileFunction P{[&](double x) { return kernels::phi_s_closed(x / 4.0, s, k); }, s};
            auto q = [&](double y) { return shc::q_forward(P, y, k).value; };
            auto qp = [&](double y) { return numeric_derivative(q, y); };
            for (double y : {0.0, 1.0, 4.0}) {
                const Complex back = shc::phi_inverse(qp, y, k).value;
                worst = std::max(worst, std::abs(back - P.phi(y)) / std::abs(P.phi(y)));
            }
        }
        return worst;
    });
    b.check("analytic_pair_inverse", "exponential transform pair", Relation::at_most, 1e-9, [] {
        double worst = 0.0;
        for (double x : {0.0, 1.0, 4.0}) {
            const Complex v = shc::phi_inverse([](double y) { return Complex(-std::exp(-y)); }, x, 0.0).value;
            worst = std::max(worst, std::abs(v - std::exp(-x) / std::sqrt(kPi)));
        }
        return worst;
    });
    b.check("analytic_pair_forward", "exponential transform pair", Relation::at_most, 1e-9, [] {
        shc::ProfileFunction P{[](double x) { return Complex(std::exp(-x) / std::sqrt(kPi)); }, 10.0};
        double worst = 0.0;
        for (double y : {0.0, 1.0, 4.0}) worst = std::max(worst, std::abs(shc::q_forward(P, y, 0.0).value - std::exp(-y)));
        return worst;
    });
    return b.done();
}

SuiteReport suite_phi_identity(const CheckConfig&) {
    Builder b("phi_identity");
    b.check("closed_vs_integral", "Phi_s closed form equals its integral", Relation::at_most, 1e-7, [] {
        double worst = 0.0;
        for (double u : {0.0, 0.6, 3.0})
            for (double s : {2.5, 3.0, 4.5})
                for (double k : {0.0, 0.5, 1.3})
                    worst = std::max(worst, rel_err(kernels::phi_s_integral(u, s, k), kernels::phi_s_closed(u, s, k)));
        return worst;
    });
    b.check("legendre_route", "Phi_s through Legendre functions", Relation::at_most, 1e-6, [] {
        return rel_err(kernels::phi_s_legendre(0.6, 2.5, 0.3), kernels::phi_s_closed(0.6, 2.5, 0.3));
    });
    return b.done();
}

struct AutomorphyCase {
    const char* name;
    std::function<kernels::KernelValue(const Point&, const Point&, double R)> eval;
    bool conjugate; ///< transforms by (J chi)^{-1} instead of J chi
    double R;
};

SuiteReport suite_automorphy(const CheckConfig& cfg) {
    Builder b("automorphy");
    const MultiplierSystem ms = MultiplierSystem::eta_power(cfg.k);
    const double k = cfg.k;
    const double s = std::max(1.0, std::abs(k)) + 2.0;
    const Point z(0.1, 1.0), w(0.0, 2.0);
    const AutomorphyCase cases[] = {
        {"geometric", [&](const Point& a, const Point& c, double R) { return kernels::geometric_kernel(a, c, {s, k, R, 2.0}, ms); },
         false, 10.0},
        {"resolvent", [&](const Point& a, const Point& c, double R) { return kernels::resolvent_kernel(a, c, {s, k, R, 2.0}, ms); },
         false, 10.0},
        {"heat", [&](const Point& a, const Point& c, double R) { return kernels::heat_kernel_M(0.5, a, c, R, ms); }, true,
         6.0},
    };
    for (const auto& c : cases) {
        for (const auto& [label, eta] : {std::pair{"T", GroupElement::T()}, std::pair{"S", GroupElement::S()}}) {
            b.check(std::string(c.name) + " eta=" + label, "automorphy of group sum (residual / tail bound)",
                    Relation::at_most, 10.0, [&] {
                        const auto base = c.eval(z, w, c.R);
                        const auto moved = c.eval(geom::moebius_act(eta.mat(), z), w, c.R);
                        Complex factor = geom::j_phase(eta.mat(), z, ms.weight()) * ms.chi(eta);
                        if (c.conjugate) factor = 1.0 / factor;
                        return std::abs(moved.value - factor * base.value) / base.tail_bound;
                    });
        }
    }

    // Radius doubling over random configurations.
    const double weights[] = {0.0, 0.5, 1.0, 1.3, -0.7};
    const char* names[] = {"geometric", "resolvent", "heat"};
    for (int kind = 0; kind < 3; ++kind) {
        b.check(std::string(names[kind]) + " radius_doubling", "tail certificate by radius doubling (diff / tail)",
                Relation::at_most, 1.0, [&] {
                    auto rng = make_rng(cfg, 300 + kind);
                    double worst = 0.0;
                    for (int i = 0; i < 10; ++i) {
                        const double kk = weights[std::uniform_int_distribution<int>(0, 4)(rng)];
                        const MultiplierSystem m = MultiplierSystem::eta_power(kk);
                        const Point a = random_point(rng), c = random_point(rng);
                        const double ss = std::max(1.0, std::abs(kk)) + uniform(rng, 1.0, 3.0);
                        const double t = uniform(rng, 0.3, 0.8);
                        kernels::KernelValue v1, v2;
                        if (kind == 0) {
                            v1 = kernels::geometric_kernel(a, c, {ss, kk, 10.0, 2.0}, m);
                            v2 = kernels::geometric_kernel(a, c, {ss, kk, 20.0, 2.0}, m);
                        } else if (kind == 1) {
                            v1 = kernels::resolvent_kernel(a, c, {ss, kk, 10.0, 2.0}, m);
                            v2 = kernels::resolvent_kernel(a, c, {ss, kk, 20.0, 2.0}, m);
                        } else {
                            v1 = kernels::heat_kernel_M(t, a, c, 4.0, m);
                            v2 = kernels::heat_kernel_M(t, a, c, 8.0, m);
                        }
                        worst = std::max(worst, std::abs(v1.value - v2.value) / v1.tail_bound);
                    }
                    return worst;
                });
    }
    return b.done();
}

SuiteReport suite_heat(const CheckConfig&) {
    Builder b("heat");
    for (double k : {0.0, 0.5, 1.0}) {
        b.check("monotone k=" + std::to_string(k).substr(0, 3), "heat kernel strictly decreasing in distance",
                Relation::equal, 0.0, [k] {
                    double violations = 0.0;
                    for (double t : {0.5, 1.0}) {
                        double prev = std::numeric_limits<double>::infinity();
                        for (int i = 0; i <= 24; ++i) {
                            const double v = kernels::heat_pointpair(t, 0.25 * i, k);
                            if (!(v > 0.0 && v < prev)) violations += 1.0;
                            prev = v;
                        }
                    }
                    return violations;
                });
    }
    b.check("mass", "heat kernel unit mass", Relation::at_most, 1e-3, [] {
        quad::Options o;
        o.abs_tol = 0.0;
        o.rel_tol = 1e-10;
        const auto m = quad::integrate_to_infinity(
            [](double r) { return Complex(2.0 * kPi * kernels::heat_pointpair(0.5, r, 0.0) * std::sinh(r)); }, 0.0, o);
        return std::abs(m.value.real() - 1.0);
    });
    const Point z(0.0, 1.0), w(1.0, 2.0);
    b.check("pde k=0", "heat equation residual", Relation::at_most, 1e-4,
            [&] { return kernels::heat_pde_residual(1.0, z, w, 0.0).residual; });
    int sign = 0;
    b.check("pde k=0.5", "heat equation residual", Relation::at_most, 1e-3, [&] {
        const auto r = kernels::heat_pde_residual(1.0, z, w, 0.5);
        sign = r.sign;
        return r.residual;
    });
    b.note("exponent sign " + std::to_string(sign));
    return b.done();
}

SuiteReport suite_subordination(const CheckConfig&) {
    Builder b("subordination");
    b.check("identity_grid", "subordination identity", Relation::at_most, 1e-9, [] {
        double worst = 0.0;
        for (double lambda : {0.0, 1.0, 5.0})
            for (double a : {0.1, 1.0, 3.0}) worst = std::max(worst, kernels::subordination_check(lambda, a));
        return worst;
    });
    b.check("poisson_free_vs_bessel", "Poisson kernel identity term", Relation::at_most, 1e-6, [] {
        const Point z(0.0, 1.0), w(1.0, 2.0);
        const double u = 1.0, Z = 0.3;
        // k = 0: the t-integral of the heat profile in closed form against K_2.
        const double rho = geom::pair_metrics(z, w).dist;
        quad::Options o;
        o.abs_tol = 0.0;
        o.rel_tol = 1e-12;
        const double alpha = 0.25 + Z;
        auto f = [&](double r) {
            const double beta = 0.25 * (r * r + u * u);
            const double bes = std::cyl_bessel_k(2.0, 2.0 * std::sqrt(alpha * beta));
            return Complex(r * (alpha / beta) * bes / std::sqrt(std::cosh(r) - std::cosh(rho)));
        };
        // r = rho + v^2 removes the inverse square root.
        auto g = [&](double v) { return 2.0 * v * f(rho + v * v); };
        const auto I = quad::integrate_to_infinity(g, 0.0, o);
        const double pref = u / std::sqrt(4.0 * kPi) * std::sqrt(2.0) / std::pow(4.0 * kPi, 1.5) * 2.0;
        const Complex oracle = pref * I.value;
        return rel_err(kernels::poisson_free(u, Z, z, w, 0.0), oracle);
    });
    return b.done();
}

SuiteReport suite_pretrace(const CheckConfig&) {
    Builder b("pretrace");
    for (double k : {0.0, 0.5, 1.0}) {
        const std::string tag = " k=" + std::to_string(k).substr(0, 3);
        const double s = std::abs(k) + 2.0;
        b.check("digamma_term" + tag, "pre-trace digamma term closed value", Relation::at_most, 1e-12, [&] {
            return std::abs(kernels::pretrace_digamma_term(s, s + 1.0, k) -
                            (std::abs(k) + 2.0) / (8.0 * kPi * (std::abs(k) + 1.0)));
        });
        const MultiplierSystem ms = MultiplierSystem::eta_power(k);
        const double C = kernels::sup_norm_constants(kernels::modular_domain_inputs(k)).C;
        double top = 0.0;
        b.check("positive" + tag, "pre-trace right side positive (value - tail)", Relation::greater, 0.0, [&] {
            double lo = std::numeric_limits<double>::infinity();
            for (const Point z : {Point(0.0, 2.0), Point(0.3, 1.1), Point(-0.2, 1.6)}) {
                const auto r = kernels::pretrace_rhs(z, s, s + 1.0, 30.0, ms);
                if (r.imag_residual > 1e-9 + r.tail_bound)
                    throw ConsistencyError("pretrace_rhs: imaginary part exceeds its bound");
                lo = std::min(lo, r.value - r.tail_bound);
                top = std::max(top, r.value + r.tail_bound);
            }
            return lo;
        });
        b.check("below_sup_norm_constant" + tag, "pre-trace right side at most C (value + tail - C)",
                Relation::at_most, 0.0, [&] { return top - C; });
    }
    return b.done();
}

using SuiteFn = SuiteReport (*)(const CheckConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"specfun", suite_specfun},         {"invariance", suite_invariance},
        {"multiplier", suite_multiplier},   {"ball", suite_ball},
        {"gk_bound", suite_gk_bound},       {"hrecurrence", suite_hrecurrence},
        {"fourier", suite_fourier},         {"pipeline", suite_pipeline},
        {"inverse", suite_inverse},         {"phi_identity", suite_phi_identity},
        {"automorphy", suite_automorphy},   {"heat", suite_heat},
        {"subordination", suite_subordination}, {"pretrace", suite_pretrace},
    };
    return r;
}

Json number(double v) {
    if (std::isnan(v)) return nullptr;
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

}  // namespace

bool SuiteReport::pass() const {
    return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; });
}

const char* relation_symbol(Relation r) {
    switch (r) {
        case Relation::at_most: return "<=";
        case Relation::at_least: return ">=";
        case Relation::greater: return ">";
        case Relation::equal: return "==";
    }
    return "?";
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [n, f] : registry()) v.push_back(n);
        return v;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, const CheckConfig& cfg) {
    for (const auto& [n, f] : registry())
        if (n == name) return f(cfg);
    throw UnknownSuite("unknown suite '" + name + "'");
}

std::vector<SuiteReport> run_suites(const std::string& name, const CheckConfig& cfg) {
    std::vector<SuiteReport> out;
    if (name == "all") {
        for (const auto& [n, f] : registry()) out.push_back(f(cfg));
    } else {
        out.push_back(run_suite(name, cfg));
    }
    return out;
}

Json report_json(const std::vector<SuiteReport>& reports, const CheckConfig& cfg) {
    Json j;
    j["schema"] = 1;
    j["command"] = "check";
    j["k"] = cfg.k;
    j["seed"] = cfg.seed;
    bool all = true;
    Json suites = Json::array();
    for (const auto& r : reports) {
        Json s;
        s["name"] = r.name;
        s["pass"] = r.pass();
        Json list = Json::array();
        for (const auto& a : r.assertions) {
            Json e;
            e["name"] = a.name;
            e["anchor"] = a.anchor;
            e["measured"] = number(a.measured);
            e["relation"] = relation_symbol(a.relation);
            e["tolerance"] = number(a.tolerance);
            e["pass"] = a.pass;
            if (!a.detail.empty()) e["detail"] = a.detail;
            list.push_back(std::move(e));
        }
        s["assertions"] = std::move(list);
        all = all && r.pass();
        suites.push_back(std::move(s));
    }
    j["pass"] = all;
    j["suites"] = std::move(suites);
    return j;
}

}  // namespace poincare::checks
