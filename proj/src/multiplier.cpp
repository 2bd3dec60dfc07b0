#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <utility>

#include "poincare/errors.hpp"
#include "poincare/fuchsian.hpp"

namespace poincare::fuchsian {

namespace {

constexpr double kSweepTolerance = 1e-10;
constexpr int kSweepPairs = 300;
constexpr int kSweepWordLength = 12;
constexpr std::uint64_t kSweepSeed = 0x9e3779b97f4a7c15ULL;

bool in_eta_sector(const GroupElement& g) { return g.c > 0 || (g.c == 0 && g.d > 0); }

double sweep(const MultiplierSystem& ms) {
    double worst = 0.0;
    const std::array<GroupElement, 4> letters = {GroupElement::T(), GroupElement::S(),
                                                 GroupElement::minus_identity(), GroupElement::T().inverse()};
    for (const auto& x : letters)
        for (const auto& y : letters) worst = std::max(worst, consistency_residual(ms, x, y));
    std::mt19937_64 rng(kSweepSeed);
    for (int i = 0; i < kSweepPairs; ++i) {
        const GroupElement g1 = random_word(rng, kSweepWordLength);
        const GroupElement g2 = random_word(rng, kSweepWordLength);
        worst = std::max(worst, consistency_residual(ms, g1, g2));
    }
    return worst;
}

}  // namespace

MultiplierSystem::MultiplierSystem(MultiplierKind kind, double k, int sign) : kind_(kind), ctx_(k), sign_(sign) {}

MultiplierSystem MultiplierSystem::trivial(double k) {
    if (std::abs(k - std::round(k)) > 1e-12)
        throw DomainError("MultiplierSystem::trivial: chi(-I) = exp(-2 pi i k) = 1 needs integer k");
    return MultiplierSystem(MultiplierKind::trivial, k, 1);
}

MultiplierSystem MultiplierSystem::eta_power(double k, int sign) {
    if (sign != 1 && sign != -1) throw ConventionError("MultiplierSystem: convention sign must be +1 or -1");
    MultiplierSystem ms(MultiplierKind::eta_power, k, sign);
    ms.setup_residual_ = sweep(ms);
    if (!(ms.setup_residual_ <= kSweepTolerance))
        throw ConventionError("MultiplierSystem: eta power fails the cocycle sweep for this sign");
    return ms;
}

MultiplierSystem MultiplierSystem::eta_power(double k) {
    for (int sign : {1, -1}) {
        MultiplierSystem ms(MultiplierKind::eta_power, k, sign);
        ms.setup_residual_ = sweep(ms);
        if (ms.setup_residual_ <= kSweepTolerance) return ms;
    }
    throw ConventionError("MultiplierSystem: neither convention sign satisfies the cocycle");
}

Complex MultiplierSystem::chi(const GroupElement& g) const {
    if (kind_ == MultiplierKind::trivial) return 1.0;
    const double k = ctx_.k();
    if (in_eta_sector(g)) return std::polar(1.0, sign_ * 4.0 * k * eta_phase(g));
    const GroupElement h = -g;
    const Complex chi_minus_i = std::polar(1.0, -2.0 * std::numbers::pi * k);
    return geom::omega_k(GroupElement::minus_identity().mat(), h.mat(), ctx_) * chi_minus_i *
           std::polar(1.0, sign_ * 4.0 * k * eta_phase(h));
}

double consistency_residual(const MultiplierSystem& ms, const GroupElement& g1, const GroupElement& g2) {
    const Complex lhs = ms.chi(g1 * g2);
    const Complex rhs = geom::omega_k(g1.mat(), g2.mat(), ms.weight()) * ms.chi(g1) * ms.chi(g2);
    return std::abs(lhs - rhs);
}

}  // namespace poincare::fuchsian
