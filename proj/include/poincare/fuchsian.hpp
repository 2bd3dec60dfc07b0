#pragma once

// The modular group cover SL(2,Z) (it contains -I): exact integer elements,
// enumeration of displacement balls {g : sigma(z, g w) <= R}, the counting
// function N(rho; z, w), Dedekind sums and the eta multiplier system of real
// weight k.

#include <cstdint>
#include <vector>

#include "poincare/geom.hpp"

namespace poincare::fuchsian {

struct GroupElement {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    GroupElement() = default;
    /// Throws DomainError unless ad - bc = 1 exactly.
    GroupElement(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_);

    GroupElement operator*(const GroupElement& o) const;
    GroupElement operator-() const { return {-a, -b, -c, -d}; }
    GroupElement inverse() const { return {d, -b, -c, a}; }
    bool operator==(const GroupElement&) const = default;

    geom::Mat2 mat() const;

    static GroupElement identity() { return {}; }
    static GroupElement minus_identity() { return {-1, 0, 0, -1}; }
    static GroupElement T() { return {1, 1, 0, 1}; }
    static GroupElement S() { return {0, -1, 1, 0}; }
};

/// Canonical order: lexicographic in (c, d, a, b).
bool canonical_less(const GroupElement& x, const GroupElement& y);

struct BallResult {
    std::vector<GroupElement> elements; ///< canonical order
    double radius_sigma = 1.0;
    bool certified = false;
    long candidates = 0;                ///< translates tested by exact sigma evaluation
};

struct BallOptions {
    long budget = 10'000'000;
};

/// All g in SL(2,Z) with sigma(z, g w) <= R. Coprime bottom rows (c, d) are
/// bounded through Im(g w) = Im w / |cw + d|^2, which sigma <= R forces above
/// q_-(R) Im z; each row is lifted to one matrix and swept over its
/// translates T^n g. Every candidate is kept only after exact evaluation.
BallResult enumerate_ball(const geom::Point& z, const geom::Point& w, double R,
                          const BallOptions& opt = {});

/// N(rho; z, w) = #{g : d(z, g w) < rho}.
long counting_N(double rho, const geom::Point& z, const geom::Point& w,
                const BallOptions& opt = {});

/// Smallest ratio Im(g w)/Im z compatible with sigma(z, g w) <= R.
double min_height_ratio(double R);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

/// s(d, c) = sum_{n=1}^{c-1} ((n/c)) ((dn/c)) in lowest terms.
Rational dedekind_sum(std::int64_t d, std::int64_t c);

/// Argument of the eta multiplier: pi((a+d)/(12c) - s(d,c) - 1/4) for c > 0
/// and pi b/12 for c = 0, d > 0.
double eta_phase(const GroupElement& g);

enum class MultiplierKind { trivial, eta_power };

/// Unitary multiplier system of weight k on SL(2,Z):
/// chi(-I) = exp(-2 pi i k) and chi(g1 g2) = omega_k(g1, g2) chi(g1) chi(g2).
///
/// The eta power is chi(g) = exp(sign * 4ik * eta_phase(g)) on c > 0 or
/// (c = 0, d > 0), i.e. the multiplier of eta^{4k}, extended to the other half
/// through chi(-g) = omega_k(-I, g) chi(-I) chi(g). The sign is fixed at
/// construction by a sweep over random words in {T, S, -I}.
class MultiplierSystem {
public:
    /// chi = 1; requires integer k (DomainError otherwise).
    static MultiplierSystem trivial(double k);
    /// Sweeps both signs; ConventionError if neither satisfies the cocycle.
    static MultiplierSystem eta_power(double k);
    /// A fixed sign, validated by the same sweep.
    static MultiplierSystem eta_power(double k, int sign);

    Complex chi(const GroupElement& g) const;

    MultiplierKind kind() const { return kind_; }
    double k() const { return ctx_.k(); }
    const geom::WeightContext& weight() const { return ctx_; }
    int d_dim() const { return 1; }
    int convention_sign() const { return sign_; }
    /// Largest cocycle residual seen by the construction sweep.
    double setup_residual() const { return setup_residual_; }

private:
    MultiplierSystem(MultiplierKind kind, double k, int sign);

    MultiplierKind kind_;
    geom::WeightContext ctx_;
    int sign_;
    double setup_residual_ = 0.0;
};

inline Complex chi(const MultiplierSystem& ms, const GroupElement& g) { return ms.chi(g); }

/// |chi(g1 g2) - omega_k(g1, g2) chi(g1) chi(g2)|.
double consistency_residual(const MultiplierSystem& ms, const GroupElement& g1,
                            const GroupElement& g2);

/// Random product of up to max_len letters from {T, S, -I, T^-1}, drawn
/// with a 64-bit Mersenne twister.
template <class Rng>
GroupElement random_word(Rng& rng, int max_len);

}  // namespace poincare::fuchsian

#include <random>

namespace poincare::fuchsian {

template <class Rng>
GroupElement random_word(Rng& rng, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> letter(0, 3);
    GroupElement g;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
        switch (letter(rng)) {
            case 0: g = g * GroupElement::T(); break;
            case 1: g = g * GroupElement::S(); break;
            case 2: g = g * GroupElement::minus_identity(); break;
            default: g = g * GroupElement::T().inverse(); break;
        }
    }
    return g;
}

}  // namespace poincare::fuchsian
