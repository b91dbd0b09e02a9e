#pragma once

#include <array>
#include <cstdint>

namespace lensgeom::lens {

using i64 = std::int64_t;

/// The quotient of S^3 by the cyclic group of order p whose generator rotates
/// the two complex factors by 2*pi/p and 2*pi*q/p. Requires p >= 2,
/// 1 <= q < p and gcd(p, q) = 1.
class LensSpace {
public:
    LensSpace(i64 p, i64 q);
    i64 p() const noexcept { return p_; }
    i64 q() const noexcept { return q_; }
    friend bool operator==(const LensSpace&, const LensSpace&) = default;

private:
    i64 p_, q_;
};

/// L(p,q) and L(p,q') are isometric iff q = q', q + q' = 0 (mod p) or
/// q q' = +-1 (mod p). Throws when the orders differ.
bool are_isometric(const LensSpace& L1, const LensSpace& L2);

/// The genus-one splitting flips exactly when q is 1 or p-1.
bool is_flippable(const LensSpace& L);

/// Orders of the circle actions induced on the two factors of the geodesic
/// space: k1 = p/gcd(q-1, p), k2 = p/gcd(q+1, p).
struct SeifertOrders {
    i64 k1, k2;
};
SeifertOrders seifert_orders(const LensSpace& L);

enum class TorusFamily { UniquePoint, FamilyRP2, FamilyRP2xRP2 };
enum class KleinFamily { None, FamilyS1, FamilyS1xRP2 };

/// The space of invariant minimal tori, and of embedded minimal Klein
/// bottles, in the lens space:
///   p = 2                      -> RP^2 x RP^2 family of tori
///   q in {1, p-1}, p = 4       -> RP^2 family of tori + S^1 x RP^2 Klein family
///   q in {1, p-1}, p != 4      -> RP^2 family of tori
///   p = 4m (m > 1), q = 2m +- 1 -> unique torus + S^1 Klein family
///   otherwise                  -> unique torus, no Klein bottle
/// Klein bottles exist exactly when p = 4m and q = 2m +- 1.
struct TorusClassification {
    TorusFamily tori;
    KleinFamily klein;
};
TorusClassification classify_invariant_tori(const LensSpace& L);

/// Isometry classes of lens spaces of order p: orbits of the units of Z_p
/// under negation and inversion, counted by direct enumeration and
/// cross-checked against the Burnside sum (1/4) * sum of fixed points.
struct IsometryCount {
    i64 p;
    i64 n_exact;
    i64 phi;
    // fixed points of: identity, negation, inversion, negation*inversion
    std::array<i64, 4> fixed_counts;
};
IsometryCount count_isometry_classes(i64 p);

/// Boundary/genus bookkeeping of a p-sheeted cover of a surface with boundary
/// living in a solid torus: w1 counts homologically nontrivial boundary
/// circles downstairs (always even), components the pieces downstairs.
struct CoveringData {
    i64 sheets;         // p
    i64 components;     // |S|
    i64 genus_quotient; // genus(S)
    i64 w1;             // nontrivial boundary circles, even
    i64 w0 = 0;         // trivial boundary circles
};

/// genus of the lifted surface: (p-1)(w1/2 - |S|) + p * genus(S).
i64 covering_genus(const CoveringData& data);

/// Genus of the p-sheeted cover of a closed genus-g surface: p(g-1) + 1.
i64 lift_genus(i64 g, i64 p);

/// Exact rational with normalized sign and gcd.
struct Rational {
    i64 num;
    i64 den;
    bool integral() const noexcept { return den == 1; }
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Genus of the quotient of a closed genus-g surface by a free
/// orientation-preserving action of the given order: 1 + (g-1)/order,
/// returned exactly so callers can assert non-integrality.
Rational quotient_genus(i64 g, i64 order);

/// Genus after n successive double covers of a genus-2 surface:
/// g0 = 2, g_{k+1} = 2 g_k - 1, so the value is 2^n + 1.
i64 iterated_double_cover_genus(int n);

i64 euler_totient(i64 p);

const char* to_string(TorusFamily f);
const char* to_string(KleinFamily f);

} // namespace lensgeom::lens
