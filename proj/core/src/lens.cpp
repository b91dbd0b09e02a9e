#include "lensgeom/lens.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "lensgeom/errors.hpp"

namespace lensgeom::lens {

namespace {

using i128 = __int128;

i64 mod_p(i128 v, i64 p) {
    i128 r = v % p;
    if (r < 0) r += p;
    return static_cast<i64>(r);
}

i64 mulmod(i64 a, i64 b, i64 p) { return mod_p(static_cast<i128>(a) * b, p); }

// Inverse of a unit mod p by the extended Euclidean algorithm.
i64 invmod(i64 a, i64 p) {
    i64 t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        i64 q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw precondition_error("invmod: argument not a unit");
    return t < 0 ? t + p : t;
}

} // namespace

LensSpace::LensSpace(i64 p, i64 q) : p_(p), q_(q) {
    if (p < 2) throw precondition_error("lens space requires p >= 2");
    if (q < 1 || q >= p) throw precondition_error("lens space requires 1 <= q < p");
    if (std::gcd(p, q) != 1) throw precondition_error("lens space requires gcd(p, q) = 1");
}

bool are_isometric(const LensSpace& L1, const LensSpace& L2) {
    if (L1.p() != L2.p())
        throw precondition_error("isometry test requires equal fundamental group order");
    i64 p = L1.p(), q = L1.q(), r = L2.q();
    if (q == r) return true;
    if ((q + r) % p == 0) return true;
    i64 prod = mulmod(q, r, p);
    return prod == 1 || prod == p - 1;
}

bool is_flippable(const LensSpace& L) { return L.q() == 1 || L.q() == L.p() - 1; }

SeifertOrders seifert_orders(const LensSpace& L) {
    return {L.p() / std::gcd(L.q() - 1, L.p()), L.p() / std::gcd(L.q() + 1, L.p())};
}

TorusClassification classify_invariant_tori(const LensSpace& L) {
    i64 p = L.p(), q = L.q();
    if (p == 2) return {TorusFamily::FamilyRP2xRP2, KleinFamily::None};
    if (q == 1 || q == p - 1) {
        if (p == 4) return {TorusFamily::FamilyRP2, KleinFamily::FamilyS1xRP2};
        return {TorusFamily::FamilyRP2, KleinFamily::None};
    }
    if (p % 4 == 0) {
        i64 m = p / 4; // m > 1 here, since p = 4 forces q in {1, 3}
        if (q == 2 * m - 1 || q == 2 * m + 1)
            return {TorusFamily::UniquePoint, KleinFamily::FamilyS1};
    }
    return {TorusFamily::UniquePoint, KleinFamily::None};
}

IsometryCount count_isometry_classes(i64 p) {
    if (p < 2) throw precondition_error("count_isometry_classes requires p >= 2");

    // Direct orbit enumeration of units under q -> -q and q -> q^{-1}.
    std::vector<bool> unit(static_cast<std::size_t>(p), false);
    i64 phi = 0;
    for (i64 q = 1; q < p; ++q)
        if (std::gcd(q, p) == 1) {
            unit[static_cast<std::size_t>(q)] = true;
            ++phi;
        }

    std::vector<bool> seen(static_cast<std::size_t>(p), false);
    i64 orbits = 0;
    for (i64 q = 1; q < p; ++q) {
        if (!unit[static_cast<std::size_t>(q)] || seen[static_cast<std::size_t>(q)]) continue;
        ++orbits;
        i64 inv = invmod(q, p);
        for (i64 r : {q, p - q, inv, p - inv})
            seen[static_cast<std::size_t>(r)] = true;
    }

    // Independent fixed-point counts: 2q = 0, q^2 = 1, q^2 = -1 (mod p).
    std::array<i64, 4> fixed{phi, 0, 0, 0};
    for (i64 q = 1; q < p; ++q) {
        if (!unit[static_cast<std::size_t>(q)]) continue;
        if ((2 * q) % p == 0) ++fixed[1];
        i64 sq = mulmod(q, q, p);
        if (sq == 1) ++fixed[2];
        if (sq == p - 1) ++fixed[3];
    }

    i64 burnside_sum = fixed[0] + fixed[1] + fixed[2] + fixed[3];
    if (burnside_sum % 4 != 0 || burnside_sum / 4 != orbits)
        throw std::logic_error("Burnside cross-check failed for p=" + std::to_string(p));
    if (4 * orbits < phi)
        throw std::logic_error("orbit count below phi(p)/4 for p=" + std::to_string(p));
    return {p, orbits, phi, fixed};
}

i64 covering_genus(const CoveringData& d) {
    if (d.w1 % 2 != 0) throw precondition_error("w1 must be even");
    if (d.sheets < 1 || d.components < 0 || d.genus_quotient < 0 || d.w1 < 0 || d.w0 < 0)
        throw precondition_error("covering data must be nonnegative with sheets >= 1");
    return (d.sheets - 1) * (d.w1 / 2 - d.components) + d.sheets * d.genus_quotient;
}

i64 lift_genus(i64 g, i64 p) {
    if (g < 0 || p < 1) throw precondition_error("lift_genus requires g >= 0, p >= 1");
    return p * (g - 1) + 1;
}

Rational quotient_genus(i64 g, i64 order) {
    if (g < 0 || order < 1) throw precondition_error("quotient_genus requires g >= 0, order >= 1");
    i64 num = order + g - 1, den = order;
    i64 d = std::gcd(num, den);
    if (d == 0) d = 1;
    return {num / d, den / d};
}

i64 iterated_double_cover_genus(int n) {
    if (n < 0 || n > 61) throw precondition_error("iterated_double_cover_genus requires 0 <= n <= 61");
    i64 g = 2;
    for (int k = 0; k < n; ++k) g = 2 * g - 1;
    if (g != (i64{1} << n) + 1) throw std::logic_error("double-cover recurrence mismatch");
    return g;
}

i64 euler_totient(i64 p) {
    if (p < 1) throw precondition_error("euler_totient requires p >= 1");
    i64 result = p, n = p;
    for (i64 f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            while (n % f == 0) n /= f;
            result -= result / f;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const char* to_string(TorusFamily f) {
    switch (f) {
    case TorusFamily::UniquePoint: return "UniquePoint";
    case TorusFamily::FamilyRP2: return "FamilyRP2";
    case TorusFamily::FamilyRP2xRP2: return "FamilyRP2xRP2";
    }
    return "?";
}

const char* to_string(KleinFamily f) {
    switch (f) {
    case KleinFamily::None: return "None";
    case KleinFamily::FamilyS1: return "FamilyS1";
    case KleinFamily::FamilyS1xRP2: return "FamilyS1xRP2";
    }
    return "?";
}

} // namespace lensgeom::lens
