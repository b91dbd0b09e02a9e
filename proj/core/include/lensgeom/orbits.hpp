#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lensgeom/lens.hpp"

namespace lensgeom::orbits {

using i64 = std::int64_t;
using lens::LensSpace;

/// Point of the flat square torus [0, 2*pi)^2.
struct FlatPoint {
    double x, y;
};

/// The p points of the origin's orbit under the lens generator, which steps by
/// 2*pi*(1/p, q/p). The j-th entry is 2*pi/p * (j, j*q mod p).
std::vector<FlatPoint> orbit_points(const LensSpace& L);

/// Exact integer residues (j, j*q mod p) of the same orbit.
std::vector<std::pair<i64, i64>> orbit_residues(const LensSpace& L);

/// Number of parallel (n,m)-direction curves through orbit points needed to
/// cover the whole orbit. A point with residues (j, jq) lies on the curve of
/// level (m*j - n*j*q) mod p, so the count is p / gcd(m - n*q, p).
i64 curves_containing_orbit(const LensSpace& L, i64 n, i64 m);

/// k parallel (n,m)-torus-knot curves carrying a lens-group orbit.
struct OrbitConfiguration {
    i64 n, m, k;
    friend bool operator==(const OrbitConfiguration&, const OrbitConfiguration&) = default;
};

struct FrontierEntry {
    OrbitConfiguration config;
    i64 complexity; // max(n, m)
};

/// All Pareto-optimal (complexity, k) configurations over primitive directions
/// with max(n,m) <= bound, ordered by (complexity, k, n, m). Ties in both
/// coordinates are all kept.
std::vector<FrontierEntry> classify_orbit(const LensSpace& L, i64 bound);

/// A lens space whose orbits lie on exactly k parallel (n,m)-curves, built
/// from the seed parameter p:
///   n >= 2:        L(k*n*p + B, p + D) with m = n*d + r, D = d+1, B = k(n-r)
///   n = 1, k = 1:  L(p, m)
///   n = 1, k > 1:  L(k*p, m + c*p) for the smallest c >= 1 coprime to k
/// In each case the candidate is returned only when it is a valid lens space;
/// otherwise nullopt.
std::optional<LensSpace> realize_configuration(i64 n, i64 m, i64 k, i64 p);

/// True when every listed space carries its orbits on exactly k parallel
/// (n,m)-curves.
bool verify_sequence_class2(i64 n, i64 m, i64 k, const std::vector<LensSpace>& spaces);

/// Convenience overload realizing the configuration from seed parameters;
/// throws when any seed fails to realize.
bool verify_sequence_class2(i64 n, i64 m, i64 k, const std::vector<i64>& p_list);

} // namespace lensgeom::orbits
