#include "lensgeom/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "lensgeom/errors.hpp"

namespace lensgeom::orbits {

namespace {

using i128 = __int128;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

i64 checked_i64(i128 v, const char* what) {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
        throw precondition_error(std::string(what) + ": 64-bit overflow");
    return static_cast<i64>(v);
}

void require_direction(i64 n, i64 m) {
    if (n < 1 || m < 1) throw precondition_error("direction components must be positive");
    if (std::gcd(n, m) != 1) throw precondition_error("direction (n,m) must be primitive");
}

} // namespace

std::vector<FlatPoint> orbit_points(const LensSpace& L) {
    std::vector<FlatPoint> pts;
    pts.reserve(static_cast<std::size_t>(L.p()));
    for (auto [jx, jy] : orbit_residues(L))
        pts.push_back({kTwoPi * static_cast<double>(jx) / static_cast<double>(L.p()),
                       kTwoPi * static_cast<double>(jy) / static_cast<double>(L.p())});
    return pts;
}

std::vector<std::pair<i64, i64>> orbit_residues(const LensSpace& L) {
    std::vector<std::pair<i64, i64>> res;
    res.reserve(static_cast<std::size_t>(L.p()));
    i64 y = 0;
    for (i64 j = 0; j < L.p(); ++j) {
        res.emplace_back(j, y);
        y += L.q();
        if (y >= L.p()) y -= L.p();
    }
    return res;
}

i64 curves_containing_orbit(const LensSpace& L, i64 n, i64 m) {
    require_direction(n, m);
    i128 level = static_cast<i128>(m) - static_cast<i128>(n) * L.q();
    i64 r = static_cast<i64>(((level % L.p()) + L.p()) % L.p());
    return L.p() / std::gcd(r, L.p());
}

std::vector<FrontierEntry> classify_orbit(const LensSpace& L, i64 bound) {
    if (bound < 1) throw precondition_error("classify_orbit requires bound >= 1");
    std::vector<FrontierEntry> all;
    for (i64 n = 1; n <= bound; ++n)
        for (i64 m = 1; m <= bound; ++m) {
            if (std::gcd(n, m) != 1) continue;
            i64 k = curves_containing_orbit(L, n, m);
            all.push_back({{n, m, k}, std::max(n, m)});
        }
    std::vector<FrontierEntry> frontier;
    for (const auto& e : all) {
        bool dominated = false;
        for (const auto& o : all) {
            if (o.complexity <= e.complexity && o.config.k <= e.config.k &&
                (o.complexity < e.complexity || o.config.k < e.config.k)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) frontier.push_back(e);
    }
    std::sort(frontier.begin(), frontier.end(), [](const FrontierEntry& a, const FrontierEntry& b) {
        return std::tuple(a.complexity, a.config.k, a.config.n, a.config.m) <
               std::tuple(b.complexity, b.config.k, b.config.n, b.config.m);
    });
    return frontier;
}

std::optional<LensSpace> realize_configuration(i64 n, i64 m, i64 k, i64 p) {
    if (k < 1) throw precondition_error("realize_configuration requires k >= 1");
    if (n > m) throw precondition_error("realize_configuration requires n <= m");
    require_direction(n, m);
    if (p < 2) return std::nullopt;

    if (n == 1 && k == 1) {
        if (m < p && std::gcd(p, m) == 1) return LensSpace(p, m);
        return std::nullopt;
    }
    if (n == 1) {
        i64 big_p = checked_i64(static_cast<i128>(k) * p, "k*p");
        for (i64 c = 1;; ++c) {
            i128 q = static_cast<i128>(m) + static_cast<i128>(c) * p;
            if (q >= big_p) return std::nullopt;
            if (std::gcd(c, k) != 1) continue;
            i64 q64 = static_cast<i64>(q);
            if (std::gcd(big_p, q64) == 1) return LensSpace(big_p, q64);
        }
    }
    i64 r = m % n; // 0 < r < n since gcd(n,m) = 1 and 2 <= n < m
    i64 d = m / n;
    i64 big_p =
        checked_i64(static_cast<i128>(k) * n * p + static_cast<i128>(k) * (n - r), "k*n*p + B");
    i64 q = p + d + 1;
    if (q < 1 || q >= big_p || big_p < 2 || std::gcd(big_p, q) != 1) return std::nullopt;
    return LensSpace(big_p, q);
}

bool verify_sequence_class2(i64 n, i64 m, i64 k, const std::vector<LensSpace>& spaces) {
    if (spaces.empty()) throw precondition_error("verify_sequence_class2 requires spaces");
    for (const auto& L : spaces)
        if (curves_containing_orbit(L, n, m) != k) return false;
    return true;
}

bool verify_sequence_class2(i64 n, i64 m, i64 k, const std::vector<i64>& p_list) {
    if (p_list.empty()) throw precondition_error("verify_sequence_class2 requires seeds");
    std::vector<LensSpace> spaces;
    spaces.reserve(p_list.size());
    for (i64 p : p_list) {
        auto L = realize_configuration(n, m, k, p);
        if (!L)
            throw precondition_error("seed p=" + std::to_string(p) +
                                     " does not realize the configuration");
        spaces.push_back(*L);
    }
    return verify_sequence_class2(n, m, k, spaces);
}

} // namespace lensgeom::orbits
