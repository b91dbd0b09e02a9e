#include "lensgeom/lawson.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "lensgeom/errors.hpp"
#include "lensgeom/quadrature.hpp"

namespace lensgeom::lawson {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kDoubleClifford = 4.0 * kPi * kPi;
} // namespace

LawsonSurface::LawsonSurface(i64 n, i64 m) : n_(n), m_(m) {
    if (n < 1 || m < 1) throw precondition_error("Lawson surface requires positive n, m");
    if (std::gcd(n, m) != 1) throw precondition_error("Lawson surface requires gcd(n, m) = 1");
}

std::array<double, 4> LawsonSurface::immerse(double x, double y) const {
    double cy = std::cos(y), sy = std::sin(y);
    double nx = static_cast<double>(n_) * x, mx = static_cast<double>(m_) * x;
    return {std::cos(nx) * cy, std::sin(nx) * cy, std::cos(mx) * sy, std::sin(mx) * sy};
}

double LawsonSurface::metric_coeff(double y) const {
    double cy = std::cos(y), sy = std::sin(y);
    return static_cast<double>(n_ * n_) * cy * cy + static_cast<double>(m_ * m_) * sy * sy;
}

AreaResult lawson_area(const LawsonSurface& s, double target) {
    auto q = quad::integrate_kronrod([&](double y) { return std::sqrt(s.metric_coeff(y)); }, 0.0,
                                     2.0 * kPi, target);
    AreaResult r{kPi * q.value, kPi * q.abs_err};
    quad::require_converged({r.value, r.abs_err}, 1e-9, "lawson_area");
    return r;
}

bool exceeds_threshold(const LawsonSurface& s, double threshold, double target) {
    AreaResult a = lawson_area(s, target);
    double gap = a.value - threshold;
    if (std::abs(gap) <= a.abs_err)
        throw indeterminate_error("area comparison undecidable at tolerance", gap, a.abs_err);
    return gap > 0.0;
}

bool exceeds_double_clifford(const LawsonSurface& s, double target) {
    return exceeds_threshold(s, kDoubleClifford, target);
}

double cmc_torus_area(double r) {
    if (!(r > 0.0 && r < kPi / 2))
        throw precondition_error("cmc_torus_area requires r in (0, pi/2)");
    return 4.0 * kPi * kPi * std::sin(r) * std::cos(r);
}

} // namespace lensgeom::lawson
