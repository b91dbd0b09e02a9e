#pragma once

#include <array>
#include <cstdint>

namespace lensgeom::lawson {

using i64 = std::int64_t;

/// The doubly periodic minimal immersion
///   (x, y) -> (cos(nx) cos(y), sin(nx) cos(y), cos(mx) sin(y), sin(mx) sin(y))
/// for a primitive direction (n, m). A torus when n and m are both odd, a
/// Klein bottle when exactly one is even.
class LawsonSurface {
public:
    LawsonSurface(i64 n, i64 m);
    i64 n() const noexcept { return n_; }
    i64 m() const noexcept { return m_; }
    bool is_klein_bottle() const noexcept { return (n_ % 2 == 0) != (m_ % 2 == 0); }

    std::array<double, 4> immerse(double x, double y) const;

    /// Coefficient of dx^2 in the induced metric: n^2 cos^2 y + m^2 sin^2 y
    /// (the dy^2 coefficient is 1 and the cross term vanishes).
    double metric_coeff(double y) const;

private:
    i64 n_, m_;
};

struct AreaResult {
    double value;
    double abs_err;
};

/// Surface area over a fundamental domain,
///   pi * Int_0^{2pi} sqrt(n^2 cos^2 y + m^2 sin^2 y) dy,
/// half of the integral of the volume element over [0,2pi]^2 since the true
/// period lattice is index two in the obvious one. Error bound 1e-9.
AreaResult lawson_area(const LawsonSurface& s, double target = 1e-10);

/// Area comparison against twice the Clifford torus area 4*pi^2 (or a caller
/// threshold), with the quadrature error folded in; throws indeterminate_error
/// when the margin is below the error bound.
bool exceeds_double_clifford(const LawsonSurface& s, double target = 1e-10);
bool exceeds_threshold(const LawsonSurface& s, double threshold, double target = 1e-10);

/// Area of the flat torus at tube distance r from a great circle:
/// 4*pi^2 sin(r) cos(r), maximal (2*pi^2) at the Clifford torus r = pi/4.
double cmc_torus_area(double r);

} // namespace lensgeom::lawson
