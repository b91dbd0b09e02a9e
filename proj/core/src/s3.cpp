#include "lensgeom/s3.hpp"

#include <cmath>
#include <numbers>

namespace lensgeom::s3 {

namespace {

constexpr double kPi = std::numbers::pi;

bool lex_negative(const PointS2& p) {
    if (p.x != 0.0) return p.x < 0.0;
    if (p.y != 0.0) return p.y < 0.0;
    return p.z < 0.0;
}

void require_unit(const Quat& q, const char* name, double tol) {
    if (std::abs(q.norm() - 1.0) > tol)
        throw precondition_error(std::string(name) + " is not a unit quaternion");
}

} // namespace

Geodesic canonical(const Geodesic& g) {
    if (lex_negative(g.first)) return {-g.first, -g.second};
    return g;
}

bool same_geodesic(const Geodesic& g1, const Geodesic& g2, double tol) {
    Geodesic a = canonical(g1), b = canonical(g2);
    return dist(a.first, b.first) < tol && dist(a.second, b.second) < tol;
}

Geodesic geodesic_from_plane(const Quat& a, const Quat& b, double tol) {
    require_unit(a, "first spanning vector", tol);
    require_unit(b, "second spanning vector", tol);
    if (std::abs(dot(a, b)) > 1e-10)
        throw precondition_error("spanning vectors are not orthogonal");
    Quat first = b * a.conjugate();
    Quat second = a.conjugate() * b;
    return {vector_part(first), vector_part(second)};
}

Quat rho_apply(const Quat& q1, const Quat& q2, const Quat& z) {
    require_unit(q1, "q1", kDefaultTol);
    require_unit(q2, "q2", kDefaultTol);
    require_unit(z, "z", kDefaultTol);
    return q1 * z * q2.conjugate();
}

bool geodesics_intersect(const Geodesic& g1, const Geodesic& g2, double tol) {
    if (tol <= 0) throw precondition_error("tolerance must be positive");
    double da = dist(g1.first, g2.first);
    double db = dist(g1.second, g2.second);
    return std::abs(da - db) < tol;
}

Quat geodesic_point(const Geodesic& g, double t) {
    Quat q1 = rotor_from_i(g.first);
    Quat q2 = rotor_from_i(g.second);
    return q1 * Quat{std::cos(t), std::sin(t), 0.0, 0.0} * q2.conjugate();
}

GeodesicFrame GeodesicFrame::of(const Geodesic& g) {
    return {geodesic_point(g, 0.0), geodesic_point(g, kPi / 2)};
}

double GeodesicFrame::dist(const Quat& x) const {
    double du = lensgeom::s3::dot(x, u);
    double dv = lensgeom::s3::dot(x, v);
    return std::acos(std::clamp(std::sqrt(du * du + dv * dv), 0.0, 1.0));
}

double dist_to_geodesic(const Quat& x, const Geodesic& g) {
    return GeodesicFrame::of(g).dist(x);
}

PointS2 hopf_project(const Quat& x) {
    std::complex<double> z = x.z0();
    std::complex<double> w = x.z1();
    if (std::norm(w) < 1e-30) return {0.0, 0.0, 1.0};
    std::complex<double> zeta = z / w;
    double n2 = std::norm(zeta);
    double d = 1.0 / (1.0 + n2);
    return {2.0 * zeta.real() * d, 2.0 * zeta.imag() * d, (n2 - 1.0) * d};
}

CliffordTorus canonical(const CliffordTorus& T) {
    CliffordTorus r = T;
    if (lex_negative(r.point)) r.point = -r.point;
    if (lex_negative(r.circle_pole)) r.circle_pole = -r.circle_pole;
    return r;
}

bool clifford_contains(const CliffordTorus& T, const Quat& x, double tol) {
    // The first-ruling geodesic through x with first factor p is the plane
    // <x, p x>, whose second factor is x^{-1} p x. Membership asks that this
    // point lies on the great circle orthogonal to the pole.
    Quat second = x.conjugate() * T.point.as_quat() * x;
    return std::abs(dot(vector_part(second), T.circle_pole)) < tol;
}

Quat cmc_point(const CmcTorus& T, double u, double v) {
    Quat q1 = rotor_from_i(T.axis.first);
    Quat q2 = rotor_from_i(T.axis.second);
    double h = T.radius / 2.0;
    Quat base = Quat::from_complex(std::polar(std::cos(h), u), std::polar(std::sin(h), v));
    return q1 * base * q2.conjugate();
}

double cmc_offset(const CmcTorus& T, const Quat& x) {
    return 2.0 * dist_to_geodesic(x, T.axis) - T.radius;
}

Tangency cmc_tangency(const Geodesic& axis1, const Geodesic& axis2, double rho, double tol) {
    if (!(rho > 0.0 && rho <= kPi / 4 + 1e-12))
        throw precondition_error("rho must lie in (0, pi/4]");
    // (a', b') and (-a', -b') name the same axis; take the nearby representative.
    double da = dist(axis1.first, axis2.first);
    double db = dist(axis1.second, axis2.second);
    bool flip = (kPi - da) + (kPi - db) < da + db;
    if (flip) {
        da = kPi - da;
        db = kPi - db;
    }
    if (da + db >= rho)
        throw neighborhood_error("axis2 outside the neighborhood hypothesis: "
                                 "dist(a,a') + dist(b,b') >= rho",
                                 da + db);
    // Factor equality is decided on the chordal norm: the acos distance
    // cannot resolve below ~sqrt(eps) near coincident points.
    PointS2 a2 = flip ? -axis2.first : axis2.first;
    PointS2 b2 = flip ? -axis2.second : axis2.second;
    auto chordal = [](const PointS2& u, const PointS2& v) {
        return std::sqrt((u.x - v.x) * (u.x - v.x) + (u.y - v.y) * (u.y - v.y) +
                         (u.z - v.z) * (u.z - v.z));
    };
    bool ea = chordal(axis1.first, a2) < tol;
    bool eb = chordal(axis1.second, b2) < tol;
    if (ea && eb) return {rho, TangencyKind::Coincide};
    if (ea != eb) return {rho - da - db, TangencyKind::OneGeodesic};
    return {rho - da - db, TangencyKind::TwoAntipodalPoints};
}

PointS2 move_toward(const PointS2& from, const PointS2& toward, double angle) {
    double c = dot(from, toward);
    PointS2 ortho{toward.x - c * from.x, toward.y - c * from.y, toward.z - c * from.z};
    double n = ortho.norm();
    if (n < 1e-12)
        throw precondition_error("move_toward requires non-parallel points");
    double ca = std::cos(angle), sa = std::sin(angle);
    return {ca * from.x + sa * ortho.x / n, ca * from.y + sa * ortho.y / n,
            ca * from.z + sa * ortho.z / n};
}

const char* to_string(TangencyKind k) {
    switch (k) {
    case TangencyKind::Coincide: return "Coincide";
    case TangencyKind::OneGeodesic: return "OneGeodesic";
    case TangencyKind::TwoAntipodalPoints: return "TwoAntipodalPoints";
    }
    return "?";
}

} // namespace lensgeom::s3
