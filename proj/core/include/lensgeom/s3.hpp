#pragma once

#include <cstdint>

#include "lensgeom/errors.hpp"
#include "lensgeom/quat.hpp"

namespace lensgeom::s3 {

inline constexpr double kDefaultTol = 1e-9;

/// Oriented great circle of the three-sphere, encoded as an ordered pair of
/// unit vectors on S^2: the plane spanned by orthonormal a, b in R^4 maps to
/// (b a^{-1}, a^{-1} b) in quaternion arithmetic. The pairs (a, b) and
/// (-a, -b) denote the same circle with opposite orientations.
struct Geodesic {
    PointS2 first;
    PointS2 second;
};

/// Representative with lexicographically nonnegative leading coordinate in the
/// first factor, for deterministic set-membership semantics.
Geodesic canonical(const Geodesic& g);

bool same_geodesic(const Geodesic& g1, const Geodesic& g2, double tol = kDefaultTol);

/// Oriented geodesic through the plane spanned by orthonormal unit quaternions
/// a and b. Outputs are the raw quaternion products, unit and pure-imaginary
/// up to the accuracy of the inputs; nothing is renormalized.
Geodesic geodesic_from_plane(const Quat& a, const Quat& b, double tol = kDefaultTol);

/// The isometry (q1, q2): z -> q1 z q2^{-1} of the three-sphere.
Quat rho_apply(const Quat& q1, const Quat& q2, const Quat& z);

/// Two geodesics intersect exactly when their first factors and second factors
/// are equidistant on S^2. Insensitive to the orientation representative.
bool geodesics_intersect(const Geodesic& g1, const Geodesic& g2, double tol = kDefaultTol);

/// Point at arc-length parameter t along the geodesic.
Quat geodesic_point(const Geodesic& g, double t);

/// Distance from a point of S^3 to a geodesic (minimum over the circle).
double dist_to_geodesic(const Quat& x, const Geodesic& g);

/// Precomputed orthonormal basis of a geodesic's plane, for bulk distance
/// queries.
struct GeodesicFrame {
    Quat u, v;
    static GeodesicFrame of(const Geodesic& g);
    double dist(const Quat& x) const;
};

/// Hopf projection (z, w) -> z/w followed by inverse stereographic projection;
/// constant along each Hopf fiber, with (1,0) at the north pole and (0,1) at
/// the south pole.
PointS2 hopf_project(const Quat& x);

/// The torus of all x whose first-ruling geodesic through x has second factor
/// on the great circle with the given pole. ι(p,E) = ι(-p,E) = ι(p,-E).
struct CliffordTorus {
    PointS2 point;       // first factor p
    PointS2 circle_pole; // pole of the great circle E
};

CliffordTorus canonical(const CliffordTorus& T);
bool clifford_contains(const CliffordTorus& T, const Quat& x, double tol = kDefaultTol);

/// Constant-mean-curvature torus at constant distance from a great circle.
/// The radius is measured on the two-sphere factors of the geodesic space;
/// the tube in S^3 subtends half this angle, so radius pi/2 is the Clifford
/// torus of the axis.
struct CmcTorus {
    Geodesic axis;
    double radius; // in (0, pi/2)
};

/// Point of the cmc torus at surface coordinates (u, v).
Quat cmc_point(const CmcTorus& T, double u, double v);

/// Signed offset of x from the torus in radius units:
/// 2 * dist(x, axis) - radius. Zero exactly on the torus.
double cmc_offset(const CmcTorus& T, const Quat& x);

enum class TangencyKind { Coincide, OneGeodesic, TwoAntipodalPoints };

struct Tangency {
    double t0;
    TangencyKind kind;
};

/// Largest radius t0 at which the cmc torus around axis2 stays inside the
/// radius-rho torus around axis1, together with the shape of the contact set:
/// t0 = rho - dist(a,a') - dist(b,b'). The contact is one closed geodesic when
/// exactly one factor pair coincides and two antipodal points when both
/// differ. Requires dist(a,a') + dist(b,b') < rho (after choosing the nearby
/// orientation representative of axis2).
Tangency cmc_tangency(const Geodesic& axis1, const Geodesic& axis2, double rho,
                      double tol = kDefaultTol);

/// Rotate `from` by `angle` along the great circle through `from` and
/// `toward`. Requires the two points to be neither equal nor antipodal.
PointS2 move_toward(const PointS2& from, const PointS2& toward, double angle);

const char* to_string(TangencyKind k);

} // namespace lensgeom::s3
