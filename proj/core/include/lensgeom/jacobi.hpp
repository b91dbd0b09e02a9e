#pragma once

#include <cstdint>

namespace lensgeom::jacobi {

using i64 = std::int64_t;

/// k equally spaced parallel (n,m)-torus knots on the Clifford torus as a
/// candidate curvature-concentration set.
struct BlowupCandidate {
    i64 n, m, k;
};

/// Frequency of the reduced oscillator: a solution J of the flat Jacobi
/// equation 2*Lap(J) + 4*J = 0 constant along the (n,m) direction is
/// g(n y - m x) with g'' + omega^2 g = 0 and omega = sqrt(2/(n^2+m^2)).
double reduced_frequency(i64 n, i64 m);

/// Gap between consecutive lines in the xi = n y - m x coordinate when k
/// equally spaced parallel (n,m)-curves are removed: 2*pi/k (primitivity of
/// (n,m) makes xi hit every multiple of 2*pi on the period lattice).
double line_spacing(i64 n, i64 m, i64 k);

enum class Verdict { Obstructed, Indeterminate };

/// Obstructed exactly when every nonzero solution of the reduced oscillator
/// vanishes somewhere strictly between consecutive lines, i.e. when
/// omega * spacing > pi; equality leaves a positive solution on the open
/// interval and is classified Indeterminate. Triples outside the three
/// closed-form cases (1,1,1), (1,2,1), (1,1,2) are flagged as derived
/// extensions of the same criterion.
struct BlowupVerdict {
    double omega;
    double spacing;
    Verdict verdict;
    bool derived_extension;
};

BlowupVerdict blowup_verdict(const BlowupCandidate& c);

/// Number of zeros of A sin(omega xi) + B cos(omega xi) in the open interval
/// (lo, hi), by phase arithmetic. Requires (A, B) != (0, 0).
int jacobi_zeros(double omega, double A, double B, double lo, double hi);

const char* to_string(Verdict v);

} // namespace lensgeom::jacobi
