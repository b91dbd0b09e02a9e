#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lensgeom::period {

using i64 = std::int64_t;

/// Parameters of the period integral
///
///   P(a) = (2 sin a / m) Int_a^{pi-a}
///            sqrt( (n^2 cos^2(x/2) + m^2 sin^2(x/2)) / (sin^2 x - sin^2 a) )
///            dx / sin x,
///
/// which governs how invariant profile curves of the (n,m)-circle action close
/// up. Uses A = (n^2+m^2)/2 and B = (m^2-n^2)/2 throughout, so A/B > 1.
class PeriodParams {
public:
    PeriodParams(i64 n, i64 m, double a);
    i64 n() const noexcept { return n_; }
    i64 m() const noexcept { return m_; }
    double a() const noexcept { return a_; }
    double A() const noexcept { return 0.5 * static_cast<double>(n_ * n_ + m_ * m_); }
    double B() const noexcept { return 0.5 * static_cast<double>(m_ * m_ - n_ * n_); }

private:
    i64 n_, m_;
    double a_;
};

enum class Route { Original, Substituted };

struct PeriodEval {
    double value;
    double abs_err;
    Route route;
};

/// Period value via the smooth form obtained from y = cos x followed by
/// y = cos(a) sin(theta), under which both inverse-square-root endpoint
/// factors cancel:
///
///   P = (2 sin a / m) Int_{-pi/2}^{pi/2}
///         sqrt(A - B cos(a) sin(theta)) / (1 - cos^2(a) sin^2(theta)) dtheta.
///
/// Error bound 1e-10. The value always lies strictly between pi and the
/// a -> pi/2 limit.
PeriodEval period(const PeriodParams& params, double target = 1e-12);

/// Same quantity evaluated on the original singular form by a
/// double-exponential rule; kept as an independent route for cross-checks.
PeriodEval period_via_original(const PeriodParams& params, double target = 1e-10);

struct DerivativeEval {
    double value;
    double abs_err;
};

/// dP/da via the contour-derived representation
///
///   P'(a) = (2 cos a / m) Int_{A/B}^inf sqrt(Bx - A) / (x^2 - cos^2 a)^{3/2} dx,
///
/// evaluated after s^2 = Bx - A (removing the endpoint zero) by an exp-sinh
/// rule over the x^{-5/2} tail. Strictly positive; error bound 1e-9.
DerivativeEval period_derivative(const PeriodParams& params, double target = 1e-12);

/// Closed-form limit of the period as a -> pi/2: 2*pi*sqrt((n^2+m^2)/(2m^2)).
double period_limit(i64 n, i64 m);

struct ScanRow {
    double a;
    double value;
    double abs_err;
    double derivative;
    double derivative_err;
};

struct ScanViolation {
    std::size_t index; // rows[index] vs rows[index+1]
    double lhs, rhs;
};

struct ScanReport {
    std::vector<ScanRow> rows;
    std::vector<ScanViolation> violations;
};

/// Evaluates the period and its derivative on a uniform grid over
/// [0.05, pi/2 - 0.05] and reports adjacent pairs that fail to increase by
/// more than the combined error bounds. Expected empty.
ScanReport monotonicity_scan(i64 n, i64 m, int grid_size);

/// Proved lower bound on self-intersections of any closed invariant profile
/// curve: always 2, a consequence of pi < P < 2*pi.
int min_self_intersections(i64 n, i64 m);

/// Whether a closed invariant profile curve could have a cyclic symmetry of
/// order k >= 2: never, since that would force P <= 2*pi/k <= pi.
bool zk_invariant_possible(i64 n, i64 m, int k);

} // namespace lensgeom::period
