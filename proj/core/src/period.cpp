#include "lensgeom/period.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "lensgeom/errors.hpp"
#include "lensgeom/quadrature.hpp"

namespace lensgeom::period {

namespace {

constexpr double kPi = std::numbers::pi;

void check_bounds(const PeriodParams& p, double value, double abs_err) {
    double upper = period_limit(p.n(), p.m());
    if (!(value - abs_err > kPi) || !(value < upper + abs_err))
        throw std::logic_error("period value escaped (pi, limit): P=" + std::to_string(value));
}

} // namespace

PeriodParams::PeriodParams(i64 n, i64 m, double a) : n_(n), m_(m), a_(a) {
    if (n < 1 || m < 1 || n >= m) throw precondition_error("period requires 1 <= n < m");
    if (std::gcd(n, m) != 1) throw precondition_error("period requires gcd(n, m) = 1");
    if (!(a > 0.0 && a < kPi / 2)) throw precondition_error("period requires a in (0, pi/2)");
}

PeriodEval period(const PeriodParams& p, double target) {
    double A = p.A(), B = p.B();
    double ca = std::cos(p.a());
    auto q = quad::integrate_kronrod(
        [&](double theta) {
            double s = ca * std::sin(theta);
            return std::sqrt(A - B * s) / (1.0 - s * s);
        },
        -kPi / 2, kPi / 2, target);
    double scale = 2.0 * std::sin(p.a()) / static_cast<double>(p.m());
    PeriodEval r{scale * q.value, scale * q.abs_err, Route::Substituted};
    quad::require_converged({r.value, r.abs_err}, 1e-10, "period");
    check_bounds(p, r.value, r.abs_err);
    return r;
}

PeriodEval period_via_original(const PeriodParams& p, double target) {
    double n2 = static_cast<double>(p.n() * p.n());
    double m2 = static_cast<double>(p.m() * p.m());
    double a = p.a(), b = kPi - p.a(), mid = kPi / 2;
    double sa = std::sin(a);
    // sin^2 x - sin^2 a = sin(x - a) sin(pi - a - x); evaluate the factor for
    // the nearer endpoint from xc, which stays exact where x - a cancels.
    auto q = quad::integrate_tanh_sinh(
        [&](double x, double xc) {
            double dl = (x < mid) ? std::fabs(xc) : x - a;
            double dr = (x < mid) ? b - x : std::fabs(xc);
            double c = std::cos(x / 2), s = std::sin(x / 2);
            double denom = std::sin(dl) * std::sin(dr);
            return std::sqrt((n2 * c * c + m2 * s * s) / denom) / std::sin(x);
        },
        a, b, target);
    double scale = 2.0 * sa / static_cast<double>(p.m());
    PeriodEval r{scale * q.value, scale * q.abs_err, Route::Original};
    quad::require_converged({r.value, r.abs_err}, 1e-6, "period_via_original");
    return r;
}

DerivativeEval period_derivative(const PeriodParams& p, double target) {
    double A = p.A(), B = p.B();
    double ca = std::cos(p.a());
    // s^2 = Bx - A: integrand (2 s^2 / B) / (x(s)^2 - cos^2 a)^{3/2}, tail s^-4.
    auto q = quad::integrate_exp_sinh(
        [&](double s) {
            double x = (s * s + A) / B;
            double den = x * x - ca * ca;
            return (2.0 * s * s / B) / (den * std::sqrt(den));
        },
        target);
    double scale = 2.0 * ca / static_cast<double>(p.m());
    DerivativeEval r{scale * q.value, scale * q.abs_err};
    quad::require_converged({r.value, r.abs_err}, 1e-9, "period_derivative");
    if (!(r.value > r.abs_err))
        throw std::logic_error("period derivative not positive beyond its error bound");
    return r;
}

double period_limit(i64 n, i64 m) {
    if (n < 1 || m < 1 || n >= m || std::gcd(n, m) != 1)
        throw precondition_error("period_limit requires coprime 1 <= n < m");
    double n2 = static_cast<double>(n * n), m2 = static_cast<double>(m * m);
    return 2.0 * kPi * std::sqrt((n2 + m2) / (2.0 * m2));
}

ScanReport monotonicity_scan(i64 n, i64 m, int grid_size) {
    if (grid_size < 2) throw precondition_error("monotonicity_scan requires grid_size >= 2");
    double lo = 0.05, hi = kPi / 2 - 0.05;
    ScanReport report;
    report.rows.reserve(static_cast<std::size_t>(grid_size));
    for (int i = 0; i < grid_size; ++i) {
        double a = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_size - 1);
        PeriodParams params(n, m, a);
        PeriodEval v = period(params);
        DerivativeEval d = period_derivative(params);
        report.rows.push_back({a, v.value, v.abs_err, d.value, d.abs_err});
    }
    for (std::size_t i = 0; i + 1 < report.rows.size(); ++i) {
        const ScanRow& r0 = report.rows[i];
        const ScanRow& r1 = report.rows[i + 1];
        if (r1.value <= r0.value + r0.abs_err + r1.abs_err)
            report.violations.push_back({i, r0.value, r1.value});
    }
    return report;
}

int min_self_intersections(i64 n, i64 m) {
    (void)period_limit(n, m); // validates the parameters
    return 2;
}

bool zk_invariant_possible(i64 n, i64 m, int k) {
    (void)period_limit(n, m);
    if (k < 2) throw precondition_error("zk_invariant_possible requires k >= 2");
    return false;
}

} // namespace lensgeom::period
