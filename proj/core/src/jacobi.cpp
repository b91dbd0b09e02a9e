#include "lensgeom/jacobi.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "lensgeom/errors.hpp"

namespace lensgeom::jacobi {

namespace {

constexpr double kPi = std::numbers::pi;

void require_direction(i64 n, i64 m) {
    if (n < 1 || m < 1 || std::gcd(n, m) != 1)
        throw precondition_error("(n, m) must be a primitive positive direction");
}

} // namespace

double reduced_frequency(i64 n, i64 m) {
    require_direction(n, m);
    return std::sqrt(2.0 / static_cast<double>(n * n + m * m));
}

double line_spacing(i64 n, i64 m, i64 k) {
    require_direction(n, m);
    if (k < 1) throw precondition_error("line_spacing requires k >= 1");
    return 2.0 * kPi / static_cast<double>(k);
}

BlowupVerdict blowup_verdict(const BlowupCandidate& c) {
    double omega = reduced_frequency(c.n, c.m);
    double spacing = line_spacing(c.n, c.m, c.k);
    bool obstructed = omega * spacing > kPi;
    bool tabulated = (c.n == 1 && c.m == 1 && (c.k == 1 || c.k == 2)) ||
                     (c.n == 1 && c.m == 2 && c.k == 1);
    return {omega, spacing, obstructed ? Verdict::Obstructed : Verdict::Indeterminate,
            !tabulated};
}

int jacobi_zeros(double omega, double A, double B, double lo, double hi) {
    if (A == 0.0 && B == 0.0) throw precondition_error("the zero solution has no zero count");
    if (!(omega > 0.0)) throw precondition_error("jacobi_zeros requires omega > 0");
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw precondition_error("jacobi_zeros requires a finite interval");
    // A sin(w xi) + B cos(w xi) = R sin(w xi + phase); zeros at w xi + phase = k pi.
    double phase = std::atan2(B, A);
    double klo = (omega * lo + phase) / kPi;
    double khi = (omega * hi + phase) / kPi;
    auto first_above = static_cast<long long>(std::floor(klo)) + 1;
    auto last_below = static_cast<long long>(std::ceil(khi)) - 1;
    if (last_below < first_above) return 0;
    return static_cast<int>(last_below - first_above + 1);
}

const char* to_string(Verdict v) {
    return v == Verdict::Obstructed ? "Obstructed" : "Indeterminate";
}

} // namespace lensgeom::jacobi
