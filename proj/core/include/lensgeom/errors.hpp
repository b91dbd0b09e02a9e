#pragma once

#include <stdexcept>
#include <string>

namespace lensgeom {

/// Violated operation precondition (bad arguments or broken type invariants).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Tangency query outside the neighborhood hypothesis; carries the offending
/// distance sum dist(a,a') + dist(b,b').
class neighborhood_error : public precondition_error {
public:
    neighborhood_error(const std::string& msg, double distance_sum)
        : precondition_error(msg), distance_sum_(distance_sum) {}
    double distance_sum() const noexcept { return distance_sum_; }

private:
    double distance_sum_;
};

/// A threshold comparison whose margin is smaller than the numerical error
/// bound. Callers must treat the outcome as undecided, never as a guess.
class indeterminate_error : public std::runtime_error {
public:
    indeterminate_error(const std::string& msg, double gap, double bound)
        : std::runtime_error(msg), gap_(gap), bound_(bound) {}
    double gap() const noexcept { return gap_; }
    double bound() const noexcept { return bound_; }

private:
    double gap_;
    double bound_;
};

/// Adaptive quadrature failed to reach its target accuracy.
class quadrature_error : public std::runtime_error {
public:
    quadrature_error(const std::string& msg, double residual)
        : std::runtime_error(msg), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

} // namespace lensgeom
