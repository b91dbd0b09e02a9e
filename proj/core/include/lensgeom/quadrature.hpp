#pragma once

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "lensgeom/errors.hpp"

namespace lensgeom::quad {

struct QuadResult {
    double value;
    double abs_err;
};

/// Adaptive Gauss-Kronrod on a finite interval; for smooth integrands.
template <typename F>
QuadResult integrate_kronrod(F&& f, double a, double b, double target) {
    double err = 0.0;
    double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        std::forward<F>(f), a, b, 15, target, &err);
    return {v, err};
}

/// Double-exponential rule for integrable endpoint singularities. The functor
/// receives (x, xc) where |xc| is the exact distance to the nearest endpoint,
/// usable where x - a or b - x would cancel catastrophically.
template <typename F>
QuadResult integrate_tanh_sinh(F&& f, double a, double b, double target) {
    boost::math::quadrature::tanh_sinh<double> rule;
    double err = 0.0, l1 = 0.0;
    double v = rule.integrate(std::forward<F>(f), a, b, target, &err, &l1);
    return {v, err * std::max(1.0, l1)};
}

/// exp-sinh rule on (0, inf) for integrands with power-law tails.
template <typename F>
QuadResult integrate_exp_sinh(F&& f, double target) {
    boost::math::quadrature::exp_sinh<double> rule;
    double err = 0.0, l1 = 0.0;
    double v = rule.integrate(std::forward<F>(f), target, &err, &l1);
    return {v, err * std::max(1.0, l1)};
}

inline void require_converged(const QuadResult& r, double bound, const char* what) {
    if (!(r.abs_err <= bound) || !std::isfinite(r.value))
        throw quadrature_error(std::string(what) + ": quadrature did not converge", r.abs_err);
}

} // namespace lensgeom::quad
