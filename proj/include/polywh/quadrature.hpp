#pragma once

#include <functional>

namespace polywh {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // achieved error estimate
    long evaluations = 0;
    bool converged = false;
};

/// Adaptive Gauss-Kronrod 15(7) on [a, b]. Stops when the summed error
/// estimate drops below max(abs_tol, rel_tol * |integral|).
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double rel_tol = 1e-10, double abs_tol = 0.0,
                              int max_intervals = 4000);

/// Integral over [0, inf) via the rational substitution x = scale * u/(1-u).
/// `scale` should sit near the bulk of the integrand's mass.
QuadResult integrate_half_line(const std::function<double(double)>& f, double scale,
                               double rel_tol = 1e-10, double abs_tol = 0.0,
                               int max_intervals = 4000);

}  // namespace polywh
