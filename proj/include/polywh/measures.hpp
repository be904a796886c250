#pragma once

#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "polywh/coherent.hpp"

namespace polywh {

/// Radial weight of an isotropic measure dmu = (1/pi) w(|z|^2) d^2 z, as a
/// density in x = |z|^2 on [0, support_end), or a finite atomic list.
/// After the angular integral, moments reduce to int_0^end w(x) x^n dx.
struct RadialMeasure {
    std::function<double(double)> weight;
    double support_end = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, double>> atoms;  // (x_j, w_j)

    [[nodiscard]] bool is_atomic() const { return !atoms.empty(); }

    static RadialMeasure atomic(std::vector<std::pair<double, double>> atoms);
};

/// Weight 2 ell K_{ell-1}(2 sqrt(ell x)) I_{ell-1}(2 sqrt(ell x)) on [0, inf),
/// resolving the identity for the Barut-Girardello family with kappa = 1/ell.
RadialMeasure bg_bessel_measure(int ell);

/// Weight ((ell-1)/ell) (1 - x/ell)^{-2} on [0, ell), resolving the identity
/// for the Perelomov family with kappa = 1/ell. Requires ell >= 2 (at ell = 1
/// the prefactor vanishes and the combined integrand is not integrable).
RadialMeasure perelomov_disk_measure(int ell);

/// Weight (d/(d-1)) (1 + x/(d-1))^{-2} on [0, inf), resolving the identity
/// for the Perelomov family of a finite r = 1 representation.
RadialMeasure perelomov_finite_measure(int d);

struct FrameResult {
    double value = 0.0;
    double error = 0.0;
    long evaluations = 0;
};

/// Diagonal frame-operator entry <n| integral dmu |z><z| |n> =
/// int w(x) |c_n(x)|^2_normalized dx. The angular integral is analytic (all
/// off-diagonal entries vanish by phase orthogonality); the radial one runs
/// adaptive quadrature to quad_tol. The normalization 1/norm_sq(x) enters the
/// integrand pointwise, so measures singular at the support edge are tamed
/// before any quadrature sees them. Throws std::runtime_error (carrying the
/// achieved estimate) if the quadrature cannot converge.
FrameResult frame_diagonal(const CoherentFamily& family, const RadialMeasure& measure, int n,
                           double quad_tol = 1e-8);

struct FitResult {
    std::vector<double> weights;  // all >= 0
    double residual = 0.0;        // sum_n ((sum_j w_j x_j^n - t_n) / t_n)^2
    int iterations = 0;
    bool converged = false;
};

/// Fits nonnegative weights on fixed abscissae so that the fitted atomic
/// measure reproduces the target moments t_n = int x^n drho; active-set
/// nonnegative least squares on the relative residual.
FitResult fit_discrete_measure(const std::vector<double>& targets,
                               const std::vector<double>& grid);

}  // namespace polywh
