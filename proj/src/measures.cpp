#include "polywh/measures.hpp"

#include <cmath>
#include <sstream>

#include "polywh/bessel.hpp"
#include "polywh/nnls.hpp"
#include "polywh/quadrature.hpp"

namespace polywh {

RadialMeasure RadialMeasure::atomic(std::vector<std::pair<double, double>> atoms) {
    RadialMeasure m;
    m.atoms = std::move(atoms);
    m.weight = [](double) { return 0.0; };
    m.support_end = 0.0;
    return m;
}

RadialMeasure bg_bessel_measure(int ell) {
    if (ell < 1) throw std::invalid_argument("bg_bessel_measure: ell >= 1 required");
    RadialMeasure m;
    m.weight = [ell](double x) {
        if (x < 0.0) return 0.0;
        const double y = 2.0 * std::sqrt(ell * x);
        if (y < 1e-9) {
            // small-argument limit: K_nu I_nu -> 1/(2 nu) for nu >= 1,
            // log-divergent (integrable) for nu = 0
            if (ell >= 2) return static_cast<double>(ell) / (ell - 1);
            return 2.0 * (-std::log(0.5 * std::max(y, 1e-300)) - 0.5772156649015329);
        }
        return 2.0 * ell * bessel_ik_product(ell - 1, y);
    };
    return m;
}

RadialMeasure perelomov_disk_measure(int ell) {
    if (ell < 2) throw std::invalid_argument("perelomov_disk_measure: ell >= 2 required");
    RadialMeasure m;
    m.support_end = static_cast<double>(ell);
    m.weight = [ell](double x) {
        const double u = 1.0 - x / ell;
        return (ell - 1.0) / ell / (u * u);
    };
    return m;
}

RadialMeasure perelomov_finite_measure(int d) {
    if (d < 2) throw std::invalid_argument("perelomov_finite_measure: d >= 2 required");
    RadialMeasure m;
    m.weight = [d](double x) {
        const double u = 1.0 + x / (d - 1);
        return static_cast<double>(d) / (d - 1) / (u * u);
    };
    return m;
}

FrameResult frame_diagonal(const CoherentFamily& family, const RadialMeasure& measure, int n,
                           double quad_tol) {
    if (n < 0) throw std::domain_error("frame_diagonal: n >= 0 required");
    if (const auto top = family.max_level(); top && n > *top)
        throw std::domain_error("frame_diagonal: level outside the family range");

    const double gamma_sq = family.coeff_sq(n);

    if (measure.is_atomic()) {
        double sum = 0.0;
        for (const auto& [x, w] : measure.atoms)
            sum += w * gamma_sq * std::pow(x, n) / family.norm_sq(x);
        return {sum, 0.0, static_cast<long>(measure.atoms.size())};
    }

    auto integrand = [&](double x) {
        if (x <= 0.0) return n == 0 ? measure.weight(x) / family.norm_sq(x) : 0.0;
        const double q = family.norm_sq(x);
        if (!std::isfinite(q)) return 0.0;
        return measure.weight(x) * std::pow(x, n) / q;
    };

    QuadResult q;
    if (std::isfinite(measure.support_end)) {
        q = integrate_adaptive(integrand, 0.0, measure.support_end, quad_tol, 0.0, 6000);
    } else {
        // coarse log scan for the bulk of the integrand's mass sets the
        // half-line map scale
        double scale = 1.0, best = -1.0;
        for (int j = -6; j <= 24; ++j) {
            const double x = std::ldexp(1.0, j);
            const double v = integrand(x);
            if (std::isfinite(v) && v > best) {
                best = v;
                scale = x;
            }
        }
        q = integrate_half_line(integrand, std::max(1.0, scale), quad_tol, 0.0, 6000);
    }
    if (!q.converged) {
        std::ostringstream os;
        os << "frame_diagonal: quadrature did not converge (estimate " << q.error << ")";
        throw std::runtime_error(os.str());
    }
    return {gamma_sq * q.value, gamma_sq * q.error, q.evaluations};
}

FitResult fit_discrete_measure(const std::vector<double>& targets,
                               const std::vector<double>& grid) {
    const std::size_t m = targets.size();
    if (m == 0) throw std::invalid_argument("fit_discrete_measure: empty target list");
    if (grid.size() < m)
        throw std::invalid_argument("fit_discrete_measure: grid must offer at least as many "
                                    "abscissae as there are target moments");
    for (double t : targets)
        if (!(t > 0.0)) throw std::invalid_argument("fit_discrete_measure: targets must be positive");
    for (double x : grid)
        if (!(x > 0.0)) throw std::invalid_argument("fit_discrete_measure: abscissae must be positive");

    Eigen::MatrixXd a(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(grid.size()));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < grid.size(); ++j)
            a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                std::pow(grid[j], static_cast<double>(i)) / targets[i];
    const Eigen::VectorXd b = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(m));

    const NnlsResult sol = nnls(a, b);
    FitResult out;
    out.weights.assign(sol.x.data(), sol.x.data() + sol.x.size());
    out.residual = sol.residual;
    out.iterations = sol.iterations;
    out.converged = sol.converged;
    return out;
}

}  // namespace polywh
