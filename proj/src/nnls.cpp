#include "polywh/nnls.hpp"

#include <limits>
#include <vector>

namespace polywh {

NnlsResult nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, int max_iter) {
    const Eigen::Index n = a.cols();
    if (max_iter <= 0) max_iter = static_cast<int>(3 * n) + 30;

    NnlsResult out;
    out.x = Eigen::VectorXd::Zero(n);
    std::vector<bool> passive(static_cast<std::size_t>(n), false);

    const double gradient_tol = 1e-12 * a.cwiseAbs().maxCoeff() * b.cwiseAbs().maxCoeff();

    auto solve_passive = [&](const std::vector<bool>& mask) -> Eigen::VectorXd {
        std::vector<Eigen::Index> idx;
        for (Eigen::Index j = 0; j < n; ++j)
            if (mask[static_cast<std::size_t>(j)]) idx.push_back(j);
        if (idx.empty()) return Eigen::VectorXd::Zero(n).eval();
        Eigen::MatrixXd sub(a.rows(), static_cast<Eigen::Index>(idx.size()));
        for (std::size_t c = 0; c < idx.size(); ++c) sub.col(static_cast<Eigen::Index>(c)) = a.col(idx[c]);
        const Eigen::VectorXd zs = sub.colPivHouseholderQr().solve(b);
        Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
        for (std::size_t c = 0; c < idx.size(); ++c) z(idx[c]) = zs(static_cast<Eigen::Index>(c));
        return z;
    };

    Eigen::VectorXd residual = b;
    for (out.iterations = 0; out.iterations < max_iter; ++out.iterations) {
        const Eigen::VectorXd w = a.transpose() * residual;  // negative gradient
        Eigen::Index best = -1;
        double best_w = gradient_tol;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!passive[static_cast<std::size_t>(j)] && w(j) > best_w) {
                best_w = w(j);
                best = j;
            }
        }
        if (best < 0) {
            out.converged = true;
            break;
        }
        passive[static_cast<std::size_t>(best)] = true;

        Eigen::VectorXd z = solve_passive(passive);
        // walk back along x -> z while inner solutions go negative
        int inner = 0;
        while (z(best) <= 0.0 ||
               [&] {
                   for (Eigen::Index j = 0; j < n; ++j)
                       if (passive[static_cast<std::size_t>(j)] && z(j) <= 0.0) return true;
                   return false;
               }()) {
            if (++inner > 2 * n) break;
            double alpha = std::numeric_limits<double>::infinity();
            for (Eigen::Index j = 0; j < n; ++j) {
                if (passive[static_cast<std::size_t>(j)] && z(j) <= 0.0) {
                    const double step = out.x(j) / (out.x(j) - z(j));
                    alpha = std::min(alpha, step);
                }
            }
            out.x += alpha * (z - out.x);
            for (Eigen::Index j = 0; j < n; ++j) {
                if (passive[static_cast<std::size_t>(j)] && out.x(j) <= 1e-14) {
                    passive[static_cast<std::size_t>(j)] = false;
                    out.x(j) = 0.0;
                }
            }
            z = solve_passive(passive);
        }
        out.x = z;
        for (Eigen::Index j = 0; j < n; ++j)
            if (out.x(j) < 0.0) out.x(j) = 0.0;
        residual = b - a * out.x;
    }
    out.residual = (b - a * out.x).squaredNorm();
    return out;
}

}  // namespace polywh
