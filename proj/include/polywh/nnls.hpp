#pragma once

#include <Eigen/Dense>

namespace polywh {

struct NnlsResult {
    Eigen::VectorXd x;       // componentwise >= 0
    double residual = 0.0;   // ||A x - b||^2
    int iterations = 0;
    bool converged = false;
};

/// Nonnegative least squares min ||A x - b||^2 s.t. x >= 0, solved by the
/// Lawson-Hanson active-set method. Nonnegativity is a hard constraint.
NnlsResult nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, int max_iter = 0);

}  // namespace polywh
