#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>

#include "polywh/algebra.hpp"
#include "polywh/report.hpp"

namespace polywh {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Exact ladder matrices on a finite Fock basis |0>, ..., |dim-1>.
///
/// a_minus carries sqrt(F(n)) e^{+i G(n-1) phi} at (n-1, n); a_plus is its
/// conjugate transpose; number = diag(0, 1, ..., dim-1). `truncated` marks
/// operators obtained by cutting an infinite representation at order s.
struct FockOperators {
    AlgebraSpec spec;
    int dim;
    bool truncated;
    Matrix a_minus;
    Matrix a_plus;
    Matrix number;
};

/// Representation of a finite-dimensional spec (kappa_1 < 0) on d levels.
/// Throws std::invalid_argument if the spec is infinite.
FockOperators build_finite_rep(const AlgebraSpec& spec);

/// Truncation of an infinite representation (kappa_1 >= 0) to s levels:
/// the ladder term connecting |s-1> and |s> is removed, so a_plus kills the
/// top state and both ladders are nilpotent of order s.
FockOperators build_truncated_rep(const AlgebraSpec& spec, int s);

/// AB - BA. Throws on shape mismatch.
Matrix commutator(const Matrix& a, const Matrix& b);

/// a_plus * a_minus; equals diag(F(0), ..., F(dim-1)).
Matrix hamiltonian(const FockOperators& ops);

/// Least p <= rows with max|M^p| <= threshold, or nullopt.
std::optional<int> nilpotency_order(const Matrix& m, double threshold = 1e-13);

/// Checks the defining relations on the built matrices:
///   [a-, a+] = G(N)                      (finite case, holds on all levels)
///   [a-, a+] = G_s(N) - F(s)|s-1><s-1|   (truncated case)
///   [N, a-] = -a-,  [N, a+] = +a+,  a+ = (a-)^dagger,
///   a+ a- = diag(F(n)), and nilpotency of order dim for both ladders.
CheckReport verify_wh_relations(const FockOperators& ops, double tol);

}  // namespace polywh
