#include "polywh/fock.hpp"

#include <cmath>

namespace polywh {

namespace {

FockOperators build_ladders(const AlgebraSpec& spec, int dim, bool truncated) {
    FockOperators ops{spec, dim, truncated, Matrix::Zero(dim, dim), Matrix::Zero(dim, dim),
                      Matrix::Zero(dim, dim)};
    const double phi = spec.phi();
    for (int n = 1; n < dim; ++n) {
        const double g = structure_g(spec, n - 1);  // F(n) - F(n-1)
        const Complex phase = std::polar(1.0, g * phi);
        ops.a_minus(n - 1, n) = std::sqrt(structure_f(spec, n)) * phase;
    }
    ops.a_plus = ops.a_minus.adjoint();
    for (int n = 0; n < dim; ++n) ops.number(n, n) = static_cast<double>(n);
    return ops;
}

}  // namespace

FockOperators build_finite_rep(const AlgebraSpec& spec) {
    if (!spec.is_finite())
        throw std::invalid_argument(
            "build_finite_rep: spec has an infinite-dimensional representation");
    return build_ladders(spec, spec.dim(), /*truncated=*/false);
}

FockOperators build_truncated_rep(const AlgebraSpec& spec, int s) {
    if (spec.is_finite())
        throw std::invalid_argument("build_truncated_rep: spec is finite-dimensional");
    if (s < 2) throw std::invalid_argument("build_truncated_rep: s must be >= 2");
    return build_ladders(spec, s, /*truncated=*/true);
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw std::invalid_argument("commutator: conformable square matrices required");
    return a * b - b * a;
}

Matrix hamiltonian(const FockOperators& ops) { return ops.a_plus * ops.a_minus; }

std::optional<int> nilpotency_order(const Matrix& m, double threshold) {
    if (m.rows() != m.cols()) throw std::invalid_argument("nilpotency_order: square matrix required");
    const int dim = static_cast<int>(m.rows());
    Matrix p = Matrix::Identity(dim, dim);
    for (int k = 1; k <= dim; ++k) {
        p = p * m;
        if (p.cwiseAbs().maxCoeff() <= threshold) return k;
    }
    return std::nullopt;
}

CheckReport verify_wh_relations(const FockOperators& ops, double tol) {
    CheckReport report;
    const int dim = ops.dim;

    Matrix rhs = Matrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) rhs(n, n) = structure_g(ops.spec, n);
    if (ops.truncated) {
        // boundary term -F(s)|s-1><s-1| from the removed ladder entry
        rhs(dim - 1, dim - 1) -= structure_f(ops.spec, dim);
    }
    const Matrix comm = commutator(ops.a_minus, ops.a_plus);
    report.add("[a-,a+] = G(N)" + std::string(ops.truncated ? " - F(s)|s-1><s-1|" : ""),
               (comm - rhs).cwiseAbs().maxCoeff(), tol);

    report.add("[N,a-] = -a-",
               (commutator(ops.number, ops.a_minus) + ops.a_minus).cwiseAbs().maxCoeff(), tol);
    report.add("[N,a+] = +a+",
               (commutator(ops.number, ops.a_plus) - ops.a_plus).cwiseAbs().maxCoeff(), tol);
    report.add("a+ = (a-)^dagger",
               (ops.a_plus - ops.a_minus.adjoint()).cwiseAbs().maxCoeff(), tol);

    Matrix fn = Matrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) fn(n, n) = structure_f(ops.spec, n);
    report.add("a+ a- = diag(F(n))", (hamiltonian(ops) - fn).cwiseAbs().maxCoeff(), tol);

    const auto p_minus = nilpotency_order(ops.a_minus);
    const auto p_plus = nilpotency_order(ops.a_plus);
    report.add_bool("(a-)^dim = 0 at order dim", p_minus && *p_minus == dim);
    report.add_bool("(a+)^dim = 0 at order dim", p_plus && *p_plus == dim);
    return report;
}

}  // namespace polywh
