#include "polywh/quon.hpp"

#include <quadmath.h>

#include <cmath>
#include <numbers>

namespace polywh {

QuonParams::QuonParams(int k) : k_(k) {
    if (k < 2) throw std::invalid_argument("quon order k must be >= 2");
    powers_.resize(k);
    const Complex q = std::polar(1.0, 2.0 * std::numbers::pi / k);
    Complex p = 1.0;
    for (int j = 0; j < k; ++j) {
        powers_[j] = p;
        p *= q;
        p /= std::abs(p);  // keep unit modulus along the chain
    }
}

Complex QuonParams::q_pow(long j) const {
    long m = j % k_;
    if (m < 0) m += k_;
    return powers_[static_cast<std::size_t>(m)];
}

Complex q_number(int n, const QuonParams& params) {
    if (n % params.order() == 0) return {0.0, 0.0};  // q^n = 1 exactly
    return (1.0 - params.q_pow(n)) / (1.0 - params.q());
}

Complex q_number(double x, const QuonParams& params) {
    const double in = std::round(x);
    if (x == in) return q_number(static_cast<int>(in), params);
    const Complex qx = std::polar(1.0, 2.0 * std::numbers::pi * x / params.order());
    return (1.0 - qx) / (1.0 - params.q());
}

Complex q_factorial(int n, const QuonParams& params) {
    if (n < 0) throw std::domain_error("q_factorial: n must be nonnegative");
    Complex p = 1.0;
    for (int i = 1; i <= n; ++i) p *= q_number(i, params);
    return p;
}

KFermionOps build_kfermion_ops(const QuonParams& params) {
    const int k = params.order();
    KFermionOps ops{Matrix::Zero(k, k), Matrix::Zero(k, k), Matrix::Zero(k, k),
                    Matrix::Zero(k, k)};
    for (int n = 1; n < k; ++n) {
        // principal branch; [n]_q has argument in [0, pi) for 1 <= n <= k-1
        ops.lowering(n - 1, n) = std::sqrt(q_number(n, params));
        ops.raising(n, n - 1) = std::sqrt(q_number(n, params));
    }
    ops.lowering_bar = ops.raising.adjoint();
    ops.raising_bar = ops.lowering.adjoint();
    return ops;
}

CheckReport verify_quon_relations(const QuonParams& params, double tol) {
    CheckReport report;
    const int k = params.order();
    const KFermionOps ops = build_kfermion_ops(params);
    const Matrix id = Matrix::Identity(k, k);

    report.add("f- f+ - q f+ f- = I",
               (ops.lowering * ops.raising - params.q() * ops.raising * ops.lowering - id)
                   .cwiseAbs()
                   .maxCoeff(),
               tol);
    report.add("f+^ f-^ - qbar f-^ f+^ = I",
               (ops.lowering_bar * ops.raising_bar -
                params.q_bar() * ops.raising_bar * ops.lowering_bar - id)
                   .cwiseAbs()
                   .maxCoeff(),
               tol);

    const Complex half = std::polar(1.0, std::numbers::pi / k);  // q^{1/2}, principal
    report.add("f- f+^ = q^{-1/2} f+^ f-",
               (ops.lowering * ops.lowering_bar -
                (1.0 / half) * ops.lowering_bar * ops.lowering)
                   .cwiseAbs()
                   .maxCoeff(),
               tol);
    report.add("f+ f-^ = q^{+1/2} f-^ f+",
               (ops.raising * ops.raising_bar - half * ops.raising_bar * ops.raising)
                   .cwiseAbs()
                   .maxCoeff(),
               tol);

    const Matrix* mats[4] = {&ops.lowering, &ops.raising, &ops.lowering_bar, &ops.raising_bar};
    const char* names[4] = {"f-", "f+", "f+^", "f-^"};
    for (int i = 0; i < 4; ++i) {
        const auto p = nilpotency_order(*mats[i]);
        report.add_bool(std::string("(") + names[i] + ")^k = 0 at order k", p && *p == k);
    }
    return report;
}

namespace {

// The operator-polynomial assembly sum_i C_i (a+)^{i-1} (a-)^i cancels
// intermediates as large as ~F(k-1)!/sqrt(F(n)) down to order-one entries;
// at k = 8 with kappas near 2 the amplification reaches ~4e11, which eats
// double (and even 80-bit) precision below the 1e-10 contract. The solve and
// assembly therefore run in quad precision and demote at the end.
using Q128 = __float128;

struct QComplex {
    Q128 re = 0, im = 0;

    friend QComplex operator+(QComplex a, QComplex b) { return {a.re + b.re, a.im + b.im}; }
    friend QComplex operator-(QComplex a, QComplex b) { return {a.re - b.re, a.im - b.im}; }
    friend QComplex operator*(QComplex a, QComplex b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend QComplex operator*(Q128 s, QComplex a) { return {s * a.re, s * a.im}; }
    friend QComplex operator/(QComplex a, Q128 s) { return {a.re / s, a.im / s}; }
    friend QComplex operator/(QComplex a, QComplex b) {
        const Q128 n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    [[nodiscard]] QComplex conj() const { return {re, -im}; }
    [[nodiscard]] double abs() const {
        return static_cast<double>(sqrtq(re * re + im * im));
    }
};

using QMatrix = std::vector<std::vector<QComplex>>;

QMatrix qzero(int k) { return QMatrix(k, std::vector<QComplex>(k)); }

QMatrix qidentity(int k) {
    QMatrix m = qzero(k);
    for (int i = 0; i < k; ++i) m[i][i] = {1, 0};
    return m;
}

QMatrix qmul(const QMatrix& a, const QMatrix& b) {
    const int k = static_cast<int>(a.size());
    QMatrix out = qzero(k);
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < k; ++l)
            for (int j = 0; j < k; ++j) out[i][j] = out[i][j] + a[i][l] * b[l][j];
    return out;
}

Q128 structure_f_q(const AlgebraSpec& spec, int n) {
    const auto& kappas = spec.kappas();
    const int d = spec.dim();
    Q128 f = static_cast<Q128>(n) * (d - n) / static_cast<Q128>(d - 1);
    for (std::size_t i = 1; i < kappas.size(); ++i)
        f *= 1 + static_cast<Q128>(kappas[i]) * (n - 1);
    return f;
}

QComplex q_number_q(int n, int k) {
    if (n % k == 0) return {0, 0};
    static const Q128 pi_q = acosq(-1);
    const Q128 ang = 2 * pi_q / k;
    const QComplex qn{cosq(ang * n), sinq(ang * n)};
    const QComplex q{cosq(ang), sinq(ang)};
    return (QComplex{1, 0} - qn) / (QComplex{1, 0} - q);
}

struct PassageEngine {
    int k;
    QMatrix a_minus, a_plus;
    std::vector<QComplex> c;

    explicit PassageEngine(const AlgebraSpec& spec) : k(spec.dim()) {
        a_minus = qzero(k);
        const Q128 phi = spec.phi();
        for (int n = 1; n < k; ++n) {
            const Q128 g = structure_f_q(spec, n) - structure_f_q(spec, n - 1);
            const QComplex phase{cosq(g * phi), sinq(g * phi)};
            a_minus[n - 1][n] = sqrtq(structure_f_q(spec, n)) * phase;
        }
        a_plus = qzero(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) a_plus[i][j] = a_minus[j][i].conj();

        std::vector<Q128> ffact(k, 1);
        for (int n = 1; n < k; ++n) ffact[n] = ffact[n - 1] * structure_f_q(spec, n);

        c.resize(k - 1);
        for (int n = 1; n <= k - 1; ++n) {
            if (ffact[n] == 0)
                throw std::runtime_error("solve_passage_coeffs: vanishing F(n)!");
            QComplex acc = q_number_q(n, k);
            for (int i = 1; i < n; ++i) acc = acc - (ffact[n] / ffact[n - i]) * c[i - 1];
            c[n - 1] = acc / ffact[n];
        }

        double res = 0.0;
        for (int n = 1; n <= k - 1; ++n) {
            QComplex lhs{0, 0};
            for (int i = 1; i <= n; ++i) lhs = lhs + (ffact[n] / ffact[n - i]) * c[i - 1];
            res = std::max(res, (lhs - q_number_q(n, k)).abs());
        }
        if (res > 1e-10)
            throw std::runtime_error("solve_passage_coeffs: residual " + std::to_string(res));
    }
};

Matrix demote(const QMatrix& m) {
    const int k = static_cast<int>(m.size());
    Matrix out(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            out(i, j) = Complex(static_cast<double>(m[i][j].re),
                                static_cast<double>(m[i][j].im));
    return out;
}

}  // namespace

PassageCoeffs solve_passage_coeffs(const AlgebraSpec& spec) {
    if (!spec.is_finite())
        throw std::invalid_argument("solve_passage_coeffs: finite spec required");
    const PassageEngine engine(spec);
    PassageCoeffs out{engine.k, {}};
    out.c.reserve(engine.c.size());
    for (const QComplex& v : engine.c)
        out.c.emplace_back(static_cast<double>(v.re), static_cast<double>(v.im));
    return out;
}

QuonInOscillator build_A_ops(const AlgebraSpec& spec, const PassageCoeffs& coeffs) {
    if (!spec.is_finite() || coeffs.k != spec.dim())
        throw std::invalid_argument("build_A_ops: coefficient order mismatch");
    const PassageEngine engine(spec);
    const int k = engine.k;
    QMatrix lower = qzero(k);
    QMatrix up_pow = qidentity(k);      // (a+)^{i-1}
    QMatrix down_pow = engine.a_minus;  // (a-)^i
    for (int i = 1; i <= k - 1; ++i) {
        const QMatrix term = qmul(up_pow, down_pow);
        for (int r = 0; r < k; ++r)
            for (int s = 0; s < k; ++s) lower[r][s] = lower[r][s] + engine.c[i - 1] * term[r][s];
        up_pow = qmul(up_pow, engine.a_plus);
        down_pow = qmul(down_pow, engine.a_minus);
    }
    return {demote(lower), build_finite_rep(spec).a_plus};
}

QuonBarInOscillator build_Abar_ops(const AlgebraSpec& spec, const PassageCoeffs& coeffs) {
    if (!spec.is_finite() || coeffs.k != spec.dim())
        throw std::invalid_argument("build_Abar_ops: coefficient order mismatch");
    const PassageEngine engine(spec);
    const int k = engine.k;
    QMatrix raiser = qzero(k);
    QMatrix up_pow = engine.a_plus;     // (a+)^i
    QMatrix down_pow = qidentity(k);    // (a-)^{i-1}
    for (int i = 1; i <= k - 1; ++i) {
        const QMatrix term = qmul(up_pow, down_pow);
        const QComplex cbar = engine.c[i - 1].conj();
        for (int r = 0; r < k; ++r)
            for (int s = 0; s < k; ++s) raiser[r][s] = raiser[r][s] + cbar * term[r][s];
        up_pow = qmul(up_pow, engine.a_plus);
        down_pow = qmul(down_pow, engine.a_minus);
    }
    return {build_finite_rep(spec).a_minus, demote(raiser)};
}

CheckReport verify_passage_formulas(const AlgebraSpec& spec, double tol) {
    CheckReport report;
    const int k = spec.dim();
    const QuonParams params(k);
    const FockOperators rep = build_finite_rep(spec);
    const KFermionOps f = build_kfermion_ops(params);
    const PassageCoeffs coeffs = solve_passage_coeffs(spec);
    const QuonInOscillator a = build_A_ops(spec, coeffs);
    const QuonBarInOscillator abar = build_Abar_ops(spec, coeffs);
    const double phi = spec.phi();

    Matrix d1 = Matrix::Zero(k, k), d2 = Matrix::Zero(k, k);
    Matrix d3 = Matrix::Zero(k, k), d4 = Matrix::Zero(k, k);
    for (int n = 0; n < k - 1; ++n) {
        // entry n uses F(n+1) > 0 and [n+1]_q != 0; the n = k-1 entries sit
        // in the kernel of the adjacent ladder factor and stay zero.
        const Complex qn = q_number(n + 1, params);
        const double fn = structure_f(spec, n + 1);
        const double g = structure_g(spec, n);
        const Complex plus_phase = std::polar(1.0, +g * phi);
        const Complex minus_phase = std::polar(1.0, -g * phi);
        d1(n, n) = std::sqrt(qn / fn) * plus_phase;
        d2(n, n) = std::sqrt(fn / qn) * minus_phase;
        d3(n, n) = std::sqrt(fn / std::conj(qn)) * plus_phase;
        d4(n, n) = std::sqrt(std::conj(qn) / fn) * minus_phase;
    }

    report.add("A- = D1 f-", (a.lowering - d1 * f.lowering).cwiseAbs().maxCoeff(), tol);
    report.add("A+ = f+ D2", (a.raising - f.raising * d2).cwiseAbs().maxCoeff(), tol);
    report.add("A+^ = D3 f+^",
               (abar.lowering_bar - d3 * f.lowering_bar).cwiseAbs().maxCoeff(), tol);
    report.add("A-^ = f-^ D4",
               (abar.raising_bar - f.raising_bar * d4).cwiseAbs().maxCoeff(), tol);
    return report;
}

}  // namespace polywh
