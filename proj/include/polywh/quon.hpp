#pragma once

#include <vector>

#include "polywh/fock.hpp"

namespace polywh {

/// Primitive k-th root of unity q = exp(2 pi i / k) and its integer powers.
/// Powers are built by repeated multiplication, renormalized to unit modulus
/// at each step so long chains do not drift.
class QuonParams {
  public:
    explicit QuonParams(int k);

    [[nodiscard]] int order() const { return k_; }
    [[nodiscard]] Complex q() const { return powers_[1 % k_]; }
    [[nodiscard]] Complex q_bar() const { return std::conj(q()); }
    /// q^j for any integer j (reduced mod k).
    [[nodiscard]] Complex q_pow(long j) const;

  private:
    int k_;
    std::vector<Complex> powers_;  // q^0 .. q^{k-1}
};

/// Deformed number [x]_q = (1 - q^x) / (1 - q).
/// For integer x this is the geometric sum 1 + q + ... + q^{x-1}.
Complex q_number(int n, const QuonParams& params);
Complex q_number(double x, const QuonParams& params);

/// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
Complex q_factorial(int n, const QuonParams& params);

/// The four ladder matrices of the order-k quon pair on the k-level Fock
/// space. `lowering`/`raising` obey the q-commutator
///   lowering raising - q raising lowering = I,
/// their adjoints `lowering_bar` = raising^dag and `raising_bar` =
/// lowering^dag obey the conjugate relation with q_bar, and all four are
/// nilpotent of order k. The mixed relation
///   lowering lowering_bar = q^{-1/2} lowering_bar lowering
/// holds with the principal branch q^{1/2} = exp(i pi / k).
struct KFermionOps {
    Matrix lowering;       // f_-
    Matrix raising;        // f_+
    Matrix lowering_bar;   // (f_+)^dagger, annihilates in the conjugate algebra
    Matrix raising_bar;    // (f_-)^dagger, creates in the conjugate algebra
};

KFermionOps build_kfermion_ops(const QuonParams& params);

/// Residuals of the q-commutator, the conjugate commutator, the mixed
/// half-power relation and the four order-k nilpotencies.
CheckReport verify_quon_relations(const QuonParams& params, double tol);

/// Coefficients C_1..C_{k-1} expressing a q-deformed lowering operator as
/// sum_i C_i (a+)^{i-1} (a-)^i on a d = k dimensional representation.
struct PassageCoeffs {
    int k = 0;
    std::vector<Complex> c;
};

/// Solves the lower-triangular system
///   sum_{i<=n} C_i F(n)!/F(n-i)! = [n]_q   (n = 1..k-1)
/// by forward substitution. Requires a finite spec; k is taken to be its
/// dimension. The diagonal entries F(n)! are positive, so the solution is
/// unique; the residual is re-checked and must be <= 1e-10.
PassageCoeffs solve_passage_coeffs(const AlgebraSpec& spec);

/// Lowering/raising pair generating the quon algebra inside the oscillator
/// representation: lowering = sum_i C_i (a+)^{i-1}(a-)^i, raising = a+.
struct QuonInOscillator {
    Matrix lowering;  // A_-
    Matrix raising;   // A_+
};

QuonInOscillator build_A_ops(const AlgebraSpec& spec, const PassageCoeffs& coeffs);

/// Conjugate-algebra pair: lowering_bar = a-, raising_bar =
/// sum_i conj(C_i) (a+)^i (a-)^{i-1}.
struct QuonBarInOscillator {
    Matrix lowering_bar;  // A_+^+
    Matrix raising_bar;   // A_-^+
};

QuonBarInOscillator build_Abar_ops(const AlgebraSpec& spec, const PassageCoeffs& coeffs);

/// Verifies, as matrix identities, that the oscillator-embedded quon pair
/// factors through the bare k-fermion matrices by diagonal rescalings:
///   A_- = D1 f_-,  A_+ = f_+ D2,  A_+^+ = D3 f_+^dag,  A_-^+ = f_-^dag D4
/// with D1 = ([N+1]_q / F(N+1))^{1/2} e^{+i G(N) phi}, D2 its reciprocal with
/// opposite phase, and D3, D4 the q_bar analogues. Diagonal entries that sit
/// in the kernel of the adjacent ladder are never used and are set to zero.
CheckReport verify_passage_formulas(const AlgebraSpec& spec, double tol);

}  // namespace polywh
