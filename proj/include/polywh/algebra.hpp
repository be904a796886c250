#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polywh {

/// Classification of the Fock representation carried by a parameter set:
/// finite of dimension d >= 2 (kappa_1 < 0) or infinite (kappa_1 >= 0).
class RepClass {
  public:
    static RepClass finite(int d) {
        if (d < 2) throw std::invalid_argument("finite representation needs d >= 2");
        return RepClass(d);
    }
    static RepClass infinite() { return RepClass(0); }

    [[nodiscard]] bool is_finite() const { return d_ > 0; }
    [[nodiscard]] int dim() const {
        if (d_ == 0) throw std::logic_error("infinite representation has no dimension");
        return d_;
    }

  private:
    explicit RepClass(int d) : d_(d) {}
    int d_;  // 0 encodes the infinite case
};

/// Parameter set of a polynomial oscillator algebra: r real deformation
/// parameters kappa_1..kappa_r and a phase phi entering the ladder actions.
///
/// Validation happens here, eagerly:
///   - kappa_i >= 0 for i >= 2;
///   - if kappa_1 < 0, then -1/kappa_1 must be a positive integer (within
///     1e-12 relative), and kappa_1 is snapped to exactly -1.0/(d-1) so that
///     the structure function vanishes exactly at n = d.
class AlgebraSpec {
  public:
    explicit AlgebraSpec(std::vector<double> kappas, double phi = 0.0);

    [[nodiscard]] const std::vector<double>& kappas() const { return kappas_; }
    [[nodiscard]] double phi() const { return phi_; }
    [[nodiscard]] int rank() const { return static_cast<int>(kappas_.size()); }

    [[nodiscard]] RepClass rep_class() const {
        return finite_dim_ ? RepClass::finite(*finite_dim_) : RepClass::infinite();
    }
    [[nodiscard]] bool is_finite() const { return finite_dim_.has_value(); }
    /// Dimension d = 1 - 1/kappa_1 of the finite representation.
    [[nodiscard]] int dim() const;

    /// Same parameters, different phase.
    [[nodiscard]] AlgebraSpec with_phi(double phi) const { return AlgebraSpec(kappas_, phi); }

    /// Number of strictly positive deformation parameters; determines the
    /// growth order of the structure function and hence series convergence.
    [[nodiscard]] int effective_order() const;

  private:
    std::vector<double> kappas_;
    double phi_;
    std::optional<int> finite_dim_;
};

/// Structure function F(n) = n * prod_i [1 + kappa_i (n-1)].
/// In the finite case the kappa_1 factor is evaluated as (d-n)/(d-1), which
/// is the same number but makes F(d) = 0 exact.
double structure_f(const AlgebraSpec& spec, int n);

/// G(n) = F(n+1) - F(n), the commutator spectrum of the ladder pair.
double structure_g(const AlgebraSpec& spec, int n);

/// Elementary symmetric polynomials (s_0, ..., s_r) of the kappas, s_0 = 1.
std::vector<double> vieta_coeffs(const AlgebraSpec& spec);

/// F(n) evaluated through the expanded polynomial n * sum_i s_i (n-1)^i.
/// Cross-checks the product form; both must agree to ~1e-12 relative.
double structure_f_vieta(const AlgebraSpec& spec, int n);

/// F(n)! = F(1) F(2) ... F(n), with F(0)! = 1.
double f_factorial(const AlgebraSpec& spec, int n);

/// Closed factorial/Gamma form of F(n)!.
///
/// Requires every relevant 1/kappa_i to be a positive integer: all i in the
/// infinite case, i >= 2 in the finite case (where kappa_1 = -1/(d-1) already
/// is by construction). Throws std::domain_error otherwise.
double f_factorial_closed(const AlgebraSpec& spec, int n);

/// Serializes to the plain-text config map "kappas = [..]\nphi = <real>".
std::string spec_to_config(const AlgebraSpec& spec);

/// Parses the config map produced by spec_to_config. Accepts "p/q" fractions
/// and decimals for the kappa entries; unknown keys are rejected.
AlgebraSpec spec_from_config(const std::string& text);

/// Parses one kappa value: either an exact fraction "p/q" or a decimal.
double parse_kappa(const std::string& token);

}  // namespace polywh
