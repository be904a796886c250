#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polywh/algebra.hpp"
#include "polywh/report.hpp"

namespace polywh {

using GComplex = std::complex<double>;

enum class GrassmannVariable { theta, theta_bar };

/// Element of the order-k algebra generated by two nilpotent variables theta
/// and theta_bar with theta^k = theta_bar^k = 0 and the exchange rule
/// theta theta_bar = q^{1/2} theta_bar theta, q^{1/2} = exp(i pi / k).
///
/// Elements are kept in the normal order "all theta left of all theta_bar":
/// a map from exponent pairs (a, b), 0 <= a, b < k, to complex coefficients.
/// Exactly-zero coefficients are pruned.
class GrassmannElement {
  public:
    using TermMap = std::map<std::pair<int, int>, GComplex>;

    explicit GrassmannElement(int order);

    static GrassmannElement zero(int order) { return GrassmannElement(order); }
    static GrassmannElement scalar(int order, GComplex c);
    static GrassmannElement monomial(int order, int a, int b, GComplex c = 1.0);
    static GrassmannElement theta(int order) { return monomial(order, 1, 0); }
    static GrassmannElement theta_bar(int order) { return monomial(order, 0, 1); }

    [[nodiscard]] int order() const { return k_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] GComplex coeff(int a, int b) const;
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    GrassmannElement& operator+=(const GrassmannElement& rhs);
    GrassmannElement& operator-=(const GrassmannElement& rhs);
    GrassmannElement& operator*=(GComplex c);

    friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) {
        return a += b;
    }
    friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) {
        return a -= b;
    }
    friend GrassmannElement operator*(GComplex c, GrassmannElement a) { return a *= c; }

    /// q^{j/2} = exp(i pi j / k) reduced mod 2k; the quarter-turn entries
    /// (+-1, +-i) are exact so that order-2 phase arithmetic stays exact.
    [[nodiscard]] GComplex half_power(long j) const;

    void insert(int a, int b, GComplex c);  // accumulate, pruning zeros

  private:
    int k_;
    TermMap terms_;
};

/// Product in normal order. Each theta of the right factor moving left past
/// a theta_bar of the left factor contributes one factor q^{-1/2}; exponents
/// reaching k kill the monomial.
GrassmannElement multiply(const GrassmannElement& x, const GrassmannElement& y);

/// q-derivative: d_theta theta^a theta_bar^b = [a]_q theta^{a-1} theta_bar^b;
/// d_theta_bar crosses the theta block at q^{-1/2} per theta before acting,
///   d_theta_bar theta^a theta_bar^b = q^{-a/2} [b]_qbar theta^a theta_bar^{b-1},
/// so that d_theta d_theta_bar = q^{-1/2} d_theta_bar d_theta as operators.
GrassmannElement q_derivative(const GrassmannElement& x, GrassmannVariable which);

/// Coefficient-extraction integral: the named variable integrates to 1 at
/// exponent k-1 and to 0 below; differentials are phase-transparent.
GrassmannElement integrate(const GrassmannElement& x, GrassmannVariable which);

/// One term of the two-sided resolution measure: weight * theta^left ...
/// theta_bar^right, to be sandwiched between state monomials.
struct MeasureTerm {
    double weight;  // F(n)!
    int left_exp;   // k-1-n
    int right_exp;  // k-1-n
};

/// Measure sum_{n<k} F(n)! dtheta theta^{k-1-n} theta_bar^{k-1-n} dtheta_bar
/// with F from the finite case when the spec is finite (then k must equal d)
/// and from the infinite case otherwise (k plays the truncation order).
std::vector<MeasureTerm> measure_element(const AlgebraSpec& spec, int k);

enum class ResolutionMode { strict, up_to_phase };

/// Evaluates (1/F(n)!) * integral of theta^n dmu theta_bar^m for all n, m.
/// strict mode demands exactly delta_{n,m}; up_to_phase demands modulus
/// delta_{n,m} and records the realized unit phase of each diagonal entry.
CheckReport verify_grassmann_resolution(const AlgebraSpec& spec, int k, ResolutionMode mode);

/// Canonical rendering "c * θ^a θ̄^b + ..." with monomials ordered by
/// ascending (a, b); parseable back by parse_canonical.
std::string to_canonical_string(const GrassmannElement& x);
GrassmannElement parse_canonical(const std::string& text, int order);

}  // namespace polywh
