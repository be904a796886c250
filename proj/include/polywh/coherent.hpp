#pragma once

#include <optional>

#include "polywh/fock.hpp"
#include "polywh/grassmann.hpp"

namespace polywh {

enum class Family { perelomov, barut_girardello };

enum class SeriesVerdict { exact_finite, converges, diverges };

/// Value of a squared normalization sum together with how it was obtained:
/// an exact finite sum, a convergent series cut off with a tail bound, or a
/// divergence verdict (value then holds the meaningless partial sum).
struct NormResult {
    double value = 0.0;
    SeriesVerdict verdict = SeriesVerdict::exact_finite;
    double tail_bound = 0.0;
    int terms = 0;
};

/// How far infinite-case series are pushed: stop once the next term falls
/// below `rel_stop` of the running sum, never beyond `max_terms`.
struct SeriesOptions {
    double rel_stop = 1e-14;
    int max_terms = 500;
};

/// Normalized coherent state with a complex label on a Fock basis.
///
/// Perelomov amplitudes:         c_n ~ sqrt(F(n)!)/n! z^n e^{-i F(n) phi}
/// Barut-Girardello amplitudes:  c_n ~ z^n / sqrt(F(n)!) e^{-i F(n) phi}
struct BosonicState {
    AlgebraSpec spec;
    Family family;
    Complex z;
    double phi;
    bool truncated = false;   // built on the order-s cut of an infinite spec
    bool series = false;      // infinite-case series, `coeffs` holds the cutoff
    Vector coeffs;            // normalized
    double norm_sq = 0.0;     // pre-normalization sum of |amplitude|^2
    double tail_bound = 0.0;  // only meaningful in series mode
};

/// Unnormalized coherent state with a nilpotent label: amplitude n is the
/// algebra element theta^n e^{-i F(n) phi} / sqrt(F(n)!).
struct GrassmannState {
    AlgebraSpec spec;
    int order;  // k = d (finite spec) or k = s (truncated)
    double phi;
    bool truncated;
    std::vector<GrassmannElement> amps;
};

/// Squared Perelomov normalization sum_n F(n)!/(n!)^2 |z|^{2n}.
/// Finite specs sum d terms exactly; `trunc` sums s terms of the infinite
/// structure function; otherwise the series is classified: it converges on
/// the whole plane when no kappa is positive, inside |z|^2 < 1/kappa when
/// exactly one is, and nowhere (z != 0) when two or more are.
NormResult perelomov_norm_sq(const AlgebraSpec& spec, Complex z,
                             std::optional<int> trunc = std::nullopt,
                             const SeriesOptions& opts = {});

/// Builds the normalized Perelomov state. Infinite case demands a convergent
/// label (throws std::domain_error on a divergence verdict).
BosonicState build_perelomov(const AlgebraSpec& spec, Complex z, double phi,
                             std::optional<int> trunc = std::nullopt,
                             const SeriesOptions& opts = {});

/// Squared Barut-Girardello normalization sum_n |z|^{2n}/F(n)!; entire in z.
NormResult bg_norm_sq(const AlgebraSpec& spec, Complex z, int cutoff);

/// Normalized Barut-Girardello state on an infinite spec, cut at `cutoff`.
BosonicState build_bg_bosonic(const AlgebraSpec& spec, Complex z, double phi, int cutoff);

/// Compares the state against exp(z a+)|0> (or exp(z a+(s))|0>), normalized.
/// The exponential is an exact finite Taylor sum since a+ is nilpotent.
CheckReport verify_displacement_form(const BosonicState& state, double tol);

/// Applies the e^{-i F(n) t} evolution phases and compares against the state
/// rebuilt at phase phi + t.
CheckReport verify_temporal_stability(const BosonicState& state, double t, double tol);
CheckReport verify_temporal_stability(const GrassmannState& state, double t, double tol);

/// Checks a- |state> = z |state>: by the ladder matrix in finite/truncated
/// mode, by the index-shift recurrence below the cutoff in series mode.
CheckReport verify_bg_eigenstate(const BosonicState& state, double tol);

/// Barut-Girardello state with a nilpotent label of order k; requires k = d
/// for a finite spec, and treats k as the truncation order otherwise.
GrassmannState build_bg_grassmann(const AlgebraSpec& spec, int k, double phi);

/// <state|state> as an algebra element: bra amplitudes use theta_bar with
/// conjugated scalars and sit left of the ket amplitudes; the result is in
/// normal order.
GrassmannElement bg_grassmann_norm(const GrassmannState& state);

/// Coefficient of theta^n theta_bar^n in bg_grassmann_norm re-expressed
/// against the (theta_bar theta)^n reference word; equals
/// exp(-i pi n(n-1)/(2k)) / F(n)!.
GComplex bg_grassmann_norm_phase(const GrassmannState& state, int n);

/// Exact symbolic check of a- |theta,phi> = theta |theta,phi>.
CheckReport verify_bg_grassmann_eigenstate(const GrassmannState& state,
                                           const FockOperators& rep);

/// Angular-momentum generators J-, J+, J3 carried by a finite r = 1
/// representation: J3 = diag(n - j) with 2j = d - 1.
struct Su2Generators {
    Matrix j_minus, j_plus, j3;
    double j;
};
Su2Generators su2_generators(const FockOperators& rep);

/// su(1,1)-type generators on a truncated r = 1, kappa > 0 representation;
/// b = 1/(2 kappa) is the Bargmann index. [K-, K+] = 2 K3 holds away from
/// the truncation boundary |s-1>, whose deviation the report records.
struct Su11Generators {
    Matrix k_minus, k_plus, k3;
    double b;
    CheckReport boundary;
};
Su11Generators su11_generators(const FockOperators& rep);

/// Radial profile of a family, used by resolution-of-identity checks:
/// |<n|z>|^2 (unnormalized) = coeff_sq(n) * x^n with x = |z|^2, and
/// norm_sq(x) the corresponding normalization sum.
class CoherentFamily {
  public:
    static CoherentFamily perelomov(const AlgebraSpec& spec,
                                    std::optional<int> trunc = std::nullopt);
    static CoherentFamily barut_girardello(const AlgebraSpec& spec);

    [[nodiscard]] double coeff_sq(int n) const;
    [[nodiscard]] double norm_sq(double x) const;
    /// Highest occupied level, or nullopt when unbounded.
    [[nodiscard]] std::optional<int> max_level() const;
    [[nodiscard]] Family family() const { return family_; }
    [[nodiscard]] const AlgebraSpec& spec() const { return spec_; }

  private:
    CoherentFamily(Family f, AlgebraSpec spec, std::optional<int> trunc);
    Family family_;
    AlgebraSpec spec_;
    std::optional<int> trunc_;
};

}  // namespace polywh
