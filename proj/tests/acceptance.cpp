// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "polywh/bessel.hpp"
#include "polywh/coherent.hpp"
#include "polywh/measures.hpp"
#include "polywh/quon.hpp"

using namespace polywh;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    bool pass = true;
    std::string detail;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Criterion(std::string n) : name(std::move(n)) {}

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }

    void finish(double runtime_limit_s = 0.0) {
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (runtime_limit_s > 0.0 && elapsed > runtime_limit_s) {
            pass = false;
            if (detail.empty()) detail = "runtime limit exceeded";
        }
        std::printf("%s  %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", name.c_str(), elapsed,
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (!pass) ++failures;
    }
};

double max_coeff_diff(const GrassmannElement& a, const GrassmannElement& b) {
    double m = 0.0;
    const GrassmannElement diff = a - b;
    for (const auto& [ab, c] : diff.terms()) m = std::max(m, std::abs(c));
    return m;
}

GrassmannElement random_element(int k, std::mt19937_64& rng, bool integer_coeffs) {
    GrassmannElement e(k);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::uniform_int_distribution<int> idist(-3, 3);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            e.insert(a, b, integer_coeffs ? GComplex(idist(rng), idist(rng))
                                          : GComplex(dist(rng), dist(rng)));
    return e;
}

void criterion_1_algebra() {
    Criterion c("criterion 1: product/Vieta agreement and finite trace identity");
    std::mt19937_64 rng(8675309);
    std::uniform_real_distribution<double> kdist(0.0, 2.0);
    std::uniform_int_distribution<int> rdist(1, 3);
    std::uniform_int_distribution<int> ddist(2, 12);
    for (int seed = 0; seed < 200; ++seed) {
        const int r = rdist(rng);
        std::vector<double> kappas(r);
        for (int i = 0; i < r; ++i) kappas[i] = kdist(rng);
        const bool finite = seed % 2 == 0;
        if (finite) kappas[0] = -1.0 / (ddist(rng) - 1);
        const AlgebraSpec spec(kappas, 0.0);

        const int top = finite ? spec.dim() : 25;
        const std::vector<double> s = vieta_coeffs(spec);
        for (int n = 0; n <= top; ++n) {
            const double a = structure_f(spec, n), b = structure_f_vieta(spec, n);
            // scale of the polynomial evaluation; at n = d the signed terms
            // cancel exactly while their magnitudes stay finite
            double scale = 0.0, p = 1.0;
            for (double si : s) {
                scale += std::abs(si) * p;
                p *= std::abs(n - 1.0);
            }
            scale *= n;
            c.require(std::abs(a - b) <= 1e-12 * std::max(1.0, scale),
                      "product and Vieta forms disagree");
        }
        if (finite) {
            double trace = 0.0, scale = 1.0;
            for (int n = 0; n < spec.dim(); ++n) {
                trace += structure_g(spec, n);
                scale += std::abs(structure_g(spec, n));
            }
            c.require(std::abs(trace) <= 1e-12 * scale, "Tr G(N) != 0");
        }
    }
    c.finish(1.0);
}

void criterion_2_representations() {
    Criterion c("criterion 2: ladder commutators, diagonal Hamiltonian, nilpotency");
    for (int d = 2; d <= 12; ++d) {
        const AlgebraSpec spec({-1.0 / (d - 1), 0.35}, 0.9);
        const FockOperators rep = build_finite_rep(spec);
        Matrix g = Matrix::Zero(d, d), f = Matrix::Zero(d, d);
        for (int n = 0; n < d; ++n) {
            g(n, n) = structure_g(spec, n);
            f(n, n) = structure_f(spec, n);
        }
        c.require((commutator(rep.a_minus, rep.a_plus) - g).cwiseAbs().maxCoeff() <= 1e-10,
                  "finite commutator relation");
        c.require((hamiltonian(rep) - f).cwiseAbs().maxCoeff() <= 1e-12, "finite Hamiltonian");
        c.require(nilpotency_order(rep.a_minus) == d && nilpotency_order(rep.a_plus) == d,
                  "finite nilpotency order");
    }
    for (int s = 2; s <= 12; ++s) {
        const AlgebraSpec spec({0.4, 0.15}, 1.2);
        const FockOperators rep = build_truncated_rep(spec, s);
        Matrix rhs = Matrix::Zero(s, s), f = Matrix::Zero(s, s);
        for (int n = 0; n < s; ++n) {
            rhs(n, n) = structure_g(spec, n);
            f(n, n) = structure_f(spec, n);
        }
        rhs(s - 1, s - 1) -= structure_f(spec, s);
        c.require((commutator(rep.a_minus, rep.a_plus) - rhs).cwiseAbs().maxCoeff() <= 1e-10,
                  "truncated commutator relation with boundary term");
        c.require((hamiltonian(rep) - f).cwiseAbs().maxCoeff() <= 1e-12, "truncated Hamiltonian");
        c.require(nilpotency_order(rep.a_minus) == s && nilpotency_order(rep.a_plus) == s,
                  "truncated nilpotency order");
    }
    c.finish(5.0);
}

void criterion_3_quon() {
    Criterion c("criterion 3: quon pair relations and passage formulas");
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> kdist(0.0, 2.0);
    std::uniform_real_distribution<double> pdist(0.0, 2.0 * std::numbers::pi);
    for (int k = 2; k <= 8; ++k) {
        const QuonParams params(k);
        for (int r = 1; r <= 3; ++r) {
            std::vector<double> kappas{-1.0 / (k - 1)};
            for (int i = 1; i < r; ++i) kappas.push_back(kdist(rng));
            const AlgebraSpec spec(kappas, pdist(rng));
            const PassageCoeffs coeffs = solve_passage_coeffs(spec);
            const QuonInOscillator a = build_A_ops(spec, coeffs);
            const Matrix id = Matrix::Identity(k, k);
            c.require((a.lowering * a.raising - params.q() * a.raising * a.lowering - id)
                              .cwiseAbs()
                              .maxCoeff() <= 1e-10,
                      "q-commutator of the embedded pair");
            const Matrix prod = a.raising * a.lowering;
            for (int n = 0; n < k; ++n)
                c.require(std::abs(prod(n, n) - q_number(n, params)) <= 1e-10,
                          "A+ A- spectrum");
            c.require((prod - Matrix(prod.diagonal().asDiagonal())).cwiseAbs().maxCoeff() <=
                          1e-10,
                      "A+ A- diagonality");
            c.require(verify_passage_formulas(spec, 1e-10).all_pass(), "passage formulas");
        }
    }
    c.finish(5.0);
}

void criterion_4_perelomov_norms() {
    Criterion c("criterion 4: perelomov closed-form norms and divergence verdicts");
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> rdist(0.0, 0.95);
    std::uniform_real_distribution<double> adist(0.0, 2.0 * std::numbers::pi);
    for (int ell = 2; ell <= 6; ++ell) {
        const AlgebraSpec spec({1.0 / ell});
        for (int trial = 0; trial < 50; ++trial) {
            const Complex z = std::polar(std::sqrt(static_cast<double>(ell)) * rdist(rng),
                                         adist(rng));
            const NormResult n = perelomov_norm_sq(spec, z);
            const double closed = std::pow(1.0 - std::norm(z) / ell, -ell);
            c.require(n.verdict == SeriesVerdict::converges, "in-disk labels must converge");
            c.require(std::abs(n.value - closed) <= 1e-8 * closed, "series norm vs closed form");
        }
    }
    std::uniform_real_distribution<double> zdist(-1.0, 1.0);
    for (int d = 2; d <= 8; ++d) {
        const AlgebraSpec spec({-1.0 / (d - 1)});
        const Complex z(zdist(rng), zdist(rng));
        const double closed = std::pow(1.0 + std::norm(z) / (d - 1), d - 1);
        c.require(std::abs(perelomov_norm_sq(spec, z).value - closed) <= 1e-12 * closed,
                  "finite-case closed norm");
    }
    c.require(perelomov_norm_sq(AlgebraSpec({0.7, 1.3}), Complex(0.2, 0.0)).verdict ==
                  SeriesVerdict::diverges,
              "two positive kappas must diverge");
    c.require(perelomov_norm_sq(AlgebraSpec({0.25}), Complex(2.1, 0.0)).verdict ==
                  SeriesVerdict::diverges,
              "outside the disk must diverge");
    c.finish(0.0);
}

void criterion_5_displacement_stability() {
    Criterion c("criterion 5: displacement form and temporal stability");
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> zdist(-1.0, 1.0);
    for (int d = 2; d <= 10; ++d) {
        const AlgebraSpec spec({-1.0 / (d - 1), 0.5}, 0.8);
        const BosonicState state =
            build_perelomov(spec, Complex(zdist(rng), zdist(rng)), 0.8);
        c.require(verify_displacement_form(state, 1e-12).all_pass(), "finite displacement");
        c.require(verify_temporal_stability(state, 1.3, 1e-10).all_pass(), "finite stability");
    }
    for (int s = 2; s <= 10; ++s) {
        const AlgebraSpec spec({0.5, 1.0 / 3.0}, 0.2);
        const BosonicState state =
            build_perelomov(spec, Complex(zdist(rng), zdist(rng)), 0.2, s);
        c.require(verify_displacement_form(state, 1e-12).all_pass(), "truncated displacement");
        c.require(verify_temporal_stability(state, 0.6, 1e-10).all_pass(),
                  "truncated stability");
    }
    const BosonicState series =
        build_perelomov(AlgebraSpec({0.25}), Complex(0.8, 0.3), 0.4);
    c.require(verify_temporal_stability(series, 0.9, 1e-10).all_pass(),
              "perelomov series stability");
    const BosonicState bg = build_bg_bosonic(AlgebraSpec({0.5}), Complex(1.0, -0.6), 0.7, 40);
    c.require(verify_temporal_stability(bg, 0.5, 1e-10).all_pass(), "bg series stability");
    const GrassmannState gs = build_bg_grassmann(AlgebraSpec({-0.25}), 5, 0.8);
    c.require(verify_temporal_stability(gs, 1.1, 1e-12).all_pass(), "grassmann stability");
    c.finish(0.0);
}

void criterion_6_bg_bosonic() {
    Criterion c("criterion 6: barut-girardello eigenstates and hypergeometric norms");
    for (int ell = 1; ell <= 4; ++ell) {
        const AlgebraSpec spec({1.0 / ell}, 0.45);
        const BosonicState state = build_bg_bosonic(spec, Complex(0.9, 0.4), 0.45, 60);
        c.require(verify_bg_eigenstate(state, 1e-10).all_pass(), "eigenstate residual");

        // independent hypergeometric route: 0F1(ell; ell x) via Pochhammer
        const double x = std::norm(Complex(0.9, 0.4));
        double term = 1.0, hyper = 1.0;
        for (int n = 1; n <= 200; ++n) {
            term *= (ell * x) / (static_cast<double>(n) * (ell + n - 1));
            hyper += term;
            if (term <= 1e-17 * hyper) break;
        }
        const double norm = bg_norm_sq(spec, Complex(0.9, 0.4), 200).value;
        c.require(std::abs(norm - hyper) <= 1e-10 * hyper, "norm vs 0F1 series");
    }
    // r = 2 norm against 0F2
    const AlgebraSpec two({0.5, 1.0 / 3.0});
    const double x = 0.49;
    double term = 1.0, hyper = 1.0;
    for (int n = 1; n <= 200; ++n) {
        term *= (6.0 * x) / (static_cast<double>(n) * (2 + n - 1) * (3 + n - 1));
        hyper += term;
        if (term <= 1e-17 * hyper) break;
    }
    const double norm2 = bg_norm_sq(two, Complex(0.7, 0.0), 200).value;
    c.require(std::abs(norm2 - hyper) <= 1e-10 * hyper, "r = 2 norm vs 0F2 series");
    c.finish(0.0);
}

void criterion_7_measures() {
    Criterion c("criterion 7: resolutions of identity, Wronskian, moment fit");
    for (int ell = 2; ell <= 4; ++ell) {
        const CoherentFamily fam = CoherentFamily::perelomov(AlgebraSpec({1.0 / ell}));
        const RadialMeasure measure = perelomov_disk_measure(ell);
        for (int n = 0; n <= 10; ++n) {
            const FrameResult r = frame_diagonal(fam, measure, n, 1e-8);
            c.require(std::abs(r.value - 1.0) <= 1e-5, "perelomov disk frame diagonal");
        }
    }
    for (int d = 3; d <= 8; ++d) {
        const CoherentFamily fam = CoherentFamily::perelomov(AlgebraSpec({-1.0 / (d - 1)}));
        const RadialMeasure measure = perelomov_finite_measure(d);
        for (int n = 0; n <= d - 1; ++n) {
            const FrameResult r = frame_diagonal(fam, measure, n, 1e-8);
            c.require(std::abs(r.value - 1.0) <= 1e-5, "perelomov finite frame diagonal");
        }
    }
    for (int ell = 1; ell <= 4; ++ell) {
        const CoherentFamily fam = CoherentFamily::barut_girardello(AlgebraSpec({1.0 / ell}));
        const RadialMeasure measure = bg_bessel_measure(ell);
        for (int n = 0; n <= 8; ++n) {
            const FrameResult r = frame_diagonal(fam, measure, n, 1e-8);
            c.require(std::abs(r.value - 1.0) <= 1e-5, "bessel frame diagonal");
        }
    }
    for (int nu = 0; nu <= 3; ++nu)
        for (double y = 0.1; y <= 30.0; y += 1.9) {
            const double w = bessel_i(nu, y) * bessel_k(nu + 1, y) +
                             bessel_i(nu + 1, y) * bessel_k(nu, y);
            c.require(std::abs(w - 1.0 / y) <= 1e-10 && std::abs(w - 1.0 / y) * y <= 1e-10,
                      "bessel Wronskian");
        }
    std::vector<double> grid;
    for (int j = 0; j < 60; ++j) grid.push_back(1e-3 * std::pow(40.0 / 1e-3, j / 59.0));
    const FitResult fit = fit_discrete_measure({1.0, 1.0, 2.0, 6.0, 24.0}, grid);
    c.require(fit.residual <= 1e-8, "harmonic moment fit residual");
    for (double w : fit.weights) c.require(w >= 0.0, "fitted weights must be nonnegative");
    c.finish(60.0);
}

void criterion_8_grassmann() {
    Criterion c("criterion 8: grassmann calculus, resolution, eigenstates");
    std::mt19937_64 rng(99);
    for (int k = 2; k <= 6; ++k) {
        GrassmannElement x = random_element(k, rng, false);
        GrassmannElement dx = x, dbx = x;
        for (int i = 0; i < k; ++i) {
            dx = q_derivative(dx, GrassmannVariable::theta);
            dbx = q_derivative(dbx, GrassmannVariable::theta_bar);
        }
        c.require(dx.is_zero() && dbx.is_zero(), "k-fold derivative annihilation");
    }
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 2 + trial % 5;
        const bool exact = k == 2;
        const GrassmannElement x = random_element(k, rng, exact);
        const GrassmannElement y = random_element(k, rng, exact);
        const GrassmannElement z = random_element(k, rng, exact);
        const double diff =
            max_coeff_diff(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
        c.require(exact ? diff == 0.0 : diff <= 1e-13, "associativity");
    }
    {
        // Berezin integration at k = 2
        GrassmannElement e(2);
        e.insert(0, 0, {1.5, -0.5});
        e.insert(1, 0, {2.0, 1.0});
        c.require(integrate(e, GrassmannVariable::theta).coeff(0, 0) == GComplex(2.0, 1.0),
                  "berezin top coefficient");
        c.require(integrate(GrassmannElement::scalar(2, 3.0), GrassmannVariable::theta).is_zero(),
                  "berezin kills constants");
    }
    for (int k = 2; k <= 5; ++k) {
        const AlgebraSpec spec({-1.0 / (k - 1)});
        const CheckReport modulus =
            verify_grassmann_resolution(spec, k, ResolutionMode::up_to_phase);
        c.require(modulus.all_pass(), "resolution of identity in modulus");
        int phases_reported = 0;
        for (const auto& item : modulus.items())
            if (!item.note.empty()) ++phases_reported;
        c.require(phases_reported == k, "per-k diagonal phase report");
    }
    {
        const double phi = 0.6;
        const GrassmannState qubit = build_bg_grassmann(AlgebraSpec({-1.0}), 2, phi);
        c.require(max_coeff_diff(qubit.amps[0], GrassmannElement::scalar(2, 1.0)) == 0.0,
                  "qubit level 0");
        c.require(max_coeff_diff(qubit.amps[1], GrassmannElement::monomial(
                                                    2, 1, 0, std::polar(1.0, -phi))) == 0.0,
                  "qubit level 1");
    }
    for (int d = 2; d <= 6; ++d) {
        const AlgebraSpec spec({-1.0 / (d - 1)}, 0.9);
        const FockOperators rep = build_finite_rep(spec);
        const GrassmannState state = build_bg_grassmann(spec, d, 0.9);
        c.require(verify_bg_grassmann_eigenstate(state, rep).all_pass(),
                  "ladder eigenstate identity");

        // su(2) form: J- |theta,phi> = sqrt(2j) theta |theta,phi>
        const Su2Generators gen = su2_generators(rep);
        const GrassmannElement scaled = GrassmannElement::monomial(
            d, 1, 0, GComplex(std::sqrt(static_cast<double>(d - 1)), 0.0));
        double res = 0.0;
        for (int m = 0; m < d; ++m) {
            GrassmannElement lhs(d);
            for (int n = 0; n < d; ++n) {
                const Complex a = gen.j_minus(m, n);
                if (a != Complex{0.0, 0.0}) lhs += GComplex(a) * state.amps[n];
            }
            res = std::max(res, max_coeff_diff(lhs, multiply(scaled, state.amps[m])));
        }
        c.require(res <= 1e-13, "su(2) eigenvalue sqrt(2j) theta");
    }
    {
        const AlgebraSpec harmonic({0.0}, 0.4);
        const GrassmannState pb = build_bg_grassmann(harmonic, 5, 0.4);
        c.require(
            verify_bg_grassmann_eigenstate(pb, build_truncated_rep(harmonic, 5)).all_pass(),
            "pegg-barnett eigenstate identity");
    }
    c.finish(0.0);
}

void criterion_9_negative_controls() {
    Criterion c("criterion 9: negative controls");
    const AlgebraSpec spec({0.5}, 0.3);
    const BosonicState per = build_perelomov(spec, Complex(0.5, 0.0), 0.3);
    const CheckReport fail = verify_bg_eigenstate(per, 1e-10);
    c.require(!fail.all_pass() && fail.max_residual() >= 1e-3,
              "perelomov must fail the eigenstate test");

    const CoherentFamily fam = CoherentFamily::barut_girardello(AlgebraSpec({0.5}));
    RadialMeasure bad = bg_bessel_measure(2);
    const auto good = bad.weight;
    bad.weight = [good](double x) { return 1.01 * good(x); };
    bool corrupted_fails = false;
    for (int n = 0; n <= 4; ++n) {
        const FrameResult r = frame_diagonal(fam, bad, n, 1e-8);
        if (std::abs(r.value - 1.0) > 1e-5) corrupted_fails = true;
    }
    c.require(corrupted_fails, "scaled measure must break the frame property");
    c.finish(0.0);
}

}  // namespace

int main() {
    criterion_1_algebra();
    criterion_2_representations();
    criterion_3_quon();
    criterion_4_perelomov_norms();
    criterion_5_displacement_stability();
    criterion_6_bg_bosonic();
    criterion_7_measures();
    criterion_8_grassmann();
    criterion_9_negative_controls();
    if (failures == 0)
        std::printf("acceptance: all 9 criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
