#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "polywh/io.hpp"
#include "polywh/quon.hpp"

using namespace polywh;

TEST_CASE("q-numbers") {
    const QuonParams k4(4);
    CHECK(q_number(0, k4) == Complex(0.0, 0.0));
    CHECK(q_number(1, k4) == Complex(1.0, 0.0));
    CHECK(std::abs(q_number(2, k4) - Complex(1.0, 1.0)) < 1e-15);  // 1 + i

    const QuonParams k2(2);
    CHECK(std::abs(q_number(2, k2)) == 0.0);  // fermionic saturation
    CHECK(std::abs(q_number(1, k2) - Complex(1.0, 0.0)) < 1e-15);

    // [n+1]_q - q [n]_q = 1 for all n >= 0
    for (int k = 2; k <= 9; ++k) {
        const QuonParams params(k);
        for (int n = 0; n <= 2 * k; ++n)
            CHECK(std::abs(q_number(n + 1, params) - params.q() * q_number(n, params) - 1.0) <
                  1e-14);
    }

    // [n]_qbar = conj([n]_q)
    const QuonParams k5(5);
    for (int n = 0; n <= 6; ++n) {
        const Complex bar = (1.0 - std::conj(k5.q_pow(n))) / (1.0 - k5.q_bar());
        CHECK(std::abs(bar - std::conj(q_number(n, k5))) < 1e-15);
    }

    // real argument path agrees with the integer path
    CHECK(std::abs(q_number(3.0, k5) - q_number(3, k5)) < 1e-15);
}

TEST_CASE("q-factorial") {
    const QuonParams k3(3);
    CHECK(q_factorial(0, k3) == Complex(1.0, 0.0));
    CHECK(std::abs(q_factorial(2, k3) - Complex(0.5, 0.5 * std::sqrt(3.0))) < 1e-15);
    CHECK(q_factorial(1, QuonParams(2)) == Complex(1.0, 0.0));
}

TEST_CASE("k-fermion ladder matrices") {
    const KFermionOps fermion = build_kfermion_ops(QuonParams(2));
    CHECK(fermion.lowering(0, 1) == Complex(1.0, 0.0));
    CHECK(fermion.lowering(1, 0) == Complex(0.0, 0.0));
    CHECK((fermion.lowering * fermion.lowering).cwiseAbs().maxCoeff() == 0.0);

    const KFermionOps k3 = build_kfermion_ops(QuonParams(3));
    CHECK(k3.lowering.col(0).cwiseAbs().maxCoeff() == 0.0);  // f-|0> = 0
    // <1|f-|2> = principal sqrt of 1 + exp(2 pi i/3) = e^{i pi/6}
    CHECK(std::abs(k3.lowering(1, 2) - std::polar(1.0, std::numbers::pi / 6.0)) < 1e-15);
}

TEST_CASE("quon algebra relations for k = 2..8") {
    for (int k = 2; k <= 8; ++k) {
        const CheckReport report = verify_quon_relations(QuonParams(k), 1e-12);
        INFO("k = ", k);
        CHECK(report.all_pass());
    }
    // k = 4 raising nilpotency is exact
    const KFermionOps k4 = build_kfermion_ops(QuonParams(4));
    Matrix p = Matrix::Identity(4, 4);
    for (int i = 0; i < 4; ++i) p = p * k4.raising;
    CHECK(p.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("passage coefficients") {
    const PassageCoeffs c2 = solve_passage_coeffs(AlgebraSpec({-1.0}));
    REQUIRE(c2.c.size() == 1);
    CHECK(std::abs(c2.c[0] - Complex(1.0, 0.0)) < 1e-14);

    // first equation always gives C_1 = [1]_q / F(1) = 1
    for (int k = 3; k <= 8; ++k) {
        const PassageCoeffs c = solve_passage_coeffs(AlgebraSpec({-1.0 / (k - 1)}));
        CHECK(std::abs(c.c[0] - Complex(1.0, 0.0)) < 1e-14);
    }

    // brute-force residual of T C = rhs, k = 3
    const AlgebraSpec spec3({-0.5});
    const PassageCoeffs c3 = solve_passage_coeffs(spec3);
    const QuonParams q3(3);
    for (int n = 1; n <= 2; ++n) {
        Complex lhs = 0.0;
        for (int i = 1; i <= n; ++i) {
            double ratio = 1.0;
            for (int j = n - i + 1; j <= n; ++j) ratio *= structure_f(spec3, j);
            lhs += c3.c[i - 1] * ratio;
        }
        CHECK(std::abs(lhs - q_number(n, q3)) < 1e-12);
    }

    CHECK_THROWS_AS((void)solve_passage_coeffs(AlgebraSpec({0.5})), std::invalid_argument);
}

TEST_CASE("embedded quon pair: matrices and actions") {
    const AlgebraSpec d2({-1.0});
    const QuonInOscillator a2 = build_A_ops(d2, solve_passage_coeffs(d2));
    CHECK(std::abs(a2.lowering(0, 1) - 1.0) < 1e-14);
    CHECK(std::abs(a2.lowering(1, 0)) == 0.0);

    // A+ is the bare raising operator of the representation
    const AlgebraSpec d5({-0.25, 0.6}, 0.4);
    const FockOperators rep5 = build_finite_rep(d5);
    const QuonInOscillator a5 = build_A_ops(d5, solve_passage_coeffs(d5));
    CHECK((a5.raising - rep5.a_plus).cwiseAbs().maxCoeff() == 0.0);

    // entrywise action <n-1|A-|n> = [n]_q / sqrt(F(n)) e^{+i G(n-1) phi}
    const AlgebraSpec d4({-1.0 / 3.0}, 0.9);
    const QuonParams q4(4);
    const QuonInOscillator a4 = build_A_ops(d4, solve_passage_coeffs(d4));
    for (int n = 1; n <= 3; ++n) {
        const Complex expected = q_number(n, q4) / std::sqrt(structure_f(d4, n)) *
                                 std::polar(1.0, structure_g(d4, n - 1) * d4.phi());
        CHECK(std::abs(a4.lowering(n - 1, n) - expected) < 1e-12);
    }

    // conjugate pair: A+^ = a-, and for k = 2, A-^ = a+
    const QuonBarInOscillator abar2 = build_Abar_ops(d2, solve_passage_coeffs(d2));
    const FockOperators rep2 = build_finite_rep(d2);
    CHECK((abar2.lowering_bar - rep2.a_minus).cwiseAbs().maxCoeff() == 0.0);
    CHECK((abar2.raising_bar - rep2.a_plus).cwiseAbs().maxCoeff() < 1e-14);

    // <n+1|A-^|n> = [n+1]_qbar / sqrt(F(n+1)) e^{-i G(n) phi}
    const QuonBarInOscillator abar4 = build_Abar_ops(d4, solve_passage_coeffs(d4));
    for (int n = 0; n <= 2; ++n) {
        const Complex expected = std::conj(q_number(n + 1, q4)) /
                                 std::sqrt(structure_f(d4, n + 1)) *
                                 std::polar(1.0, -structure_g(d4, n) * d4.phi());
        CHECK(std::abs(abar4.raising_bar(n + 1, n) - expected) < 1e-12);
    }
}

TEST_CASE("embedded quon pair: algebra relations, randomized specs") {
    std::mt19937_64 rng(987654);
    std::uniform_real_distribution<double> kdist(0.0, 2.0);
    std::uniform_real_distribution<double> pdist(0.0, 2.0 * std::numbers::pi);
    for (int k = 2; k <= 8; ++k) {
        for (int r = 1; r <= 3; ++r) {
            std::vector<double> kappas{-1.0 / (k - 1)};
            for (int i = 1; i < r; ++i) kappas.push_back(kdist(rng));
            const AlgebraSpec spec(kappas, pdist(rng));
            const QuonParams params(k);
            const PassageCoeffs coeffs = solve_passage_coeffs(spec);
            const QuonInOscillator a = build_A_ops(spec, coeffs);
            const QuonBarInOscillator abar = build_Abar_ops(spec, coeffs);
            const Matrix id = Matrix::Identity(k, k);

            INFO("k = ", k, ", r = ", r);
            CHECK((a.lowering * a.raising - params.q() * a.raising * a.lowering - id)
                      .cwiseAbs()
                      .maxCoeff() < 1e-10);
            CHECK((abar.lowering_bar * abar.raising_bar -
                   params.q_bar() * abar.raising_bar * abar.lowering_bar - id)
                      .cwiseAbs()
                      .maxCoeff() < 1e-10);

            // A+ A- = diag([n]_q), A- A+ = diag([n+1]_q)
            const Matrix prod_down = a.raising * a.lowering;
            const Matrix prod_up = a.lowering * a.raising;
            for (int n = 0; n < k; ++n) {
                CHECK(std::abs(prod_down(n, n) - q_number(n, params)) < 1e-10);
                CHECK(std::abs(prod_up(n, n) - q_number(n + 1, params)) < 1e-10);
            }

            const FockOperators rep = build_finite_rep(spec);
            CHECK((commutator(rep.number, a.lowering) + a.lowering).cwiseAbs().maxCoeff() < 1e-10);
            CHECK((commutator(rep.number, a.raising) - a.raising).cwiseAbs().maxCoeff() < 1e-10);

            CHECK(nilpotency_order(a.lowering) == k);
            CHECK(nilpotency_order(a.raising) == k);
        }
    }
}

TEST_CASE("passage formulas as matrix identities") {
    CHECK(verify_passage_formulas(AlgebraSpec({-1.0}, 0.0), 1e-12).all_pass());
    CHECK(verify_passage_formulas(AlgebraSpec({-0.5}, 0.7), 1e-10).all_pass());
    for (int k = 2; k <= 8; ++k)
        CHECK(verify_passage_formulas(AlgebraSpec({-1.0 / (k - 1), 0.3, 1.2}, 0.9), 1e-10)
                  .all_pass());

    // worst admissible conditioning: k = 8 with both extra kappas at the top
    // of the range amplifies cancellation in the assembly to ~4e11
    const AlgebraSpec corner({-1.0 / 7.0, 2.0, 2.0}, 2.7);
    CHECK(verify_passage_formulas(corner, 1e-10).all_pass());
    const QuonInOscillator a = build_A_ops(corner, solve_passage_coeffs(corner));
    const QuonParams q8(8);
    CHECK((a.lowering * a.raising - q8.q() * a.raising * a.lowering -
           Matrix::Identity(8, 8))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
}

TEST_CASE("passage coefficients export") {
    const Json j = to_json(solve_passage_coeffs(AlgebraSpec({-0.5})));
    CHECK(j["k"] == 3);
    CHECK(j["c"].size() == 2);
    CHECK(j["c"][0][0] == doctest::Approx(1.0));
}
