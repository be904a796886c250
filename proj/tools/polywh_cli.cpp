// polywh: tabulate, build and verify polynomial oscillator algebras, their
// quon/Grassmann companions and coherent-state families.
//
// Exit codes: 0 all checks passed, 1 a check or computation failed,
// 2 configuration error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>

#include "polywh/bessel.hpp"
#include "polywh/io.hpp"
#include "polywh/measures.hpp"

namespace {

using namespace polywh;

struct RunConfig {
    std::vector<std::string> kappa_tokens;
    double phi = 0.0;
    std::string family = "perelomov";
    double z_re = 0.0, z_im = 0.0;
    int order = 0;       // truncation order s / quon order k
    int cutoff = 64;     // series cutoff
    int max_n = 10;      // tabulation range
    double tol = 1e-10;
    std::string format = "pretty";  // json | csv | pretty
    std::string out;                // output path; empty = stdout
    std::string suite = "default";
    unsigned seed = 1;
};

// decimals pass through parse_kappa; the -1/kappa_1 integrality check itself
// lives in AlgebraSpec
AlgebraSpec make_spec(const RunConfig& cfg) {
    if (cfg.kappa_tokens.empty()) throw CLI::ValidationError("--kappas is required");
    std::vector<double> kappas;
    for (const auto& tok : cfg.kappa_tokens) kappas.push_back(parse_kappa(tok));
    return AlgebraSpec(kappas, cfg.phi);
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open config file " + path);
    std::string line;
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        const auto b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("config line missing '=': " + line);
        const std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "kappas") {
            if (val.size() < 2 || val.front() != '[' || val.back() != ']')
                throw CLI::ValidationError("kappas must be a [..] list");
            cfg.kappa_tokens.clear();
            std::istringstream vs(val.substr(1, val.size() - 2));
            std::string tok;
            while (std::getline(vs, tok, ','))
                if (!trim(tok).empty()) cfg.kappa_tokens.push_back(trim(tok));
        } else if (key == "phi") {
            cfg.phi = parse_kappa(val);
        } else if (key == "family") {
            cfg.family = val;
        } else if (key == "z_re") {
            cfg.z_re = std::stod(val);
        } else if (key == "z_im") {
            cfg.z_im = std::stod(val);
        } else if (key == "order") {
            cfg.order = std::stoi(val);
        } else if (key == "cutoff") {
            cfg.cutoff = std::stoi(val);
        } else if (key == "max_n") {
            cfg.max_n = std::stoi(val);
        } else if (key == "tol") {
            cfg.tol = std::stod(val);
        } else if (key == "format") {
            cfg.format = val;
        } else if (key == "out") {
            cfg.out = val;
        } else if (key == "suite") {
            cfg.suite = val;
        } else if (key == "seed") {
            cfg.seed = static_cast<unsigned>(std::stoul(val));
        } else {
            throw CLI::ValidationError("unknown config key: " + key);
        }
    }
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(cfg.out);
    if (!out) throw CLI::ValidationError("cannot open output file " + cfg.out);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

int cmd_tabulate(const RunConfig& cfg) {
    const AlgebraSpec spec = make_spec(cfg);
    int top = cfg.max_n;
    if (spec.is_finite()) top = std::min(top, spec.dim() - 1);

    if (cfg.format == "json") {
        Json rows = Json::array();
        for (int n = 0; n <= top; ++n)
            rows.push_back(Json{{"n", n},
                                {"F", structure_f(spec, n)},
                                {"G", structure_g(spec, n)},
                                {"F_factorial", f_factorial(spec, n)}});
        emit(cfg, Json{{"spec", to_json(spec)}, {"table", rows}}.dump(2));
        return 0;
    }
    std::ostringstream os;
    if (cfg.format == "csv") {
        os << "n,F,G,F_factorial\n";
        for (int n = 0; n <= top; ++n)
            os << n << ',' << format_double(structure_f(spec, n)) << ','
               << format_double(structure_g(spec, n)) << ','
               << format_double(f_factorial(spec, n)) << '\n';
    } else {
        os << "spec: " << spec_to_config(spec);
        if (spec.is_finite()) os << "representation: finite, d = " << spec.dim() << "\n";
        else os << "representation: infinite\n";
        os << "  n          F(n)          G(n)         F(n)!\n";
        for (int n = 0; n <= top; ++n) {
            char line[128];
            std::snprintf(line, sizeof(line), "%3d %13.6g %13.6g %13.6g\n", n,
                          structure_f(spec, n), structure_g(spec, n), f_factorial(spec, n));
            os << line;
        }
    }
    emit(cfg, os.str());
    return 0;
}

CheckReport suite_algebra(const AlgebraSpec& spec, const RunConfig& cfg) {
    CheckReport report;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> kdist(0.0, 2.0);

    const int top = spec.is_finite() ? spec.dim() : 24;
    double res_forms = 0.0;
    for (int n = 0; n <= top; ++n) {
        const double a = structure_f(spec, n), b = structure_f_vieta(spec, n);
        res_forms = std::max(res_forms, std::abs(a - b) / std::max(1.0, std::abs(a)));
    }
    report.add("product form = Vieta form", res_forms, 1e-12);

    double res_tel = 0.0;
    for (int n = 0; n <= top - 1; ++n) {
        double sum = 0.0;
        for (int m = 0; m < n; ++m) sum += structure_g(spec, m);
        res_tel = std::max(res_tel, std::abs(sum - structure_f(spec, n)));
    }
    report.add("telescoping F(n) = sum G(m)", res_tel, 1e-12);

    bool positive = true;
    for (int n = 1; n <= (spec.is_finite() ? spec.dim() - 1 : 24); ++n)
        positive = positive && structure_f(spec, n) > 0.0;
    report.add_bool("positivity of F on the representation range", positive);

    if (spec.is_finite()) {
        double trace = 0.0, scale = 1.0;
        for (int n = 0; n < spec.dim(); ++n) {
            trace += structure_g(spec, n);
            scale += std::abs(structure_g(spec, n));
        }
        report.add("Tr G(N) = 0", std::abs(trace) / scale, 1e-12);
    }

    // randomized cross-check of the two structure-function forms
    double res_rand = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> ks{kdist(rng)};
        if (trial % 2) ks.push_back(kdist(rng));
        AlgebraSpec random_spec(ks, 0.0);
        for (int n = 0; n <= 16; ++n) {
            const double a = structure_f(random_spec, n), b = structure_f_vieta(random_spec, n);
            res_rand = std::max(res_rand, std::abs(a - b) / std::max(1.0, std::abs(a)));
        }
    }
    report.add("randomized product = Vieta", res_rand, 1e-12);
    return report;
}

CheckReport suite_fock(const AlgebraSpec& spec, const RunConfig& cfg) {
    const FockOperators rep = spec.is_finite()
                                  ? build_finite_rep(spec)
                                  : build_truncated_rep(spec, cfg.order > 1 ? cfg.order : 6);
    return verify_wh_relations(rep, cfg.tol);
}

CheckReport suite_quon(const AlgebraSpec& spec, const RunConfig& cfg) {
    CheckReport report;
    const int k = spec.is_finite() ? spec.dim() : (cfg.order > 1 ? cfg.order : 4);
    const QuonParams params(k);
    report.merge(verify_quon_relations(params, cfg.tol));

    const AlgebraSpec finite_spec =
        spec.is_finite() ? spec : AlgebraSpec({-1.0 / (k - 1)}, spec.phi());
    const PassageCoeffs coeffs = solve_passage_coeffs(finite_spec);
    const QuonInOscillator a = build_A_ops(finite_spec, coeffs);
    const Matrix id = Matrix::Identity(k, k);
    report.add("A- A+ - q A+ A- = I",
               (a.lowering * a.raising - params.q() * a.raising * a.lowering - id)
                   .cwiseAbs()
                   .maxCoeff(),
               cfg.tol);
    report.merge(verify_passage_formulas(finite_spec, cfg.tol));
    return report;
}

CheckReport suite_grassmann(const AlgebraSpec& spec, const RunConfig& cfg) {
    const int k = spec.is_finite() ? spec.dim() : (cfg.order > 1 ? cfg.order : 3);
    CheckReport report = verify_grassmann_resolution(spec, k, ResolutionMode::strict);

    // derivative annihilation on a random element
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    GrassmannElement x(k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) x.insert(a, b, {dist(rng), dist(rng)});
    GrassmannElement dx = x;
    for (int i = 0; i < k; ++i) dx = q_derivative(dx, GrassmannVariable::theta);
    report.add_bool("(d_theta)^k annihilates", dx.is_zero());
    return report;
}

CheckReport suite_coherent(const AlgebraSpec& spec, const RunConfig& cfg) {
    CheckReport report;
    const Complex z{cfg.z_re == 0.0 && cfg.z_im == 0.0 ? 0.4 : cfg.z_re, cfg.z_im};
    if (spec.is_finite()) {
        const BosonicState state = build_perelomov(spec, z, spec.phi());
        report.merge(verify_displacement_form(state, cfg.tol));
        report.merge(verify_temporal_stability(state, 0.9, cfg.tol));
        const GrassmannState gs = build_bg_grassmann(spec, spec.dim(), spec.phi());
        report.merge(verify_bg_grassmann_eigenstate(gs, build_finite_rep(spec)));
    } else {
        const BosonicState bg = build_bg_bosonic(spec, z, spec.phi(), cfg.cutoff);
        report.merge(verify_bg_eigenstate(bg, cfg.tol));
        report.merge(verify_temporal_stability(bg, 0.7, cfg.tol));
    }
    return report;
}

CheckReport suite_measures(const AlgebraSpec& spec, const RunConfig& cfg) {
    CheckReport report;
    (void)spec;
    (void)cfg;
    // Wronskian of the modified Bessel pair
    double res = 0.0;
    for (double y = 0.1; y <= 30.0; y += 2.3) {
        for (int nu = 0; nu <= 3; ++nu) {
            const double w =
                bessel_i(nu, y) * bessel_k(nu + 1, y) + bessel_i(nu + 1, y) * bessel_k(nu, y);
            res = std::max(res, std::abs(w - 1.0 / y) * y);
        }
    }
    report.add("Bessel Wronskian I_v K_{v+1} + I_{v+1} K_v = 1/y", res, 1e-10);

    const AlgebraSpec ell2({0.5}, 0.0);
    const auto fam = CoherentFamily::barut_girardello(ell2);
    const auto frame = frame_diagonal(fam, bg_bessel_measure(2), 1, 1e-8);
    report.add("frame diagonal (bg, ell=2, n=1) = 1", std::abs(frame.value - 1.0), 1e-5);

    const FitResult fit =
        fit_discrete_measure({1.0, 1.0, 2.0, 6.0, 24.0},
                             [] {
                                 std::vector<double> g;
                                 for (int j = 0; j < 60; ++j)
                                     g.push_back(1e-3 * std::pow(40.0 / 1e-3, j / 59.0));
                                 return g;
                             }());
    report.add("moment fit residual", fit.residual, 1e-8);
    report.add_bool("fitted weights nonnegative", [&] {
        for (double w : fit.weights)
            if (w < 0.0) return false;
        return true;
    }());
    return report;
}

// measure checks export as CSV rows: family, spec, n, value, error estimate
int cmd_measure_csv(const RunConfig& cfg) {
    std::ostringstream os;
    os << measure_csv_header() << '\n';
    for (int ell = 2; ell <= 4; ++ell) {
        const AlgebraSpec spec({1.0 / ell});
        const CoherentFamily fam = CoherentFamily::perelomov(spec);
        const RadialMeasure measure = perelomov_disk_measure(ell);
        for (int n = 0; n <= 6; ++n) {
            const FrameResult r = frame_diagonal(fam, measure, n, 1e-8);
            os << measure_csv_row("perelomov", spec, n, r.value, r.error) << '\n';
        }
    }
    for (int ell = 1; ell <= 4; ++ell) {
        const AlgebraSpec spec({1.0 / ell});
        const CoherentFamily fam = CoherentFamily::barut_girardello(spec);
        const RadialMeasure measure = bg_bessel_measure(ell);
        for (int n = 0; n <= 6; ++n) {
            const FrameResult r = frame_diagonal(fam, measure, n, 1e-8);
            os << measure_csv_row("bg", spec, n, r.value, r.error) << '\n';
        }
    }
    emit(cfg, os.str());
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    if (cfg.suite == "measures" && cfg.format == "csv") return cmd_measure_csv(cfg);
    const AlgebraSpec spec = make_spec(cfg);
    CheckReport report;
    const std::string& s = cfg.suite;
    if (s == "algebra" || s == "default" || s == "all") report.merge(suite_algebra(spec, cfg));
    if (s == "fock" || s == "default" || s == "all") report.merge(suite_fock(spec, cfg));
    if (s == "quon" || s == "default" || s == "all") report.merge(suite_quon(spec, cfg));
    if (s == "grassmann" || s == "default" || s == "all") report.merge(suite_grassmann(spec, cfg));
    if (s == "coherent" || s == "default" || s == "all") report.merge(suite_coherent(spec, cfg));
    if (s == "measures" || s == "all") report.merge(suite_measures(spec, cfg));
    if (report.items().empty()) throw CLI::ValidationError("unknown suite: " + s);

    if (cfg.format == "pretty") {
        std::ostringstream os;
        for (const auto& item : report.items()) {
            char line[256];
            std::snprintf(line, sizeof(line), "%-55s %s  (residual %.3g, tol %.3g)%s%s\n",
                          item.name.c_str(), item.pass ? "PASS" : "FAIL", item.residual,
                          item.tol, item.note.empty() ? "" : "  ", item.note.c_str());
            os << line;
        }
        os << (report.all_pass() ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
        emit(cfg, os.str());
    } else {
        emit(cfg, to_json(report).dump(2));
    }
    return report.all_pass() ? 0 : 1;
}

int cmd_state(const RunConfig& cfg) {
    const AlgebraSpec spec = make_spec(cfg);
    const Complex z{cfg.z_re, cfg.z_im};

    if (cfg.family == "grassmann-bg") {
        const int k = spec.is_finite() ? spec.dim() : cfg.order;
        const GrassmannState state = build_bg_grassmann(spec, k, cfg.phi);
        if (cfg.format == "json") {
            emit(cfg, to_json(state).dump(2));
        } else {
            std::ostringstream os;
            for (int n = 0; n < k; ++n)
                os << (n ? " + " : "") << "[" << to_canonical_string(state.amps[n]) << "] |" << n
                   << ">";
            emit(cfg, os.str());
        }
        return 0;
    }

    BosonicState state{AlgebraSpec({0.0}), Family::perelomov, z, cfg.phi};
    if (cfg.family == "perelomov") {
        if (!spec.is_finite() && cfg.order == 0) {
            const NormResult norm = perelomov_norm_sq(spec, z);
            if (norm.verdict == SeriesVerdict::diverges) {
                if (spec.effective_order() > 1) {
                    emit(cfg, "diverges: two or more positive kappas, no bosonic label works");
                } else {
                    double kappa = 0.0;
                    for (double ki : spec.kappas()) kappa = std::max(kappa, ki);
                    emit(cfg, "diverges: |z| >= " + format_double(1.0 / std::sqrt(kappa)) +
                                  " lies outside the convergence disk");
                }
                return 1;
            }
        }
        std::optional<int> trunc;
        if (!spec.is_finite() && cfg.order > 1) trunc = cfg.order;
        state = build_perelomov(spec, z, cfg.phi, trunc);
    } else if (cfg.family == "bg") {
        state = build_bg_bosonic(spec, z, cfg.phi, cfg.cutoff);
    } else {
        throw CLI::ValidationError("unknown family: " + cfg.family +
                                   " (expected perelomov | bg | grassmann-bg)");
    }

    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "n,re,im,prob\n";
        for (Eigen::Index n = 0; n < state.coeffs.size(); ++n)
            os << n << ',' << format_double(state.coeffs(n).real()) << ','
               << format_double(state.coeffs(n).imag()) << ','
               << format_double(std::norm(state.coeffs(n))) << '\n';
        emit(cfg, os.str());
    } else {
        Json j = to_json(state);
        Json probs = Json::array();
        for (Eigen::Index n = 0; n < state.coeffs.size(); ++n)
            probs.push_back(std::norm(state.coeffs(n)));
        j["photon_distribution"] = probs;
        emit(cfg, j.dump(2));
    }
    return 0;
}

int cmd_dump(const RunConfig& cfg, const std::string& what) {
    const AlgebraSpec spec = make_spec(cfg);
    if (what == "rep") {
        const FockOperators rep = spec.is_finite()
                                      ? build_finite_rep(spec)
                                      : build_truncated_rep(spec, cfg.order > 1 ? cfg.order : 6);
        emit(cfg, to_json(rep).dump(2));
        return 0;
    }
    if (what == "passage") {
        const AlgebraSpec finite_spec =
            spec.is_finite() ? spec
                             : AlgebraSpec({-1.0 / ((cfg.order > 1 ? cfg.order : 4) - 1)},
                                           spec.phi());
        emit(cfg, to_json(solve_passage_coeffs(finite_spec)).dump(2));
        return 0;
    }
    throw CLI::ValidationError("unknown dump target: " + what + " (expected rep | passage)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "polywh: polynomial oscillator algebras, quon/Grassmann companions and "
        "coherent-state families"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    app.add_option("--config", config_path, "key=value config file (same keys as the flags)");
    app.add_option("--kappas", cfg.kappa_tokens,
                   "comma-separated deformation parameters; fractions like -1/3 are exact, "
                   "decimals must match -1/(d-1) to 1e-12 relative in the finite case")
        ->delimiter(',');
    app.add_option("--phi", cfg.phi, "phase parameter");
    app.add_option("--family", cfg.family, "perelomov | bg | grassmann-bg");
    app.add_option("--z-re", cfg.z_re, "label real part");
    app.add_option("--z-im", cfg.z_im, "label imaginary part");
    app.add_option("--order", cfg.order, "truncation order s / quon order k");
    app.add_option("--cutoff", cfg.cutoff, "series cutoff for infinite-case states");
    app.add_option("--max-n", cfg.max_n, "largest level to tabulate");
    app.add_option("--tol", cfg.tol, "verification tolerance");
    app.add_option("--format", cfg.format, "json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--out", cfg.out, "output file (default stdout)");
    app.add_option("--suite", cfg.suite,
                   "verification suite: default | all | algebra | fock | quon | grassmann | "
                   "coherent | measures");
    app.add_option("--seed", cfg.seed, "seed for randomized property runs");

    auto* tab = app.add_subcommand("tabulate", "print n, F(n), G(n), F(n)!");
    auto* verify = app.add_subcommand("verify", "run verification suites");
    auto* state = app.add_subcommand("state", "build a coherent state and dump coefficients");
    auto* dump = app.add_subcommand("dump", "export operators or passage coefficients as JSON");
    std::string dump_what = "rep";
    dump->add_option("what", dump_what, "rep | passage");
    auto* parse_el = app.add_subcommand(
        "parse-element", "parse a canonical element string and reprint it canonically");
    std::string element_text;
    parse_el->add_option("element", element_text, "canonical element string")->required();

    try {
        app.parse(argc, argv);
        if (!config_path.empty()) {
            apply_config_file(config_path, cfg);
            // flags win over the file
            std::vector<std::string> args(argv + 1, argv + argc);
            app.clear();
            app.parse(argc, argv);
        }
        if (tab->parsed()) return cmd_tabulate(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (state->parsed()) return cmd_state(cfg);
        if (dump->parsed()) return cmd_dump(cfg, dump_what);
        if (parse_el->parsed()) {
            if (cfg.order < 2) throw CLI::ValidationError("parse-element requires --order >= 2");
            emit(cfg, to_canonical_string(parse_canonical(element_text, cfg.order)));
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
