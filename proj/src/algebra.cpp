#include "polywh/algebra.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace polywh {

namespace {

// Relative tolerance for recognizing -1/kappa_1 as an integer. Decimals that
// are not the rounded double of -1/(d-1) (e.g. truncated to ten digits) fall
// outside it and are rejected.
constexpr double kIntegerSnapTol = 1e-12;

}  // namespace

AlgebraSpec::AlgebraSpec(std::vector<double> kappas, double phi)
    : kappas_(std::move(kappas)), phi_(phi) {
    if (kappas_.empty()) throw std::invalid_argument("at least one kappa parameter required");
    if (!std::isfinite(phi_)) throw std::invalid_argument("phi must be finite");
    for (std::size_t i = 1; i < kappas_.size(); ++i) {
        if (!(kappas_[i] >= 0.0))
            throw std::invalid_argument("kappa_" + std::to_string(i + 1) +
                                        " must be nonnegative");
    }
    if (!std::isfinite(kappas_[0])) throw std::invalid_argument("kappa_1 must be finite");
    if (kappas_[0] < 0.0) {
        const double inv = -1.0 / kappas_[0];
        const double rounded = std::round(inv);
        if (rounded < 1.0 || std::abs(inv - rounded) > kIntegerSnapTol * rounded)
            throw std::invalid_argument(
                "kappa_1 < 0 requires -1/kappa_1 to be a positive integer; got " +
                std::to_string(kappas_[0]));
        const int d = static_cast<int>(rounded) + 1;
        finite_dim_ = d;
        kappas_[0] = -1.0 / static_cast<double>(d - 1);  // snap
    }
}

int AlgebraSpec::dim() const {
    if (!finite_dim_) throw std::logic_error("spec has an infinite-dimensional representation");
    return *finite_dim_;
}

int AlgebraSpec::effective_order() const {
    int m = 0;
    for (double k : kappas_)
        if (k != 0.0) ++m;
    return m;
}

double structure_f(const AlgebraSpec& spec, int n) {
    if (n < 0) throw std::domain_error("structure_f: n must be nonnegative");
    if (spec.is_finite()) {
        const int d = spec.dim();
        if (n > d) throw std::domain_error("structure_f: n exceeds representation dimension");
        double f = static_cast<double>(n) * static_cast<double>(d - n) /
                   static_cast<double>(d - 1);
        const auto& k = spec.kappas();
        for (std::size_t i = 1; i < k.size(); ++i) f *= 1.0 + k[i] * (n - 1);
        return f;
    }
    double f = static_cast<double>(n);
    for (double ki : spec.kappas()) f *= 1.0 + ki * (n - 1);
    return f;
}

double structure_g(const AlgebraSpec& spec, int n) {
    if (n < 0) throw std::domain_error("structure_g: n must be nonnegative");
    if (spec.is_finite() && n + 1 > spec.dim())
        throw std::domain_error("structure_g: n+1 exceeds representation dimension");
    return structure_f(spec, n + 1) - structure_f(spec, n);
}

std::vector<double> vieta_coeffs(const AlgebraSpec& spec) {
    const auto& k = spec.kappas();
    std::vector<double> s(k.size() + 1, 0.0);
    s[0] = 1.0;
    // incremental expansion of prod_i (1 + kappa_i t)
    for (double ki : k)
        for (std::size_t j = s.size() - 1; j >= 1; --j) s[j] += ki * s[j - 1];
    return s;
}

double structure_f_vieta(const AlgebraSpec& spec, int n) {
    if (n < 0) throw std::domain_error("structure_f_vieta: n must be nonnegative");
    if (spec.is_finite() && n > spec.dim())
        throw std::domain_error("structure_f_vieta: n exceeds representation dimension");
    const std::vector<double> s = vieta_coeffs(spec);
    const double t = static_cast<double>(n - 1);
    double sum = 0.0, p = 1.0;
    for (double si : s) {
        sum += si * p;
        p *= t;
    }
    return static_cast<double>(n) * sum;
}

double f_factorial(const AlgebraSpec& spec, int n) {
    if (n < 0) throw std::domain_error("f_factorial: n must be nonnegative");
    if (spec.is_finite() && n > spec.dim() - 1)
        throw std::domain_error("f_factorial: n must not exceed d-1");
    double p = 1.0;
    for (int i = 1; i <= n; ++i) p *= structure_f(spec, i);
    return p;
}

namespace {

// 1/kappa as a positive integer, or nullopt.
std::optional<long> integer_reciprocal(double kappa) {
    if (!(kappa > 0.0)) return std::nullopt;
    const double inv = 1.0 / kappa;
    const double rounded = std::round(inv);
    if (rounded < 1.0 || std::abs(inv - rounded) > 1e-12 * rounded) return std::nullopt;
    return static_cast<long>(rounded);
}

// (ell + n - 1)! / (ell^n (ell - 1)!)  ==  (ell)_n / ell^n
double pochhammer_over_power(long ell, int n) {
    double v = 1.0;
    for (int i = 0; i < n; ++i) v *= static_cast<double>(ell + i) / static_cast<double>(ell);
    return v;
}

}  // namespace

double f_factorial_closed(const AlgebraSpec& spec, int n) {
    if (n < 0) throw std::domain_error("f_factorial_closed: n must be nonnegative");
    const auto& k = spec.kappas();
    double v = 1.0;
    for (int i = 2; i <= n; ++i) v *= static_cast<double>(i);  // n!

    std::size_t first = 0;
    if (spec.is_finite()) {
        const int d = spec.dim();
        if (n > d - 1) throw std::domain_error("f_factorial_closed: n must not exceed d-1");
        // (d-1)! / ((d-1)^n (d-1-n)!)
        double fin = 1.0;
        for (int i = 0; i < n; ++i)
            fin *= static_cast<double>(d - 1 - i) / static_cast<double>(d - 1);
        v *= fin;
        first = 1;
    }
    for (std::size_t i = first; i < k.size(); ++i) {
        const auto ell = integer_reciprocal(k[i]);
        if (!ell)
            throw std::domain_error(
                "f_factorial_closed: 1/kappa_" + std::to_string(i + 1) +
                " is not a positive integer");
        v *= pochhammer_over_power(*ell, n);
    }
    return v;
}

double parse_kappa(const std::string& token) {
    const auto slash = token.find('/');
    if (slash != std::string::npos) {
        char* end = nullptr;
        const std::string num = token.substr(0, slash), den = token.substr(slash + 1);
        const double p = std::strtod(num.c_str(), &end);
        if (end != num.c_str() + num.size()) throw std::invalid_argument("bad fraction: " + token);
        const double q = std::strtod(den.c_str(), &end);
        if (end != den.c_str() + den.size() || q == 0.0)
            throw std::invalid_argument("bad fraction: " + token);
        return p / q;
    }
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || token.empty())
        throw std::invalid_argument("bad kappa value: " + token);
    return v;
}

std::string spec_to_config(const AlgebraSpec& spec) {
    std::ostringstream os;
    os.precision(17);
    os << "kappas = [";
    const auto& k = spec.kappas();
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? ", " : "") << k[i];
    os << "]\nphi = " << spec.phi() << "\n";
    return os.str();
}

AlgebraSpec spec_from_config(const std::string& text) {
    std::vector<double> kappas;
    double phi = 0.0;
    bool have_kappas = false;
    std::istringstream is(text);
    std::string line;
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        const auto b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(is, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("config line missing '=': " + line);
        const std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "kappas") {
            if (val.size() < 2 || val.front() != '[' || val.back() != ']')
                throw std::invalid_argument("kappas must be a [..] list");
            val = val.substr(1, val.size() - 2);
            std::string tok;
            std::istringstream vs(val);
            while (std::getline(vs, tok, ',')) {
                tok = trim(tok);
                if (!tok.empty()) kappas.push_back(parse_kappa(tok));
            }
            have_kappas = true;
        } else if (key == "phi") {
            phi = parse_kappa(val);  // same numeric grammar
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
    if (!have_kappas) throw std::invalid_argument("config missing 'kappas'");
    return AlgebraSpec(kappas, phi);
}

}  // namespace polywh
