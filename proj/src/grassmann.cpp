#include "polywh/grassmann.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace polywh {

namespace {

// [n]_q for q = exp(2 pi i / k); zero exactly when n is a multiple of k.
GComplex deformed_number(int n, int k, bool conjugated) {
    if (n % k == 0) return {0.0, 0.0};
    const double ang = 2.0 * std::numbers::pi / k;
    const GComplex q = std::polar(1.0, conjugated ? -ang : ang);
    const GComplex qn = std::polar(1.0, (conjugated ? -ang : ang) * n);
    return (1.0 - qn) / (1.0 - q);
}

}  // namespace

GrassmannElement::GrassmannElement(int order) : k_(order) {
    if (order < 2) throw std::invalid_argument("grassmann order must be >= 2");
}

GrassmannElement GrassmannElement::scalar(int order, GComplex c) {
    GrassmannElement e(order);
    e.insert(0, 0, c);
    return e;
}

GrassmannElement GrassmannElement::monomial(int order, int a, int b, GComplex c) {
    GrassmannElement e(order);
    if (a < 0 || b < 0) throw std::invalid_argument("negative exponent");
    if (a < order && b < order) e.insert(a, b, c);  // powers >= k vanish
    return e;
}

GComplex GrassmannElement::coeff(int a, int b) const {
    const auto it = terms_.find({a, b});
    return it == terms_.end() ? GComplex{0.0, 0.0} : it->second;
}

void GrassmannElement::insert(int a, int b, GComplex c) {
    if (c == GComplex{0.0, 0.0}) return;
    auto [it, fresh] = terms_.try_emplace({a, b}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == GComplex{0.0, 0.0}) terms_.erase(it);
    }
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& rhs) {
    if (rhs.k_ != k_) throw std::invalid_argument("grassmann order mismatch");
    for (const auto& [ab, c] : rhs.terms_) insert(ab.first, ab.second, c);
    return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& rhs) {
    if (rhs.k_ != k_) throw std::invalid_argument("grassmann order mismatch");
    for (const auto& [ab, c] : rhs.terms_) insert(ab.first, ab.second, -c);
    return *this;
}

GrassmannElement& GrassmannElement::operator*=(GComplex c) {
    if (c == GComplex{0.0, 0.0}) {
        terms_.clear();
        return *this;
    }
    for (auto& [ab, v] : terms_) v *= c;
    return *this;
}

GComplex GrassmannElement::half_power(long j) const {
    long m = j % (2L * k_);
    if (m < 0) m += 2L * k_;
    // quarter turns are exact
    if (m == 0) return {1.0, 0.0};
    if (2 * m == k_) return {0.0, 1.0};          // exp(i pi/2)
    if (m == k_) return {-1.0, 0.0};             // exp(i pi)
    if (2 * m == 3L * k_) return {0.0, -1.0};    // exp(3 i pi/2)
    return std::polar(1.0, std::numbers::pi * static_cast<double>(m) / k_);
}

GrassmannElement multiply(const GrassmannElement& x, const GrassmannElement& y) {
    if (x.order() != y.order()) throw std::invalid_argument("grassmann order mismatch");
    const int k = x.order();
    GrassmannElement out(k);
    for (const auto& [xab, xc] : x.terms()) {
        for (const auto& [yab, yc] : y.terms()) {
            const int a = xab.first + yab.first;
            const int b = xab.second + yab.second;
            if (a >= k || b >= k) continue;
            // y's theta block crosses x's theta_bar block: q^{-1/2} each swap
            const long swaps = static_cast<long>(xab.second) * yab.first;
            out.insert(a, b, xc * yc * out.half_power(-swaps));
        }
    }
    return out;
}

GrassmannElement q_derivative(const GrassmannElement& x, GrassmannVariable which) {
    const int k = x.order();
    GrassmannElement out(k);
    for (const auto& [ab, c] : x.terms()) {
        const auto [a, b] = ab;
        if (which == GrassmannVariable::theta) {
            if (a == 0) continue;
            out.insert(a - 1, b, c * deformed_number(a, k, false));
        } else {
            if (b == 0) continue;
            out.insert(a, b - 1, c * deformed_number(b, k, true) * out.half_power(-a));
        }
    }
    return out;
}

GrassmannElement integrate(const GrassmannElement& x, GrassmannVariable which) {
    const int k = x.order();
    GrassmannElement out(k);
    for (const auto& [ab, c] : x.terms()) {
        const auto [a, b] = ab;
        if (which == GrassmannVariable::theta) {
            if (a == k - 1) out.insert(0, b, c);
        } else {
            if (b == k - 1) out.insert(a, 0, c);
        }
    }
    return out;
}

std::vector<MeasureTerm> measure_element(const AlgebraSpec& spec, int k) {
    if (spec.is_finite() && spec.dim() != k)
        throw std::invalid_argument("measure_element: order must equal the representation dimension");
    if (k < 2) throw std::invalid_argument("measure_element: order must be >= 2");
    std::vector<MeasureTerm> terms;
    terms.reserve(k);
    double ffact = 1.0;
    for (int n = 0; n < k; ++n) {
        if (n > 0) ffact *= structure_f(spec, n);
        terms.push_back({ffact, k - 1 - n, k - 1 - n});
    }
    return terms;
}

CheckReport verify_grassmann_resolution(const AlgebraSpec& spec, int k, ResolutionMode mode) {
    CheckReport report;
    const auto measure = measure_element(spec, k);

    std::vector<double> ffact(k, 1.0);
    for (int n = 1; n < k; ++n) ffact[n] = ffact[n - 1] * structure_f(spec, n);

    for (int n = 0; n < k; ++n) {
        for (int m = 0; m < k; ++m) {
            GComplex value{0.0, 0.0};
            for (const auto& term : measure) {
                GrassmannElement e = multiply(GrassmannElement::monomial(k, n, 0),
                                              GrassmannElement::monomial(k, term.left_exp, 0));
                e = multiply(e, GrassmannElement::monomial(k, 0, term.right_exp));
                e = multiply(e, GrassmannElement::monomial(k, 0, m));
                // innermost dtheta first, then dtheta_bar
                e = integrate(e, GrassmannVariable::theta);
                e = integrate(e, GrassmannVariable::theta_bar);
                value += term.weight * e.coeff(0, 0);
            }
            value /= ffact[n];

            const double expected = (n == m) ? 1.0 : 0.0;
            std::ostringstream name;
            name << "resolution (n=" << n << ",m=" << m << ")";
            if (mode == ResolutionMode::strict) {
                report.add(name.str(), std::abs(value - expected), 1e-14);
            } else {
                report.add(name.str(), std::abs(std::abs(value) - expected), 1e-14,
                           n == m ? "phase " + std::to_string(std::arg(value)) : "");
            }
        }
    }
    return report;
}

namespace {

const std::string kTheta = "θ";          // theta
const std::string kThetaBar = "θ̄"; // theta + combining macron

std::string format_complex(GComplex c) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "(%.17g%+.17gi)", c.real(), c.imag());
    return buf;
}

}  // namespace

std::string to_canonical_string(const GrassmannElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ab, c] : x.terms()) {  // map order: a ascending, then b
        if (!first) os << " + ";
        first = false;
        os << format_complex(c);
        if (ab.first > 0) os << " * " << kTheta << "^" << ab.first;
        if (ab.second > 0) os << (ab.first > 0 ? " " : " * ") << kThetaBar << "^" << ab.second;
    }
    return os.str();
}

GrassmannElement parse_canonical(const std::string& text, int order) {
    GrassmannElement out(order);
    if (text == "0") return out;

    auto read_exponent = [](std::string& tail, const std::string& token) -> int {
        const auto at = tail.find(token + "^");
        if (at == std::string::npos) return 0;
        std::size_t p = at + token.size() + 1;
        int v = 0;
        if (p >= tail.size() || !std::isdigit(static_cast<unsigned char>(tail[p])))
            throw std::invalid_argument("missing exponent after " + token);
        while (p < tail.size() && std::isdigit(static_cast<unsigned char>(tail[p])))
            v = v * 10 + (tail[p++] - '0');
        tail.replace(at, p - at, std::string(p - at, '#'));  // consume
        return v;
    };

    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t next = text.find(" + ", pos);
        const std::string term =
            text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? text.size() : next + 3;

        const auto close = term.find(')');
        if (term.empty() || term[0] != '(' || close == std::string::npos)
            throw std::invalid_argument("bad grassmann term: " + term);
        const std::string num = term.substr(1, close - 1);
        // the imaginary part's sign: last +/- not part of an exponent
        std::size_t isign = std::string::npos;
        for (std::size_t i = num.size(); i-- > 1;) {
            if ((num[i] == '+' || num[i] == '-') && num[i - 1] != 'e' && num[i - 1] != 'E') {
                isign = i;
                break;
            }
        }
        if (isign == std::string::npos || num.back() != 'i')
            throw std::invalid_argument("bad complex literal: " + num);
        const double re = std::stod(num.substr(0, isign));
        const double im = std::stod(num.substr(isign, num.size() - isign - 1));

        std::string tail = term.substr(close + 1);
        const int b = read_exponent(tail, kThetaBar);  // longer token first
        const int a = read_exponent(tail, kTheta);
        out.insert(a, b, {re, im});
    }
    return out;
}

}  // namespace polywh
