#include "polywh/bessel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "polywh/quadrature.hpp"

namespace polywh {

double bessel_i(int nu, double y) {
    if (nu < 0) throw std::domain_error("bessel_i: integer order nu >= 0 required");
    if (y < 0.0) throw std::domain_error("bessel_i: y >= 0 required");
    if (y == 0.0) return nu == 0 ? 1.0 : 0.0;

    // term_0 = (y/2)^nu / nu!,  term_{m+1} = term_m * (y/2)^2 / ((m+1)(nu+m+1))
    const double half = 0.5 * y;
    double term = 1.0;
    for (int i = 1; i <= nu; ++i) {
        term *= half / i;
        if (!std::isfinite(term)) return std::numeric_limits<double>::infinity();
    }
    double sum = term;
    const double quarter_sq = half * half;
    for (int m = 0; m < 2000; ++m) {
        term *= quarter_sq / ((m + 1.0) * (nu + m + 1.0));
        sum += term;
        if (!std::isfinite(sum)) return std::numeric_limits<double>::infinity();
        if (term < sum * 1e-17) break;
    }
    return sum;
}

double bessel_k(int nu, double y) {
    if (nu < 0) throw std::domain_error("bessel_k: integer order nu >= 0 required");
    if (!(y > 0.0)) throw std::domain_error("bessel_k: y > 0 required");
    if (y > 705.0) return 0.0;  // below double underflow

    // truncate where e^{-y cosh t} has dropped ~e^-45 below the t=0 level
    const double reach = 45.0 + nu * 5.0;
    const double upper = std::acosh(1.0 + reach / y);
    auto integrand = [nu, y](double t) { return std::exp(-y * std::cosh(t)) * std::cosh(nu * t); };
    const QuadResult q = integrate_adaptive(integrand, 0.0, upper, 1e-13, 0.0, 2000);
    return q.value;
}

double bessel_ik_product(int nu, double y) {
    if (y > 500.0) return 1.0 / (2.0 * y);
    return bessel_i(nu, y) * bessel_k(nu, y);
}

}  // namespace polywh
