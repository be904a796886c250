#pragma once

namespace polywh {

/// Modified Bessel function I_nu(y), integer order nu >= 0, via the
/// all-positive ascending series (cancellation-free). Returns +inf when the
/// result overflows a double.
double bessel_i(int nu, double y);

/// Modified Bessel function K_nu(y), integer order nu >= 0, y > 0, via the
/// integral representation K_nu(y) = int_0^inf e^{-y cosh t} cosh(nu t) dt
/// evaluated by adaptive quadrature on a truncated range.
double bessel_k(int nu, double y);

/// Product I_nu(y) K_nu(y) with a large-argument guard: beyond y ~ 500 the
/// series/integral pair would hit inf * 0, so the asymptotic product 1/(2y)
/// is used there (relative error O(1/y^2), far below any integrand scale at
/// such arguments).
double bessel_ik_product(int nu, double y);

}  // namespace polywh
