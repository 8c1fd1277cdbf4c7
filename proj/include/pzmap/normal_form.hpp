#pragma once

#include <complex>
#include <string>
#include <vector>

#include "pzmap/model.hpp"

namespace pzmap {

// Quadratic/cubic Taylor data of the map shifted to a positive fixed point:
//   x' = a10 x + a01 y + a20 x^2 + a11 x y + a30 x^3 + a21 x^2 y
//   y' = b10 x + b01 y + b20 x^2 + b11 x y + b30 x^3 + b21 x^2 y
// All mixed terms in y of order >= 2 vanish because the map is affine in v.
struct TaylorCoeffs {
    double a10, a01, a20, a11, a30, a21;
    double b10, b01, b20, b11, b30, b21;
};

enum class CurveDirection {
    attracting_curve_for_beta_above,
    repelling_curve_for_beta_below,
};

std::string to_string(CurveDirection d);

struct NormalFormReport {
    double beta0;
    double u1;
    double v1;
    std::complex<double> lambda1;  // negative imaginary part
    std::complex<double> lambda2;
    double alpha;                  // sqrt(3 - a10^2 - 2 a10)
    double transversality;         // d|lambda|/dbeta* at the critical value
    TaylorCoeffs taylor;
    double m;
    double n;
    double c20, c11, c02, c30, c21, c12, c03;
    double d20, d11, d02, d30, d21, d12, d03;
    std::complex<double> L20, L11, L02, L21;
    double L;
    CurveDirection direction;
};

// All solutions of q(u) = 1 along the E1 branch, beta taken as Psi(u).
// `beta0`/`u1` pick the solution with the smallest beta0; `multiple` flags
// more than one crossing.
struct NsSearchResult {
    double beta0 = 0.0;
    double u1 = 0.0;
    std::vector<std::pair<double, double>> all;  // (beta0, u1) pairs
    bool multiple = false;
};

// Locates the Neimark-Sacker parameter by scanning q(u;Psi(u)) - 1 over the
// branch interval (0, min(u_hat, 1)) on 2000 grid points and bisecting each
// sign change. Throws std::runtime_error when no crossing exists.
NsSearchResult find_ns_beta(double r, double theta, double gamma);

// Eigenvalues at beta = beta0 + beta_star with the fixed point frozen at u1:
// lambda = (nu +- i sqrt(4 omega - nu^2))/2, nu the trace, omega the
// determinant. Throws std::domain_error when the discriminant is not positive.
std::pair<std::complex<double>, std::complex<double>> eigen_at(
    const Params& p, double u1, double beta_star);

// Closed form u1^2 (1-u1) / (gamma^2 + u1^2); always positive on (0,1).
double transversality(const Params& p, double u1);

// The twelve nonzero Taylor coefficients at the critical fixed point.
// `p.beta` must satisfy q(u1) = 1 within 1e-8.
TaylorCoeffs taylor_coeffs(const Params& p, double u1);

// The full coefficient cascade and the discriminant quantity L.
NormalFormReport normal_form_L(const Params& p, double u1);

// Convenience: find beta0 and run the cascade in one call.
NormalFormReport normal_form_at_critical(double r, double theta, double gamma);

}  // namespace pzmap
