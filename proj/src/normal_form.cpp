#include "pzmap/normal_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pzmap/fixed_points.hpp"
#include "pzmap/roots.hpp"
#include "pzmap/stability.hpp"

namespace pzmap {

std::string to_string(CurveDirection d) {
    switch (d) {
        case CurveDirection::attracting_curve_for_beta_above:
            return "attracting_curve_for_beta_above";
        case CurveDirection::repelling_curve_for_beta_below:
            return "repelling_curve_for_beta_below";
    }
    throw std::logic_error("unknown CurveDirection");
}

namespace {

// det(J) - 1 along the E1 branch with beta pinned to Psi(u). Computed as
// (p - 2) + P(1, u) since 1 - p + q cancels badly near the crossing.
// Neither term involves beta, so any Params with matching r, theta,
// gamma works.
double det_minus_one_on_branch(const Params& p, double u) {
    return (trace_at_fixed(p, u) - 2.0) + p_one_factored(p, u);
}

}  // namespace

NsSearchResult find_ns_beta(double r, double theta, double gamma) {
    Params probe{r, 1.0, theta, gamma};
    const double uh = u_hat(probe);
    const double hi = std::min(uh, 1.0) - 1e-4;
    const double lo = 1e-4;
    if (!(hi > lo))
        throw std::runtime_error("branch interval for the NS search is empty");

    auto g = [&](double u) { return det_minus_one_on_branch(probe, u); };
    const auto crossings = roots::scan_roots(g, lo, hi, 2000);
    if (crossings.empty())
        throw std::runtime_error(
            "no Neimark-Sacker crossing: det(J) - 1 has constant sign on the branch");

    NsSearchResult res;
    for (const double u : crossings) res.all.emplace_back(psi(probe, u), u);
    std::sort(res.all.begin(), res.all.end());
    res.beta0 = res.all.front().first;
    res.u1 = res.all.front().second;
    res.multiple = res.all.size() > 1;
    return res;
}

std::pair<std::complex<double>, std::complex<double>> eigen_at(
    const Params& p, double u1, double beta_star) {
    const double s = p.gamma * p.gamma + u1 * u1;
    const double nu = trace_at_fixed(p, u1) + beta_star * u1 * u1 / s;
    const double omega = 1.0 + 2.0 * beta_star * u1 * u1 * (1.0 - u1) / s;
    const double disc = 4.0 * omega - nu * nu;
    if (!(disc > 0.0))
        throw std::domain_error("eigenvalues are real at this parameter offset");
    const double im = std::sqrt(disc) / 2.0;
    const std::complex<double> l1{nu / 2.0, -im};
    return {l1, std::conj(l1)};
}

double transversality(const Params& p, double u1) {
    const double s = p.gamma * p.gamma + u1 * u1;
    return u1 * u1 * (1.0 - u1) / s;
}

TaylorCoeffs taylor_coeffs(const Params& p, double u1) {
    const double g = p.gamma;
    const double u = u1;
    const double s = g * g + u * u;
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double s4 = s2 * s2;
    const double gu = g + u;

    const double residual = std::abs(p.beta - psi(p, u));
    if (!(residual < 1e-8 * std::max(1.0, std::abs(p.beta))))
        throw std::invalid_argument("taylor_coeffs: u1 is not a fixed point at this beta");

    TaylorCoeffs t;
    t.a10 = 2.0 * u * u * (1.0 - u) / s;
    t.a01 = -u * u / s;
    t.a20 = (g * g * u * u * (3.0 - 5.0 * u) - std::pow(u, 5) - std::pow(g, 4)) / (u * s2);
    t.a11 = -2.0 * g * g * u / s2;
    t.a30 = 4.0 * g * g * (1.0 - u) * (g * g - u * u) / s3;
    t.a21 = g * g * (3.0 * u * u - g * g) / s3;

    const double b0 = p.beta;
    const double vfac = g * (1.0 - u) * s / u;  // gamma * v1
    t.b10 = vfac * (2.0 * b0 * g * u / s2 - p.theta / (gu * gu));
    t.b01 = 1.0;
    t.b20 = g * (1.0 - u) / u *
            (b0 * g * (g * g - 3.0 * u * u) / s2 + p.theta * s / (gu * gu * gu));
    t.b11 = g * (2.0 * b0 * g * u / s2 - p.theta / (gu * gu));
    t.b30 = vfac * (4.0 * b0 * g * u * (u * u - g * g) / s4 - p.theta / (gu * gu * gu * gu));
    t.b21 = g * (b0 * g * (g * g - 3.0 * u * u) / s3 + p.theta / (gu * gu * gu));
    return t;
}

NormalFormReport normal_form_L(const Params& p, double u1) {
    NormalFormReport rep{};
    rep.beta0 = p.beta;
    rep.u1 = u1;
    rep.v1 = v_of_u(p, u1);
    rep.taylor = taylor_coeffs(p, u1);
    const TaylorCoeffs& t = rep.taylor;

    const double alpha_sq = 3.0 - t.a10 * t.a10 - 2.0 * t.a10;
    if (!(alpha_sq > 0.0))
        throw std::domain_error("critical eigenvalues are not complex (alpha^2 <= 0)");
    rep.alpha = std::sqrt(alpha_sq);
    rep.lambda1 = {(1.0 + t.a10) / 2.0, -rep.alpha / 2.0};
    rep.lambda2 = std::conj(rep.lambda1);
    rep.transversality = transversality(p, u1);

    const double g = p.gamma;
    const double u = u1;
    const double s = g * g + u * u;
    const double mden = g * g - u * u + 2.0 * u * u * u;  // = s (1 - a10)
    if (std::abs(mden) < 1e-12 * s)
        throw std::domain_error("normal-form transform is singular (1 - a10 ~ 0)");
    const double m = s / mden;
    const double n = u * u / (2.0 * s);
    rep.m = m;
    rep.n = n;

    const double a20 = t.a20, a11 = t.a11, a30 = t.a30, a21 = t.a21;
    const double b20 = t.b20, b11 = t.b11, b30 = t.b30, b21 = t.b21;

    rep.c20 = a20 * m * n + b20 * m * n * n;
    rep.c11 = a11 - a20 * n + b11 * n - b20 * n * n;
    rep.c02 = (a20 * n - a11 + b20 * n * n - b11 * n) / m;
    rep.c30 = a30 * m * m * n * n + b30 * m * m * n * n * n;
    rep.c21 = a21 * m * n - 3.0 * a30 * m * n * n + b21 * m * n * n - 3.0 * b30 * m * n * n * n;
    rep.c12 = 3.0 * a30 * n * n - 2.0 * a21 * n + 3.0 * b30 * n * n * n - 2.0 * b21 * n * n;
    rep.c03 = (a21 * n - a30 * n * n + b21 * n * n - b30 * n * n * n) / m;

    rep.d20 = b20 * m * m * n * n;
    rep.d11 = b11 * m * n - b20 * m * n * n;
    rep.d02 = b20 * n * n - b11 * n;
    rep.d30 = b30 * m * m * m * n * n * n;
    rep.d21 = b21 * m * m * n * n - 3.0 * b30 * m * m * n * n * n;
    rep.d12 = 3.0 * b30 * m * n * n * n - 2.0 * b21 * m * n * n;
    rep.d03 = b21 * n * n - b30 * n * n * n;

    const double FXX = 2.0 * rep.c20, FXY = rep.c11, FYY = 2.0 * rep.c02;
    const double FXXX = 6.0 * rep.c30, FXXY = 2.0 * rep.c21;
    const double FXYY = 2.0 * rep.c12, FYYY = 6.0 * rep.c03;
    const double GXX = 2.0 * rep.d20, GXY = rep.d11, GYY = 2.0 * rep.d02;
    const double GXXX = 6.0 * rep.d30, GXXY = 2.0 * rep.d21;
    const double GXYY = 2.0 * rep.d12, GYYY = 6.0 * rep.d03;

    rep.L20 = {(FXX - FYY + 2.0 * GXY) / 8.0, (GXX - GYY - 2.0 * FXY) / 8.0};
    rep.L11 = {(FXX + FYY) / 4.0, (GXX + GYY) / 4.0};
    rep.L02 = {(FXX - FYY - 2.0 * GXY) / 8.0, (GXX - GYY + 2.0 * FXY) / 8.0};
    rep.L21 = {(FXXX + FXYY + GXXY + GYYY) / 16.0,
               (GXXX + GXYY - FXXY - FYYY) / 16.0};

    const std::complex<double> l1 = rep.lambda1;
    const std::complex<double> l2 = rep.lambda2;
    const std::complex<double> head =
        (1.0 - 2.0 * l1) * l2 * l2 / (1.0 - l1) * rep.L11 * rep.L20;
    rep.L = -head.real() - 0.5 * std::norm(rep.L11) - std::norm(rep.L02) +
            (l2 * rep.L21).real();

    rep.direction = rep.L < 0.0 ? CurveDirection::attracting_curve_for_beta_above
                                : CurveDirection::repelling_curve_for_beta_below;
    return rep;
}

NormalFormReport normal_form_at_critical(double r, double theta, double gamma) {
    const auto found = find_ns_beta(r, theta, gamma);
    Params p{r, found.beta0, theta, gamma};
    return normal_form_L(p, found.u1);
}

}  // namespace pzmap
