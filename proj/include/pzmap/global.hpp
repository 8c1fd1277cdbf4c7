#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pzmap/model.hpp"

namespace pzmap {

// K(u) = (b+1-r-t)u^3 + (b+1-r)g u^2 + (1-r-t)g^2 u + (1-r)g^3.
// The v-update factors as v' = v K(u) / ((g^2+u^2)(g+u)), so v stays
// nonnegative from nonnegative data exactly when K >= 0 on the u-range.
double kpoly(const Params& p, double u);

// Coefficients of K in decreasing degree order.
std::array<double, 4> kpoly_coeffs(const Params& p);

// Interior/endpoint minimizer of K over [0,1], found from the closed-form
// critical points g(-(b+1-r) +- sqrt((b+1-r)^2 - 3(b+1-r-t)(1-r-t)))/(3(b+1-r-t)).
// A vanishing cubic coefficient falls back to the quadratic critical point.
struct KPolyMin {
    double u;
    double value;
};
KPolyMin kpoly_min(const Params& p);

// Positive roots of the gamma cubic
//   (1-r)g^3 + (1-r-t)g^2 + (b+1-r)g + (b+1-r-t) = 0
// in increasing order (may be empty). Note kpoly(p,1) is its left side.
std::vector<double> gammaeq_positive_roots(double r, double theta, double beta);

// Real roots of the beta cubic, increasing order. The two relevant roots
// are the middle and largest ones (beta2 < beta3).
std::vector<double> betaeq_real_roots(double r, double theta);

// Verdict of the 24-row nonnegativity case table. gamma_roots/beta_roots
// carry (gamma1, gamma3) resp. (beta2, beta3) when a row needed them.
// gamma_three_roots flags the ambiguous three-positive-root configuration
// (gamma1 = smallest, gamma3 = largest; the middle root is unnamed).
struct NonnegVerdict {
    bool holds = false;
    std::optional<std::string> case_label;
    std::optional<std::pair<double, double>> gamma_roots;
    std::optional<std::pair<double, double>> beta_roots;
    bool gamma_three_roots = false;
};
NonnegVerdict nonneg_case(const Params& p);

// The two critical points of omega(u) in (0,1), i.e. the roots of
// rho(u) = -u^3 + u^2 - g^2 there. They exist iff rho's maximum
// (4 - 27 g^2)/27 at u = 2/3 is positive, i.e. g < 2/(3 sqrt 3);
// the boundary case returns nothing.
std::optional<std::pair<double, double>> omega_critical(const Params& p);

enum class ConvergenceCase {
    none,
    prop_5_2,    // g >= sqrt(2)-1, beta <= Psi(1): every orbit in M
    prop_5_3_i,  // 2/(3 sqrt 3) <= g < sqrt(2)-1, low theta, beta <= Psi(1)
    prop_5_3_ii, // same g band, high theta, beta < Psi(u_hat)
    prop_5_4,    // g < 2/(3 sqrt 3): orbits from u <= x1 or v < omega(x1)
};
std::string to_string(ConvergenceCase c);

struct ConvergenceReport {
    ConvergenceCase which = ConvergenceCase::none;
    NonnegVerdict nonneg;
    std::string region;  // admissible initial conditions, empty when none
    std::optional<double> x1bar;          // set for prop_5_4
    std::optional<double> omega_at_x1bar; // omega(x1bar), for prop_5_4
};

// Checks the hypotheses of the global-convergence propositions: a case of
// the nonnegativity table must hold, beta must sit below the fixed-point
// threshold (Psi(1), or Psi(u_hat) when theta exceeds
// 2 r g (1+g)^2/(1-2g-g^2)), and the gamma band picks the proposition.
ConvergenceReport convergence_hypotheses(const Params& p);

}  // namespace pzmap
