#pragma once

#include <utility>

namespace pzmap {

// Model parameters. All four must be strictly positive and finite;
// construction enforces this once so the hot paths never re-validate.
struct Params {
    double r;
    double beta;
    double theta;
    double gamma;

    Params(double r_, double beta_, double theta_, double gamma_);
};

// A phase-space point (scaled phytoplankton u, scaled zooplankton v).
struct State {
    double u = 0.0;
    double v = 0.0;
};

struct Jacobian2 {
    double j11, j12, j21, j22;

    double trace() const { return j11 + j22; }
    double det() const { return j11 * j22 - j12 * j21; }
};

// One application of the map:
//   u' = u(2-u) - u^2 v / (g^2 + u^2)
//   v' = b u^2 v / (g^2 + u^2) + (1-r) v - t u v / (g + u)
// Pure formula; the result may leave the biologically meaningful region.
State step(const Params& p, const State& s);

// Step plus an escape flag. The result escapes when any coordinate becomes
// non-finite or leaves [0,2] x [0,inf); `coord` names the first offender.
struct CheckedStep {
    State next;
    bool escaped = false;
    char coord = ' ';
};
CheckedStep step_checked(const Params& p, const State& s);

// Psi(u) = (r u + t u + r g)(g^2 + u^2) / (u^2 (g + u)); the beta value at
// which u is a positive fixed-point abscissa. Diverges as u -> 0+.
double psi(const Params& p, double u);

// h(u) = t u^3 - 2 g (r+t) u^2 - g^2 (4r+t) u - 2 r g^3. Its unique
// positive root separates the two fixed-point branches.
double h_poly(const Params& p, double u);
double h_poly_deriv(const Params& p, double u);

// The two real roots of h'(u) = 0, returned as (negative, positive).
std::pair<double, double> h_prime_roots(const Params& p);

// v determined by the u-coordinate of a positive fixed point:
// v = (1-u)(g^2 + u^2)/u, valid on (0,1].
double v_of_u(const Params& p, double u);

// omega(u) = (2-u)(g^2+u^2)/u, the upper boundary of the trapping region M.
double omega(const Params& p, double u);

// rho(u) = -u^3 + u^2 - g^2; omega'(u) = 2 rho(u) / u^2.
double rho(const Params& p, double u);

// Jacobian of the map at an arbitrary point.
Jacobian2 jacobian(const Params& p, const State& s);

// Jacobian at a positive fixed point, using the simplified entries that are
// valid only when beta = Psi(u_star); the bottom-right entry is exactly 1.
// Throws if the fixed-point consistency |beta - Psi(u_star)| exceeds 1e-8.
Jacobian2 jacobian_at_fixed(const Params& p, double u_star);

// Trace of jacobian_at_fixed as the closed form p(u) = 1 + 2u^2(1-u)/(g^2+u^2).
double trace_at_fixed(const Params& p, double u);

// The combination 1 - trace + det at a positive fixed point, in factored
// form: P(1,u) = -g (1-u) h(u) / ((g+u)^2 (g^2+u^2)). Well conditioned near
// det = 1 where the expanded expression cancels.
double p_one_factored(const Params& p, double u);

}  // namespace pzmap
