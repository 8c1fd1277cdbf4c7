#include "pzmap/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pzmap {

namespace {

void require_positive(double x, const char* name) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::invalid_argument(std::string("Params: ") + name +
                                    " must be positive and finite");
}

}  // namespace

Params::Params(double r_, double beta_, double theta_, double gamma_)
    : r(r_), beta(beta_), theta(theta_), gamma(gamma_) {
    require_positive(r, "r");
    require_positive(beta, "beta");
    require_positive(theta, "theta");
    require_positive(gamma, "gamma");
}

State step(const Params& p, const State& s) {
    const double u = s.u;
    const double v = s.v;
    const double g2u2 = p.gamma * p.gamma + u * u;
    const double grazing = u * u * v / g2u2;
    return State{u * (2.0 - u) - grazing,
                 p.beta * grazing + (1.0 - p.r) * v - p.theta * u * v / (p.gamma + u)};
}

CheckedStep step_checked(const Params& p, const State& s) {
    CheckedStep out;
    out.next = step(p, s);
    if (!std::isfinite(out.next.u) || out.next.u < 0.0 || out.next.u > 2.0) {
        out.escaped = true;
        out.coord = 'u';
    } else if (!std::isfinite(out.next.v) || out.next.v < 0.0) {
        out.escaped = true;
        out.coord = 'v';
    }
    return out;
}

double psi(const Params& p, double u) {
    if (!(u > 0.0)) throw std::domain_error("psi: u must be positive");
    const double num = (p.r * u + p.theta * u + p.r * p.gamma) *
                       (p.gamma * p.gamma + u * u);
    return num / (u * u * (p.gamma + u));
}

double h_poly(const Params& p, double u) {
    const double g = p.gamma;
    return ((p.theta * u - 2.0 * g * (p.r + p.theta)) * u -
            g * g * (4.0 * p.r + p.theta)) * u -
           2.0 * p.r * g * g * g;
}

double h_poly_deriv(const Params& p, double u) {
    const double g = p.gamma;
    return (3.0 * p.theta * u - 4.0 * g * (p.r + p.theta)) * u -
           g * g * (4.0 * p.r + p.theta);
}

std::pair<double, double> h_prime_roots(const Params& p) {
    const double g = p.gamma;
    const double disc = 7.0 * p.theta * p.theta + 20.0 * p.r * p.theta +
                        4.0 * p.r * p.r;
    const double sq = g * std::sqrt(disc);
    const double base = 2.0 * g * (p.r + p.theta);
    return {(base - sq) / (3.0 * p.theta), (base + sq) / (3.0 * p.theta)};
}

double v_of_u(const Params& p, double u) {
    if (!(u > 0.0)) throw std::domain_error("v_of_u: u must be positive");
    return (1.0 - u) * (p.gamma * p.gamma + u * u) / u;
}

double omega(const Params& p, double u) {
    if (!(u > 0.0)) throw std::domain_error("omega: u must be positive");
    return (2.0 - u) * (p.gamma * p.gamma + u * u) / u;
}

double rho(const Params& p, double u) {
    return -u * u * u + u * u - p.gamma * p.gamma;
}

Jacobian2 jacobian(const Params& p, const State& s) {
    const double u = s.u;
    const double v = s.v;
    const double g = p.gamma;
    const double g2u2 = g * g + u * u;
    const double g2u2sq = g2u2 * g2u2;
    const double gu = g + u;
    return Jacobian2{
        2.0 - 2.0 * u - 2.0 * g * g * u * v / g2u2sq,
        -u * u / g2u2,
        2.0 * p.beta * g * g * u * v / g2u2sq - p.theta * g * v / (gu * gu),
        p.beta * u * u / g2u2 + 1.0 - p.r - p.theta * u / gu};
}

Jacobian2 jacobian_at_fixed(const Params& p, double u_star) {
    const double residual = std::abs(p.beta - psi(p, u_star));
    if (!(residual < 1e-8 * std::max(1.0, std::abs(p.beta))))
        throw std::invalid_argument(
            "jacobian_at_fixed: beta does not match Psi(u_star), residual " +
            std::to_string(residual));
    const double u = u_star;
    const double g = p.gamma;
    const double g2u2 = g * g + u * u;
    const double gu = g + u;
    const double j21 = g * (1.0 - u) * g2u2 / u *
                       (2.0 * p.beta * g * u / (g2u2 * g2u2) -
                        p.theta / (gu * gu));
    return Jacobian2{2.0 * u * u * (1.0 - u) / g2u2, -u * u / g2u2, j21, 1.0};
}

double trace_at_fixed(const Params& p, double u) {
    return 1.0 + 2.0 * u * u * (1.0 - u) / (p.gamma * p.gamma + u * u);
}

double p_one_factored(const Params& p, double u) {
    const double g = p.gamma;
    const double gu = g + u;
    return -g * (1.0 - u) * h_poly(p, u) / (gu * gu * (g * g + u * u));
}

}  // namespace pzmap
