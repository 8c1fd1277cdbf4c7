#include "pzmap/fixed_points.hpp"

#include <cmath>
#include <stdexcept>

#include "pzmap/roots.hpp"
#include "pzmap/stability.hpp"

namespace pzmap {

std::string to_string(Region r) {
    switch (r) {
        case Region::R1: return "R1";
        case Region::R2: return "R2";
        case Region::R3: return "R3";
        case Region::R4: return "R4";
        case Region::R5: return "R5";
    }
    return "?";
}

std::string to_string(Branch b) {
    switch (b) {
        case Branch::origin: return "origin";
        case Branch::boundary: return "boundary";
        case Branch::E1: return "E1";
        case Branch::E2: return "E2";
    }
    return "?";
}

std::string to_string(Kind k) {
    switch (k) {
        case Kind::attracting: return "attracting";
        case Kind::repelling: return "repelling";
        case Kind::saddle: return "saddle";
        case Kind::nonhyperbolic: return "nonhyperbolic";
    }
    return "?";
}

double u_hat(const Params& p) {
    const double g = p.gamma;
    const double bound = roots::cauchy_bound(
        {p.theta, -2.0 * g * (p.r + p.theta), -g * g * (4.0 * p.r + p.theta),
         -2.0 * p.r * g * g * g});
    auto f = [&](double u) { return h_poly(p, u); };
    auto df = [&](double u) { return h_poly_deriv(p, u); };
    // h(0) < 0 and h(bound) > 0, so the bracket always holds
    return roots::bisect_newton(f, df, 0.0, bound);
}

RegionLabel classify_region(const Params& p) {
    const double g = p.gamma;
    RegionLabel out{Region::R2, std::sqrt(2.0) - 1.0, std::sqrt(7.0) - 2.0,
                    std::nullopt, std::nullopt};
    if (g >= out.gamma_hi) return out;
    const double t_lo = 4.0 * p.r * g * (1.0 + g) / (3.0 - 4.0 * g - g * g);
    out.theta_lo = t_lo;
    if (p.theta <= t_lo) {
        out.tag = Region::R1;
        return out;
    }
    if (g >= out.gamma_lo) {
        out.tag = Region::R4;
        return out;
    }
    const double t_hi =
        2.0 * p.r * g * (1.0 + g) * (1.0 + g) / (1.0 - 2.0 * g - g * g);
    out.theta_hi = t_hi;
    out.tag = (p.theta <= t_hi) ? Region::R3 : Region::R5;
    return out;
}

namespace {

// Psi'(u) = gamma h(u) / (u^3 (u + gamma)^2)
double psi_deriv(const Params& p, double u) {
    const double gu = u + p.gamma;
    return p.gamma * h_poly(p, u) / (u * u * u * gu * gu);
}

double solve_psi_eq_beta(const Params& p, double lo, double hi) {
    auto f = [&](double u) { return psi(p, u) - p.beta; };
    auto df = [&](double u) { return psi_deriv(p, u); };
    return roots::bisect_newton(f, df, lo, hi);
}

// left bracket endpoint with Psi above beta (Psi diverges at 0+)
double left_endpoint(const Params& p) {
    double lo = 1e-3;
    while (psi(p, lo) <= p.beta) lo *= 0.5;
    return lo;
}

FixedPointRecord make_record(const Params& p, double u, Branch branch,
                             bool tangency = false) {
    FixedPointRecord rec;
    rec.u = u;
    rec.v = v_of_u(p, u);
    rec.branch = branch;
    rec.tangency = tangency;
    rec.kind = classify_E(p, rec);
    return rec;
}

}  // namespace

std::vector<FixedPointRecord> positive_fixed_points(const Params& p) {
    std::vector<FixedPointRecord> out;
    const double psi1 = psi(p, 1.0);
    const RegionLabel reg = classify_region(p);

    if (reg.tag != Region::R5) {
        // Psi strictly decreasing on (0,1): at most one solution
        if (p.beta > psi1)
            out.push_back(make_record(p, solve_psi_eq_beta(p, left_endpoint(p), 1.0),
                                      Branch::E1));
        return out;
    }

    const double uh = u_hat(p);
    const double psi_uh = psi(p, uh);
    if (std::abs(p.beta - psi_uh) < 1e-10) {
        // double root collapsed to the branch split point
        out.push_back(make_record(p, uh, Branch::E1, true));
        return out;
    }
    if (p.beta > psi1) {
        out.push_back(make_record(p, solve_psi_eq_beta(p, left_endpoint(p), uh),
                                  Branch::E1));
        return out;
    }
    if (p.beta > psi_uh) {
        out.push_back(make_record(p, solve_psi_eq_beta(p, left_endpoint(p), uh),
                                  Branch::E1));
        const double u2 = solve_psi_eq_beta(p, uh, 1.0);
        if (u2 < 1.0 - 1e-12)  // beta == Psi(1) degenerates to the boundary point
            out.push_back(make_record(p, u2, Branch::E2));
    }
    return out;
}

double boundary_lambda2(const Params& p) {
    return 1.0 - p.r + p.beta / (1.0 + p.gamma * p.gamma) -
           p.theta / (1.0 + p.gamma);
}

std::pair<Kind, Kind> boundary_classification(const Params& p) {
    constexpr double kBand = 1e-9;
    Kind origin;
    if (std::abs(p.r - 2.0) < kBand)
        origin = Kind::nonhyperbolic;
    else if (p.r < 2.0)
        origin = Kind::saddle;
    else
        origin = Kind::repelling;

    // at (1,0) the u-direction eigenvalue is 0, so the type rides on lambda2
    const double lam2 = boundary_lambda2(p);
    Kind boundary;
    if (std::abs(std::abs(lam2) - 1.0) < kBand)
        boundary = Kind::nonhyperbolic;
    else if (std::abs(lam2) < 1.0)
        boundary = Kind::attracting;
    else
        boundary = Kind::saddle;
    return {origin, boundary};
}

}  // namespace pzmap
