#include "pzmap/stability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pzmap {

std::string to_string(RootLocation t) {
    switch (t) {
        case RootLocation::both_inside: return "both_inside";
        case RootLocation::both_outside: return "both_outside";
        case RootLocation::saddle_split: return "saddle_split";
        case RootLocation::on_unit_circle_complex: return "on_unit_circle_complex";
        case RootLocation::root_at_minus_one: return "root_at_minus_one";
        case RootLocation::double_minus_one: return "double_minus_one";
        case RootLocation::root_at_plus_one: return "root_at_plus_one";
        case RootLocation::one_outside_other_inside: return "one_outside_other_inside";
        case RootLocation::one_outside_other_leq_minus_one:
            return "one_outside_other_leq_minus_one";
    }
    return "?";
}

CharPoly char_poly_at(const Params& p, double u_star) {
    const double residual = std::abs(p.beta - psi(p, u_star));
    if (!(residual < 1e-8 * std::max(1.0, std::abs(p.beta))))
        throw std::invalid_argument(
            "char_poly_at: beta does not match Psi(u_star), residual " +
            std::to_string(residual));
    const double u = u_star;
    const double g = p.gamma;
    const double g2u2 = g * g + u * u;
    const double gu = g + u;
    const double q = 2.0 * u * u * (1.0 - u) / g2u2 +
                     g * u * (1.0 - u) *
                         (2.0 * p.beta * g * u / (g2u2 * g2u2) -
                          p.theta / (gu * gu));
    return CharPoly{-trace_at_fixed(p, u), q};
}

RootLocation jury_classify(const CharPoly& cp) {
    constexpr double kBand = 1e-9;
    const double f1 = cp.at_one();
    const double fm1 = cp.at_minus_one();

    if (f1 > kBand) {
        if (std::abs(fm1) <= kBand)
            return std::abs(cp.B - 2.0) <= kBand ? RootLocation::double_minus_one
                                                 : RootLocation::root_at_minus_one;
        if (fm1 < 0.0) return RootLocation::one_outside_other_inside;
        if (cp.C < 1.0 - kBand) return RootLocation::both_inside;
        if (cp.C > 1.0 + kBand) return RootLocation::both_outside;
        return RootLocation::on_unit_circle_complex;
    }
    if (f1 >= -kBand) return RootLocation::root_at_plus_one;
    return fm1 > kBand ? RootLocation::saddle_split
                       : RootLocation::one_outside_other_leq_minus_one;
}

Kind classify_E(const Params& p, const FixedPointRecord& fp) {
    constexpr double kTau = 1e-9;
    const CharPoly cp = char_poly_at(p, fp.u);

    if (fp.branch == Branch::E2) {
        const RootLocation loc = jury_classify(cp);
        if (loc != RootLocation::saddle_split)
            throw std::logic_error(
                "classify_E: E2 must be a saddle but the root location is " +
                to_string(loc) + " (B=" + std::to_string(cp.B) +
                ", C=" + std::to_string(cp.C) + ")");
        return Kind::saddle;
    }

    // a branch-split (tangency) point carries an eigenvalue at +1
    if (std::abs(cp.at_one()) <= kTau) return Kind::nonhyperbolic;
    if (cp.C < 1.0 - kTau) return Kind::attracting;
    if (cp.C > 1.0 + kTau) return Kind::repelling;
    return Kind::nonhyperbolic;
}

}  // namespace pzmap
