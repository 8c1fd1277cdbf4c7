#include "pzmap/global.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pzmap/fixed_points.hpp"
#include "pzmap/roots.hpp"

namespace pzmap {

double kpoly(const Params& p, double u) {
    const auto c = kpoly_coeffs(p);
    return ((c[0] * u + c[1]) * u + c[2]) * u + c[3];
}

std::array<double, 4> kpoly_coeffs(const Params& p) {
    const double g = p.gamma;
    return {p.beta + 1.0 - p.r - p.theta,
            (p.beta + 1.0 - p.r) * g,
            (1.0 - p.r - p.theta) * g * g,
            (1.0 - p.r) * g * g * g};
}

KPolyMin kpoly_min(const Params& p) {
    const auto c = kpoly_coeffs(p);
    std::vector<double> cand{0.0, 1.0};

    const double scale = std::max({1.0, std::abs(c[0]), std::abs(c[1])});
    if (std::abs(c[0]) > 1e-12 * scale) {
        // K' = 3 c0 u^2 + 2 c1 u + c2
        const double L = p.beta + 1.0 - p.r - p.theta;
        const double B = p.beta + 1.0 - p.r;
        const double C = 1.0 - p.r - p.theta;
        const double disc = B * B - 3.0 * L * C;
        if (disc >= 0.0) {
            const double rt = std::sqrt(disc);
            cand.push_back(p.gamma * (-B + rt) / (3.0 * L));
            cand.push_back(p.gamma * (-B - rt) / (3.0 * L));
        }
    } else if (std::abs(c[1]) > 1e-12 * scale) {
        cand.push_back(-c[2] / (2.0 * c[1]));
    }
    // else K is affine in u and the endpoints already cover it

    KPolyMin best{0.0, kpoly(p, 0.0)};
    for (double u : cand) {
        if (!(u >= 0.0 && u <= 1.0)) continue;
        const double val = kpoly(p, u);
        if (val < best.value) best = {u, val};
    }
    return best;
}

namespace {

// Throws when the discriminant says three distinct real roots but the
// extraction found fewer; the discriminant goes into the message.
void check_cubic_count(const char* name, const std::vector<double>& found,
                       double a, double b, double c, double d) {
    const double disc = roots::cubic_discriminant(a, b, c, d);
    const double mag = std::abs(18.0 * a * b * c * d) + std::abs(4.0 * b * b * b * d) +
                       std::abs(b * b * c * c) + std::abs(4.0 * a * c * c * c) +
                       std::abs(27.0 * a * a * d * d);
    if (disc > 1e-9 * mag && found.size() < 3) {
        std::ostringstream os;
        os << name << ": expected three real roots, extracted " << found.size()
           << " (discriminant " << disc << ")";
        throw std::runtime_error(os.str());
    }
}

}  // namespace

std::vector<double> gammaeq_positive_roots(double r, double theta, double beta) {
    const double a = 1.0 - r;
    const double b = 1.0 - r - theta;
    const double c = beta + 1.0 - r;
    const double d = beta + 1.0 - r - theta;
    auto rr = roots::cubic_real_roots(a, b, c, d);
    check_cubic_count("gammaeq", rr, a, b, c, d);
    rr.erase(std::remove_if(rr.begin(), rr.end(), [](double x) { return x <= 0.0; }),
             rr.end());
    return rr;
}

std::vector<double> betaeq_real_roots(double r, double theta) {
    const double th = theta;
    const double a = 4.0 * r - 4.0;
    const double b = th * th - 20.0 * th + 20.0 * r * th + 40.0 * r - 20.0 * r * r - 20.0;
    const double c = 4.0 * th * th * th + 8.0 * th * th - 8.0 * r * th * th + 8.0 * th -
                     16.0 * r * th + 8.0 * r * r * th + 32.0 * r * r * r -
                     96.0 * r * r + 96.0 * r - 32.0;
    const double d = -4.0 * std::pow(th, 4) + 16.0 * th * th * th -
                     16.0 * r * th * th * th - 32.0 * th * th + 64.0 * r * th * th -
                     32.0 * r * r * th * th + 32.0 * th - 96.0 * r * th +
                     96.0 * r * r * th - 32.0 * r * r * r * th - 16.0 * std::pow(r, 4) +
                     64.0 * r * r * r - 96.0 * r * r + 64.0 * r - 16.0;
    auto rr = roots::cubic_real_roots(a, b, c, d);
    check_cubic_count("betaeq", rr, a, b, c, d);
    return rr;
}

namespace {

// Bounds for the r-interval of a table row, resolved per parameter set.
enum class RB { zero, one_minus_theta, r_quarter, r_star, one };

// Beta-interval of a row. rth1 = r + theta - 1; beta2/beta3 are the middle
// and largest real roots of the beta cubic.
enum class BC { any, below_rth1, geq_rth1, below_beta2, between_beta23,
                beta3_to_rth1, geq_beta3 };

// Gamma condition of a row. gamma1/gamma3 are the smallest and largest
// positive roots of the gamma cubic.
enum class GC { any, gt_gamma1, geq_gamma1, geq_gamma3 };

struct CaseRow {
    const char* label;
    int tier;  // 1: theta<=1, 2: (1,4], 3: (4, 3+2sqrt2), 4: >=3+2sqrt2
    RB r_lo;           // exclusive lower bound on r
    RB r_hi;
    bool r_hi_closed;  // r <= hi when true, r < hi otherwise
    BC beta;
    GC gamma;
};

// Literal transcription of the 24 subcases, one row per line.
constexpr CaseRow kCaseTable[] = {
    {"i.1",   1, RB::zero,            RB::one_minus_theta, true,  BC::any,            GC::any},
    {"i.2",   1, RB::one_minus_theta, RB::r_quarter,       true,  BC::below_rth1,     GC::gt_gamma1},
    {"i.3",   1, RB::one_minus_theta, RB::r_star,          true,  BC::geq_rth1,       GC::any},
    {"i.4",   1, RB::r_quarter,       RB::one,             false, BC::below_beta2,    GC::geq_gamma1},
    {"i.5",   1, RB::r_quarter,       RB::r_star,          true,  BC::between_beta23, GC::geq_gamma3},
    {"i.6",   1, RB::r_quarter,       RB::r_star,          false, BC::beta3_to_rth1,  GC::geq_gamma1},
    {"i.7",   1, RB::r_star,          RB::one,             false, BC::between_beta23, GC::geq_gamma3},
    {"i.8",   1, RB::r_star,          RB::one,             false, BC::geq_beta3,      GC::any},
    {"ii.1",  2, RB::zero,            RB::r_quarter,       true,  BC::below_rth1,     GC::geq_gamma1},
    {"ii.2",  2, RB::zero,            RB::r_star,          true,  BC::geq_rth1,       GC::any},
    {"ii.3",  2, RB::r_quarter,       RB::one,             false, BC::below_beta2,    GC::geq_gamma1},
    {"ii.4",  2, RB::r_quarter,       RB::r_star,          true,  BC::between_beta23, GC::geq_gamma3},
    {"ii.5",  2, RB::r_quarter,       RB::r_star,          false, BC::beta3_to_rth1,  GC::geq_gamma1},
    {"ii.6",  2, RB::r_star,          RB::one,             false, BC::between_beta23, GC::geq_gamma3},
    {"ii.7",  2, RB::r_star,          RB::one,             false, BC::geq_beta3,      GC::any},
    {"iii.1", 3, RB::zero,            RB::one,             false, BC::below_beta2,    GC::geq_gamma1},
    {"iii.2", 3, RB::zero,            RB::r_star,          true,  BC::between_beta23, GC::geq_gamma3},
    {"iii.3", 3, RB::zero,            RB::r_star,          false, BC::beta3_to_rth1,  GC::geq_gamma1},
    {"iii.4", 3, RB::zero,            RB::r_star,          true,  BC::geq_rth1,       GC::any},
    {"iii.5", 3, RB::r_star,          RB::one,             false, BC::between_beta23, GC::geq_gamma3},
    {"iii.6", 3, RB::r_star,          RB::one,             false, BC::geq_beta3,      GC::any},
    {"iv.1",  4, RB::zero,            RB::one,             false, BC::below_beta2,    GC::geq_gamma1},
    {"iv.2",  4, RB::zero,            RB::one,             false, BC::between_beta23, GC::geq_gamma3},
    {"iv.3",  4, RB::zero,            RB::one,             false, BC::geq_beta3,      GC::any},
};

}  // namespace

NonnegVerdict nonneg_case(const Params& p) {
    NonnegVerdict out;
    const double r = p.r, th = p.theta, b = p.beta, g = p.gamma;
    const double r_star = 1.0 - th * (3.0 - 2.0 * std::sqrt(2.0));
    const double r_quarter = (4.0 - th) / 4.0;
    const double rth1 = r + th - 1.0;

    const int tier = th <= 1.0 ? 1
                   : th <= 4.0 ? 2
                   : th < 3.0 + 2.0 * std::sqrt(2.0) ? 3
                   : 4;

    auto bound = [&](RB which) {
        switch (which) {
            case RB::zero: return 0.0;
            case RB::one_minus_theta: return 1.0 - th;
            case RB::r_quarter: return r_quarter;
            case RB::r_star: return r_star;
            case RB::one: return 1.0;
        }
        return 0.0;
    };

    // beta2/beta3 and gamma1/gamma3 are computed at most once, on first use
    bool have_beta = false, beta_ok = false;
    double beta2 = 0.0, beta3 = 0.0;
    auto fetch_beta = [&]() {
        if (!have_beta) {
            have_beta = true;
            const auto rr = betaeq_real_roots(r, th);
            if (rr.size() >= 2) {
                beta2 = rr[rr.size() - 2];
                beta3 = rr[rr.size() - 1];
                beta_ok = true;
                out.beta_roots = {beta2, beta3};
            }
        }
        return beta_ok;
    };

    bool have_gamma = false, gamma_ok = false;
    double gamma1 = 0.0, gamma3 = 0.0;
    auto fetch_gamma = [&]() {
        if (!have_gamma) {
            have_gamma = true;
            const auto rr = gammaeq_positive_roots(r, th, b);
            if (!rr.empty()) {
                gamma1 = rr.front();
                gamma3 = rr.back();
                gamma_ok = true;
                out.gamma_roots = {gamma1, gamma3};
                out.gamma_three_roots = rr.size() >= 3;
            }
        }
        return gamma_ok;
    };

    for (const CaseRow& row : kCaseTable) {
        if (row.tier != tier) continue;

        const double lo = bound(row.r_lo);
        const double hi = bound(row.r_hi);
        if (!(r > lo)) continue;
        if (row.r_hi_closed ? !(r <= hi) : !(r < hi)) continue;

        bool beta_match = false;
        switch (row.beta) {
            case BC::any: beta_match = true; break;
            case BC::below_rth1: beta_match = b < rth1; break;
            case BC::geq_rth1: beta_match = b >= rth1; break;
            case BC::below_beta2: beta_match = fetch_beta() && b < beta2; break;
            case BC::between_beta23:
                beta_match = fetch_beta() && b >= beta2 && b < beta3;
                break;
            case BC::beta3_to_rth1:
                beta_match = fetch_beta() && b >= beta3 && b < rth1;
                break;
            case BC::geq_beta3: beta_match = fetch_beta() && b >= beta3; break;
        }
        if (!beta_match) continue;

        bool gamma_match = false;
        switch (row.gamma) {
            case GC::any: gamma_match = true; break;
            case GC::gt_gamma1: gamma_match = fetch_gamma() && g > gamma1; break;
            case GC::geq_gamma1: gamma_match = fetch_gamma() && g >= gamma1; break;
            case GC::geq_gamma3: gamma_match = fetch_gamma() && g >= gamma3; break;
        }
        if (!gamma_match) continue;

        out.holds = true;
        out.case_label = row.label;
        return out;
    }
    return out;
}

std::optional<std::pair<double, double>> omega_critical(const Params& p) {
    const double rho_max = (4.0 - 27.0 * p.gamma * p.gamma) / 27.0;
    if (!(rho_max > 0.0)) return std::nullopt;
    auto f = [&](double u) { return rho(p, u); };
    // rho(0) = rho(1) = -g^2 < 0 and rho(2/3) = rho_max > 0
    const double x1 = roots::bisect(f, 0.0, 2.0 / 3.0);
    const double x2 = roots::bisect(f, 2.0 / 3.0, 1.0);
    return std::make_pair(x1, x2);
}

std::string to_string(ConvergenceCase c) {
    switch (c) {
        case ConvergenceCase::none: return "none";
        case ConvergenceCase::prop_5_2: return "prop_5_2";
        case ConvergenceCase::prop_5_3_i: return "prop_5_3_i";
        case ConvergenceCase::prop_5_3_ii: return "prop_5_3_ii";
        case ConvergenceCase::prop_5_4: return "prop_5_4";
    }
    throw std::logic_error("unknown ConvergenceCase");
}

ConvergenceReport convergence_hypotheses(const Params& p) {
    ConvergenceReport rep;
    rep.nonneg = nonneg_case(p);
    if (!rep.nonneg.holds) return rep;

    const double g = p.gamma;
    const double psi1 = psi(p, 1.0);
    const double g_52 = std::sqrt(2.0) - 1.0;
    const double g_low = 2.0 / (3.0 * std::sqrt(3.0));

    if (g >= g_52) {
        if (p.beta <= psi1) {
            rep.which = ConvergenceCase::prop_5_2;
            rep.region = "all of M";
        }
        return rep;
    }

    // below sqrt(2)-1 the denominator 1 - 2g - g^2 is positive
    const double theta_split =
        2.0 * p.r * g * (1.0 + g) * (1.0 + g) / (1.0 - 2.0 * g - g * g);
    const bool low_theta = p.theta <= theta_split;
    const bool beta_ok =
        low_theta ? p.beta <= psi1 : p.beta < psi(p, u_hat(p));
    if (!beta_ok) return rep;

    if (g >= g_low) {
        rep.which = low_theta ? ConvergenceCase::prop_5_3_i
                              : ConvergenceCase::prop_5_3_ii;
        rep.region = "all of M";
    } else {
        rep.which = ConvergenceCase::prop_5_4;
        const auto xc = omega_critical(p);
        rep.x1bar = xc.value().first;
        rep.omega_at_x1bar = omega(p, xc.value().first);
        rep.region = "0 < u <= x1bar, or v < omega(x1bar)";
    }
    return rep;
}

}  // namespace pzmap
