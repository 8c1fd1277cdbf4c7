#include "pzmap/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "pzmap/global.hpp"

namespace pzmap {

namespace {

constexpr double kConvTol = 1e-10;  // displacement threshold
constexpr long kConvRun = 100;      // consecutive steps it must persist

double dist(const State& a, const State& b) {
    return std::hypot(a.u - b.u, a.v - b.v);
}

}  // namespace

std::string to_string(TrajectoryStatus s) {
    switch (s) {
        case TrajectoryStatus::converged_to: return "converged_to";
        case TrajectoryStatus::limit_set: return "limit_set";
        case TrajectoryStatus::escaped: return "escaped";
        case TrajectoryStatus::max_iter: return "max_iter";
    }
    throw std::logic_error("unknown TrajectoryStatus");
}

std::string to_string(ScanRegion r) {
    switch (r) {
        case ScanRegion::full_M: return "full_M";
        case ScanRegion::u_below_x1: return "u_below_x1";
        case ScanRegion::v_below_omega_x1: return "v_below_omega_x1";
    }
    throw std::logic_error("unknown ScanRegion");
}

TrajectoryResult trajectory(const Params& p, State init, long n, long transient) {
    if (!(n > transient && transient >= 0))
        throw std::invalid_argument("trajectory: need n > transient >= 0");

    TrajectoryResult out;
    out.samples.reserve(static_cast<size_t>(n - transient));
    State cur = init;
    long run = 0;
    for (long i = 1; i <= n; ++i) {
        const CheckedStep cs = step_checked(p, cur);
        if (cs.escaped) {
            out.status = TrajectoryStatus::escaped;
            out.escaped_step = i;
            out.point = cs.next;
            return out;
        }
        run = dist(cs.next, cur) < kConvTol ? run + 1 : 0;
        cur = cs.next;
        if (i > transient) out.samples.push_back(cur);
    }

    if (!out.samples.empty()) {
        State c{0.0, 0.0};
        for (const State& s : out.samples) {
            c.u += s.u;
            c.v += s.v;
        }
        c.u /= static_cast<double>(out.samples.size());
        c.v /= static_cast<double>(out.samples.size());
        out.centroid = c;
        out.radius = limit_radius_about(out.samples, c);
    }
    out.point = cur;
    out.status = run >= std::min(kConvRun, n) ? TrajectoryStatus::converged_to
                                              : TrajectoryStatus::limit_set;
    return out;
}

ConvergenceRun iterate_to_convergence(const Params& p, State init, long max_iter) {
    ConvergenceRun out;
    State cur = init;
    long run = 0;
    for (long i = 1; i <= max_iter; ++i) {
        const CheckedStep cs = step_checked(p, cur);
        if (cs.escaped) {
            out.status = TrajectoryStatus::escaped;
            out.point = cs.next;
            out.steps = i;
            return out;
        }
        const double d = dist(cs.next, cur);
        if (i == 1 && d == 0.0) {
            // already sitting at a fixed point
            out.status = TrajectoryStatus::converged_to;
            out.point = cs.next;
            out.steps = 0;
            return out;
        }
        run = d < kConvTol ? run + 1 : 0;
        cur = cs.next;
        if (run >= kConvRun) {
            out.status = TrajectoryStatus::converged_to;
            out.point = cur;
            out.steps = i;
            return out;
        }
    }
    out.status = TrajectoryStatus::max_iter;
    out.point = cur;
    out.steps = max_iter;
    return out;
}

double limit_radius_about(const std::vector<State>& samples, const State& center) {
    double r = 0.0;
    for (const State& s : samples) r = std::max(r, dist(s, center));
    return r;
}

std::vector<double> beta_grid(double lo, double hi, double step) {
    if (!(step > 0.0) || !(hi >= lo))
        throw std::invalid_argument("beta_grid: need hi >= lo and step > 0");
    const long count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(static_cast<size_t>(count));
    for (long i = 0; i < count; ++i) out.push_back(lo + static_cast<double>(i) * step);
    return out;
}

SweepResult bifurcation_sweep(double r, double theta, double gamma,
                              const std::vector<double>& betas, State init,
                              long n, long transient, long keep) {
    SweepResult res;
    res.points.reserve(betas.size());
    for (const double beta : betas) {
        const Params p{r, beta, theta, gamma};
        SweepPoint pt;
        pt.beta = beta;

        const TrajectoryResult traj = trajectory(p, init, n, transient);
        const size_t total = traj.samples.size();
        const size_t take = std::min<size_t>(total, static_cast<size_t>(keep));
        pt.u.reserve(take);
        pt.v.reserve(take);
        std::vector<State> kept(traj.samples.end() - static_cast<long>(take),
                                traj.samples.end());
        for (const State& s : kept) {
            pt.u.push_back(s.u);
            pt.v.push_back(s.v);
        }
        pt.escaped = traj.status == TrajectoryStatus::escaped;
        pt.escaped_step = traj.escaped_step;

        pt.radius = std::numeric_limits<double>::quiet_NaN();
        const auto fps = positive_fixed_points(p);
        for (const auto& fp : fps) {
            if (fp.branch == Branch::E1) {
                pt.radius = limit_radius_about(kept, State{fp.u, fp.v});
                break;
            }
        }

        try {
            pt.mle = max_lyapunov(p, init, n, transient);
        } catch (const std::runtime_error&) {
            pt.mle = std::numeric_limits<double>::quiet_NaN();
        }
        res.points.push_back(std::move(pt));
    }
    return res;
}

double max_lyapunov(const Params& p, State init, long n, long transient) {
    if (!(n > transient && transient >= 0))
        throw std::invalid_argument("max_lyapunov: need n > transient >= 0");

    State cur = init;
    for (long i = 1; i <= transient; ++i) {
        const CheckedStep cs = step_checked(p, cur);
        if (cs.escaped) {
            std::ostringstream os;
            os << "max_lyapunov: orbit escaped at step " << i;
            throw std::runtime_error(os.str());
        }
        cur = cs.next;
    }

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    double tu = inv_sqrt2, tv = inv_sqrt2;
    double acc = 0.0;
    for (long i = transient + 1; i <= n; ++i) {
        const Jacobian2 j = jacobian(p, cur);
        const double nu_ = j.j11 * tu + j.j12 * tv;
        const double nv_ = j.j21 * tu + j.j22 * tv;
        const double growth = std::hypot(nu_, nv_);
        if (growth == 0.0)
            throw std::runtime_error("max_lyapunov: tangent norm underflowed to zero");
        acc += std::log(growth);
        tu = nu_ / growth;
        tv = nv_ / growth;

        const CheckedStep cs = step_checked(p, cur);
        if (cs.escaped) {
            std::ostringstream os;
            os << "max_lyapunov: orbit escaped at step " << i;
            throw std::runtime_error(os.str());
        }
        cur = cs.next;
    }
    return acc / static_cast<double>(n - transient);
}

PhasePortrait phase_portrait(const Params& p, const std::vector<State>& inits,
                             long n, long transient, int nullcline_samples) {
    PhasePortrait out;
    out.clouds.reserve(inits.size());
    for (const State& init : inits) out.clouds.push_back(trajectory(p, init, n, transient));
    out.fixed_points = positive_fixed_points(p);
    out.nullcline.reserve(static_cast<size_t>(nullcline_samples));
    for (int k = 1; k <= nullcline_samples; ++k) {
        const double u = static_cast<double>(k) / (nullcline_samples + 1.0);
        out.nullcline.push_back({u, v_of_u(p, u)});
    }
    return out;
}

namespace {

bool inside_m(const Params& p, const State& s) {
    constexpr double tol = 1e-12;
    if (!(s.u >= -tol && s.u <= 1.0 + tol && s.v >= -tol)) return false;
    if (s.u <= 1e-300) return true;  // omega blows up, only the sign checks bind
    return s.v <= omega(p, s.u) * (1.0 + 1e-9) + 1e-9;
}

}  // namespace

ScanResult convergence_scan(const Params& p, ScanRegion region, int nu, int nv,
                            long max_iter) {
    if (nu < 1 || nv < 1)
        throw std::invalid_argument("convergence_scan: grid counts must be positive");

    constexpr double kMargin = 1e-6;
    double u_top = 1.0;
    double v_cap_global = std::numeric_limits<double>::infinity();
    if (region != ScanRegion::full_M) {
        const auto xc = omega_critical(p);
        if (!xc)
            throw std::invalid_argument(
                "convergence_scan: omega has no interior critical points at this gamma");
        if (region == ScanRegion::u_below_x1) u_top = xc->first;
        else v_cap_global = omega(p, xc->first);
    }

    std::vector<State> inits;
    inits.reserve(static_cast<size_t>(nu) * static_cast<size_t>(nv));
    for (int i = 1; i <= nu; ++i) {
        const double u = u_top * static_cast<double>(i) / nu;
        const double vmax =
            std::max(0.0, std::min(omega(p, u), v_cap_global) - kMargin);
        for (int j = 0; j < nv; ++j) {
            const double v = nv == 1 ? 0.0 : vmax * static_cast<double>(j) / (nv - 1);
            inits.push_back({u, v});
        }
    }

    ScanResult res;
    res.points.reserve(inits.size());
    const State target{1.0, 0.0};
    for (const State& init : inits) {
        ScanOutcome oc;
        oc.init = init;

        State cur = init;
        long run = 0;
        bool converged = false;
        long steps = max_iter;
        for (long i = 1; i <= max_iter; ++i) {
            const CheckedStep cs = step_checked(p, cur);
            if (cs.escaped) {
                steps = i;
                if (res.stayed_in_m) {
                    res.stayed_in_m = false;
                }
                break;
            }
            const double rise = cs.next.v - cur.v;
            if (rise > 1e-12 * std::max(1.0, std::abs(cur.v))) {
                res.v_monotone = false;
                res.max_v_increase = std::max(res.max_v_increase, rise);
            }
            if (res.stayed_in_m && !inside_m(p, cs.next)) res.stayed_in_m = false;

            const double d = dist(cs.next, cur);
            run = d < kConvTol ? run + 1 : 0;
            cur = cs.next;
            if (run >= kConvRun || (i == 1 && d == 0.0)) {
                converged = true;
                steps = i;
                break;
            }
        }
        oc.steps = steps;
        oc.converged_to_target = converged && dist(cur, target) < 1e-5;
        if (oc.converged_to_target)
            ++res.converged;
        else
            res.counterexamples.push_back(init);
        res.points.push_back(oc);
    }
    res.fraction = inits.empty()
                       ? 0.0
                       : static_cast<double>(res.converged) / static_cast<double>(inits.size());
    return res;
}

}  // namespace pzmap
