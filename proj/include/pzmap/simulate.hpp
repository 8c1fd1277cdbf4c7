#pragma once

#include <optional>
#include <vector>

#include "pzmap/fixed_points.hpp"
#include "pzmap/model.hpp"

namespace pzmap {

enum class TrajectoryStatus { converged_to, limit_set, escaped, max_iter };

std::string to_string(TrajectoryStatus s);

// Post-transient orbit segment plus a status classification.
//   converged_to: displacement stayed below 1e-10 for the trailing 100 steps
//                 (or the whole run when shorter); `point` is the final state
//   limit_set:    ran the full budget without converging; centroid and the
//                 max distance of the samples from it describe the cloud
//   escaped:      a coordinate became non-finite or left [0,2] x [0,inf);
//                 `escaped_step` is the first such step (1-based), `point`
//                 the offending state
//   max_iter:     only produced by the convergence-targeted iteration below
struct TrajectoryResult {
    std::vector<State> samples;
    TrajectoryStatus status = TrajectoryStatus::max_iter;
    State point;
    double radius = 0.0;
    State centroid;
    long escaped_step = -1;
};

// Iterates the map n times from init, discarding the first `transient`
// states. Requires n > transient >= 0. Escape never throws; it is recorded
// in the status.
TrajectoryResult trajectory(const Params& p, State init, long n, long transient);

// Iterates until convergence (same sustained-displacement rule), escape, or
// max_iter steps. No samples are kept; `steps` reports how far it got.
struct ConvergenceRun {
    TrajectoryStatus status = TrajectoryStatus::max_iter;
    State point;
    long steps = 0;
};
ConvergenceRun iterate_to_convergence(const Params& p, State init,
                                      long max_iter = 1000000);

// Max distance of the samples from a center point; 0 for an empty list.
double limit_radius_about(const std::vector<State>& samples, const State& center);

// beta values lo, lo+step, ..., spanning [lo, hi] inclusive up to rounding.
std::vector<double> beta_grid(double lo, double hi, double step);

// One beta of a bifurcation sweep. u/v hold the last `keep` post-transient
// samples; radius is the max distance of those samples from E1 (NaN when no
// positive fixed point exists at this beta); mle is the maximal Lyapunov
// exponent over the same budget (NaN when the orbit escapes).
struct SweepPoint {
    double beta = 0.0;
    std::vector<double> u;
    std::vector<double> v;
    double radius = 0.0;
    double mle = 0.0;
    bool escaped = false;
    long escaped_step = -1;
};

struct SweepResult {
    std::vector<SweepPoint> points;
};

// Independent trajectory per beta, all from the same init. Escape at one
// beta is recorded and the sweep continues.
SweepResult bifurcation_sweep(double r, double theta, double gamma,
                              const std::vector<double>& betas, State init,
                              long n, long transient, long keep);

// Average log growth of a tangent vector evolved by the Jacobian along the
// orbit, renormalized every step; the transient is walked first without
// tangent bookkeeping. Throws std::runtime_error on escape or when the
// tangent norm underflows to zero.
double max_lyapunov(const Params& p, State init, long n, long transient);

// Orbit clouds for a set of initial points plus the positive fixed points
// and the coexistence curve v = v_of_u(u) sampled on (0,1).
struct PhasePortrait {
    std::vector<TrajectoryResult> clouds;
    std::vector<FixedPointRecord> fixed_points;
    std::vector<State> nullcline;
};
PhasePortrait phase_portrait(const Params& p, const std::vector<State>& inits,
                             long n, long transient,
                             int nullcline_samples = 400);

// Initial-condition region for the convergence scan. The x1 quantities come
// from omega_critical; requesting them when omega has no interior critical
// points throws std::invalid_argument.
enum class ScanRegion { full_M, u_below_x1, v_below_omega_x1 };

std::string to_string(ScanRegion r);

struct ScanOutcome {
    State init;
    bool converged_to_target = false;  // reached (1,0)
    long steps = 0;
};

struct ScanResult {
    std::vector<ScanOutcome> points;
    long converged = 0;
    double fraction = 0.0;
    bool v_monotone = true;          // v never increased along any orbit
    double max_v_increase = 0.0;
    bool stayed_in_m = true;         // no orbit left M = {0<=u<=1, 0<=v<=omega(u)}
    std::vector<State> counterexamples;  // inits that missed the target
};

// Deterministic nu x nv lattice of initial points inside the region (the
// curve v = omega(u) is excluded by a 1e-6 margin), each iterated to
// convergence or max_iter steps; target is the boundary point (1,0).
// Hypothesis checking is the caller's job (see global).
ScanResult convergence_scan(const Params& p, ScanRegion region, int nu, int nv,
                            long max_iter = 1000000);

}  // namespace pzmap
