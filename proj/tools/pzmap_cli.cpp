#include <charconv>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pzmap/fixed_points.hpp"
#include "pzmap/global.hpp"
#include "pzmap/model.hpp"
#include "pzmap/normal_form.hpp"
#include "pzmap/simulate.hpp"
#include "pzmap/stability.hpp"

using nlohmann::json;
using namespace pzmap;

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

// exit-code carriers: 1 = analysis not applicable, 3 = I/O failure
struct NotApplicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double x) {
    char buf[48];
    const auto res =
        std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path);
    if (!f) throw IoError("cannot open output file: " + path);
    f << content;
    f.flush();
    if (!f) throw IoError("short write: " + path);
}

json load_config(const std::string& path) {
    if (path.empty()) return json();
    std::ifstream f(path);
    if (!f) throw IoError("cannot open config file: " + path);
    try {
        json j;
        f >> j;
        if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
        return j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
}

// flags win over the config file: only options never seen on the command
// line pick up config values
template <typename T>
void cfg_merge(const json& j, const CLI::Option* opt, T& var) {
    if (!j.is_object() || opt->count() > 0) return;
    const std::string& key = opt->get_lnames().front();
    if (!j.contains(key)) return;
    try {
        var = j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw std::invalid_argument("config key '" + key + "': " + e.what());
    }
}

double need(double v, const char* name) {
    if (!std::isfinite(v))
        throw std::invalid_argument(std::string("missing required option --") + name);
    return v;
}

State parse_state(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected 'u,v' but got: " + s);
    size_t used = 0;
    const double u = std::stod(s.substr(0, comma), &used);
    const double v = std::stod(s.substr(comma + 1), &used);
    return {u, v};
}

json complex_json(const std::complex<double>& z) {
    return json::array({z.real(), z.imag()});
}

// ---- fixed-points ------------------------------------------------

struct FixedPointsOpts {
    double r = kUnset, beta = kUnset, theta = kUnset, gamma = kUnset;
    std::string out, config;
    CLI::Option *o_r{}, *o_beta{}, *o_theta{}, *o_gamma{};
};

void run_fixed_points(const FixedPointsOpts& o) {
    const json cfg = load_config(o.config);
    double r = o.r, beta = o.beta, theta = o.theta, gamma = o.gamma;
    cfg_merge(cfg, o.o_r, r);
    cfg_merge(cfg, o.o_beta, beta);
    cfg_merge(cfg, o.o_theta, theta);
    cfg_merge(cfg, o.o_gamma, gamma);

    const Params p{need(r, "r"), need(beta, "beta"), need(theta, "theta"),
                   need(gamma, "gamma")};
    const RegionLabel label = classify_region(p);
    const double uh = u_hat(p);
    const auto [origin_kind, bnd_kind] = boundary_classification(p);

    json out;
    out["r"] = p.r;
    out["beta"] = p.beta;
    out["theta"] = p.theta;
    out["gamma"] = p.gamma;
    out["region"] = to_string(label.tag);
    if (label.theta_lo) out["theta_lo"] = *label.theta_lo;
    if (label.theta_hi) out["theta_hi"] = *label.theta_hi;
    out["psi_at_one"] = psi(p, 1.0);
    out["u_hat"] = uh;
    out["psi_at_u_hat"] = psi(p, uh);
    out["origin_kind"] = to_string(origin_kind);
    out["boundary_kind"] = to_string(bnd_kind);
    out["boundary_lambda2"] = boundary_lambda2(p);

    json arr = json::array();
    for (const FixedPointRecord& fp : positive_fixed_points(p)) {
        json rec;
        rec["u"] = fp.u;
        rec["v"] = fp.v;
        rec["branch"] = to_string(fp.branch);
        rec["kind"] = to_string(fp.kind);
        rec["tangency"] = fp.tangency;
        const CharPoly c = char_poly_at(p, fp.u);
        rec["trace"] = -c.B;
        rec["det"] = c.C;
        rec["jury"] = to_string(jury_classify(c));
        arr.push_back(std::move(rec));
    }
    out["positive"] = arr;
    write_out(o.out, out.dump(2) + "\n");
}

// ---- ns ----------------------------------------------------------

struct NsOpts {
    double r = kUnset, theta = kUnset, gamma = kUnset;
    std::string out, config;
    CLI::Option *o_r{}, *o_theta{}, *o_gamma{};
};

void run_ns(const NsOpts& o) {
    const json cfg = load_config(o.config);
    double r = o.r, theta = o.theta, gamma = o.gamma;
    cfg_merge(cfg, o.o_r, r);
    cfg_merge(cfg, o.o_theta, theta);
    cfg_merge(cfg, o.o_gamma, gamma);
    need(r, "r");
    need(theta, "theta");
    need(gamma, "gamma");

    NsSearchResult found;
    try {
        found = find_ns_beta(r, theta, gamma);
    } catch (const std::runtime_error& e) {
        throw NotApplicable(e.what());
    }
    const Params p{r, found.beta0, theta, gamma};
    const NormalFormReport rep = normal_form_L(p, found.u1);

    json out;
    out["beta0"] = rep.beta0;
    out["u1"] = rep.u1;
    out["v1"] = rep.v1;
    out["lambda1"] = complex_json(rep.lambda1);
    out["lambda2"] = complex_json(rep.lambda2);
    out["alpha"] = rep.alpha;
    out["transversality"] = rep.transversality;
    json tc;
    tc["a10"] = rep.taylor.a10;
    tc["a01"] = rep.taylor.a01;
    tc["a20"] = rep.taylor.a20;
    tc["a11"] = rep.taylor.a11;
    tc["a30"] = rep.taylor.a30;
    tc["a21"] = rep.taylor.a21;
    tc["b10"] = rep.taylor.b10;
    tc["b01"] = rep.taylor.b01;
    tc["b20"] = rep.taylor.b20;
    tc["b11"] = rep.taylor.b11;
    tc["b30"] = rep.taylor.b30;
    tc["b21"] = rep.taylor.b21;
    out["taylor"] = tc;
    out["m"] = rep.m;
    out["n"] = rep.n;
    out["c20"] = rep.c20;
    out["c11"] = rep.c11;
    out["c02"] = rep.c02;
    out["c30"] = rep.c30;
    out["c21"] = rep.c21;
    out["c12"] = rep.c12;
    out["c03"] = rep.c03;
    out["d20"] = rep.d20;
    out["d11"] = rep.d11;
    out["d02"] = rep.d02;
    out["d30"] = rep.d30;
    out["d21"] = rep.d21;
    out["d12"] = rep.d12;
    out["d03"] = rep.d03;
    out["L20"] = complex_json(rep.L20);
    out["L11"] = complex_json(rep.L11);
    out["L02"] = complex_json(rep.L02);
    out["L21"] = complex_json(rep.L21);
    out["L"] = rep.L;
    out["direction"] = to_string(rep.direction);
    json crossings = json::array();
    for (const auto& [b, u] : found.all) crossings.push_back(json::array({b, u}));
    out["crossings"] = crossings;
    out["multiple"] = found.multiple;
    write_out(o.out, out.dump(2) + "\n");
}

// ---- sweep -------------------------------------------------------

struct SweepOpts {
    double r = kUnset, theta = kUnset, gamma = kUnset;
    double bmin = kUnset, bmax = kUnset, bstep = kUnset;
    double u0 = 0.1, v0 = 0.3;
    long n = 10000, transient = 5000, keep = 200;
    std::string out, config;
    CLI::Option *o_r{}, *o_theta{}, *o_gamma{}, *o_bmin{}, *o_bmax{}, *o_bstep{},
        *o_u0{}, *o_v0{}, *o_n{}, *o_transient{}, *o_keep{};
};

void run_sweep(const SweepOpts& raw) {
    const json cfg = load_config(raw.config);
    SweepOpts o = raw;
    cfg_merge(cfg, o.o_r, o.r);
    cfg_merge(cfg, o.o_theta, o.theta);
    cfg_merge(cfg, o.o_gamma, o.gamma);
    cfg_merge(cfg, o.o_bmin, o.bmin);
    cfg_merge(cfg, o.o_bmax, o.bmax);
    cfg_merge(cfg, o.o_bstep, o.bstep);
    cfg_merge(cfg, o.o_u0, o.u0);
    cfg_merge(cfg, o.o_v0, o.v0);
    cfg_merge(cfg, o.o_n, o.n);
    cfg_merge(cfg, o.o_transient, o.transient);
    cfg_merge(cfg, o.o_keep, o.keep);

    const auto grid = beta_grid(need(o.bmin, "beta-min"), need(o.bmax, "beta-max"),
                                need(o.bstep, "beta-step"));
    const SweepResult res =
        bifurcation_sweep(need(o.r, "r"), need(o.theta, "theta"),
                          need(o.gamma, "gamma"), grid, {o.u0, o.v0}, o.n,
                          o.transient, o.keep);
    std::string csv = "beta,u,v\n";
    for (const SweepPoint& pt : res.points)
        for (size_t k = 0; k < pt.u.size(); ++k)
            csv += fmt17(pt.beta) + ',' + fmt17(pt.u[k]) + ',' + fmt17(pt.v[k]) + '\n';
    write_out(o.out, csv);
}

// ---- mle ---------------------------------------------------------

struct MleOpts {
    double r = kUnset, theta = kUnset, gamma = kUnset;
    double bmin = kUnset, bmax = kUnset, bstep = kUnset;
    double u0 = 0.1, v0 = 0.3;
    long n = 20000, transient = 5000;
    std::string out, config;
    CLI::Option *o_r{}, *o_theta{}, *o_gamma{}, *o_bmin{}, *o_bmax{}, *o_bstep{},
        *o_u0{}, *o_v0{}, *o_n{}, *o_transient{};
};

void run_mle(const MleOpts& raw) {
    const json cfg = load_config(raw.config);
    MleOpts o = raw;
    cfg_merge(cfg, o.o_r, o.r);
    cfg_merge(cfg, o.o_theta, o.theta);
    cfg_merge(cfg, o.o_gamma, o.gamma);
    cfg_merge(cfg, o.o_bmin, o.bmin);
    cfg_merge(cfg, o.o_bmax, o.bmax);
    cfg_merge(cfg, o.o_bstep, o.bstep);
    cfg_merge(cfg, o.o_u0, o.u0);
    cfg_merge(cfg, o.o_v0, o.v0);
    cfg_merge(cfg, o.o_n, o.n);
    cfg_merge(cfg, o.o_transient, o.transient);

    const auto grid = beta_grid(need(o.bmin, "beta-min"), need(o.bmax, "beta-max"),
                                need(o.bstep, "beta-step"));
    need(o.r, "r");
    need(o.theta, "theta");
    need(o.gamma, "gamma");
    std::string csv = "beta,mle\n";
    for (const double beta : grid) {
        const Params p{o.r, beta, o.theta, o.gamma};
        double mle;
        try {
            mle = max_lyapunov(p, {o.u0, o.v0}, o.n, o.transient);
        } catch (const std::runtime_error&) {
            mle = std::numeric_limits<double>::quiet_NaN();
        }
        csv += fmt17(beta) + ',' + fmt17(mle) + '\n';
    }
    write_out(o.out, csv);
}

// ---- trajectory --------------------------------------------------

struct TrajOpts {
    double r = kUnset, beta = kUnset, theta = kUnset, gamma = kUnset;
    double u0 = 0.1, v0 = 0.3;
    long n = 10000, transient = 0;
    std::string out, config;
    CLI::Option *o_r{}, *o_beta{}, *o_theta{}, *o_gamma{}, *o_u0{}, *o_v0{},
        *o_n{}, *o_transient{};
};

void run_trajectory(const TrajOpts& raw) {
    const json cfg = load_config(raw.config);
    TrajOpts o = raw;
    cfg_merge(cfg, o.o_r, o.r);
    cfg_merge(cfg, o.o_beta, o.beta);
    cfg_merge(cfg, o.o_theta, o.theta);
    cfg_merge(cfg, o.o_gamma, o.gamma);
    cfg_merge(cfg, o.o_u0, o.u0);
    cfg_merge(cfg, o.o_v0, o.v0);
    cfg_merge(cfg, o.o_n, o.n);
    cfg_merge(cfg, o.o_transient, o.transient);

    const Params p{need(o.r, "r"), need(o.beta, "beta"), need(o.theta, "theta"),
                   need(o.gamma, "gamma")};
    const TrajectoryResult res = trajectory(p, {o.u0, o.v0}, o.n, o.transient);
    std::string csv = "step,u,v\n";
    for (size_t k = 0; k < res.samples.size(); ++k) {
        const long step = o.transient + 1 + static_cast<long>(k);
        csv += std::to_string(step) + ',' + fmt17(res.samples[k].u) + ',' +
               fmt17(res.samples[k].v) + '\n';
    }
    write_out(o.out, csv);
    std::cerr << "status: " << to_string(res.status);
    if (res.status == TrajectoryStatus::escaped)
        std::cerr << " at step " << res.escaped_step;
    std::cerr << "\n";
}

// ---- phase -------------------------------------------------------

struct PhaseOpts {
    double r = kUnset, beta = kUnset, theta = kUnset, gamma = kUnset;
    std::vector<std::string> inits;
    long n = 10000, transient = 5000;
    std::string out, config;
    CLI::Option *o_r{}, *o_beta{}, *o_theta{}, *o_gamma{}, *o_inits{}, *o_n{},
        *o_transient{};
};

void run_phase(const PhaseOpts& raw) {
    const json cfg = load_config(raw.config);
    PhaseOpts o = raw;
    cfg_merge(cfg, o.o_r, o.r);
    cfg_merge(cfg, o.o_beta, o.beta);
    cfg_merge(cfg, o.o_theta, o.theta);
    cfg_merge(cfg, o.o_gamma, o.gamma);
    cfg_merge(cfg, o.o_inits, o.inits);
    cfg_merge(cfg, o.o_n, o.n);
    cfg_merge(cfg, o.o_transient, o.transient);

    const Params p{need(o.r, "r"), need(o.beta, "beta"), need(o.theta, "theta"),
                   need(o.gamma, "gamma")};
    if (o.inits.empty()) o.inits.push_back("0.1,0.3");
    std::vector<State> starts;
    starts.reserve(o.inits.size());
    for (const std::string& s : o.inits) starts.push_back(parse_state(s));

    const PhasePortrait pp = phase_portrait(p, starts, o.n, o.transient);
    std::string csv = "series,u,v\n";
    for (size_t i = 0; i < pp.clouds.size(); ++i) {
        const std::string name = "init" + std::to_string(i);
        for (const State& s : pp.clouds[i].samples)
            csv += name + ',' + fmt17(s.u) + ',' + fmt17(s.v) + '\n';
    }
    for (const FixedPointRecord& fp : pp.fixed_points)
        csv += to_string(fp.branch) + ',' + fmt17(fp.u) + ',' + fmt17(fp.v) + '\n';
    for (const State& s : pp.nullcline)
        csv += std::string("nullcline,") + fmt17(s.u) + ',' + fmt17(s.v) + '\n';
    write_out(o.out, csv);
}

// ---- regions -----------------------------------------------------

struct RegionsOpts {
    double r = kUnset;
    double gmin = 0.01, gmax = 1.0;
    double tmin = 0.1, tmax = 8.0;
    long gsteps = 100, tsteps = 100;
    std::string out, config;
    CLI::Option *o_r{}, *o_gmin{}, *o_gmax{}, *o_gsteps{}, *o_tmin{}, *o_tmax{},
        *o_tsteps{};
};

void run_regions(const RegionsOpts& raw) {
    const json cfg = load_config(raw.config);
    RegionsOpts o = raw;
    cfg_merge(cfg, o.o_r, o.r);
    cfg_merge(cfg, o.o_gmin, o.gmin);
    cfg_merge(cfg, o.o_gmax, o.gmax);
    cfg_merge(cfg, o.o_gsteps, o.gsteps);
    cfg_merge(cfg, o.o_tmin, o.tmin);
    cfg_merge(cfg, o.o_tmax, o.tmax);
    cfg_merge(cfg, o.o_tsteps, o.tsteps);
    need(o.r, "r");
    if (o.gsteps < 1 || o.tsteps < 1)
        throw std::invalid_argument("grid step counts must be positive");

    std::string csv = "gamma,theta,region\n";
    for (long i = 0; i < o.gsteps; ++i) {
        const double g = o.gsteps == 1
                             ? o.gmin
                             : o.gmin + (o.gmax - o.gmin) * static_cast<double>(i) /
                                            static_cast<double>(o.gsteps - 1);
        for (long j = 0; j < o.tsteps; ++j) {
            const double t = o.tsteps == 1
                                 ? o.tmin
                                 : o.tmin + (o.tmax - o.tmin) * static_cast<double>(j) /
                                                static_cast<double>(o.tsteps - 1);
            const Params p{o.r, 1.0, t, g};
            csv += fmt17(g) + ',' + fmt17(t) + ',' + to_string(classify_region(p).tag) +
                   '\n';
        }
    }
    write_out(o.out, csv);
}

// ---- global-check ------------------------------------------------

struct GlobalOpts {
    double r = kUnset, beta = kUnset, theta = kUnset, gamma = kUnset;
    long nu = 50, nv = 50, max_iter = 1000000;
    std::string region = "auto";
    std::string out, config;
    CLI::Option *o_r{}, *o_beta{}, *o_theta{}, *o_gamma{}, *o_nu{}, *o_nv{},
        *o_max_iter{}, *o_region{};
};

void run_global_check(const GlobalOpts& raw) {
    const json cfg = load_config(raw.config);
    GlobalOpts o = raw;
    cfg_merge(cfg, o.o_r, o.r);
    cfg_merge(cfg, o.o_beta, o.beta);
    cfg_merge(cfg, o.o_theta, o.theta);
    cfg_merge(cfg, o.o_gamma, o.gamma);
    cfg_merge(cfg, o.o_nu, o.nu);
    cfg_merge(cfg, o.o_nv, o.nv);
    cfg_merge(cfg, o.o_max_iter, o.max_iter);
    cfg_merge(cfg, o.o_region, o.region);

    const Params p{need(o.r, "r"), need(o.beta, "beta"), need(o.theta, "theta"),
                   need(o.gamma, "gamma")};
    const ConvergenceReport rep = convergence_hypotheses(p);
    if (rep.which == ConvergenceCase::none) {
        std::string why = rep.nonneg.holds
                              ? "the beta/gamma hypotheses of the convergence "
                                "propositions fail"
                              : "no nonnegativity case applies";
        throw NotApplicable("global convergence not established: " + why);
    }

    ScanRegion region;
    if (o.region == "auto") {
        region = rep.which == ConvergenceCase::prop_5_4 ? ScanRegion::u_below_x1
                                                        : ScanRegion::full_M;
    } else if (o.region == "full") {
        region = ScanRegion::full_M;
    } else if (o.region == "u-below") {
        region = ScanRegion::u_below_x1;
    } else if (o.region == "v-below") {
        region = ScanRegion::v_below_omega_x1;
    } else {
        throw std::invalid_argument("--region must be auto, full, u-below or v-below");
    }

    const ScanResult scan =
        convergence_scan(p, region, static_cast<int>(o.nu), static_cast<int>(o.nv),
                         o.max_iter);
    std::string csv = "u0,v0,converged,steps\n";
    for (const ScanOutcome& oc : scan.points)
        csv += fmt17(oc.init.u) + ',' + fmt17(oc.init.v) + ',' +
               (oc.converged_to_target ? "1" : "0") + ',' + std::to_string(oc.steps) +
               '\n';
    write_out(o.out, csv);

    std::cerr << "case: " << to_string(rep.which) << " ("
              << rep.nonneg.case_label.value_or("-") << "), region: "
              << to_string(region) << ", fraction converged: " << scan.fraction
              << "\n";
    if (!scan.counterexamples.empty()) {
        std::cerr << "non-convergent initial points:\n";
        for (const State& s : scan.counterexamples)
            std::cerr << "  (" << fmt17(s.u) << ", " << fmt17(s.v) << ")\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete plankton map: fixed points, stability, bifurcation and "
                 "convergence analysis"};
    app.require_subcommand(1);

    FixedPointsOpts fp;
    {
        CLI::App* c = app.add_subcommand(
            "fixed-points", "positive fixed points, region and classifications (JSON)");
        fp.o_r = c->add_option("--r", fp.r, "growth-removal parameter r");
        fp.o_beta = c->add_option("--beta", fp.beta, "conversion parameter beta");
        fp.o_theta = c->add_option("--theta", fp.theta, "toxin parameter theta");
        fp.o_gamma = c->add_option("--gamma", fp.gamma, "half-saturation gamma");
        c->add_option("--out", fp.out, "output path (default stdout)");
        c->add_option("--config", fp.config, "JSON config file; flags override it");
        c->callback([&fp]() { run_fixed_points(fp); });
    }

    NsOpts ns;
    {
        CLI::App* c = app.add_subcommand(
            "ns", "Neimark-Sacker point and normal-form report (JSON)");
        ns.o_r = c->add_option("--r", ns.r, "growth-removal parameter r");
        ns.o_theta = c->add_option("--theta", ns.theta, "toxin parameter theta");
        ns.o_gamma = c->add_option("--gamma", ns.gamma, "half-saturation gamma");
        c->add_option("--out", ns.out, "output path (default stdout)");
        c->add_option("--config", ns.config, "JSON config file; flags override it");
        c->callback([&ns]() { run_ns(ns); });
    }

    SweepOpts sw;
    {
        CLI::App* c = app.add_subcommand(
            "sweep", "bifurcation sweep over beta (CSV: beta,u,v)");
        sw.o_r = c->add_option("--r", sw.r, "growth-removal parameter r");
        sw.o_theta = c->add_option("--theta", sw.theta, "toxin parameter theta");
        sw.o_gamma = c->add_option("--gamma", sw.gamma, "half-saturation gamma");
        sw.o_bmin = c->add_option("--beta-min", sw.bmin, "first beta");
        sw.o_bmax = c->add_option("--beta-max", sw.bmax, "last beta");
        sw.o_bstep = c->add_option("--beta-step", sw.bstep, "beta increment");
        sw.o_u0 = c->add_option("--u0", sw.u0, "initial u (default 0.1)");
        sw.o_v0 = c->add_option("--v0", sw.v0, "initial v (default 0.3)");
        sw.o_n = c->add_option("--n", sw.n, "iterations per beta (default 10000)");
        sw.o_transient =
            c->add_option("--transient", sw.transient, "discarded steps (default 5000)");
        sw.o_keep = c->add_option("--keep", sw.keep, "kept samples per beta (default 200)");
        c->add_option("--out", sw.out, "output path (default stdout)");
        c->add_option("--config", sw.config, "JSON config file; flags override it");
        c->callback([&sw]() { run_sweep(sw); });
    }

    MleOpts ml;
    {
        CLI::App* c = app.add_subcommand(
            "mle", "maximal Lyapunov exponent over a beta grid (CSV: beta,mle)");
        ml.o_r = c->add_option("--r", ml.r, "growth-removal parameter r");
        ml.o_theta = c->add_option("--theta", ml.theta, "toxin parameter theta");
        ml.o_gamma = c->add_option("--gamma", ml.gamma, "half-saturation gamma");
        ml.o_bmin = c->add_option("--beta-min", ml.bmin, "first beta");
        ml.o_bmax = c->add_option("--beta-max", ml.bmax, "last beta");
        ml.o_bstep = c->add_option("--beta-step", ml.bstep, "beta increment");
        ml.o_u0 = c->add_option("--u0", ml.u0, "initial u (default 0.1)");
        ml.o_v0 = c->add_option("--v0", ml.v0, "initial v (default 0.3)");
        ml.o_n = c->add_option("--n", ml.n, "iterations per beta (default 20000)");
        ml.o_transient =
            c->add_option("--transient", ml.transient, "discarded steps (default 5000)");
        c->add_option("--out", ml.out, "output path (default stdout)");
        c->add_option("--config", ml.config, "JSON config file; flags override it");
        c->callback([&ml]() { run_mle(ml); });
    }

    TrajOpts tr;
    {
        CLI::App* c = app.add_subcommand(
            "trajectory", "single orbit listing (CSV: step,u,v)");
        tr.o_r = c->add_option("--r", tr.r, "growth-removal parameter r");
        tr.o_beta = c->add_option("--beta", tr.beta, "conversion parameter beta");
        tr.o_theta = c->add_option("--theta", tr.theta, "toxin parameter theta");
        tr.o_gamma = c->add_option("--gamma", tr.gamma, "half-saturation gamma");
        tr.o_u0 = c->add_option("--u0", tr.u0, "initial u (default 0.1)");
        tr.o_v0 = c->add_option("--v0", tr.v0, "initial v (default 0.3)");
        tr.o_n = c->add_option("--n", tr.n, "iterations (default 10000)");
        tr.o_transient =
            c->add_option("--transient", tr.transient, "discarded steps (default 0)");
        c->add_option("--out", tr.out, "output path (default stdout)");
        c->add_option("--config", tr.config, "JSON config file; flags override it");
        c->callback([&tr]() { run_trajectory(tr); });
    }

    PhaseOpts ph;
    {
        CLI::App* c = app.add_subcommand(
            "phase", "phase portrait clouds, fixed points and coexistence curve "
                     "(CSV: series,u,v)");
        ph.o_r = c->add_option("--r", ph.r, "growth-removal parameter r");
        ph.o_beta = c->add_option("--beta", ph.beta, "conversion parameter beta");
        ph.o_theta = c->add_option("--theta", ph.theta, "toxin parameter theta");
        ph.o_gamma = c->add_option("--gamma", ph.gamma, "half-saturation gamma");
        ph.o_inits = c->add_option("--init", ph.inits,
                                   "initial point 'u,v'; repeatable (default 0.1,0.3)");
        ph.o_n = c->add_option("--n", ph.n, "iterations per init (default 10000)");
        ph.o_transient =
            c->add_option("--transient", ph.transient, "discarded steps (default 5000)");
        c->add_option("--out", ph.out, "output path (default stdout)");
        c->add_option("--config", ph.config, "JSON config file; flags override it");
        c->callback([&ph]() { run_phase(ph); });
    }

    RegionsOpts rg;
    {
        CLI::App* c = app.add_subcommand(
            "regions", "fixed-point region over a (gamma,theta) grid "
                       "(CSV: gamma,theta,region)");
        rg.o_r = c->add_option("--r", rg.r, "growth-removal parameter r");
        rg.o_gmin = c->add_option("--gamma-min", rg.gmin, "grid start (default 0.01)");
        rg.o_gmax = c->add_option("--gamma-max", rg.gmax, "grid end (default 1.0)");
        rg.o_gsteps = c->add_option("--gamma-steps", rg.gsteps, "grid points (default 100)");
        rg.o_tmin = c->add_option("--theta-min", rg.tmin, "grid start (default 0.1)");
        rg.o_tmax = c->add_option("--theta-max", rg.tmax, "grid end (default 8.0)");
        rg.o_tsteps = c->add_option("--theta-steps", rg.tsteps, "grid points (default 100)");
        c->add_option("--out", rg.out, "output path (default stdout)");
        c->add_option("--config", rg.config, "JSON config file; flags override it");
        c->callback([&rg]() { run_regions(rg); });
    }

    GlobalOpts gc;
    {
        CLI::App* c = app.add_subcommand(
            "global-check", "verify convergence hypotheses, then lattice-scan the "
                            "region (CSV: u0,v0,converged,steps)");
        gc.o_r = c->add_option("--r", gc.r, "growth-removal parameter r");
        gc.o_beta = c->add_option("--beta", gc.beta, "conversion parameter beta");
        gc.o_theta = c->add_option("--theta", gc.theta, "toxin parameter theta");
        gc.o_gamma = c->add_option("--gamma", gc.gamma, "half-saturation gamma");
        gc.o_nu = c->add_option("--nu", gc.nu, "u lattice points (default 50)");
        gc.o_nv = c->add_option("--nv", gc.nv, "v lattice points (default 50)");
        gc.o_max_iter =
            c->add_option("--max-iter", gc.max_iter, "iteration cap (default 1e6)");
        gc.o_region = c->add_option(
            "--region", gc.region, "auto|full|u-below|v-below (default auto)");
        c->add_option("--out", gc.out, "output path (default stdout)");
        c->add_option("--config", gc.config, "JSON config file; flags override it");
        c->callback([&gc]() { run_global_check(gc); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const NotApplicable& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
