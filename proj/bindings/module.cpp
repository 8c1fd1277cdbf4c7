#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pzmap/fixed_points.hpp"
#include "pzmap/global.hpp"
#include "pzmap/model.hpp"
#include "pzmap/normal_form.hpp"
#include "pzmap/simulate.hpp"
#include "pzmap/stability.hpp"

namespace py = pybind11;
using namespace pzmap;

PYBIND11_MODULE(_core, m) {
    m.doc() = "discrete plankton map: fixed points, stability, normal form, "
              "convergence and simulation";

    py::class_<Params>(m, "Params")
        .def(py::init<double, double, double, double>(), py::arg("r"),
             py::arg("beta"), py::arg("theta"), py::arg("gamma"))
        .def_readonly("r", &Params::r)
        .def_readonly("beta", &Params::beta)
        .def_readonly("theta", &Params::theta)
        .def_readonly("gamma", &Params::gamma)
        .def("__repr__", [](const Params& p) {
            std::ostringstream os;
            os << "Params(r=" << p.r << ", beta=" << p.beta << ", theta=" << p.theta
               << ", gamma=" << p.gamma << ")";
            return os.str();
        });

    py::class_<State>(m, "State")
        .def(py::init([](double u, double v) { return State{u, v}; }), py::arg("u"),
             py::arg("v"))
        .def_readwrite("u", &State::u)
        .def_readwrite("v", &State::v)
        .def("__repr__", [](const State& s) {
            std::ostringstream os;
            os << "State(u=" << s.u << ", v=" << s.v << ")";
            return os.str();
        });

    py::class_<Jacobian2>(m, "Jacobian2")
        .def_readonly("j11", &Jacobian2::j11)
        .def_readonly("j12", &Jacobian2::j12)
        .def_readonly("j21", &Jacobian2::j21)
        .def_readonly("j22", &Jacobian2::j22)
        .def("trace", &Jacobian2::trace)
        .def("det", &Jacobian2::det);

    py::class_<CheckedStep>(m, "CheckedStep")
        .def_readonly("next", &CheckedStep::next)
        .def_readonly("escaped", &CheckedStep::escaped)
        .def_readonly("coord", &CheckedStep::coord);

    m.def("step", &step, py::arg("p"), py::arg("s"));
    m.def("step_checked", &step_checked, py::arg("p"), py::arg("s"));
    m.def("psi", &psi, py::arg("p"), py::arg("u"));
    m.def("h_poly", &h_poly, py::arg("p"), py::arg("u"));
    m.def("v_of_u", &v_of_u, py::arg("p"), py::arg("u"));
    m.def("omega", &omega, py::arg("p"), py::arg("u"));
    m.def("rho", &rho, py::arg("p"), py::arg("u"));
    m.def("jacobian", &jacobian, py::arg("p"), py::arg("s"));
    m.def("jacobian_at_fixed", &jacobian_at_fixed, py::arg("p"), py::arg("u_star"));
    m.def("trace_at_fixed", &trace_at_fixed, py::arg("p"), py::arg("u"));
    m.def("p_one_factored", &p_one_factored, py::arg("p"), py::arg("u"));

    py::enum_<Region>(m, "Region")
        .value("R1", Region::R1)
        .value("R2", Region::R2)
        .value("R3", Region::R3)
        .value("R4", Region::R4)
        .value("R5", Region::R5);

    py::enum_<Branch>(m, "Branch")
        .value("origin", Branch::origin)
        .value("boundary", Branch::boundary)
        .value("E1", Branch::E1)
        .value("E2", Branch::E2);

    py::enum_<Kind>(m, "Kind")
        .value("attracting", Kind::attracting)
        .value("repelling", Kind::repelling)
        .value("saddle", Kind::saddle)
        .value("nonhyperbolic", Kind::nonhyperbolic);

    py::class_<RegionLabel>(m, "RegionLabel")
        .def_readonly("tag", &RegionLabel::tag)
        .def_readonly("gamma_lo", &RegionLabel::gamma_lo)
        .def_readonly("gamma_hi", &RegionLabel::gamma_hi)
        .def_readonly("theta_lo", &RegionLabel::theta_lo)
        .def_readonly("theta_hi", &RegionLabel::theta_hi);

    py::class_<FixedPointRecord>(m, "FixedPointRecord")
        .def_readonly("u", &FixedPointRecord::u)
        .def_readonly("v", &FixedPointRecord::v)
        .def_readonly("branch", &FixedPointRecord::branch)
        .def_readonly("kind", &FixedPointRecord::kind)
        .def_readonly("tangency", &FixedPointRecord::tangency)
        .def("__repr__", [](const FixedPointRecord& f) {
            std::ostringstream os;
            os << "FixedPointRecord(" << to_string(f.branch) << ", u=" << f.u
               << ", v=" << f.v << ", " << to_string(f.kind) << ")";
            return os.str();
        });

    m.def("u_hat", &u_hat, py::arg("p"));
    m.def("classify_region", &classify_region, py::arg("p"));
    m.def("positive_fixed_points", &positive_fixed_points, py::arg("p"));
    m.def("boundary_classification", &boundary_classification, py::arg("p"));
    m.def("boundary_lambda2", &boundary_lambda2, py::arg("p"));

    py::class_<CharPoly>(m, "CharPoly")
        .def_readonly("B", &CharPoly::B)
        .def_readonly("C", &CharPoly::C)
        .def("at_one", &CharPoly::at_one)
        .def("at_minus_one", &CharPoly::at_minus_one);

    py::enum_<RootLocation>(m, "RootLocation")
        .value("both_inside", RootLocation::both_inside)
        .value("both_outside", RootLocation::both_outside)
        .value("saddle_split", RootLocation::saddle_split)
        .value("on_unit_circle_complex", RootLocation::on_unit_circle_complex)
        .value("root_at_minus_one", RootLocation::root_at_minus_one)
        .value("double_minus_one", RootLocation::double_minus_one)
        .value("root_at_plus_one", RootLocation::root_at_plus_one)
        .value("one_outside_other_inside", RootLocation::one_outside_other_inside)
        .value("one_outside_other_leq_minus_one",
               RootLocation::one_outside_other_leq_minus_one);

    m.def("char_poly_at", &char_poly_at, py::arg("p"), py::arg("u_star"));
    m.def("jury_classify", &jury_classify, py::arg("cp"));

    py::class_<TaylorCoeffs>(m, "TaylorCoeffs")
        .def_readonly("a10", &TaylorCoeffs::a10)
        .def_readonly("a01", &TaylorCoeffs::a01)
        .def_readonly("a20", &TaylorCoeffs::a20)
        .def_readonly("a11", &TaylorCoeffs::a11)
        .def_readonly("a30", &TaylorCoeffs::a30)
        .def_readonly("a21", &TaylorCoeffs::a21)
        .def_readonly("b10", &TaylorCoeffs::b10)
        .def_readonly("b01", &TaylorCoeffs::b01)
        .def_readonly("b20", &TaylorCoeffs::b20)
        .def_readonly("b11", &TaylorCoeffs::b11)
        .def_readonly("b30", &TaylorCoeffs::b30)
        .def_readonly("b21", &TaylorCoeffs::b21);

    py::enum_<CurveDirection>(m, "CurveDirection")
        .value("attracting_curve_for_beta_above",
               CurveDirection::attracting_curve_for_beta_above)
        .value("repelling_curve_for_beta_below",
               CurveDirection::repelling_curve_for_beta_below);

    py::class_<NormalFormReport>(m, "NormalFormReport")
        .def_readonly("beta0", &NormalFormReport::beta0)
        .def_readonly("u1", &NormalFormReport::u1)
        .def_readonly("v1", &NormalFormReport::v1)
        .def_readonly("lambda1", &NormalFormReport::lambda1)
        .def_readonly("lambda2", &NormalFormReport::lambda2)
        .def_readonly("alpha", &NormalFormReport::alpha)
        .def_readonly("transversality", &NormalFormReport::transversality)
        .def_readonly("taylor", &NormalFormReport::taylor)
        .def_readonly("m", &NormalFormReport::m)
        .def_readonly("n", &NormalFormReport::n)
        .def_readonly("c20", &NormalFormReport::c20)
        .def_readonly("c11", &NormalFormReport::c11)
        .def_readonly("c02", &NormalFormReport::c02)
        .def_readonly("c30", &NormalFormReport::c30)
        .def_readonly("c21", &NormalFormReport::c21)
        .def_readonly("c12", &NormalFormReport::c12)
        .def_readonly("c03", &NormalFormReport::c03)
        .def_readonly("d20", &NormalFormReport::d20)
        .def_readonly("d11", &NormalFormReport::d11)
        .def_readonly("d02", &NormalFormReport::d02)
        .def_readonly("d30", &NormalFormReport::d30)
        .def_readonly("d21", &NormalFormReport::d21)
        .def_readonly("d12", &NormalFormReport::d12)
        .def_readonly("d03", &NormalFormReport::d03)
        .def_readonly("L20", &NormalFormReport::L20)
        .def_readonly("L11", &NormalFormReport::L11)
        .def_readonly("L02", &NormalFormReport::L02)
        .def_readonly("L21", &NormalFormReport::L21)
        .def_readonly("L", &NormalFormReport::L)
        .def_readonly("direction", &NormalFormReport::direction);

    py::class_<NsSearchResult>(m, "NsSearchResult")
        .def_readonly("beta0", &NsSearchResult::beta0)
        .def_readonly("u1", &NsSearchResult::u1)
        .def_readonly("all", &NsSearchResult::all)
        .def_readonly("multiple", &NsSearchResult::multiple);

    m.def("find_ns_beta", &find_ns_beta, py::arg("r"), py::arg("theta"),
          py::arg("gamma"));
    m.def("eigen_at", &eigen_at, py::arg("p"), py::arg("u1"), py::arg("beta_star"));
    m.def("transversality", &transversality, py::arg("p"), py::arg("u1"));
    m.def("taylor_coeffs", &taylor_coeffs, py::arg("p"), py::arg("u1"));
    m.def("normal_form_L", &normal_form_L, py::arg("p"), py::arg("u1"));
    m.def("normal_form_at_critical", &normal_form_at_critical, py::arg("r"),
          py::arg("theta"), py::arg("gamma"));

    py::class_<KPolyMin>(m, "KPolyMin")
        .def_readonly("u", &KPolyMin::u)
        .def_readonly("value", &KPolyMin::value);

    py::class_<NonnegVerdict>(m, "NonnegVerdict")
        .def_readonly("holds", &NonnegVerdict::holds)
        .def_readonly("case_label", &NonnegVerdict::case_label)
        .def_readonly("gamma_roots", &NonnegVerdict::gamma_roots)
        .def_readonly("beta_roots", &NonnegVerdict::beta_roots)
        .def_readonly("gamma_three_roots", &NonnegVerdict::gamma_three_roots);

    py::enum_<ConvergenceCase>(m, "ConvergenceCase")
        .value("none", ConvergenceCase::none)
        .value("prop_5_2", ConvergenceCase::prop_5_2)
        .value("prop_5_3_i", ConvergenceCase::prop_5_3_i)
        .value("prop_5_3_ii", ConvergenceCase::prop_5_3_ii)
        .value("prop_5_4", ConvergenceCase::prop_5_4);

    py::class_<ConvergenceReport>(m, "ConvergenceReport")
        .def_readonly("which", &ConvergenceReport::which)
        .def_readonly("nonneg", &ConvergenceReport::nonneg)
        .def_readonly("region", &ConvergenceReport::region)
        .def_readonly("x1bar", &ConvergenceReport::x1bar)
        .def_readonly("omega_at_x1bar", &ConvergenceReport::omega_at_x1bar);

    m.def("kpoly", &kpoly, py::arg("p"), py::arg("u"));
    m.def("kpoly_coeffs", &kpoly_coeffs, py::arg("p"));
    m.def("kpoly_min", &kpoly_min, py::arg("p"));
    m.def("gammaeq_positive_roots", &gammaeq_positive_roots, py::arg("r"),
          py::arg("theta"), py::arg("beta"));
    m.def("betaeq_real_roots", &betaeq_real_roots, py::arg("r"), py::arg("theta"));
    m.def("nonneg_case", &nonneg_case, py::arg("p"));
    m.def("omega_critical", &omega_critical, py::arg("p"));
    m.def("convergence_hypotheses", &convergence_hypotheses, py::arg("p"));

    py::enum_<TrajectoryStatus>(m, "TrajectoryStatus")
        .value("converged_to", TrajectoryStatus::converged_to)
        .value("limit_set", TrajectoryStatus::limit_set)
        .value("escaped", TrajectoryStatus::escaped)
        .value("max_iter", TrajectoryStatus::max_iter);

    py::class_<TrajectoryResult>(m, "TrajectoryResult")
        .def_readonly("samples", &TrajectoryResult::samples)
        .def_readonly("status", &TrajectoryResult::status)
        .def_readonly("point", &TrajectoryResult::point)
        .def_readonly("radius", &TrajectoryResult::radius)
        .def_readonly("centroid", &TrajectoryResult::centroid)
        .def_readonly("escaped_step", &TrajectoryResult::escaped_step);

    py::class_<ConvergenceRun>(m, "ConvergenceRun")
        .def_readonly("status", &ConvergenceRun::status)
        .def_readonly("point", &ConvergenceRun::point)
        .def_readonly("steps", &ConvergenceRun::steps);

    py::class_<SweepPoint>(m, "SweepPoint")
        .def_readonly("beta", &SweepPoint::beta)
        .def_readonly("u", &SweepPoint::u)
        .def_readonly("v", &SweepPoint::v)
        .def_readonly("radius", &SweepPoint::radius)
        .def_readonly("mle", &SweepPoint::mle)
        .def_readonly("escaped", &SweepPoint::escaped)
        .def_readonly("escaped_step", &SweepPoint::escaped_step);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("points", &SweepResult::points);

    py::class_<PhasePortrait>(m, "PhasePortrait")
        .def_readonly("clouds", &PhasePortrait::clouds)
        .def_readonly("fixed_points", &PhasePortrait::fixed_points)
        .def_readonly("nullcline", &PhasePortrait::nullcline);

    py::enum_<ScanRegion>(m, "ScanRegion")
        .value("full_M", ScanRegion::full_M)
        .value("u_below_x1", ScanRegion::u_below_x1)
        .value("v_below_omega_x1", ScanRegion::v_below_omega_x1);

    py::class_<ScanOutcome>(m, "ScanOutcome")
        .def_readonly("init", &ScanOutcome::init)
        .def_readonly("converged_to_target", &ScanOutcome::converged_to_target)
        .def_readonly("steps", &ScanOutcome::steps);

    py::class_<ScanResult>(m, "ScanResult")
        .def_readonly("points", &ScanResult::points)
        .def_readonly("converged", &ScanResult::converged)
        .def_readonly("fraction", &ScanResult::fraction)
        .def_readonly("v_monotone", &ScanResult::v_monotone)
        .def_readonly("max_v_increase", &ScanResult::max_v_increase)
        .def_readonly("stayed_in_m", &ScanResult::stayed_in_m)
        .def_readonly("counterexamples", &ScanResult::counterexamples);

    m.def("trajectory", &trajectory, py::arg("p"), py::arg("init"), py::arg("n"),
          py::arg("transient"));
    m.def("iterate_to_convergence", &iterate_to_convergence, py::arg("p"),
          py::arg("init"), py::arg("max_iter") = 1000000);
    m.def("limit_radius_about", &limit_radius_about, py::arg("samples"),
          py::arg("center"));
    m.def("beta_grid", &beta_grid, py::arg("lo"), py::arg("hi"), py::arg("step"));
    m.def("bifurcation_sweep", &bifurcation_sweep, py::arg("r"), py::arg("theta"),
          py::arg("gamma"), py::arg("betas"), py::arg("init"), py::arg("n"),
          py::arg("transient"), py::arg("keep"));
    m.def("max_lyapunov", &max_lyapunov, py::arg("p"), py::arg("init"), py::arg("n"),
          py::arg("transient"));
    m.def("phase_portrait", &phase_portrait, py::arg("p"), py::arg("inits"),
          py::arg("n"), py::arg("transient"), py::arg("nullcline_samples") = 400);
    m.def("convergence_scan", &convergence_scan, py::arg("p"), py::arg("region"),
          py::arg("nu"), py::arg("nv"), py::arg("max_iter") = 1000000);
}
