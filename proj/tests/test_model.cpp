#include "doctest.h"
#include "pzmap/model.hpp"
#include "support.hpp"

#include <cmath>
#include <stdexcept>

using namespace pzmap;

namespace {

Params random_params(SplitMix& rng) {
    return Params(rng.uniform(0.05, 2.5), rng.uniform(0.1, 10.0),
                  rng.uniform(0.1, 8.0), rng.uniform(0.05, 3.0));
}

}  // namespace

TEST_CASE("Params rejects non-positive values") {
    CHECK_THROWS_AS(Params(0.0, 1.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Params(0.5, -1.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Params(0.5, 1.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Params(0.5, 1.0, 1.0, -0.2), std::invalid_argument);
    CHECK_THROWS_AS(Params(std::nan(""), 1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("interior fixed point iff v = v_of_u and beta = psi(u)") {
    SplitMix rng(0x51a7e001dULL);
    for (int i = 0; i < 200; ++i) {
        double u = rng.uniform(0.02, 0.98);
        double r = rng.uniform(0.05, 2.0);
        double theta = rng.uniform(0.1, 6.0);
        double gamma = rng.uniform(0.05, 2.0);

        // with beta = psi(u) the point (u, v_of_u(u)) is fixed in both coords
        Params star(r, 0.0 + psi(Params(r, 1.0, theta, gamma), u), theta, gamma);
        State s{u, v_of_u(star, u)};
        State nx = step(star, s);
        CHECK(std::abs(nx.u - s.u) < 1e-12 * std::max(1.0, std::abs(s.u)));
        CHECK(std::abs(nx.v - s.v) < 1e-12 * std::max(1.0, std::abs(s.v)));

        // the u-equation alone does not care about beta
        Params other(r, rng.uniform(0.1, 12.0), theta, gamma);
        State nx2 = step(other, s);
        CHECK(std::abs(nx2.u - s.u) < 1e-12 * std::max(1.0, std::abs(s.u)));
    }
}

TEST_CASE("psi closed form and domain") {
    // (r+theta+r*gamma)(gamma^2+1)/(1*(gamma+1)) at u=1
    Params p(0.5, 1.0, 4.0, 1.0);
    double expect = (0.5 + 4.0 + 0.5) * 2.0 / 2.0;
    CHECK(std::abs(psi(p, 1.0) - expect) < 1e-13);
    CHECK_THROWS_AS(psi(p, 0.0), std::domain_error);
    CHECK_THROWS_AS(psi(p, -0.5), std::domain_error);
}

TEST_CASE("h_poly matches its expanded coefficients") {
    SplitMix rng(0x4b0bbeefULL);
    for (int i = 0; i < 100; ++i) {
        Params p = random_params(rng);
        double u = rng.uniform(0.01, 4.0);
        double expect = p.theta * u * u * u -
                        2.0 * p.gamma * (p.r + p.theta) * u * u -
                        p.gamma * p.gamma * (4.0 * p.r + p.theta) * u -
                        2.0 * p.r * p.gamma * p.gamma * p.gamma;
        CHECK(std::abs(h_poly(p, u) - expect) <
              1e-12 * std::max(1.0, std::abs(expect)));
    }
}

TEST_CASE("h_prime_roots are the critical points of h") {
    SplitMix rng(0xcafef00dULL);
    for (int i = 0; i < 100; ++i) {
        Params p = random_params(rng);
        auto [lo, hi] = h_prime_roots(p);
        CHECK(lo < hi);
        CHECK(std::abs(h_poly_deriv(p, lo)) < 1e-8 * std::max(1.0, std::abs(lo)));
        CHECK(std::abs(h_poly_deriv(p, hi)) < 1e-8 * std::max(1.0, std::abs(hi)));
        CHECK(hi > 0.0);  // the larger critical point is always positive
    }
}

TEST_CASE("omega derivative identity: omega' = 2 rho / u^2") {
    SplitMix rng(0x0e11aULL);
    for (int i = 0; i < 100; ++i) {
        Params p = random_params(rng);
        double u = rng.uniform(0.05, 1.5);
        auto f = [&](double x) { return omega(p, x); };
        double fd = fd1(f, u, 1e-6);
        double closed = 2.0 * rho(p, u) / (u * u);
        CHECK(std::abs(fd - closed) < 1e-5 * std::max(1.0, std::abs(closed)));
    }
}

TEST_CASE("rho maximum on (0,1) sits at u=2/3") {
    Params p(0.5, 1.0, 1.0, 0.3);
    double at = rho(p, 2.0 / 3.0);
    CHECK(std::abs(at - (4.0 - 27.0 * 0.09) / 27.0) < 1e-13);
    CHECK(rho(p, 2.0 / 3.0 - 0.05) < at);
    CHECK(rho(p, 2.0 / 3.0 + 0.05) < at);
}

TEST_CASE("jacobian matches finite differences") {
    SplitMix rng(0x1ac0b1a1ULL);
    for (int i = 0; i < 100; ++i) {
        Params p = random_params(rng);
        State s{rng.uniform(0.05, 1.8), rng.uniform(0.0, 2.5)};
        Jacobian2 j = jacobian(p, s);
        const double h = 1e-6;
        auto fu = [&](double x) { return step(p, {x, s.v}).u; };
        auto fv = [&](double x) { return step(p, {x, s.v}).v; };
        auto gu = [&](double y) { return step(p, {s.u, y}).u; };
        auto gv = [&](double y) { return step(p, {s.u, y}).v; };
        CHECK(std::abs(j.j11 - fd1(fu, s.u, h)) < 1e-5 * std::max(1.0, std::abs(j.j11)));
        CHECK(std::abs(j.j21 - fd1(fv, s.u, h)) < 1e-5 * std::max(1.0, std::abs(j.j21)));
        CHECK(std::abs(j.j12 - fd1(gu, s.v, h)) < 1e-5 * std::max(1.0, std::abs(j.j12)));
        CHECK(std::abs(j.j22 - fd1(gv, s.v, h)) < 1e-5 * std::max(1.0, std::abs(j.j22)));
    }
}

TEST_CASE("jacobian_at_fixed agrees with the general jacobian on the branch") {
    SplitMix rng(0xf1def1deULL);
    for (int i = 0; i < 100; ++i) {
        double u = rng.uniform(0.05, 0.95);
        double r = rng.uniform(0.05, 2.0);
        double theta = rng.uniform(0.1, 6.0);
        double gamma = rng.uniform(0.05, 2.0);
        Params p(r, psi(Params(r, 1.0, theta, gamma), u), theta, gamma);
        Jacobian2 jf = jacobian_at_fixed(p, u);
        Jacobian2 jg = jacobian(p, {u, v_of_u(p, u)});
        CHECK(jf.j22 == 1.0);  // exact by construction
        CHECK(std::abs(jf.j11 - jg.j11) < 1e-9 * std::max(1.0, std::abs(jg.j11)));
        CHECK(std::abs(jf.j12 - jg.j12) < 1e-9 * std::max(1.0, std::abs(jg.j12)));
        CHECK(std::abs(jf.j21 - jg.j21) < 1e-9 * std::max(1.0, std::abs(jg.j21)));
        CHECK(std::abs(jg.j22 - 1.0) < 1e-9);
    }
}

TEST_CASE("jacobian_at_fixed rejects off-branch beta") {
    Params p(0.5, 2.0, 4.0, 1.0);  // psi(0.5) is far from 2.0
    CHECK_THROWS_AS(jacobian_at_fixed(p, 0.5), std::invalid_argument);
}

TEST_CASE("p_one_factored equals 1 - trace + det on the branch") {
    SplitMix rng(0x9a9a9a9aULL);
    for (int i = 0; i < 200; ++i) {
        double u = rng.uniform(0.05, 0.95);
        double r = rng.uniform(0.05, 2.0);
        double theta = rng.uniform(0.1, 6.0);
        double gamma = rng.uniform(0.05, 2.0);
        Params p(r, psi(Params(r, 1.0, theta, gamma), u), theta, gamma);
        Jacobian2 j = jacobian_at_fixed(p, u);
        double direct = 1.0 - j.trace() + j.det();
        double fact = p_one_factored(p, u);
        CHECK(std::abs(direct - fact) < 1e-10 * std::max(1.0, std::abs(fact)));
    }
}

TEST_CASE("axes are invariant") {
    Params p(0.7, 3.0, 2.0, 0.4);
    // v = 0 stays v = 0
    State a = step(p, {0.37, 0.0});
    CHECK(a.v == 0.0);
    // u = 0 stays u = 0
    State b = step(p, {0.0, 0.8});
    CHECK(b.u == 0.0);
    CHECK(std::abs(b.v - (1.0 - p.r) * 0.8) < 1e-15);
}

TEST_CASE("step_checked flags escapes") {
    Params p(0.5, 6.0, 4.0, 1.0);
    CheckedStep ok = step_checked(p, {0.5, 0.5});
    CHECK_FALSE(ok.escaped);
    // u > 2 makes u' negative next step; feeding u=3 directly escapes
    CheckedStep bad = step_checked(p, {3.0, 0.5});
    CHECK(bad.escaped);
}
