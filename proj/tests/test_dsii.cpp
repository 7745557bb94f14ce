#include "doctest.h"

#include <cmath>
#include <complex>

#include "spinsurf/dsii.hpp"
#include "helpers.hpp"

using namespace spinsurf;
using testutil::Rng;

namespace {

const std::complex<double> I{0.0, 1.0};
const double PI = SpectralCalculus::pi();

GridDomain torus(int n) { return GridDomain(0.0, 0.0, 2.0 * PI, 2.0 * PI, n, n, true); }

Field mode(const GridDomain& d, int m, int n, std::complex<double> amp = 1.0) {
    return sample_field(d, [&](std::complex<double> z) {
        return amp * std::exp(I * (m * z.real() + n * z.imag()));
    });
}

std::complex<double> sym_dz(int m, int n) { return 0.5 * (I * double(m) + double(n)); }
std::complex<double> sym_dzbar(int m, int n) { return 0.5 * (I * double(m) - double(n)); }

std::complex<double> cube(std::complex<double> s) { return s * s * s; }

} // namespace

TEST_CASE("dsii3 right-hand side: zero and linear regimes") {
    const auto d = torus(32);
    DsiiFlow flow(d);

    // zero potentials stay zero, exactly
    Field zero(d);
    auto [pt0, qt0] = flow.dsii3_rhs(zero, zero);
    CHECK(max_abs(pt0) == 0.0);
    CHECK(max_abs(qt0) == 0.0);

    // q = 0 removes every nonlinear term: p_t = (dz^3 + dzbar^3) p with the
    // analytic Fourier symbol
    const int m = 3, n = 1;
    const Field p = mode(d, m, n, 1e-3);
    auto [pt, qt] = flow.dsii3_rhs(p, zero);
    const std::complex<double> s = cube(sym_dz(m, n)) + cube(sym_dzbar(m, n));
    CHECK(max_abs_diff(pt, s * p) <= 1e-12);
    CHECK(max_abs(qt) <= 1e-15);
}

TEST_CASE("mVN reduction: p = q, p real") {
    const auto d = torus(64);
    DsiiFlow flow(d);
    Rng rng(41);
    for (int t = 0; t < 5; ++t) {
        const Field p = testutil::random_real_band_limited(d, rng, 6);
        auto [pt, qt] = flow.dsii3_rhs(p, p);
        const Field mvn = flow.mvn_rhs(p);
        const double scale = std::max(1e-30, max_abs(pt));
        CHECK(max_abs_diff(pt, mvn) <= 1e-10 * scale);
    }

    // p = 0
    CHECK(max_abs(flow.mvn_rhs(Field(d))) == 0.0);

    // linearized single real mode: the nonlinear terms are O(eps^3)
    const Field small = mode(d, 1, 1, 5e-5) + mode(d, -1, -1, 5e-5);
    const Field lin = flow.calculus().dz_pow(small, 3) + flow.calculus().dzbar_pow(small, 3);
    CHECK(max_abs_diff(flow.mvn_rhs(small), lin) <= 1e-10);

    // complex input is rejected
    CHECK_THROWS_AS(flow.mvn_rhs(mode(d, 1, 0, I)), std::invalid_argument);
}

TEST_CASE("VN reduction: q = 1, p real") {
    const auto d = torus(64);
    DsiiFlow flow(d);
    const Field one = constant_field(d, 1.0);
    Rng rng(42);
    for (int t = 0; t < 5; ++t) {
        const Field p = testutil::random_real_band_limited(d, rng, 6);
        auto [pt, qt] = flow.dsii3_rhs(p, one);
        const Field vn = flow.vn_rhs(p);
        const double scale = std::max(1e-30, max_abs(pt));
        CHECK(max_abs_diff(pt, vn) <= 1e-10 * scale);
        CHECK(max_abs(qt) <= 1e-10 * scale);
    }

    // constants are fixed points of the VN flow
    CHECK(max_abs(flow.vn_rhs(constant_field(d, 0.7))) <= 1e-13);
    CHECK_THROWS_AS(flow.vn_rhs(mode(d, 2, 0, I)), std::invalid_argument);
}

TEST_CASE("linear operators at p = q = 0 reduce to pure dispersion") {
    const auto d = torus(32);
    DsiiFlow flow(d);
    Field zero(d);
    const auto ops = flow.linear_operators_n3(zero, zero);

    const Field psi = mode(d, 2, -1);
    const Field phi = mode(d, -1, 2);
    auto [psi_t, phi_t] = flow.apply_linear_operators(ops, psi, phi);
    CHECK(max_abs_diff(psi_t, cube(sym_dzbar(2, -1)) * psi) <= 1e-12);
    CHECK(max_abs_diff(phi_t, cube(sym_dz(-1, 2)) * phi) <= 1e-12);

    auto [z1, z2] = flow.apply_linear_operators(ops, Field(d), Field(d));
    CHECK(max_abs(z1) == 0.0);
    CHECK(max_abs(z2) == 0.0);
}

TEST_CASE("evolve: fixed point, guards, determinism") {
    const auto d = torus(32);
    DsiiFlow flow(d);
    FlowConfig cfg;
    cfg.dt = 5e-4;
    cfg.steps = 20;

    // zero initial data is a fixed point, bitwise
    auto [p1, q1] = flow.evolve(Field(d), Field(d), cfg);
    CHECK(max_abs(p1) == 0.0);
    CHECK(max_abs(q1) == 0.0);

    // CFL guard
    FlowConfig bad = cfg;
    bad.dt = 1.0;
    CHECK_THROWS_AS(flow.evolve(Field(d), Field(d), bad), std::invalid_argument);

    // divergence detection reports the step
    FlowConfig div = cfg;
    div.steps = 3;
    div.divergence_threshold = 1e2;
    const Field huge = mode(d, 1, 0, 1e3);
    try {
        flow.evolve(huge, Field(d), div);
        FAIL("expected divergence");
    } catch (const DivergenceError& e) {
        CHECK(e.step == 0);
    }

    // determinism: two independent integrators, bitwise identical output
    Rng rng(43);
    const Field p0 = testutil::random_complex_band_limited(d, rng, 5);
    const Field q0 = testutil::random_complex_band_limited(d, rng, 5);
    DsiiFlow flow2(d);
    auto [pa, qa] = flow.evolve(p0, q0, cfg);
    auto [pb, qb] = flow2.evolve(p0, q0, cfg);
    CHECK(pa.v == pb.v);
    CHECK(qa.v == qb.v);

    // linearized single mode follows the exact exponential over a short run
    const Field pm = mode(d, 1, 1);
    FlowConfig lin = cfg;
    lin.dt = 5e-4;
    lin.steps = 20;
    auto [pl, ql] = flow.evolve(pm, Field(d), lin);
    const std::complex<double> s = cube(sym_dz(1, 1)) + cube(sym_dzbar(1, 1));
    CHECK(max_abs_diff(pl, std::exp(s * (lin.dt * lin.steps)) * pm) <= 1e-8);
}

TEST_CASE("RK4 order on the linearized flow") {
    const auto d = torus(32);
    DsiiFlow flow(d);
    const int m = 8, n = 8;
    const Field p0 = mode(d, m, n);
    const std::complex<double> s = cube(sym_dz(m, n)) + cube(sym_dzbar(m, n));

    const double dt0 = 6e-4;
    const double T = 8 * dt0;
    auto global_error = [&](double dt, int steps) {
        FlowConfig cfg;
        cfg.dt = dt;
        cfg.steps = steps;
        auto [pT, qT] = flow.evolve(p0, Field(d), cfg);
        const Field exact = std::exp(s * T) * p0;
        return max_abs_diff(pT, exact);
    };
    const double e1 = global_error(dt0, 8);
    const double e2 = global_error(dt0 / 2, 16);
    const double e4 = global_error(dt0 / 4, 32);
    const double slope1 = std::log2(e1 / e2);
    const double slope2 = std::log2(e2 / e4);
    CHECK(slope1 == doctest::Approx(4.0).epsilon(0.05));
    CHECK(slope2 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("domain and flow preconditions") {
    // grids below the stencil/sampling floor are rejected
    CHECK_THROWS_AS(GridDomain(0.0, 0.0, 1.0, 1.0, 4, 16, false), std::invalid_argument);
    CHECK_THROWS_AS(GridDomain(0.0, 0.0, -1.0, 1.0, 16, 16, false), std::invalid_argument);

    // potentials and flows live on periodic grids only
    GridDomain open(0.0, 0.0, 1.0, 1.0, 16, 16, false);
    CHECK_THROWS_AS(PotentialField(open, Field(open)), std::invalid_argument);
    CHECK_THROWS_AS(DsiiFlow{open}, std::invalid_argument);

    const auto d = torus(16);
    DsiiFlow flow(d);
    // shape mismatches are rejected
    Field wrong(8, 8);
    CHECK_THROWS_AS(flow.dsii3_rhs(wrong, wrong), std::invalid_argument);
    // non-positive dt
    FlowConfig bad;
    bad.dt = 0.0;
    CHECK_THROWS_AS(flow.evolve(Field(d), Field(d), bad), std::invalid_argument);
}

TEST_CASE("deform_surface: zero data stays identically zero") {
    const auto d = torus(16);
    DsiiFlow flow(d);
    FlowConfig cfg;
    cfg.dt = 1e-3;
    cfg.steps = 20;
    cfg.snapshot_stride = 10;
    auto snaps = flow.deform_surface(WeierstrassData(d), cfg, SignConvention::conformal);
    REQUIRE(snaps.size() == 3);
    for (const auto& s : snaps) {
        CHECK(max_abs(s.data.p) == 0.0);
        CHECK(max_abs(s.data.psi1) == 0.0);
        CHECK(max_abs(s.data.phi2) == 0.0);
        for (int c = 0; c < 4; ++c) {
            CHECK(max_abs(s.coords.x[c]) == 0.0);
            CHECK(max_abs(s.dirac.comp[c]) == 0.0);
        }
    }
}

TEST_CASE("deform_surface: stationary constant data") {
    const auto d = torus(32);
    DsiiFlow flow(d);
    WeierstrassData w(d);
    w.psi1 = constant_field(d, 1.0);
    w.psi2 = constant_field(d, 1.0);
    w.phi1 = constant_field(d, 1.0);
    w.phi2 = constant_field(d, 1.0);

    FlowConfig cfg;
    cfg.dt = 5e-4;
    cfg.steps = 100;
    cfg.snapshot_stride = 50;
    auto snaps = flow.deform_surface(w, cfg, SignConvention::conformal);
    REQUIRE(snaps.size() == 3);
    const auto& first = snaps.front();
    const auto& last = snaps.back();
    CHECK(max_abs_diff(last.data.psi1, first.data.psi1) <= 1e-12);
    CHECK(max_abs_diff(last.data.phi2, first.data.phi2) <= 1e-12);
    CHECK(max_abs(last.data.p) <= 1e-12);
    for (int c = 0; c < 4; ++c)
        CHECK(max_abs_diff(last.coords.x[c], first.coords.x[c]) <= 1e-12);
    CHECK(last.dirac_residual_max <= 1e-12);
}

TEST_CASE("deform_surface: single-mode linear evolution against the exponential oracle") {
    // The third-order operators amplify high wavenumbers (the symbol
    // of dzbar^3 has real part ky(3 kx^2 - ky^2)/8), so roundoff noise grows
    // like exp(rate * t) with rate ~ k_max^3. A 16^2 grid keeps that
    // amplification around 5e3 over t <= 0.1, far below the oracle tolerance.
    const auto d = torus(16);
    DsiiFlow flow(d);
    WeierstrassData w(d);
    w.psi1 = mode(d, 1, 1);
    w.psi2 = constant_field(d, 1.0);
    w.phi1 = mode(d, 1, 1);
    w.phi2 = constant_field(d, 1.0);

    FlowConfig cfg;
    cfg.dt = 1e-3;
    cfg.steps = 100; // T = 0.1
    cfg.snapshot_stride = 0;
    auto snaps = flow.deform_surface(w, cfg, SignConvention::conformal);
    REQUIRE(snaps.size() == 2);
    const double T = cfg.dt * cfg.steps;

    // p = q = 0: psi follows dzbar^3, phi follows dz^3, constants stay put
    const Field psi_exact = std::exp(cube(sym_dzbar(1, 1)) * T) * w.psi1;
    const Field phi_exact = std::exp(cube(sym_dz(1, 1)) * T) * w.phi1;
    CHECK(max_abs_diff(snaps.back().data.psi1, psi_exact) <= 1e-6);
    CHECK(max_abs_diff(snaps.back().data.phi1, phi_exact) <= 1e-6);
    CHECK(max_abs_diff(snaps.back().data.psi2, w.psi2) <= 1e-9);
    CHECK(max_abs_diff(snaps.back().data.phi2, w.phi2) <= 1e-9);
}
