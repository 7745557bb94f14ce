#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spinsurf/spectral.hpp"
#include "spinsurf/weierstrass.hpp"

namespace spinsurf {

/// Complex potential on a doubly periodic grid; the state the n=3 flow evolves.
struct PotentialField {
    GridDomain domain;
    Field values;

    PotentialField(const GridDomain& d, Field f) : domain(d), values(std::move(f)) {
        if (!d.periodic)
            throw std::invalid_argument("PotentialField: domain must be periodic");
    }
};

/// Explicit RK4 stepping parameters. The third-order dispersion of the flow
/// puts the stability edge near dt ~ 0.127 h^3 for RK4; the guard uses
/// cfl_c = 0.1 by default.
struct FlowConfig {
    double dt = 1e-4;
    int steps = 100;
    bool dealias = true;
    double cfl_c = 0.1;
    int snapshot_stride = 0; // 0: only first and last
    double divergence_threshold = 1e8;
};

class DivergenceError : public std::runtime_error {
public:
    DivergenceError(int step, double magnitude)
        : std::runtime_error("flow diverged at step " + std::to_string(step) +
                             " (max magnitude " + std::to_string(magnitude) + ")"),
          step(step) {}
    int step;
};

struct DeformationSnapshot {
    double t = 0.0;
    WeierstrassData data;
    SurfaceCoords coords;
    DiracField dirac;
    double dirac_residual_max = 0.0;
    double dirac_residual_l2 = 0.0;
    double energy_p = 0.0; // L2 norms, constants of reference not of motion
    double energy_q = 0.0;
};

/// Pseudo-spectral evaluation and integration of the n=3 flow, its mVN/VN
/// reductions, and the third-order linear-problem evolution.
class DsiiFlow {
public:
    explicit DsiiFlow(const GridDomain& d) : calc_(d) {}

    const GridDomain& domain() const { return calc_.domain(); }
    const SpectralCalculus& calculus() const { return calc_; }

    // -- right-hand sides ----------------------------------------------------

    /// Coupled n=3 system for (p, q).
    std::pair<Field, Field> dsii3_rhs(const Field& p, const Field& q, bool dealias = true) const {
        check_shape(p);
        check_shape(q);
        const Field pq = mul(p, q, dealias);
        const Field pq_z_ibar = calc_.dzbar_inv(calc_.dz(pq));  // dzbar^-1 (pq)_z
        const Field pq_zb_i = calc_.dz_inv(calc_.dzbar(pq));    // dz^-1 (pq)_zbar
        return {potential_rhs(p, q, pq_z_ibar, pq_zb_i, dealias),
                potential_rhs(q, p, pq_z_ibar, pq_zb_i, dealias)};
    }

    /// Modified Veselov-Novikov flow for real p (the p = q reduction).
    Field mvn_rhs(const Field& p, bool dealias = true) const {
        check_shape(p);
        require_real(p, "mvn_rhs");
        Field pbar(p.nx, p.ny);
        for (std::size_t i = 0; i < p.v.size(); ++i) pbar.v[i] = std::conj(p.v[i]);
        const Field p2 = mul(p, pbar, dealias); // |p|^2
        const Field c1 = calc_.dzbar_inv(calc_.dz(p2));
        const Field c2 = calc_.dz_inv(calc_.dzbar(p2));
        return potential_rhs_with(p, pbar, c1, c2, dealias);
    }

    /// Veselov-Novikov flow for real p (the q = 1 reduction).
    Field vn_rhs(const Field& p, bool dealias = true) const {
        check_shape(p);
        require_real(p, "vn_rhs");
        const Field t1 = calc_.dz(mul(p, calc_.dzbar_inv(calc_.dz(p)), dealias));
        const Field t2 = calc_.dzbar(mul(p, calc_.dz_inv(calc_.dzbar(p)), dealias));
        return calc_.dz_pow(p, 3) + calc_.dzbar_pow(p, 3) + 3.0 * t1 + 3.0 * t2;
    }

    /// Third-order linear operators acting on a (psi, phi) pair:
    /// psi_t = A3 psi + B3 phi, phi_t = C3 psi + D3 phi, coefficients built
    /// from the current potentials.
    struct LinearOperators {
        Field p, q, p_z, p_zz, q_zb, q_zbzb;
        Field a1; // dz^-1 (pq)_zbar      : A3 first-order / D3 zero-order
        Field a0; // dz^-1 (q p_zbar)_zbar: A3 zero-order
        Field b0; // dzbar^-1 (pq)_z      : B3 zero-order / D3 first-order
        Field c0; // dzbar^-1 (pq)_zbar   : C3 zero-order
    };

    LinearOperators linear_operators_n3(const Field& p, const Field& q, bool dealias = true) const {
        check_shape(p);
        check_shape(q);
        LinearOperators ops{p,
                            q,
                            calc_.dz(p),
                            calc_.dz_pow(p, 2),
                            calc_.dzbar(q),
                            calc_.dzbar_pow(q, 2),
                            Field(p.nx, p.ny),
                            Field(p.nx, p.ny),
                            Field(p.nx, p.ny),
                            Field(p.nx, p.ny)};
        const Field pq = mul(p, q, dealias);
        ops.a1 = calc_.dz_inv(calc_.dzbar(pq));
        ops.a0 = calc_.dz_inv(calc_.dzbar(mul(q, calc_.dzbar(p), dealias)));
        ops.b0 = calc_.dzbar_inv(calc_.dz(pq));
        ops.c0 = calc_.dzbar_inv(calc_.dzbar(pq));
        return ops;
    }

    std::pair<Field, Field> apply_linear_operators(const LinearOperators& ops, const Field& psi,
                                                   const Field& phi, bool dealias = true) const {
        // A3 psi = dzbar^3 psi + 3 a1 dzbar(psi) + 3 a0 psi
        Field psi_t = calc_.dzbar_pow(psi, 3) + 3.0 * mul(ops.a1, calc_.dzbar(psi), dealias) +
                      3.0 * mul(ops.a0, psi, dealias);
        // B3 phi = -p dz^2 phi + p_z dz phi - p_zz phi - 3 p b0 phi
        psi_t = psi_t - mul(ops.p, calc_.dz_pow(phi, 2), dealias) +
                mul(ops.p_z, calc_.dz(phi), dealias) - mul(ops.p_zz, phi, dealias) -
                3.0 * mul(ops.p, mul(ops.b0, phi, dealias), dealias);
        // C3 psi = -q dzbar^2 psi + q_zb dzbar psi - q_zbzb psi - 3 q c0 psi
        Field phi_t = -(mul(ops.q, calc_.dzbar_pow(psi, 2), dealias)) +
                      mul(ops.q_zb, calc_.dzbar(psi), dealias) - mul(ops.q_zbzb, psi, dealias) -
                      3.0 * mul(ops.q, mul(ops.c0, psi, dealias), dealias);
        // D3 phi = dz^3 phi + 3 b0 dz(phi) + 3 a1 phi
        phi_t = phi_t + calc_.dz_pow(phi, 3) + 3.0 * mul(ops.b0, calc_.dz(phi), dealias) +
                3.0 * mul(ops.a1, phi, dealias);
        return {psi_t, phi_t};
    }

    // -- time stepping --------------------------------------------------------

    /// Classical RK4 on the coupled (p, q) system.
    std::pair<Field, Field> evolve(Field p, Field q, const FlowConfig& cfg) const {
        check_cfl(cfg);
        std::vector<Field> u{std::move(p), std::move(q)};
        for (int s = 0; s < cfg.steps; ++s) {
            u = rk4_step(u, cfg.dt, [&](const std::vector<Field>& st) {
                auto [pt, qt] = dsii3_rhs(st[0], st[1], cfg.dealias);
                return std::vector<Field>{std::move(pt), std::move(qt)};
            });
            check_finite(u, s, cfg);
        }
        return {std::move(u[0]), std::move(u[1])};
    }

    /// Joint RK4 on (p, q, psi_1, psi_2, phi_1, phi_2): the potentials follow
    /// the n=3 flow, the linear-problem solutions follow the A3..D3 system
    /// evaluated with the stage potentials. Snapshots rebuild the surface and
    /// the Dirac field and report the linear-problem residual as a
    /// compatibility diagnostic.
    std::vector<DeformationSnapshot> deform_surface(const WeierstrassData& d, const FlowConfig& cfg,
                                                    SignConvention conv, GridPoint base = {}) const {
        if (!d.domain.periodic)
            throw std::invalid_argument("deform_surface: domain must be periodic");
        check_cfl(cfg);
        std::vector<Field> u{d.p, d.q, d.psi1, d.psi2, d.phi1, d.phi2};
        std::vector<DeformationSnapshot> out;
        out.push_back(make_snapshot(0.0, u, conv, base));
        for (int s = 0; s < cfg.steps; ++s) {
            u = rk4_step(u, cfg.dt, [&](const std::vector<Field>& st) { return joint_rhs(st, cfg); });
            check_finite(u, s, cfg);
            const bool last = (s + 1 == cfg.steps);
            if (last || (cfg.snapshot_stride > 0 && (s + 1) % cfg.snapshot_stride == 0))
                out.push_back(make_snapshot((s + 1) * cfg.dt, u, conv, base));
        }
        return out;
    }

private:
    Field mul(const Field& a, const Field& b, bool dealias) const {
        return calc_.product(a, b, dealias);
    }

    /// One row of the coupled system: the evolution of u with the
    /// other potential v (symmetric under (p,q) exchange given the shared
    /// nonlocal pq terms).
    Field potential_rhs(const Field& u, const Field& v, const Field& pq_z_ibar,
                        const Field& pq_zb_i, bool dealias) const {
        const Field u_z = calc_.dz(u);
        const Field u_zb = calc_.dzbar(u);
        return calc_.dz_pow(u, 3) + calc_.dzbar_pow(u, 3) + 3.0 * mul(u_z, pq_z_ibar, dealias) +
               3.0 * mul(u_zb, pq_zb_i, dealias) +
               3.0 * mul(u, calc_.dzbar_inv(calc_.dz(mul(v, u_z, dealias))), dealias) +
               3.0 * mul(u, calc_.dz_inv(calc_.dzbar(mul(v, u_zb, dealias))), dealias);
    }
    Field potential_rhs_with(const Field& u, const Field& v, const Field& c1, const Field& c2,
                             bool dealias) const {
        const Field u_z = calc_.dz(u);
        const Field u_zb = calc_.dzbar(u);
        return calc_.dz_pow(u, 3) + calc_.dzbar_pow(u, 3) + 3.0 * mul(u_z, c1, dealias) +
               3.0 * mul(u_zb, c2, dealias) +
               3.0 * mul(u, calc_.dzbar_inv(calc_.dz(mul(v, u_z, dealias))), dealias) +
               3.0 * mul(u, calc_.dz_inv(calc_.dzbar(mul(v, u_zb, dealias))), dealias);
    }

    std::vector<Field> joint_rhs(const std::vector<Field>& st, const FlowConfig& cfg) const {
        auto [pt, qt] = dsii3_rhs(st[0], st[1], cfg.dealias);
        const auto ops = linear_operators_n3(st[0], st[1], cfg.dealias);
        auto [psi1_t, phi1_t] = apply_linear_operators(ops, st[2], st[4], cfg.dealias);
        auto [psi2_t, phi2_t] = apply_linear_operators(ops, st[3], st[5], cfg.dealias);
        return {std::move(pt),     std::move(qt),    std::move(psi1_t),
                std::move(psi2_t), std::move(phi1_t), std::move(phi2_t)};
    }

    template <class Rhs>
    std::vector<Field> rk4_step(const std::vector<Field>& u, double dt, Rhs rhs) const {
        auto axpy = [](const std::vector<Field>& a, double s, const std::vector<Field>& b) {
            std::vector<Field> r = a;
            for (std::size_t i = 0; i < r.size(); ++i)
                for (std::size_t k = 0; k < r[i].v.size(); ++k) r[i].v[k] += s * b[i].v[k];
            return r;
        };
        const auto k1 = rhs(u);
        const auto k2 = rhs(axpy(u, 0.5 * dt, k1));
        const auto k3 = rhs(axpy(u, 0.5 * dt, k2));
        const auto k4 = rhs(axpy(u, dt, k3));
        std::vector<Field> r = u;
        const double w = dt / 6.0;
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t k = 0; k < r[i].v.size(); ++k)
                r[i].v[k] += w * (k1[i].v[k] + 2.0 * k2[i].v[k] + 2.0 * k3[i].v[k] + k4[i].v[k]);
        return r;
    }

    DeformationSnapshot make_snapshot(double t, const std::vector<Field>& u, SignConvention conv,
                                      GridPoint base) const {
        WeierstrassData d(domain());
        d.p = u[0];
        d.q = u[1];
        d.psi1 = u[2];
        d.psi2 = u[3];
        d.phi1 = u[4];
        d.phi2 = u[5];
        SurfaceCoords coords = integrate_coordinates(d, base, conv);
        DiracField dirac = dirac_field_from_coords(coords);
        const auto res = dirac_system_residual(d);
        DeformationSnapshot snap{t,
                                 std::move(d),
                                 std::move(coords),
                                 std::move(dirac),
                                 res.max_norm,
                                 res.l2,
                                 l2_norm(u[0]),
                                 l2_norm(u[1])};
        return snap;
    }

    void check_shape(const Field& f) const {
        if (f.nx != domain().nx || f.ny != domain().ny)
            throw std::invalid_argument("DsiiFlow: field shape does not match the flow domain");
    }
    void check_cfl(const FlowConfig& cfg) const {
        if (cfg.dt <= 0.0) throw std::invalid_argument("FlowConfig: dt must be positive");
        const double h = std::min(domain().dx(), domain().dy());
        const double limit = cfg.cfl_c * h * h * h;
        if (cfg.dt > limit)
            throw std::invalid_argument("FlowConfig: dt violates the cubic CFL guard dt <= " +
                                        std::to_string(cfg.cfl_c) + "*h^3 = " + std::to_string(limit));
    }
    void check_finite(const std::vector<Field>& u, int step, const FlowConfig& cfg) const {
        for (const auto& f : u) {
            const double m = max_abs(f);
            if (!std::isfinite(m) || m > cfg.divergence_threshold) throw DivergenceError(step, m);
        }
    }
    static void require_real(const Field& p, const char* who) {
        double im = 0.0, mag = 0.0;
        for (const auto& v : p.v) {
            im = std::max(im, std::abs(v.imag()));
            mag = std::max(mag, std::abs(v));
        }
        if (im > 1e-10 * std::max(1.0, mag))
            throw std::invalid_argument(std::string(who) + ": potential must be real-valued");
    }

    SpectralCalculus calc_;
};

} // namespace spinsurf
