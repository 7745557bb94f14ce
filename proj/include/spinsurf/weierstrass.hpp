#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include "spinsurf/dirac_rep.hpp"
#include "spinsurf/grid.hpp"
#include "spinsurf/spectral.hpp"

namespace spinsurf {

/// Sign variant of the coordinate one-forms. The two variants differ by the
/// relative sign inside the X3/X0 integrands: `conformal` yields the
/// conformal induced metric g_{zzbar} = psi1 psi2 phi1 phi2 and is the
/// default; `literal_paper` keeps the alternative pairing, which makes
/// g_{zzbar} vanish identically. Both keep g_{zz} = g_{zbzb} = 0.
enum class SignConvention { literal_paper, conformal };

inline std::string to_string(SignConvention c) {
    return c == SignConvention::literal_paper ? "literal-paper" : "conformal";
}
inline SignConvention sign_convention_from_string(const std::string& s) {
    if (s == "literal-paper" || s == "literal") return SignConvention::literal_paper;
    if (s == "conformal") return SignConvention::conformal;
    throw std::invalid_argument("unknown sign convention: " + s);
}

/// Sampled Weierstrass data: potentials p, q and the linear-problem
/// solutions psi_1, psi_2, phi_1, phi_2 on a common grid.
struct WeierstrassData {
    GridDomain domain;
    Field p, q;
    Field psi1, psi2, phi1, phi2;

    explicit WeierstrassData(const GridDomain& d)
        : domain(d), p(d), q(d), psi1(d), psi2(d), phi1(d), phi2(d) {}
};

/// Surface coordinates X^0..X^3 in C^4 (X^4 of the integral formulae is X^0
/// throughout).
struct SurfaceCoords {
    GridDomain domain;
    std::array<Field, 4> x; // index = coordinate label 0..3
    SignConvention convention = SignConvention::conformal;

    explicit SurfaceCoords(const GridDomain& d) : domain(d), x{Field(d), Field(d), Field(d), Field(d)} {}
};

/// One-form A dz + B dzbar.
struct OneForm {
    Field A, B;
};

/// The four coordinate one-forms, bilinear in the data, ordered X^0..X^3.
inline std::array<OneForm, 4> coordinate_forms(const WeierstrassData& d, SignConvention conv) {
    const std::complex<double> i{0.0, 1.0};
    const Field u = d.psi1 * d.psi2; // psi1 psi2
    const Field v = d.phi1 * d.phi2; // phi1 phi2
    const Field w = d.psi1 * d.phi2; // psi1 phi2
    const Field s = d.phi1 * d.psi2; // phi1 psi2

    std::array<OneForm, 4> f{OneForm{Field(d.domain), Field(d.domain)},
                             OneForm{Field(d.domain), Field(d.domain)},
                             OneForm{Field(d.domain), Field(d.domain)},
                             OneForm{Field(d.domain), Field(d.domain)}};
    // X1 = (i/2) Int (u dzbar - v dz),  X2 = (1/2) Int (u dzbar + v dz)
    f[1].A = (-0.5 * i) * v;
    f[1].B = (0.5 * i) * u;
    f[2].A = 0.5 * v;
    f[2].B = 0.5 * u;
    if (conv == SignConvention::literal_paper) {
        // X3 = (1/2) Int (w dzbar - s dz),  X0 = (i/2) Int (w dzbar + s dz)
        f[3].A = -0.5 * s;
        f[3].B = 0.5 * w;
        f[0].A = (0.5 * i) * s;
        f[0].B = (0.5 * i) * w;
    } else {
        // conformal: X3 = (1/2) Int (w dzbar + s dz),  X0 = (i/2) Int (w dzbar - s dz)
        f[3].A = 0.5 * s;
        f[3].B = 0.5 * w;
        f[0].A = (-0.5 * i) * s;
        f[0].B = (0.5 * i) * w;
    }
    return f;
}

struct GridPoint {
    int i = 0; // y index
    int j = 0; // x index
};

namespace detail {

/// Trapezoid quadrature of A dz + B dzbar along the staircase from `base`:
/// x-leg in the base row first, then the y-leg in the target column.
/// Reversed order (y-leg first) is used by the path-independence diagnostic.
inline Field integrate_form(const OneForm& w, const GridDomain& d, GridPoint base, bool x_leg_first) {
    if (base.i < 0 || base.i >= d.ny || base.j < 0 || base.j >= d.nx)
        throw std::invalid_argument("integrate_form: base point outside grid");
    const std::complex<double> iu{0.0, 1.0};
    const Field gx = w.A + w.B;          // dz = dzbar = dx along x
    const Field gy = iu * (w.A - w.B);   // dz = i dy, dzbar = -i dy along y
    const double hx = d.dx(), hy = d.dy();

    auto cum_row = [&](const Field& g, int row, std::vector<std::complex<double>>& out) {
        out.assign(d.nx, {});
        for (int j = base.j + 1; j < d.nx; ++j)
            out[j] = out[j - 1] + 0.5 * hx * (g(row, j - 1) + g(row, j));
        for (int j = base.j - 1; j >= 0; --j)
            out[j] = out[j + 1] - 0.5 * hx * (g(row, j) + g(row, j + 1));
    };
    auto cum_col = [&](const Field& g, int col, std::vector<std::complex<double>>& out) {
        out.assign(d.ny, {});
        for (int i = base.i + 1; i < d.ny; ++i)
            out[i] = out[i - 1] + 0.5 * hy * (g(i - 1, col) + g(i, col));
        for (int i = base.i - 1; i >= 0; --i)
            out[i] = out[i + 1] - 0.5 * hy * (g(i, col) + g(i + 1, col));
    };

    Field X(d);
    std::vector<std::complex<double>> line;
    if (x_leg_first) {
        std::vector<std::complex<double>> row0;
        cum_row(gx, base.i, row0);
        for (int j = 0; j < d.nx; ++j) {
            cum_col(gy, j, line);
            for (int i = 0; i < d.ny; ++i) X(i, j) = row0[j] + line[i];
        }
    } else {
        std::vector<std::complex<double>> col0;
        cum_col(gy, base.j, col0);
        for (int i = 0; i < d.ny; ++i) {
            cum_row(gx, i, line);
            for (int j = 0; j < d.nx; ++j) X(i, j) = col0[i] + line[j];
        }
    }
    return X;
}

} // namespace detail

/// Coordinates by staircase quadrature of the four one-forms; X^i(base) = 0.
inline SurfaceCoords integrate_coordinates(const WeierstrassData& d, GridPoint base,
                                           SignConvention conv,
                                           bool x_leg_first = true) {
    const auto forms = coordinate_forms(d, conv);
    SurfaceCoords s(d.domain);
    s.convention = conv;
    for (int c = 0; c < 4; ++c)
        s.x[c] = detail::integrate_form(forms[c], d.domain, base, x_leg_first);
    return s;
}

/// Per-form closedness defect dzbar(A) - dz(B); identically zero means the
/// contour integrals are path independent. Reported as a diagnostic, never
/// as an error.
inline std::array<Field, 4> closedness_residual(const WeierstrassData& d,
                                                SignConvention conv = SignConvention::conformal) {
    const auto forms = coordinate_forms(d, conv);
    std::array<Field, 4> r{Field(d.domain), Field(d.domain), Field(d.domain), Field(d.domain)};
    for (int c = 0; c < 4; ++c)
        r[c] = deriv_dzbar(forms[c].A, d.domain) - deriv_dz(forms[c].B, d.domain);
    return r;
}

/// Residuals of the linear problem dz(psi_a) = p phi_a, dzbar(phi_a) = q psi_a.
struct DiracSystemResidual {
    std::array<Field, 2> r_psi; // dz psi_a - p phi_a
    std::array<Field, 2> r_phi; // dzbar phi_a - q psi_a
    double max_norm = 0.0;
    double l2 = 0.0;
};

inline DiracSystemResidual dirac_system_residual(const WeierstrassData& d) {
    DiracSystemResidual r{{Field(d.domain), Field(d.domain)},
                          {Field(d.domain), Field(d.domain)},
                          0.0,
                          0.0};
    const Field* psis[2] = {&d.psi1, &d.psi2};
    const Field* phis[2] = {&d.phi1, &d.phi2};
    for (int a = 0; a < 2; ++a) {
        r.r_psi[a] = deriv_dz(*psis[a], d.domain) - d.p * (*phis[a]);
        r.r_phi[a] = deriv_dzbar(*phis[a], d.domain) - d.q * (*psis[a]);
        r.max_norm = std::max({r.max_norm, max_abs(r.r_psi[a]), max_abs(r.r_phi[a])});
        r.l2 = std::max({r.l2, l2_norm(r.r_psi[a]), l2_norm(r.r_phi[a])});
    }
    return r;
}

/// Complex-bilinear induced metric components of the immersed surface.
/// Coordinates are integrals and generally aperiodic even over periodic
/// data, so differentiation is always by finite differences here.
struct InducedMetric {
    Field g_zz, g_zbzb, g_zzb;
};

inline InducedMetric induced_metric(const SurfaceCoords& s) {
    InducedMetric m{Field(s.domain), Field(s.domain), Field(s.domain)};
    for (int c = 0; c < 4; ++c) {
        const Field xz = fd4_dz(s.x[c], s.domain);
        const Field xzb = fd4_dzbar(s.x[c], s.domain);
        m.g_zz = m.g_zz + xz * xz;
        m.g_zbzb = m.g_zbzb + xzb * xzb;
        m.g_zzb = m.g_zzb + xz * xzb;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Coordinates <-> spinors
// ---------------------------------------------------------------------------

/// phi1 = Re X0 - i Im X3, phi2 = Im X2 - i Im X1,
/// phi3 = Re X3 - i Im X0, phi4 = Re X1 + i Re X2.
inline DiracHestenesSpinor coords_to_dh(const std::array<std::complex<double>, 4>& x) {
    DiracHestenesSpinor s;
    s.phi[0] = {x[0].real(), -x[3].imag()};
    s.phi[1] = {x[2].imag(), -x[1].imag()};
    s.phi[2] = {x[3].real(), -x[0].imag()};
    s.phi[3] = {x[1].real(), x[2].real()};
    return s;
}

/// Inverse of coords_to_dh: the map is a real-linear bijection R^8 -> C^4.
inline std::array<std::complex<double>, 4> dh_to_coords(const DiracHestenesSpinor& s) {
    return {std::complex<double>{s.phi[0].real(), -s.phi[2].imag()},
            std::complex<double>{s.phi[3].real(), -s.phi[1].imag()},
            std::complex<double>{s.phi[3].imag(), s.phi[1].real()},
            std::complex<double>{s.phi[2].real(), -s.phi[0].imag()}};
}

/// The coordinate quadruple as an element of complexified Cl(3,0): real
/// parts on the scalar/vector slots, imaginary parts on the dual bivector
/// and volume slots (cyclic convention e12, e31, e23).
inline MultivectorC biquaternion_form(const std::array<std::complex<double>, 4>& x) {
    const Signature cl30(3, 0);
    MultivectorC m(cl30);
    m[0b000] = x[0].real();
    m[0b001] = x[1].real(); // e1
    m[0b010] = x[2].real(); // e2
    m[0b100] = x[3].real(); // e3
    m[0b011] = x[3].imag();  // e12
    m[0b101] = -x[2].imag(); // e13 carries -Im X2 (slot is e31)
    m[0b110] = x[1].imag();  // e23
    m[0b111] = x[0].imag();  // e123
    return m;
}

/// Dirac spinor components Phi_1..Phi_4 as grid functions.
struct DiracField {
    GridDomain domain;
    std::array<Field, 4> comp;

    explicit DiracField(const GridDomain& d) : domain(d), comp{Field(d), Field(d), Field(d), Field(d)} {}
};

inline DiracField dirac_field_from_coords(const SurfaceCoords& s) {
    DiracField out(s.domain);
    for (int i = 0; i < s.domain.ny; ++i)
        for (int j = 0; j < s.domain.nx; ++j) {
            const std::array<std::complex<double>, 4> x{s.x[0](i, j), s.x[1](i, j), s.x[2](i, j),
                                                        s.x[3](i, j)};
            const DiracSpinor sp = dirac_from_dh(coords_to_dh(x));
            for (int c = 0; c < 4; ++c) out.comp[c](i, j) = sp.c[c];
        }
    return out;
}

/// Full chain data -> X^i -> Dirac-Hestenes -> Dirac spinor field.
inline DiracField surface_to_dirac_field(const WeierstrassData& d, GridPoint base,
                                         SignConvention conv) {
    return dirac_field_from_coords(integrate_coordinates(d, base, conv));
}

} // namespace spinsurf
