#pragma once

#include <array>
#include <complex>
#include <stdexcept>

#include "spinsurf/clifford.hpp"

namespace spinsurf {

// ---------------------------------------------------------------------------
// Small dense complex matrices (2x2 carries the quaternion-unit basis, 4x4
// the spacetime-algebra representation). Fixed size: dimension mismatches are
// compile errors.
// ---------------------------------------------------------------------------

template <int N>
class ComplexMatrix {
public:
    using value_type = std::complex<double>;

    ComplexMatrix() { a_.fill(value_type{}); }

    static ComplexMatrix identity() {
        ComplexMatrix m;
        for (int i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }
    static ComplexMatrix from_rows(const std::array<std::array<value_type, N>, N>& rows) {
        ComplexMatrix m;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) m(i, j) = rows[i][j];
        return m;
    }

    value_type& operator()(int i, int j) { return a_[i * N + j]; }
    const value_type& operator()(int i, int j) const { return a_[i * N + j]; }

    ComplexMatrix operator+(const ComplexMatrix& o) const {
        ComplexMatrix r;
        for (int i = 0; i < N * N; ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    ComplexMatrix operator-(const ComplexMatrix& o) const {
        ComplexMatrix r;
        for (int i = 0; i < N * N; ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    ComplexMatrix operator-() const {
        ComplexMatrix r;
        for (int i = 0; i < N * N; ++i) r.a_[i] = -a_[i];
        return r;
    }
    ComplexMatrix operator*(const ComplexMatrix& o) const {
        ComplexMatrix r;
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) {
                const value_type aik = (*this)(i, k);
                if (aik == value_type{}) continue;
                for (int j = 0; j < N; ++j) r(i, j) += aik * o(k, j);
            }
        return r;
    }
    friend ComplexMatrix operator*(value_type s, const ComplexMatrix& m) {
        ComplexMatrix r;
        for (int i = 0; i < N * N; ++i) r.a_[i] = s * m.a_[i];
        return r;
    }

    ComplexMatrix transpose() const {
        ComplexMatrix r;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    ComplexMatrix conjugate() const {
        ComplexMatrix r;
        for (int i = 0; i < N * N; ++i) r.a_[i] = std::conj(a_[i]);
        return r;
    }

    double max_abs_diff(const ComplexMatrix& o) const {
        double d = 0.0;
        for (int i = 0; i < N * N; ++i) d = std::max(d, std::abs(a_[i] - o.a_[i]));
        return d;
    }
    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
        return a.a_ == b.a_;
    }

private:
    std::array<value_type, N * N> a_;
};

using Mat2 = ComplexMatrix<2>;
using Mat4 = ComplexMatrix<4>;

// ---------------------------------------------------------------------------
// sigma basis: quaternion-unit representation on 2x2 complex matrices.
// ---------------------------------------------------------------------------

inline std::array<Mat2, 4> sigma_basis() {
    const std::complex<double> i{0.0, 1.0};
    std::array<Mat2, 4> s;
    s[0] = Mat2::identity();
    s[1] = Mat2::from_rows({{{0.0, 1.0}, {-1.0, 0.0}}});
    s[2] = Mat2::from_rows({{{0.0, i}, {i, 0.0}}});
    s[3] = Mat2::from_rows({{{-i, 0.0}, {0.0, i}}});
    return s;
}

// ---------------------------------------------------------------------------
// Gamma basis of Cl(1,3) and its multiplicative extension to all 16 blades.
// ---------------------------------------------------------------------------

inline Signature spacetime_signature() { return Signature(1, 3); }

inline std::array<Mat4, 4> gamma_basis() {
    const std::complex<double> i{0.0, 1.0};
    std::array<Mat4, 4> g;
    g[0] = Mat4::from_rows({{{1.0, 0.0, 0.0, 0.0},
                             {0.0, 1.0, 0.0, 0.0},
                             {0.0, 0.0, -1.0, 0.0},
                             {0.0, 0.0, 0.0, -1.0}}});
    g[1] = Mat4::from_rows({{{0.0, 0.0, 0.0, 1.0},
                             {0.0, 0.0, 1.0, 0.0},
                             {0.0, -1.0, 0.0, 0.0},
                             {-1.0, 0.0, 0.0, 0.0}}});
    g[2] = Mat4::from_rows({{{0.0, 0.0, 0.0, -i},
                             {0.0, 0.0, i, 0.0},
                             {0.0, i, 0.0, 0.0},
                             {-i, 0.0, 0.0, 0.0}}});
    g[3] = Mat4::from_rows({{{0.0, 0.0, 1.0, 0.0},
                             {0.0, 0.0, 0.0, -1.0},
                             {-1.0, 0.0, 0.0, 0.0},
                             {0.0, 1.0, 0.0, 0.0}}});
    return g;
}

namespace detail {

inline const std::array<Mat4, 16>& gamma_blade_matrices() {
    static const std::array<Mat4, 16> table = [] {
        const auto g = gamma_basis();
        std::array<Mat4, 16> t;
        t[0] = Mat4::identity();
        for (BladeMask m = 1; m < 16; ++m) {
            Mat4 acc = Mat4::identity();
            for (int k = 0; k < 4; ++k)
                if (m & (BladeMask(1) << k)) acc = acc * g[k];
            t[m] = acc;
        }
        return t;
    }();
    return table;
}

} // namespace detail

/// Algebra homomorphism from the (complexified) spacetime algebra onto
/// M_4(C): each canonical blade maps to the product of its Gamma factors.
inline Mat4 represent(const MultivectorC& a) {
    if (!(a.signature() == spacetime_signature()))
        throw std::invalid_argument("represent: need a Cl(1,3) multivector");
    const auto& blades = detail::gamma_blade_matrices();
    Mat4 r;
    for (BladeMask m = 0; m < 16; ++m) {
        const auto c = a[m];
        if (c == std::complex<double>{}) continue;
        r = r + c * blades[m];
    }
    return r;
}

/// Inverse of `represent` (the blade matrices span M_4(C) over C).
inline MultivectorC to_multivector(const Mat4& m) {
    using C = std::complex<double>;
    // 16x16 system: column b holds the flattened blade matrix b.
    static const std::array<std::array<C, 16>, 16> inverse = [] {
        const auto& blades = detail::gamma_blade_matrices();
        std::array<std::array<C, 32>, 16> aug{};
        for (int row = 0; row < 16; ++row) {
            for (int b = 0; b < 16; ++b) aug[row][b] = blades[b](row / 4, row % 4);
            aug[row][16 + row] = 1.0;
        }
        for (int col = 0; col < 16; ++col) {
            int piv = col;
            for (int r = col + 1; r < 16; ++r)
                if (std::abs(aug[r][col]) > std::abs(aug[piv][col])) piv = r;
            std::swap(aug[piv], aug[col]);
            const C d = aug[col][col];
            for (int j = 0; j < 32; ++j) aug[col][j] /= d;
            for (int r = 0; r < 16; ++r) {
                if (r == col) continue;
                const C f = aug[r][col];
                if (f == C{}) continue;
                for (int j = 0; j < 32; ++j) aug[r][j] -= f * aug[col][j];
            }
        }
        std::array<std::array<C, 16>, 16> inv;
        for (int r = 0; r < 16; ++r)
            for (int j = 0; j < 16; ++j) inv[r][j] = aug[r][16 + j];
        return inv;
    }();

    MultivectorC out(spacetime_signature());
    for (int b = 0; b < 16; ++b) {
        C acc{};
        for (int e = 0; e < 16; ++e) acc += inverse[b][e] * m(e / 4, e % 4);
        out[BladeMask(b)] = acc;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dirac-Hestenes spinors
// ---------------------------------------------------------------------------

/// Even element of the spacetime algebra, parameterized either by four
/// complex components or by eight real even-blade coefficients:
///   phi1 = a0   - i a12,   phi2 = a13  - i a23,
///   phi3 = a03  - i a0123, phi4 = a01  + i a02.
/// In the even-blade expansion the a13 coefficient sits on Gamma_31
/// (= -Gamma_13), the cyclic bivector convention; with the canonical-order
/// blade Gamma_13 the coefficient is -a13.
struct DiracHestenesSpinor {
    std::array<std::complex<double>, 4> phi{};

    DiracHestenesSpinor() = default;
    explicit DiracHestenesSpinor(std::array<std::complex<double>, 4> components)
        : phi(components) {}

    /// Order: a0, a01, a02, a03, a12, a13, a23, a0123.
    static DiracHestenesSpinor from_even_coeffs(const std::array<double, 8>& a) {
        DiracHestenesSpinor s;
        s.phi[0] = {a[0], -a[4]};
        s.phi[1] = {a[5], -a[6]};
        s.phi[2] = {a[3], -a[7]};
        s.phi[3] = {a[1], a[2]};
        return s;
    }
    std::array<double, 8> to_even_coeffs() const {
        return {phi[0].real(), phi[3].real(), phi[3].imag(), phi[2].real(),
                -phi[0].imag(), phi[1].real(), -phi[1].imag(), -phi[2].imag()};
    }

    /// The even Cl(1,3) multivector this spinor stands for.
    MultivectorC to_even_multivector() const {
        const auto a = to_even_coeffs();
        MultivectorC m(spacetime_signature());
        auto set = [&m](std::initializer_list<int> idx, double v) {
            BladeMask mask = 0;
            for (int g : idx) mask |= BladeMask(1) << g;
            m[mask] = m[mask] + std::complex<double>{v, 0.0};
        };
        set({}, a[0]);
        set({0, 1}, a[1]);
        set({0, 2}, a[2]);
        set({0, 3}, a[3]);
        set({1, 2}, a[4]);
        set({1, 3}, -a[5]); // a13 multiplies Gamma_31 = -Gamma_13
        set({2, 3}, a[6]);
        set({0, 1, 2, 3}, a[7]);
        return m;
    }
};

/// The 4x4 matrix of a Dirac-Hestenes spinor.
inline Mat4 dh_matrix(const DiracHestenesSpinor& s) {
    const auto& p = s.phi;
    auto c = [](const std::complex<double>& z) { return std::conj(z); };
    return Mat4::from_rows({{{p[0], -c(p[1]), p[2], c(p[3])},
                             {p[1], c(p[0]), p[3], -c(p[2])},
                             {p[2], c(p[3]), p[0], -c(p[1])},
                             {p[3], -c(p[2]), p[1], c(p[0])}}});
}

// ---------------------------------------------------------------------------
// The primitive idempotent e41 = (1+Gamma_0)/2 * (1+i Gamma_12)/2 and Dirac
// spinors as the minimal left ideal it generates.
// ---------------------------------------------------------------------------

inline MultivectorC e41_multivector() {
    const Signature st = spacetime_signature();
    const std::complex<double> i{0.0, 1.0};
    std::vector<MultivectorC> factors{
        MultivectorC::generator(st, 0),
        MultivectorC::blade_from_indices(st, {1, 2}, i),
    };
    return primitive_idempotent(Signature(4, 1), factors).element;
}

inline const Mat4& e41_matrix() {
    static const Mat4 m = represent(e41_multivector());
    return m;
}

/// First column of a phi * e41 matrix; columns 2-4 vanish identically.
struct DiracSpinor {
    std::array<std::complex<double>, 4> c{};

    Mat4 as_matrix() const {
        Mat4 m;
        for (int i = 0; i < 4; ++i) m(i, 0) = c[i];
        return m;
    }
};

inline DiracSpinor dirac_from_dh(const DiracHestenesSpinor& s) {
    const Mat4 m = dh_matrix(s) * e41_matrix();
    DiracSpinor d;
    for (int i = 0; i < 4; ++i) d.c[i] = m(i, 0);
    return d;
}

// ---------------------------------------------------------------------------
// Charge conjugation: A -> (CE^T) A^T (CE^T)^{-1} with C = Gamma_13 and
// E = Gamma_0123 in this basis. CE^T is antisymmetric and squares to the
// identity, so it is its own inverse.
// ---------------------------------------------------------------------------

inline const Mat4& charge_conjugation_matrix() {
    static const Mat4 ket = [] {
        const auto& blades = detail::gamma_blade_matrices();
        const Mat4& c = blades[(1u << 1) | (1u << 3)];  // Gamma_13
        const Mat4& e = blades[0xF];                    // Gamma_0123
        return c * e.transpose();
    }();
    return ket;
}

inline Mat4 tilde_star(const Mat4& a) {
    const Mat4& k = charge_conjugation_matrix();
    return k * a.transpose() * k;
}

/// Charge-conjugated Dirac spinor: only the last row survives and carries
/// (-phi4, phi3, -phi2, phi1).
inline Mat4 conjugated_dirac(const DiracHestenesSpinor& s) {
    return tilde_star(e41_matrix()) * tilde_star(dh_matrix(s));
}

} // namespace spinsurf
