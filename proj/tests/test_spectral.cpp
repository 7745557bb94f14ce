#include "doctest.h"

#include <cmath>
#include <complex>

#include "spinsurf/spectral.hpp"
#include "helpers.hpp"

using namespace spinsurf;
using testutil::Rng;

namespace {

const std::complex<double> I{0.0, 1.0};
const double PI = SpectralCalculus::pi();

GridDomain torus(int n) { return GridDomain(0.0, 0.0, 2.0 * PI, 2.0 * PI, n, n, true); }

Field mode(const GridDomain& d, int m, int n) {
    return sample_field(d, [&](std::complex<double> z) {
        return std::exp(I * (m * z.real() + n * z.imag()));
    });
}

} // namespace

TEST_CASE("spectral derivatives on single modes") {
    const auto d = torus(32);
    SpectralCalculus calc(d);

    // dz exp(i(mx+ny)) = ((im + n)/2) exp(i(mx+ny))
    const int m = 3, n = -2;
    const Field f = mode(d, m, n);
    const std::complex<double> sym_z = 0.5 * (I * double(m) + double(n));
    const std::complex<double> sym_zb = 0.5 * (I * double(m) - double(n));
    CHECK(max_abs_diff(calc.dz(f), sym_z * f) <= 1e-12);
    CHECK(max_abs_diff(calc.dzbar(f), sym_zb * f) <= 1e-12);

    // antiholomorphic sample exp(i m (x - i y))... as a lattice mode: m(x)+(-m)(y)i
    const Field g = mode(d, 2, -2);
    CHECK(max_abs_diff(calc.dzbar(g), 0.5 * (2.0 * I - (-2.0)) * g) <= 1e-12);

    // constants annihilate
    const Field c = constant_field(d, {0.7, -0.3});
    CHECK(max_abs(calc.dz(c)) <= 1e-14);
    CHECK(max_abs(calc.dzbar(c)) <= 1e-14);

    // third powers
    CHECK(max_abs_diff(calc.dz_pow(f, 3), (sym_z * sym_z * sym_z) * f) <= 1e-11);
}

TEST_CASE("inverse derivatives use the zero-mean gauge") {
    const auto d = torus(32);
    SpectralCalculus calc(d);

    const Field f = mode(d, 2, 1);
    const std::complex<double> sym = 0.5 * (2.0 * I + 1.0);
    CHECK(max_abs_diff(calc.dz_inv(f), (1.0 / sym) * f) <= 1e-12);

    CHECK(max_abs(calc.dz_inv(constant_field(d, {1.0, 0.0}))) <= 1e-14);
    CHECK(max_abs(calc.dzbar_inv(constant_field(d, {0.0, 2.0}))) <= 1e-14);

    Rng rng(21);
    for (int t = 0; t < 10; ++t) {
        Field u = testutil::random_complex_band_limited(d, rng, 9);
        // dz o dz_inv = id - mean
        Field back = calc.dz(calc.dz_inv(u));
        Field expect = u - constant_field(d, mean(u));
        CHECK(max_abs_diff(back, expect) <= 1e-12);
        back = calc.dzbar(calc.dzbar_inv(u));
        CHECK(max_abs_diff(back, expect) <= 1e-12);

        // Fourier multipliers commute
        CHECK(max_abs_diff(calc.dz(calc.dzbar_inv(u)), calc.dzbar_inv(calc.dz(u))) <= 1e-12);
    }
}

TEST_CASE("two-thirds dealiasing") {
    const auto d = torus(32); // keep |m| <= 10
    SpectralCalculus calc(d);

    const Field low = mode(d, 4, -5);
    CHECK(max_abs_diff(calc.dealias(low), low) <= 1e-12);

    const Field high = mode(d, 13, 0);
    CHECK(max_abs(calc.dealias(high)) <= 1e-12);

    const Field mixed = low + high;
    CHECK(max_abs_diff(calc.dealias(mixed), low) <= 1e-12);

    // product helper: dealias on, the aliased part of low*high is removed
    CHECK(max_abs_diff(calc.product(low, low, true), calc.dealias(low * low)) <= 1e-13);
}

TEST_CASE("spectral calculus requires a periodic domain") {
    GridDomain open(0.0, 0.0, 1.0, 1.0, 16, 16, false);
    CHECK_THROWS_AS(SpectralCalculus{open}, std::invalid_argument);
}

TEST_CASE("spectral derivative agrees with a naive DFT oracle") {
    // O(N^4) direct-summation route: transform, multiply by the dz symbol,
    // transform back. Validates the FFT wrapper's normalization and index
    // conventions independently.
    GridDomain d(0.0, 0.0, 2.0 * PI, 4.0 * PI, 16, 8, true);
    SpectralCalculus calc(d);
    Rng rng(22);
    Field f(d);
    for (auto& v : f.v) v = rng.complex_sym();

    Field oracle(d);
    for (int mi = 0; mi < d.ny; ++mi) {
        const int my = (2 * mi < d.ny) ? mi : mi - d.ny;
        const double ky = 2.0 * PI * my / d.ly;
        const bool ny_nyq = (d.ny % 2 == 0) && (mi == d.ny / 2);
        for (int mj = 0; mj < d.nx; ++mj) {
            const int mx = (2 * mj < d.nx) ? mj : mj - d.nx;
            const double kx = 2.0 * PI * mx / d.lx;
            const bool nx_nyq = (d.nx % 2 == 0) && (mj == d.nx / 2);
            // coefficient by direct summation
            std::complex<double> coeff{};
            for (int i = 0; i < d.ny; ++i)
                for (int j = 0; j < d.nx; ++j)
                    coeff += f(i, j) * std::exp(-I * (kx * (d.x(j) - d.x0) + ky * (d.y(i) - d.y0)));
            coeff /= static_cast<double>(d.size());
            if (nx_nyq || ny_nyq) continue; // multipliers zero the Nyquist lines
            const std::complex<double> sym = 0.5 * (I * kx + ky);
            for (int i = 0; i < d.ny; ++i)
                for (int j = 0; j < d.nx; ++j)
                    oracle(i, j) += sym * coeff *
                                    std::exp(I * (kx * (d.x(j) - d.x0) + ky * (d.y(i) - d.y0)));
        }
    }
    CHECK(max_abs_diff(calc.dz(f), oracle) <= 1e-12);
}

TEST_CASE("fd4 derivatives are exact on quartic polynomials") {
    GridDomain d(-1.0, -1.0, 2.0, 2.0, 24, 20, false);
    const Field f = sample_field(d, [](std::complex<double> z) { return z * z * z * z; });
    const Field fz = sample_field(d, [](std::complex<double> z) { return 4.0 * z * z * z; });
    CHECK(max_abs_diff(fd4_dz(f, d), fz) <= 1e-11);
    CHECK(max_abs(fd4_dzbar(f, d)) <= 1e-11);

    // mixed polynomial in z and zbar
    const Field g = sample_field(d, [](std::complex<double> z) {
        return z * z * std::conj(z) + 2.0 * std::conj(z);
    });
    const Field gz = sample_field(d, [](std::complex<double> z) { return 2.0 * z * std::conj(z); });
    const Field gzb = sample_field(d, [](std::complex<double> z) {
        return z * z + std::complex<double>(2.0, 0.0);
    });
    CHECK(max_abs_diff(fd4_dz(g, d), gz) <= 1e-11);
    CHECK(max_abs_diff(fd4_dzbar(g, d), gzb) <= 1e-11);
}
