#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <fftw3.h>

#include "spinsurf/grid.hpp"

namespace spinsurf {

/// Fourier-multiplier calculus on a periodic grid. Wraps a pair of FFTW
/// complex 2-D plans on fftw_malloc'd buffers (fixed alignment keeps
/// FFTW_ESTIMATE plan choice, and hence output, deterministic).
///
/// Conventions: mode indices m in [-n/2, n/2), k = 2*pi*m/L. The Nyquist
/// line of even-sized grids is zeroed by every multiplier, and the inverse
/// derivatives use the zero-mean gauge: dz_inv kills the (0,0) mode, so
/// dz(dz_inv(f)) = f - mean(f) on band-limited data.
class SpectralCalculus {
public:
    explicit SpectralCalculus(const GridDomain& d) : dom_(d), n_(d.nx * d.ny) {
        if (!d.periodic)
            throw std::invalid_argument("SpectralCalculus: domain must be periodic");
        buf_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n_));
        if (!buf_) throw std::bad_alloc();
        fwd_ = fftw_plan_dft_2d(d.ny, d.nx, buf_, buf_, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_2d(d.ny, d.nx, buf_, buf_, FFTW_BACKWARD, FFTW_ESTIMATE);
        if (!fwd_ || !bwd_) throw std::runtime_error("SpectralCalculus: FFTW plan creation failed");

        kx_.resize(d.nx);
        for (int j = 0; j < d.nx; ++j) {
            const int m = (2 * j < d.nx) ? j : j - d.nx;
            kx_[j] = 2.0 * pi() * m / d.lx;
        }
        ky_.resize(d.ny);
        for (int i = 0; i < d.ny; ++i) {
            const int m = (2 * i < d.ny) ? i : i - d.ny;
            ky_[i] = 2.0 * pi() * m / d.ly;
        }
    }
    ~SpectralCalculus() {
        fftw_destroy_plan(bwd_);
        fftw_destroy_plan(fwd_);
        fftw_free(buf_);
    }
    SpectralCalculus(const SpectralCalculus&) = delete;
    SpectralCalculus& operator=(const SpectralCalculus&) = delete;

    const GridDomain& domain() const { return dom_; }

    std::vector<std::complex<double>> forward(const Field& f) const {
        load(f);
        fftw_execute(fwd_);
        return unload();
    }

    Field inverse(const std::vector<std::complex<double>>& spec) const {
        for (int i = 0; i < n_; ++i) {
            buf_[i][0] = spec[i].real();
            buf_[i][1] = spec[i].imag();
        }
        fftw_execute(bwd_);
        Field f(dom_);
        const double scale = 1.0 / n_;
        for (int i = 0; i < n_; ++i) f.v[i] = {buf_[i][0] * scale, buf_[i][1] * scale};
        return f;
    }

    /// Applies spec[i,j] *= sym(kx, ky); Nyquist lines are zeroed.
    template <class Sym>
    Field apply_symbol(const Field& f, Sym sym) const {
        auto spec = forward(f);
        mask_symbol(spec, sym);
        return inverse(spec);
    }

    Field dz(const Field& f) const {
        return apply_symbol(f, [](double kx, double ky) {
            return std::complex<double>(0.5 * ky, 0.5 * kx);
        });
    }
    Field dzbar(const Field& f) const {
        return apply_symbol(f, [](double kx, double ky) {
            return std::complex<double>(-0.5 * ky, 0.5 * kx);
        });
    }
    /// n-th dz derivative in one transform pair.
    Field dz_pow(const Field& f, int n) const {
        return apply_symbol(f, [n](double kx, double ky) {
            return ipow(std::complex<double>(0.5 * ky, 0.5 * kx), n);
        });
    }
    Field dzbar_pow(const Field& f, int n) const {
        return apply_symbol(f, [n](double kx, double ky) {
            return ipow(std::complex<double>(-0.5 * ky, 0.5 * kx), n);
        });
    }
    /// Inverse dz with zero-mean gauge.
    Field dz_inv(const Field& f) const {
        return apply_symbol(f, [](double kx, double ky) {
            const std::complex<double> s(0.5 * ky, 0.5 * kx);
            return (s == std::complex<double>{}) ? s : 1.0 / s;
        });
    }
    Field dzbar_inv(const Field& f) const {
        return apply_symbol(f, [](double kx, double ky) {
            const std::complex<double> s(-0.5 * ky, 0.5 * kx);
            return (s == std::complex<double>{}) ? s : 1.0 / s;
        });
    }

    /// Two-thirds truncation: zeroes every mode with 3|m| >= nx or 3|n| >= ny.
    Field dealias(const Field& f) const {
        auto spec = forward(f);
        for (int i = 0; i < dom_.ny; ++i) {
            const int my = (2 * i < dom_.ny) ? i : i - dom_.ny;
            for (int j = 0; j < dom_.nx; ++j) {
                const int mx = (2 * j < dom_.nx) ? j : j - dom_.nx;
                if (3 * std::abs(mx) >= dom_.nx || 3 * std::abs(my) >= dom_.ny)
                    spec[static_cast<std::size_t>(i) * dom_.nx + j] = {};
            }
        }
        return inverse(spec);
    }

    /// Pointwise product, optionally followed by the two-thirds truncation.
    Field product(const Field& a, const Field& b, bool dealias_product) const {
        Field p = a * b;
        return dealias_product ? dealias(p) : p;
    }

    static double pi() { return 3.141592653589793238462643383279502884; }

private:
    static std::complex<double> ipow(std::complex<double> s, int n) {
        std::complex<double> r{1.0, 0.0};
        for (int k = 0; k < n; ++k) r *= s;
        return r;
    }

    void load(const Field& f) const {
        if (f.nx != dom_.nx || f.ny != dom_.ny)
            throw std::invalid_argument("SpectralCalculus: field shape mismatch");
        for (int i = 0; i < n_; ++i) {
            buf_[i][0] = f.v[i].real();
            buf_[i][1] = f.v[i].imag();
        }
    }
    std::vector<std::complex<double>> unload() const {
        std::vector<std::complex<double>> spec(n_);
        for (int i = 0; i < n_; ++i) spec[i] = {buf_[i][0], buf_[i][1]};
        return spec;
    }

    template <class Sym>
    void mask_symbol(std::vector<std::complex<double>>& spec, Sym sym) const {
        for (int i = 0; i < dom_.ny; ++i) {
            const bool ny_nyq = (dom_.ny % 2 == 0) && (i == dom_.ny / 2);
            for (int j = 0; j < dom_.nx; ++j) {
                const bool nx_nyq = (dom_.nx % 2 == 0) && (j == dom_.nx / 2);
                auto& c = spec[static_cast<std::size_t>(i) * dom_.nx + j];
                if (nx_nyq || ny_nyq) {
                    c = {};
                } else {
                    c *= sym(kx_[j], ky_[i]);
                }
            }
        }
    }

    GridDomain dom_;
    int n_;
    fftw_complex* buf_;
    fftw_plan fwd_;
    fftw_plan bwd_;
    std::vector<double> kx_;
    std::vector<double> ky_;
};

/// Derivative dispatch used by the surface diagnostics: spectral on periodic
/// domains, fourth-order differences otherwise.
inline Field deriv_dz(const Field& f, const GridDomain& d) {
    if (d.periodic) return SpectralCalculus(d).dz(f);
    return fd4_dz(f, d);
}
inline Field deriv_dzbar(const Field& f, const GridDomain& d) {
    if (d.periodic) return SpectralCalculus(d).dzbar(f);
    return fd4_dzbar(f, d);
}

} // namespace spinsurf
