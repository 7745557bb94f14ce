#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "spinsurf/clifford.hpp"
#include "spinsurf/grid.hpp"

namespace testutil {

using spinsurf::BladeMask;
using spinsurf::Signature;

/// Deterministic RNG independent of stdlib distribution internals.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double uniform() { return (gen() >> 11) * 0x1.0p-53; } // [0,1)
    double symmetric() { return 2.0 * uniform() - 1.0; }   // [-1,1)
    std::complex<double> complex_sym() { return {symmetric(), symmetric()}; }
    int below(int n) { return static_cast<int>(gen() % static_cast<std::uint64_t>(n)); }
};

/// Reference blade multiplication: explicit generator lists, bubble sort with
/// sign counting, adjacent equal pairs contracted with the metric. Slow and
/// obviously correct; the production bitmask route is validated against it.
struct RefBladeProduct {
    BladeMask mask;
    int sign;
};

inline RefBladeProduct reference_blade_product(const Signature& sig, BladeMask a, BladeMask b) {
    std::vector<int> gens;
    for (int g = 0; g < sig.dim(); ++g)
        if (a & (BladeMask(1) << g)) gens.push_back(g);
    for (int g = 0; g < sig.dim(); ++g)
        if (b & (BladeMask(1) << g)) gens.push_back(g);

    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < gens.size(); ++k) {
            if (gens[k] > gens[k + 1]) {
                std::swap(gens[k], gens[k + 1]);
                sign = -sign;
                changed = true;
                break;
            }
            if (gens[k] == gens[k + 1]) {
                sign *= sig.metric(gens[k]);
                gens.erase(gens.begin() + k, gens.begin() + k + 2);
                changed = true;
                break;
            }
        }
    }
    BladeMask m = 0;
    for (int g : gens) m |= BladeMask(1) << g;
    return {m, sign};
}

inline spinsurf::MultivectorC random_multivector(const Signature& sig, Rng& rng) {
    spinsurf::MultivectorC m(sig);
    for (BladeMask b = 0; b < BladeMask(sig.blade_count()); ++b) m[b] = rng.complex_sym();
    return m;
}

/// Real band-limited field: a handful of low cosine modes on a periodic grid.
inline spinsurf::Field random_real_band_limited(const spinsurf::GridDomain& d, Rng& rng,
                                                int max_mode, int n_modes = 6,
                                                double amplitude = 0.4) {
    spinsurf::Field f(d);
    for (int t = 0; t < n_modes; ++t) {
        const int mx = rng.below(2 * max_mode + 1) - max_mode;
        const int my = rng.below(2 * max_mode + 1) - max_mode;
        const double amp = amplitude * rng.symmetric();
        const double phase = 2.0 * 3.141592653589793 * rng.uniform();
        for (int i = 0; i < d.ny; ++i)
            for (int j = 0; j < d.nx; ++j) {
                const double ax = 2.0 * 3.141592653589793 * (mx * (d.x(j) - d.x0) / d.lx +
                                                             my * (d.y(i) - d.y0) / d.ly);
                f(i, j) += amp * std::cos(ax + phase);
            }
    }
    return f;
}

/// Complex band-limited field.
inline spinsurf::Field random_complex_band_limited(const spinsurf::GridDomain& d, Rng& rng,
                                                   int max_mode, int n_modes = 6,
                                                   double amplitude = 0.4) {
    spinsurf::Field f = random_real_band_limited(d, rng, max_mode, n_modes, amplitude);
    const spinsurf::Field g = random_real_band_limited(d, rng, max_mode, n_modes, amplitude);
    for (std::size_t i = 0; i < f.v.size(); ++i) f.v[i] += std::complex<double>{0.0, 1.0} * g.v[i];
    return f;
}

} // namespace testutil
