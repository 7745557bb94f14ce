#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace spinsurf {

/// Uniform rectangular sampling of the z-plane, z = x + iy. Periodic grids
/// exclude the right/top endpoints (spacing L/n); open grids include them
/// (spacing L/(n-1)).
struct GridDomain {
    double x0 = 0.0;
    double y0 = 0.0;
    double lx = 1.0;
    double ly = 1.0;
    int nx = 8;
    int ny = 8;
    bool periodic = false;

    GridDomain() = default;
    GridDomain(double x0_, double y0_, double lx_, double ly_, int nx_, int ny_, bool periodic_)
        : x0(x0_), y0(y0_), lx(lx_), ly(ly_), nx(nx_), ny(ny_), periodic(periodic_) {
        if (nx < 8 || ny < 8) throw std::invalid_argument("GridDomain: need nx, ny >= 8");
        if (lx <= 0.0 || ly <= 0.0) throw std::invalid_argument("GridDomain: need positive extents");
    }

    double dx() const { return periodic ? lx / nx : lx / (nx - 1); }
    double dy() const { return periodic ? ly / ny : ly / (ny - 1); }
    double x(int j) const { return x0 + j * dx(); }
    double y(int i) const { return y0 + i * dy(); }
    std::complex<double> z(int i, int j) const { return {x(j), y(i)}; }
    int size() const { return nx * ny; }

    friend bool operator==(const GridDomain&, const GridDomain&) = default;
};

/// Complex-valued grid function, row-major with x fastest: v[i*nx + j].
struct Field {
    int nx = 0;
    int ny = 0;
    std::vector<std::complex<double>> v;

    Field() = default;
    Field(int nx_, int ny_) : nx(nx_), ny(ny_), v(static_cast<std::size_t>(nx_) * ny_) {}
    explicit Field(const GridDomain& d) : Field(d.nx, d.ny) {}

    std::complex<double>& operator()(int i, int j) { return v[static_cast<std::size_t>(i) * nx + j]; }
    const std::complex<double>& operator()(int i, int j) const {
        return v[static_cast<std::size_t>(i) * nx + j];
    }
    bool same_shape(const Field& o) const { return nx == o.nx && ny == o.ny; }
};

inline Field constant_field(const GridDomain& d, std::complex<double> c) {
    Field f(d);
    for (auto& x : f.v) x = c;
    return f;
}

template <class Fn>
Field sample_field(const GridDomain& d, Fn fn) {
    Field f(d);
    for (int i = 0; i < d.ny; ++i)
        for (int j = 0; j < d.nx; ++j) f(i, j) = fn(d.z(i, j));
    return f;
}

inline Field operator+(const Field& a, const Field& b) {
    Field r = a;
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] += b.v[i];
    return r;
}
inline Field operator-(const Field& a, const Field& b) {
    Field r = a;
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] -= b.v[i];
    return r;
}
inline Field operator*(const Field& a, const Field& b) {
    Field r = a;
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] *= b.v[i];
    return r;
}
inline Field operator-(const Field& a) {
    Field r = a;
    for (auto& x : r.v) x = -x;
    return r;
}
inline Field operator*(std::complex<double> s, const Field& a) {
    Field r = a;
    for (auto& x : r.v) x *= s;
    return r;
}
inline Field operator*(double s, const Field& a) { return std::complex<double>(s, 0.0) * a; }

inline double max_abs(const Field& f) {
    double m = 0.0;
    for (const auto& x : f.v) m = std::max(m, std::abs(x));
    return m;
}
inline double max_abs_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.v.size(); ++i) m = std::max(m, std::abs(a.v[i] - b.v[i]));
    return m;
}
/// Root-mean-square magnitude over the grid.
inline double l2_norm(const Field& f) {
    double s = 0.0;
    for (const auto& x : f.v) s += std::norm(x);
    return std::sqrt(s / static_cast<double>(f.v.size()));
}
inline std::complex<double> mean(const Field& f) {
    std::complex<double> s{};
    for (const auto& x : f.v) s += x;
    return s / static_cast<double>(f.v.size());
}

// ---------------------------------------------------------------------------
// Fourth-order finite differences for open (non-periodic) grids: centered
// five-point stencil inside, biased five-point stencils in the two boundary
// layers. Needs at least 5 samples per direction.
// ---------------------------------------------------------------------------

namespace detail {

template <class At, class Set>
void fd4_line(int n, double h, At at, Set set) {
    if (n < 5) throw std::invalid_argument("fd4: grid too small for the 5-point stencil");
    const double s = 1.0 / (12.0 * h);
    set(0, s * (-25.0 * at(0) + 48.0 * at(1) - 36.0 * at(2) + 16.0 * at(3) - 3.0 * at(4)));
    set(1, s * (-3.0 * at(0) - 10.0 * at(1) + 18.0 * at(2) - 6.0 * at(3) + at(4)));
    for (int k = 2; k < n - 2; ++k)
        set(k, s * (at(k - 2) - 8.0 * at(k - 1) + 8.0 * at(k + 1) - at(k + 2)));
    set(n - 2, s * (3.0 * at(n - 1) + 10.0 * at(n - 2) - 18.0 * at(n - 3) + 6.0 * at(n - 4) - at(n - 5)));
    set(n - 1, s * (25.0 * at(n - 1) - 48.0 * at(n - 2) + 36.0 * at(n - 3) - 16.0 * at(n - 4) + 3.0 * at(n - 5)));
}

} // namespace detail

inline Field fd4_dx(const Field& f, const GridDomain& d) {
    Field r(f.nx, f.ny);
    for (int i = 0; i < f.ny; ++i)
        detail::fd4_line(
            f.nx, d.dx(), [&](int j) { return f(i, j); },
            [&](int j, std::complex<double> v) { r(i, j) = v; });
    return r;
}

inline Field fd4_dy(const Field& f, const GridDomain& d) {
    Field r(f.nx, f.ny);
    for (int j = 0; j < f.nx; ++j)
        detail::fd4_line(
            f.ny, d.dy(), [&](int i) { return f(i, j); },
            [&](int i, std::complex<double> v) { r(i, j) = v; });
    return r;
}

/// d/dz = (d/dx - i d/dy)/2 by fourth-order differences.
inline Field fd4_dz(const Field& f, const GridDomain& d) {
    const std::complex<double> ih{0.0, 0.5};
    return 0.5 * fd4_dx(f, d) - ih * fd4_dy(f, d);
}

/// d/dzbar = (d/dx + i d/dy)/2 by fourth-order differences.
inline Field fd4_dzbar(const Field& f, const GridDomain& d) {
    const std::complex<double> ih{0.0, 0.5};
    return 0.5 * fd4_dx(f, d) + ih * fd4_dy(f, d);
}

} // namespace spinsurf
