#pragma once

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinsurf/exact.hpp"

namespace spinsurf {

// ---------------------------------------------------------------------------
// Scalar plumbing: the blade algebra is generic over the coefficient field.
// std::complex<double> is the working scalar; Rational/ComplexRational give
// an exact mode for identity checks.
// ---------------------------------------------------------------------------

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<double> {
    static constexpr bool exact = false;
    static bool negligible(double s, double tol) { return std::abs(s) <= tol; }
    static double magnitude(double s) { return std::abs(s); }
};

template <>
struct ScalarOps<std::complex<double>> {
    static constexpr bool exact = false;
    static bool negligible(const std::complex<double>& s, double tol) { return std::abs(s) <= tol; }
    static double magnitude(const std::complex<double>& s) { return std::abs(s); }
    static std::complex<double> imag_unit() { return {0.0, 1.0}; }
};

template <>
struct ScalarOps<Rational> {
    static constexpr bool exact = true;
    static bool negligible(const Rational& s, double) { return s == Rational(0); }
};

template <>
struct ScalarOps<ComplexRational> {
    static constexpr bool exact = true;
    static bool negligible(const ComplexRational& s, double) { return s == ComplexRational(0); }
    static ComplexRational imag_unit() { return {Rational(0), Rational(1)}; }
};

template <class S> struct ComplexifiedScalar;
template <> struct ComplexifiedScalar<double> { using type = std::complex<double>; };
template <> struct ComplexifiedScalar<Rational> { using type = ComplexRational; };

// ---------------------------------------------------------------------------
// Signature and blades
// ---------------------------------------------------------------------------

inline constexpr int kMaxGenerators = 8;

/// Cl(p,q): p generators squaring to +1, q squaring to -1. Generators are
/// indexed 0..p+q-1 with the +1 ones first (so Gamma_0 of Cl(1,3) is index 0,
/// and the lone -1 generator of Cl(4,1) is index 4).
struct Signature {
    int p = 0;
    int q = 0;

    Signature() = default;
    Signature(int plus, int minus) : p(plus), q(minus) {
        if (p < 0 || q < 0 || p + q > kMaxGenerators)
            throw std::invalid_argument("Signature: need p,q >= 0 and p+q <= 8");
    }
    int dim() const { return p + q; }
    int blade_count() const { return 1 << dim(); }
    /// +1 or -1: the square of generator g.
    int metric(int g) const { return g < p ? +1 : -1; }
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Blades are bitmask subsets of the generators, coefficients stored in
/// canonical ascending-index order.
using BladeMask = std::uint32_t;

inline int blade_grade(BladeMask m) { return std::popcount(m); }

/// Sign picked up when reordering the concatenation (A ascending)(B ascending)
/// into one ascending sequence: counts pairs i in A, j in B with i > j.
inline int reorder_sign(BladeMask a, BladeMask b) {
    int swaps = 0;
    a >>= 1;
    while (a) {
        swaps += std::popcount(a & b);
        a >>= 1;
    }
    return (swaps & 1) ? -1 : +1;
}

struct BladeProduct {
    BladeMask mask;
    int sign; // +1 or -1
};

/// e_A * e_B in Cl(p,q): reordering sign times the metric signs of the
/// contracted (shared) generators; surviving blade is the symmetric difference.
inline BladeProduct blade_product(const Signature& sig, BladeMask a, BladeMask b) {
    int sign = reorder_sign(a, b);
    BladeMask common = a & b;
    while (common) {
        const int g = std::countr_zero(common);
        sign *= sig.metric(g);
        common &= common - 1;
    }
    return {a ^ b, sign};
}

inline std::string blade_name(BladeMask m) {
    if (m == 0) return "1";
    std::string s = "e";
    for (int g = 0; g < kMaxGenerators; ++g)
        if (m & (BladeMask(1) << g)) s += static_cast<char>('0' + g);
    return s;
}

// ---------------------------------------------------------------------------
// Multivector
// ---------------------------------------------------------------------------

template <class S>
class Multivector {
public:
    explicit Multivector(Signature sig) : sig_(sig), c_(sig.blade_count(), S{}) {}

    static Multivector scalar(Signature sig, S value) {
        Multivector m(sig);
        m.c_[0] = value;
        return m;
    }
    static Multivector blade(Signature sig, BladeMask mask, S coeff = S{1}) {
        if (mask >= BladeMask(sig.blade_count()))
            throw std::invalid_argument("Multivector::blade: mask outside algebra");
        Multivector m(sig);
        m.c_[mask] = coeff;
        return m;
    }
    static Multivector generator(Signature sig, int g) {
        if (g < 0 || g >= sig.dim())
            throw std::invalid_argument("Multivector::generator: index outside signature");
        return blade(sig, BladeMask(1) << g);
    }
    /// Blade from explicit generator indices, e.g. {0,1,2,3}; the indices must
    /// be distinct and are taken in canonical ascending order.
    static Multivector blade_from_indices(Signature sig, std::initializer_list<int> idx, S coeff = S{1}) {
        BladeMask m = 0;
        for (int g : idx) {
            BladeMask bit = BladeMask(1) << g;
            if (g < 0 || g >= sig.dim() || (m & bit))
                throw std::invalid_argument("blade_from_indices: bad generator list");
            m |= bit;
        }
        return blade(sig, m, coeff);
    }

    const Signature& signature() const { return sig_; }
    int blade_count() const { return static_cast<int>(c_.size()); }
    const S& operator[](BladeMask m) const { return c_[m]; }
    S& operator[](BladeMask m) { return c_[m]; }

    Multivector operator+(const Multivector& o) const {
        check_same(o);
        Multivector r = *this;
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
        return r;
    }
    Multivector operator-(const Multivector& o) const {
        check_same(o);
        Multivector r = *this;
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] - o.c_[i];
        return r;
    }
    Multivector operator-() const {
        Multivector r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    Multivector operator*(const S& s) const {
        Multivector r = *this;
        for (auto& v : r.c_) v = v * s;
        return r;
    }
    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.sig_ == b.sig_ && a.c_ == b.c_;
    }

    Multivector grade_part(int k) const {
        Multivector r(sig_);
        for (BladeMask m = 0; m < BladeMask(c_.size()); ++m)
            if (blade_grade(m) == k) r.c_[m] = c_[m];
        return r;
    }

    void check_same(const Multivector& o) const {
        if (!(sig_ == o.sig_))
            throw std::invalid_argument("Multivector: signature mismatch");
    }

private:
    Signature sig_;
    std::vector<S> c_;
};

template <class S>
Multivector<S> geometric_product(const Multivector<S>& a, const Multivector<S>& b) {
    a.check_same(b);
    const Signature& sig = a.signature();
    Multivector<S> r(sig);
    const int n = a.blade_count();
    for (BladeMask ma = 0; ma < BladeMask(n); ++ma) {
        if (a[ma] == S{}) continue;
        for (BladeMask mb = 0; mb < BladeMask(n); ++mb) {
            if (b[mb] == S{}) continue;
            const auto bp = blade_product(sig, ma, mb);
            S term = a[ma] * b[mb];
            r[bp.mask] = (bp.sign < 0) ? r[bp.mask] - term : r[bp.mask] + term;
        }
    }
    return r;
}

template <class S>
Multivector<S> operator*(const Multivector<S>& a, const Multivector<S>& b) {
    return geometric_product(a, b);
}

// ---------------------------------------------------------------------------
// The four fundamental (anti)automorphisms. Identity is trivial; the other
// three act on a grade-k part as (-1)^k, (-1)^{k(k-1)/2}, (-1)^{k(k+1)/2}.
// ---------------------------------------------------------------------------

namespace detail {
inline bool grade_involution_flips(int k) { return k & 1; }
inline bool reversion_flips(int k) { return ((k * (k - 1)) / 2) & 1; }
inline bool conjugation_flips(int k) { return ((k * (k + 1)) / 2) & 1; }

template <class S, class Flip>
Multivector<S> graded_signs(const Multivector<S>& a, Flip flips) {
    Multivector<S> r = a;
    for (BladeMask m = 0; m < BladeMask(a.blade_count()); ++m)
        if (flips(blade_grade(m))) r[m] = -r[m];
    return r;
}
} // namespace detail

template <class S>
Multivector<S> grade_involution(const Multivector<S>& a) {
    return detail::graded_signs(a, detail::grade_involution_flips);
}

template <class S>
Multivector<S> reversion(const Multivector<S>& a) {
    return detail::graded_signs(a, detail::reversion_flips);
}

/// Reversion composed with grade involution (the charge-conjugation
/// antiautomorphism on the algebra side).
template <class S>
Multivector<S> clifford_conjugation(const Multivector<S>& a) {
    return detail::graded_signs(a, detail::conjugation_flips);
}

// ---------------------------------------------------------------------------
// Volume element
// ---------------------------------------------------------------------------

template <class S>
struct VolumeElement {
    Multivector<S> element;
    int square;    // +1 or -1
    bool central;
};

template <class S = std::complex<double>>
VolumeElement<S> volume_element(const Signature& sig) {
    const BladeMask top = BladeMask(sig.blade_count()) - 1;
    auto omega = Multivector<S>::blade(sig, top);
    const auto sq = blade_product(sig, top, top);
    bool central = true;
    for (int g = 0; g < sig.dim() && central; ++g) {
        const BladeMask gen = BladeMask(1) << g;
        const auto og = blade_product(sig, top, gen);
        const auto go = blade_product(sig, gen, top);
        central = (og.sign == go.sign); // masks agree automatically
    }
    return {omega, sq.sign, central};
}

// ---------------------------------------------------------------------------
// Radon-Hurwitz numbers and primitive idempotents
// ---------------------------------------------------------------------------

/// r_0..r_7 = 0,1,2,2,3,3,3,3 extended both ways by r_{i+8} = r_i + 4.
inline int radon_hurwitz(int i) {
    static constexpr int base[8] = {0, 1, 2, 2, 3, 3, 3, 3};
    int shift = 0;
    while (i < 0) {
        i += 8;
        shift -= 4;
    }
    shift += 4 * (i / 8);
    return base[i % 8] + shift;
}

/// Number of commuting square-to-one factors in a primitive idempotent of
/// Cl(p,q): k = q - r_{q-p}.
inline int idempotent_factor_count(const Signature& sig) {
    return sig.q - radon_hurwitz(sig.q - sig.p);
}

template <class S>
bool approx_equal(const Multivector<S>& a, const Multivector<S>& b, double tol = 1e-12) {
    if (!(a.signature() == b.signature())) return false;
    for (BladeMask m = 0; m < BladeMask(a.blade_count()); ++m) {
        if constexpr (ScalarOps<S>::exact) {
            if (!(a[m] == b[m])) return false;
        } else {
            if (!ScalarOps<S>::negligible(a[m] - b[m], tol)) return false;
        }
    }
    return true;
}

template <class S>
struct IdempotentCertificate {
    Multivector<S> element;
    std::vector<Multivector<S>> factors;
    int k;
};

template <class S>
S scalar_half();
template <>
inline double scalar_half<double>() { return 0.5; }
template <>
inline std::complex<double> scalar_half<std::complex<double>>() { return {0.5, 0.0}; }
template <>
inline Rational scalar_half<Rational>() { return Rational(1, 2); }
template <>
inline ComplexRational scalar_half<ComplexRational>() { return ComplexRational(Rational(1, 2)); }

/// Builds e = prod_i (1 + f_i)/2 from caller-supplied commuting factors with
/// f_i^2 = 1 and verifies the construction. `ideal_sig` is the signature of
/// the algebra in which primitivity is claimed; it fixes the required factor
/// count through the Radon-Hurwitz numbers. The factors themselves may live
/// in a different realization of that algebra (e.g. the complexified
/// spacetime algebra standing in for Cl(4,1)).
template <class S>
IdempotentCertificate<S> primitive_idempotent(const Signature& ideal_sig,
                                              const std::vector<Multivector<S>>& factors,
                                              double tol = 1e-12) {
    const int k = idempotent_factor_count(ideal_sig);
    if (static_cast<int>(factors.size()) != k)
        throw std::invalid_argument("primitive_idempotent: wrong factor count, need k = q - r_{q-p} = " +
                                    std::to_string(k));
    if (factors.empty())
        throw std::invalid_argument("primitive_idempotent: no factors supplied");

    const Signature sig = factors.front().signature();
    const auto one = Multivector<S>::scalar(sig, S{1});
    for (const auto& f : factors) {
        if (!approx_equal(f * f, one, tol))
            throw std::invalid_argument("primitive_idempotent: factor does not square to +1");
    }
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (!approx_equal(factors[i] * factors[j], factors[j] * factors[i], tol))
                throw std::invalid_argument("primitive_idempotent: factors do not commute");

    const S half = scalar_half<S>();
    Multivector<S> e = one;
    for (const auto& f : factors) e = e * ((one + f) * half);
    if (!approx_equal(e * e, e, tol))
        throw std::invalid_argument("primitive_idempotent: product is not idempotent");
    return {e, factors, k};
}

// ---------------------------------------------------------------------------
// One-sided ideals
// ---------------------------------------------------------------------------

enum class IdealSide { left, right };

namespace detail {

/// Incremental row reduction over the scalar field; keeps the multivectors
/// whose coefficient rows extend the span.
template <class S>
class SpanBuilder {
public:
    explicit SpanBuilder(int width, double tol) : width_(width), tol_(tol) {}

    bool try_insert(const Multivector<S>& mv) {
        std::vector<S> row(width_);
        for (int i = 0; i < width_; ++i) row[i] = mv[BladeMask(i)];
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const int p = pivots_[r];
            if (row[p] == S{}) continue;
            S factor = divide(row[p], rows_[r][p]);
            for (int i = 0; i < width_; ++i) row[i] = row[i] - factor * rows_[r][i];
        }
        int pivot = -1;
        double best = 0.0;
        for (int i = 0; i < width_; ++i) {
            if constexpr (ScalarOps<S>::exact) {
                if (!(row[i] == S{})) { pivot = i; break; }
            } else {
                const double mag = ScalarOps<S>::magnitude(row[i]);
                if (mag > best) { best = mag; pivot = i; }
            }
        }
        if constexpr (!ScalarOps<S>::exact) {
            if (best <= tol_) pivot = -1;
        }
        if (pivot < 0) return false;
        rows_.push_back(std::move(row));
        pivots_.push_back(pivot);
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    static S divide(const S& a, const S& b) {
        if constexpr (std::is_same_v<S, Rational>) {
            return a * Rational(b.den, b.num);
        } else if constexpr (std::is_same_v<S, ComplexRational>) {
            const Rational n = b.re * b.re + b.im * b.im;
            const Rational recip(n.den, n.num);
            return a * ComplexRational{b.re * recip, -(b.im * recip)};
        } else {
            return a / b;
        }
    }

    int width_;
    double tol_;
    std::vector<std::vector<S>> rows_;
    std::vector<int> pivots_;
};

} // namespace detail

/// Maximal linearly independent subset of {b*e} (left) or {e*b} (right) over
/// all canonical blades b. The size of the result is the ideal dimension over
/// the coefficient field.
template <class S>
std::vector<Multivector<S>> one_sided_ideal_basis(const Multivector<S>& e, IdealSide side,
                                                  double tol = 1e-9) {
    if (!approx_equal(e * e, e, ScalarOps<S>::exact ? 0.0 : 1e-12))
        throw std::invalid_argument("one_sided_ideal_basis: element is not idempotent");
    const int n = e.blade_count();
    detail::SpanBuilder<S> span(n, tol);
    std::vector<Multivector<S>> basis;
    for (BladeMask m = 0; m < BladeMask(n); ++m) {
        auto b = Multivector<S>::blade(e.signature(), m);
        auto candidate = (side == IdealSide::left) ? b * e : e * b;
        if (span.try_insert(candidate)) basis.push_back(std::move(candidate));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Complexification and the omega <-> i identification
// ---------------------------------------------------------------------------

template <class S>
Multivector<typename ComplexifiedScalar<S>::type> complexify(const Multivector<S>& a) {
    using C = typename ComplexifiedScalar<S>::type;
    Multivector<C> r(a.signature());
    for (BladeMask m = 0; m < BladeMask(a.blade_count()); ++m) r[m] = C{a[m]};
    return r;
}

/// Rewrites a multivector of an algebra with central volume element omega,
/// omega^2 = -1, onto the blades of grade < n/2 by identifying omega with the
/// scalar imaginary unit (each high blade B folds onto its complement via
/// B = sign * omega * B^c). Throws when omega is not central or squares to +1.
template <class S>
Multivector<S> fold_volume_to_i(const Multivector<S>& a) {
    const Signature sig = a.signature();
    const auto vol = volume_element<S>(sig);
    if (!vol.central || vol.square != -1)
        throw std::invalid_argument(
            "fold_volume_to_i: volume element must be central with square -1");
    const int n = sig.dim();
    const BladeMask full = BladeMask(sig.blade_count()) - 1;
    const S i_unit = ScalarOps<S>::imag_unit();
    Multivector<S> r(sig);
    for (BladeMask m = 0; m < BladeMask(a.blade_count()); ++m) {
        if (a[m] == S{}) continue;
        if (2 * blade_grade(m) < n) {
            r[m] = r[m] + a[m];
        } else {
            const BladeMask comp = full ^ m;
            const auto bp = blade_product(sig, full, comp); // omega * B^c = sign * B
            S term = i_unit * a[m];
            if (bp.sign < 0) term = -term;
            r[comp] = r[comp] + term;
        }
    }
    return r;
}

using Cmplx = std::complex<double>;
using MultivectorC = Multivector<Cmplx>;
using MultivectorR = Multivector<double>;
using MultivectorX = Multivector<ComplexRational>; // exact mode

} // namespace spinsurf
