#pragma once

// Test-only independent oracle: evaluates the kernel's double contour
// integral by high-precision trapezoid quadrature on two circles (geometric
// convergence for analytic integrands), entirely separate from the residue
// algebra used by the library.

#include <mpfr.h>

#include <string>
#include <vector>

#include "lozenge/polygon.hpp"

namespace lozenge::testutil {

class BigFloat {
public:
    static constexpr mpfr_prec_t kPrec = 384;
    BigFloat() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
    BigFloat(double d) : BigFloat() { mpfr_set_d(v_, d, MPFR_RNDN); }
    BigFloat(long l) : BigFloat() { mpfr_set_si(v_, l, MPFR_RNDN); }
    BigFloat(const BigFloat& o) : BigFloat() { mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat& operator=(const BigFloat& o) {
        mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r;
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    static void sin_cos(const BigFloat& x, BigFloat& s, BigFloat& c) {
        mpfr_sin_cos(s.v_, c.v_, x.v_, MPFR_RNDN);
    }
    static BigFloat pi() {
        BigFloat r;
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat from_rational(const Rational& q) {
        BigFloat r;
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    BigFloat abs() const {
        BigFloat r;
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

struct BigComplex {
    BigFloat re, im;
    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
};

// (base + z)(base + 1 + z)...(base + m - 1 + z) with complex z.
inline BigComplex poch_shifted(const BigComplex& z, long base, unsigned m) {
    BigComplex p{BigFloat(1.0), BigFloat(0.0)};
    for (unsigned t = 0; t < m; ++t) p = p * (z + BigComplex{BigFloat(base + (long)t), BigFloat(0.0)});
    return p;
}

// Double contour integral in the kernel at (x1,n1;x2,n2): trapezoid rule with
// `nodes` points on each circle (spectral accuracy). The z circle encloses
// exactly the integers x2..B_k-1/2; the w circle encloses the z circle and
// x1-(N-n1)..x1. Requires x2 <= B_k-1/2 so the z contour is nonempty.
inline BigComplex kernel_double_integral_quadrature(const PolygonSpec& spec, long x1, int n1,
                                                    long x2, int n2, int nodes = 640) {
    const int N = spec.N;
    const long bk = spec.B.back().minus_half();
    std::vector<long> roots;  // zeros of T: the top-row points
    for (int i = 0; i < spec.k(); ++i)
        for (long r = spec.A[i].plus_half(); r <= spec.B[i].minus_half(); ++r) roots.push_back(r);

    const double zc = 0.5 * (static_cast<double>(x2) + bk);
    const double zr = 0.5 * (bk - x2) + 0.45;
    const double wlo = std::min<double>(x1 - (N - n1), x2) - 1.0;
    const double whi = std::max<double>(x1, bk) + 1.0;
    const double wc = 0.5 * (wlo + whi);
    double wr = 0.5 * (whi - wlo);
    // keep the w circle clear of the z circle
    wr = std::max(wr, std::abs(wc - zc) + zr + 1.25) + 0.5;

    const BigFloat two_pi = BigFloat(2.0) * BigFloat::pi();
    BigComplex acc{BigFloat(0.0), BigFloat(0.0)};
    std::vector<BigComplex> ws(nodes), dws(nodes), gws(nodes);
    for (int j = 0; j < nodes; ++j) {
        BigFloat tj = two_pi * BigFloat((double)j) / BigFloat((double)nodes);
        BigFloat sj, cj;
        BigFloat::sin_cos(tj, sj, cj);
        ws[j] = BigComplex{BigFloat(wc) + BigFloat(wr) * cj, BigFloat(wr) * sj};
        dws[j] = BigComplex{-BigFloat(wr) * sj, BigFloat(wr) * cj};  // dw/dt
        BigComplex tw{BigFloat(1.0), BigFloat(0.0)};
        for (long r : roots) tw = tw * (BigComplex{BigFloat(r), BigFloat(0.0)} - ws[j]);
        gws[j] = tw / poch_shifted(ws[j], -x1, N - n1 + 1) * dws[j];
    }
    for (int i = 0; i < nodes; ++i) {
        BigFloat ti = two_pi * BigFloat((double)i) / BigFloat((double)nodes);
        BigFloat si, ci;
        BigFloat::sin_cos(ti, si, ci);
        BigComplex z{BigFloat(zc) + BigFloat(zr) * ci, BigFloat(zr) * si};
        BigComplex dz{-BigFloat(zr) * si, BigFloat(zr) * ci};

        BigComplex tz{BigFloat(1.0), BigFloat(0.0)};
        for (long r : roots) tz = tz * (BigComplex{BigFloat(r), BigFloat(0.0)} - z);
        BigComplex fz = poch_shifted(z, 1 - x2, N - n2 - 1) / tz * dz;

        for (int j = 0; j < nodes; ++j) acc = acc + fz * gws[j] / (ws[j] - z);
    }
    // (1/(2 pi i))^2 (2pi/nodes)^2 sum; the i^2 contributes the minus sign.
    BigFloat norm = (two_pi / BigFloat((double)nodes)) * (two_pi / BigFloat((double)nodes));
    return acc * BigComplex{norm, BigFloat(0.0)} /
           BigComplex{-two_pi * two_pi, BigFloat(0.0)};
}

}  // namespace lozenge::testutil
