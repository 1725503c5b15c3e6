#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace fbt {

using Rational = mpq_class;

/// Gaussian rational: exact complex number with rational real and
/// imaginary parts. All arithmetic is exact; no rounding ever occurs.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(long r, long i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    /// |z|^2 as an exact rational.
    Rational norm() const { return re * re + im * im; }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.norm();
        GaussianRational t = a * b.conj();
        return {t.re / n, t.im / n};
    }
    GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }
    GaussianRational& operator/=(const GaussianRational& o) { *this = *this / o; return *this; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Total order (re first, then im). Used for canonical sorting of
    /// frequency points, not for any analytic meaning.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    }

    std::string str() const;
};

GaussianRational pow(const GaussianRational& base, unsigned long e);

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational r = 1;
    for (unsigned long k = 0; k < e; ++k) r *= base;
    return r;
}

/// Exact factorial as a rational (exact integer value).
Rational factorial(unsigned long k);

}  // namespace fbt
