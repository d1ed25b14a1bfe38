#pragma once

#include <gmpxx.h>

#include <string>

namespace starq {

using Rational = mpq_class;

/// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() : re(0), im(0) {}
    Gaussian(long r) : re(r), im(0) {}
    Gaussian(const Rational& r) : re(r), im(0) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Gaussian unit_i() { return Gaussian(Rational(0), Rational(1)); }
    static Gaussian of(long num, long den);

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Gaussian conj() const { return Gaussian(re, -im); }
    Rational norm() const { return re * re + im * im; }

    Gaussian operator-() const { return Gaussian(-re, -im); }
    Gaussian& operator+=(const Gaussian& o);
    Gaussian& operator-=(const Gaussian& o);
    Gaussian& operator*=(const Gaussian& o);

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }

    /// Exact division; throws std::domain_error on zero divisor.
    Gaussian operator/(const Gaussian& o) const;

    /// Integer power, exponent >= 0.
    Gaussian pow(unsigned k) const;

    std::string str() const;
};

}  // namespace starq
