#pragma once

#include <string>

#include "vertexlab/rational.hpp"

namespace vertexlab {

/// Element of Q(i): exact field arithmetic with i^2 = -1.
struct GaussianRat {
    Rat re{0};
    Rat im{0};

    GaussianRat() = default;
    GaussianRat(long n) : re(n), im(0) {}            // NOLINT: implicit on purpose
    GaussianRat(Rat r) : re(std::move(r)), im(0) {}  // NOLINT
    GaussianRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRat i() { return {Rat(0), Rat(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRat conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }

    friend GaussianRat operator+(const GaussianRat& a, const GaussianRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRat operator-(const GaussianRat& a, const GaussianRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRat operator-(const GaussianRat& a) { return {-a.re, -a.im}; }
    friend GaussianRat operator*(const GaussianRat& a, const GaussianRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRat operator/(const GaussianRat& a, const GaussianRat& b) {
        Rat n = b.norm();
        if (n == 0) throw ValidationError("division by zero Gaussian rational");
        GaussianRat c = a * b.conj();
        return {c.re / n, c.im / n};
    }
    GaussianRat& operator+=(const GaussianRat& o) { return *this = *this + o; }
    GaussianRat& operator-=(const GaussianRat& o) { return *this = *this - o; }
    GaussianRat& operator*=(const GaussianRat& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRat& a, const GaussianRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRat& a, const GaussianRat& b) { return !(a == b); }
};

inline GaussianRat gaussian_pow(const GaussianRat& base, long e) {
    if (e == 0) return GaussianRat(1);
    GaussianRat b = e < 0 ? GaussianRat(1) / base : base;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    GaussianRat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline std::string to_string(const GaussianRat& z) {
    if (z.im == 0) return rat_to_string(z.re);
    std::string s = rat_to_string(z.re);
    s += (z.im > 0 ? "+" : "-");
    Rat a = abs(z.im);
    if (a != 1) s += rat_to_string(a) + "*";
    s += "i";
    return s;
}

} // namespace vertexlab
