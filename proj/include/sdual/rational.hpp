#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace sdual {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Gaussian rational re + i*im with exact arithmetic.
struct Scalar {
    mpq_class re;
    mpq_class im;

    Scalar() : re(0), im(0) {}
    Scalar(long n) : re(n), im(0) {}
    Scalar(const mpq_class& r) : re(r), im(0) {}
    Scalar(const mpq_class& r, const mpq_class& i) : re(r), im(i) {}

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    Scalar operator-() const { return Scalar(-re, -im); }
    Scalar operator+(const Scalar& o) const { return Scalar(re + o.re, im + o.im); }
    Scalar operator-(const Scalar& o) const { return Scalar(re - o.re, im - o.im); }
    Scalar operator*(const Scalar& o) const {
        return Scalar(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    Scalar inverse() const {
        if (is_zero()) throw error("division by zero scalar");
        mpq_class n = re * re + im * im;
        return Scalar(re / n, -im / n);
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { re += o.re; im += o.im; return *this; }
    Scalar& operator-=(const Scalar& o) { re -= o.re; im -= o.im; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    bool operator==(const Scalar& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // "3", "-1/2", "i", "-i", "2*i", "1+2*i" (sums parenthesized by callers).
    std::string str() const;
    // True when str() needs parentheses inside a product context.
    bool needs_parens() const { return re != 0 && im != 0; }
};

std::string rat_str(const mpq_class& q);

} // namespace sdual
