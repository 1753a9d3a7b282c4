#pragma once

#include <gmpxx.h>

#include <array>
#include <iosfwd>
#include <string>

namespace catalan {

// Exact element of Z[i]. All arithmetic is arbitrary-precision; nothing
// truncates or overflows.
struct GaussianInt {
    mpz_class re, im;

    GaussianInt() : re(0), im(0) {}
    GaussianInt(long r) : re(r), im(0) {}
    GaussianInt(long r, long i) : re(r), im(i) {}
    GaussianInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const { return norm() == 1; }

    mpz_class norm() const { return re * re + im * im; }
    GaussianInt conj() const { return {re, -im}; }

    // z * i = (-im, re)
    GaussianInt times_i() const { return {-im, re}; }

    GaussianInt operator-() const { return {-re, -im}; }
    GaussianInt operator+(const GaussianInt& w) const { return {re + w.re, im + w.im}; }
    GaussianInt operator-(const GaussianInt& w) const { return {re - w.re, im - w.im}; }
    GaussianInt operator*(const GaussianInt& w) const {
        return {re * w.re - im * w.im, re * w.im + im * w.re};
    }

    bool operator==(const GaussianInt& w) const { return re == w.re && im == w.im; }
    bool operator!=(const GaussianInt& w) const { return !(*this == w); }

    // Lexicographic on (re, im); the order used for all reported solution lists.
    bool operator<(const GaussianInt& w) const {
        if (re != w.re) return re < w.re;
        return im < w.im;
    }

    // Rendering "a+bi" with no spaces: "4", "-i", "3i", "-2+3i", "0".
    std::string str() const;
    static GaussianInt parse(const std::string& s);
};

std::ostream& operator<<(std::ostream& os, const GaussianInt& z);

inline const std::array<GaussianInt, 4>& units() {
    static const std::array<GaussianInt, 4> u = {GaussianInt(1), GaussianInt(0, 1),
                                                 GaussianInt(-1), GaussianInt(0, -1)};
    return u;
}

GaussianInt pow(const GaussianInt& z, unsigned long k);

struct DivModResult {
    GaussianInt q, r;
};

// Euclidean division: z = q*w + r with norm(r) <= norm(w)/2. Each coordinate
// of z/w is rounded to the nearest integer, ties toward negative infinity.
DivModResult divmod(const GaussianInt& z, const GaussianInt& w);

bool divides(const GaussianInt& d, const GaussianInt& z);

// The unique associate with re > 0 and im >= 0 (zero maps to zero).
struct CanonicalAssociate {
    GaussianInt value;
};

CanonicalAssociate canonical_associate(const GaussianInt& z);

// Canonical-associate gcd; errors on gcd(0, 0).
CanonicalAssociate gcd(const GaussianInt& z, const GaussianInt& w);

// (1+i)-adic valuation; infinite for z = 0.
struct Valuation {
    bool infinite = false;
    unsigned long value = 0;
};

Valuation val_one_plus_i(const GaussianInt& z);

}  // namespace catalan
