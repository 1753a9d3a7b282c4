#pragma once

#include <gmpxx.h>

#include <string>

namespace catalan {

using Rational = mpq_class;

// Closed interval with exact rational endpoints. Ring operations on rationals
// are exact, so only the irrational-constant enclosures below introduce
// width; every operation returns an enclosure of the exact image.
class Interval {
  public:
    Interval() : lo_(0), hi_(0) {}
    explicit Interval(const Rational& v) : lo_(v), hi_(v) {}
    explicit Interval(long v) : lo_(v), hi_(v) {}
    Interval(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / 2; }

    bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool strictly_above(const Rational& v) const { return lo_ > v; }
    bool strictly_below(const Rational& v) const { return hi_ < v; }
    bool strictly_less(const Interval& o) const { return hi_ < o.lo_; }

    Interval operator-() const { return {-hi_, -lo_}; }
    Interval operator+(const Interval& o) const { return {lo_ + o.lo_, hi_ + o.hi_}; }
    Interval operator-(const Interval& o) const { return {lo_ - o.hi_, hi_ - o.lo_}; }
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const;  // errors if 0 in o

    Interval abs() const;
    Interval pow(unsigned long k) const;
    Interval reciprocal() const;  // errors if 0 inside

    // Intersection; errors on disjoint operands (two enclosures of one value
    // can never be disjoint).
    Interval meet(const Interval& o) const;

    std::string str() const;  // "[num/den, num/den]"

  private:
    Rational lo_, hi_;
};

Interval operator*(const Rational& c, const Interval& x);
Interval operator+(const Rational& c, const Interval& x);
Interval operator-(const Rational& c, const Interval& x);

namespace enclose {

// 2^k as an exact rational, any sign of k.
Rational pow2(long k);

// Enclosures of width <= 2^-bits (up to the final rational scaling).
Interval sqrt_integer(const mpz_class& n, unsigned bits);
Interval sqrt_rational(const Rational& q, unsigned bits);
Interval nth_root(const Rational& q, unsigned long n, unsigned bits);
Interval pi(unsigned bits);

// 2^{k/2} for any integer k (exact when k is even).
Interval pow2_half(long k, unsigned bits);

// sin(pi * t) for rational t in [0, 1/2]; Taylor series with a Lagrange
// remainder bound.
Interval sin_pi_times(const Rational& t, unsigned bits);

// |sin(2 pi n / p)| reduced into [0, 1/2] by symmetry first.
Interval abs_sin_two_pi(unsigned long n, unsigned long p, unsigned bits);

}  // namespace enclose

}  // namespace catalan
