#include "catalan/interval.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace catalan {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("interval endpoints out of order");
}

Interval Interval::operator*(const Interval& o) const {
    Rational a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
    return {std::min({a, b, c, d}), std::max({a, b, c, d})};
}

Interval Interval::reciprocal() const {
    if (lo_ <= 0 && hi_ >= 0) throw std::domain_error("reciprocal of interval containing zero");
    return {1 / hi_, 1 / lo_};
}

Interval Interval::operator/(const Interval& o) const { return *this * o.reciprocal(); }

Interval Interval::abs() const {
    if (lo_ >= 0) return *this;
    if (hi_ <= 0) return -*this;
    return {Rational(0), std::max(-lo_, hi_)};
}

namespace {

Rational rational_pow(const Rational& q, unsigned long k) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num().get_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den().get_mpz_t(), k);
    r.canonicalize();
    return r;
}

}  // namespace

Interval Interval::pow(unsigned long k) const {
    if (k == 0) return Interval(Rational(1));
    if (lo_ >= 0) return {rational_pow(lo_, k), rational_pow(hi_, k)};
    if (hi_ <= 0) {
        Interval p = (-*this).pow(k);
        return (k % 2 == 0) ? p : -p;
    }
    // straddles zero: t^k is monotone on each side
    Rational plo = rational_pow(lo_, k), phi = rational_pow(hi_, k);
    if (k % 2 == 0) return {Rational(0), std::max(plo, phi)};
    return {plo, phi};
}

Interval Interval::meet(const Interval& o) const {
    Rational lo = std::max(lo_, o.lo_);
    Rational hi = std::min(hi_, o.hi_);
    if (lo > hi) throw std::logic_error("meet of disjoint intervals");
    return {lo, hi};
}

std::string Interval::str() const {
    return "[" + lo_.get_str() + ", " + hi_.get_str() + "]";
}

Interval operator*(const Rational& c, const Interval& x) { return Interval(c) * x; }
Interval operator+(const Rational& c, const Interval& x) { return Interval(c) + x; }
Interval operator-(const Rational& c, const Interval& x) { return Interval(c) - x; }

namespace enclose {

Rational pow2(long k) {
    Rational r = 1;
    if (k >= 0)
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num().get_mpz_t(), static_cast<unsigned long>(k));
    else
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den().get_mpz_t(), static_cast<unsigned long>(-k));
    r.canonicalize();
    return r;
}

Interval sqrt_integer(const mpz_class& n, unsigned bits) {
    if (n < 0) throw std::domain_error("sqrt of negative integer");
    mpz_class shifted;
    mpz_mul_2exp(shifted.get_mpz_t(), n.get_mpz_t(), 2ul * bits);
    mpz_class t;
    mpz_sqrt(t.get_mpz_t(), shifted.get_mpz_t());
    Rational scale = pow2(-static_cast<long>(bits));
    Rational lo = Rational(t) * scale;
    if (t * t == shifted) return {lo, lo};
    return {lo, Rational(t + 1) * scale};
}

Interval sqrt_rational(const Rational& q, unsigned bits) {
    if (q < 0) throw std::domain_error("sqrt of negative rational");
    // sqrt(a/b) = sqrt(a*b)/b
    mpz_class m = q.get_num() * q.get_den();
    Interval s = sqrt_integer(m, bits);
    Rational inv_b(1, q.get_den());
    inv_b.canonicalize();
    return inv_b * s;
}

Interval nth_root(const Rational& q, unsigned long n, unsigned bits) {
    if (n == 0) throw std::invalid_argument("0th root");
    if (q < 0) throw std::domain_error("nth_root expects a nonnegative argument");
    // (a/b)^{1/n} = (a b^{n-1})^{1/n} / b
    mpz_class m = q.get_num();
    mpz_class bpow;
    mpz_pow_ui(bpow.get_mpz_t(), q.get_den().get_mpz_t(), n - 1);
    m *= bpow;
    mpz_class shifted;
    mpz_mul_2exp(shifted.get_mpz_t(), m.get_mpz_t(), n * bits);
    mpz_class t;
    int exact = mpz_root(t.get_mpz_t(), shifted.get_mpz_t(), n);
    Rational scale = pow2(-static_cast<long>(bits));
    Rational inv_b(1, q.get_den());
    inv_b.canonicalize();
    Rational lo = Rational(t) * scale * inv_b;
    if (exact) return {lo, lo};
    return {lo, Rational(t + 1) * scale * inv_b};
}

namespace {

// arctan(1/x) with the alternating-series tail: partial sum +/- next term.
Interval arctan_inv(unsigned long x, unsigned bits) {
    const double log2x = std::log2(static_cast<double>(x));
    const unsigned long terms =
        static_cast<unsigned long>((bits + 8) / (2.0 * log2x)) + 2;
    Rational sum = 0;
    mpz_class xpow = x;  // x^(2k+1)
    mpz_class x2 = mpz_class(x) * x;
    for (unsigned long k = 0; k < terms; ++k) {
        Rational term(1, (2 * k + 1) * xpow);
        term.canonicalize();
        sum += (k % 2 == 0) ? term : -term;
        xpow *= x2;
    }
    Rational tail(1, (2 * terms + 1) * xpow);
    tail.canonicalize();
    return {sum - tail, sum + tail};
}

}  // namespace

Interval pi(unsigned bits) {
    static std::map<unsigned, Interval> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(bits);
    if (it != cache.end()) return it->second;
    // Machin: pi = 16 arctan(1/5) - 4 arctan(1/239)
    Interval val = Rational(16) * arctan_inv(5, bits + 6) - Rational(4) * arctan_inv(239, bits + 6);
    cache.emplace(bits, val);
    return val;
}

Interval pow2_half(long k, unsigned bits) {
    if (k % 2 == 0) return Interval(pow2(k / 2));
    long m = (k - 1) / 2;  // floor for odd k, both signs
    if (k < 0 && (k - 1) % 2 != 0) m = (k - 1) / 2;  // C++ division truncates; fix below
    // recompute floor((k-1)/2) portably
    m = (k - 1) >= 0 ? (k - 1) / 2 : -(((-(k - 1)) + 1) / 2);
    return pow2(m) * sqrt_integer(2, bits);
}

Interval sin_pi_times(const Rational& t, unsigned bits) {
    if (t < 0 || t > Rational(1, 2))
        throw std::domain_error("sin_pi_times expects t in [0, 1/2]");
    Interval x = pi(bits) * Interval(t);  // x in [0, pi/2]
    // Taylor: sin x = sum_{j<J} (-1)^j x^{2j+1}/(2j+1)! + R, |R| <= x^{2J+1}/(2J+1)!
    // with x <= 1.571 < 8/5 the remainder shrinks superexponentially.
    const Rational x_hi_bound(8, 5);
    Rational target = pow2(-static_cast<long>(bits) - 4);
    Interval sum(Rational(0));
    Interval xsq = x * x;
    Interval term = x;  // x^{2j+1}/(2j+1)!
    unsigned long j = 0;
    Rational rem_num;
    mpz_pow_ui(rem_num.get_num_mpz_t(), x_hi_bound.get_num().get_mpz_t(), 1);
    while (true) {
        sum = (j % 2 == 0) ? sum + term : sum - term;
        ++j;
        term = term * xsq / Interval(Rational((2 * j) * (2 * j + 1)));
        // remainder bound at the next term, evaluated at the sup of |x|
        Rational bound;
        {
            Rational xh = x.hi() < x_hi_bound ? x.hi() : x_hi_bound;
            mpz_class num, den;
            mpz_pow_ui(num.get_mpz_t(), xh.get_num().get_mpz_t(), 2 * j + 1);
            mpz_pow_ui(den.get_mpz_t(), xh.get_den().get_mpz_t(), 2 * j + 1);
            bound = Rational(num, den);
            mpz_class fact;
            mpz_fac_ui(fact.get_mpz_t(), 2 * j + 1);
            bound /= Rational(fact);
            bound.canonicalize();
        }
        if (bound < target || j > 64) {
            Interval rem{-bound, bound};
            Interval result = sum + rem;
            // sin on [0, pi/2] lies in [0, 1]
            Rational lo = std::max(result.lo(), Rational(0));
            Rational hi = std::min(result.hi(), Rational(1));
            return {lo, hi};
        }
    }
}

Interval abs_sin_two_pi(unsigned long n, unsigned long p, unsigned bits) {
    if (p == 0) throw std::invalid_argument("abs_sin_two_pi: p = 0");
    // t = 2n/p mod 2, folded into [0, 1/2]: |sin(pi t)| = sin(pi fold(t))
    Rational t(2 * mpz_class(n) % (2 * mpz_class(p)), p);
    t.canonicalize();
    if (t > 1) t -= 1;       // sin flips sign; abs unchanged
    if (t > Rational(1, 2)) t = 1 - t;
    return sin_pi_times(t, bits);
}

}  // namespace enclose

}  // namespace catalan
