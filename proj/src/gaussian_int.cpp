#include "catalan/gaussian_int.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace catalan {

std::string GaussianInt::str() const {
    if (im == 0) return re.get_str();
    std::string imag;
    if (im == 1)
        imag = "i";
    else if (im == -1)
        imag = "-i";
    else
        imag = im.get_str() + "i";
    if (re == 0) return imag;
    if (im > 0) return re.get_str() + "+" + imag;
    return re.get_str() + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianInt& z) { return os << z.str(); }

namespace {

// One signed term of the "a+bi" grammar: integer, or integer followed by 'i',
// or bare 'i' (coefficient 1).
struct Term {
    mpz_class value;
    bool imaginary;
};

Term parse_term(const std::string& s, size_t& pos) {
    if (pos >= s.size()) throw std::invalid_argument("empty term in Gaussian literal");
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
        if (s[pos] == '-') sign = -1;
        ++pos;
    }
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    bool is_imag = false;
    mpz_class mag;
    if (pos < s.size() && s[pos] == 'i') {
        is_imag = true;
        mag = (pos == start) ? mpz_class(1) : mpz_class(s.substr(start, pos - start));
        ++pos;
    } else {
        if (pos == start) throw std::invalid_argument("malformed Gaussian literal");
        mag = mpz_class(s.substr(start, pos - start));
    }
    return {sign * mag, is_imag};
}

}  // namespace

GaussianInt GaussianInt::parse(const std::string& s) {
    size_t pos = 0;
    GaussianInt out;
    bool seen_re = false, seen_im = false;
    Term first = parse_term(s, pos);
    (first.imaginary ? out.im : out.re) = first.value;
    (first.imaginary ? seen_im : seen_re) = true;
    if (pos < s.size()) {
        if (s[pos] != '+' && s[pos] != '-')
            throw std::invalid_argument("malformed Gaussian literal: " + s);
        Term second = parse_term(s, pos);
        if ((second.imaginary && seen_im) || (!second.imaginary && seen_re))
            throw std::invalid_argument("duplicate term in Gaussian literal: " + s);
        (second.imaginary ? out.im : out.re) = second.value;
    }
    if (pos != s.size()) throw std::invalid_argument("trailing garbage in Gaussian literal: " + s);
    return out;
}

GaussianInt pow(const GaussianInt& z, unsigned long k) {
    GaussianInt result(1);
    GaussianInt base = z;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

namespace {

// ceil((2a - n) / (2n)) = nearest integer to a/n with ties toward -infinity.
mpz_class round_tie_down(const mpz_class& a, const mpz_class& n) {
    mpz_class num = 2 * a - n;
    mpz_class den = 2 * n;
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace

DivModResult divmod(const GaussianInt& z, const GaussianInt& w) {
    if (w.is_zero()) throw std::invalid_argument("divmod: division by zero");
    mpz_class n = w.norm();
    // z / w = z * conj(w) / norm(w)
    mpz_class a = z.re * w.re + z.im * w.im;
    mpz_class b = z.im * w.re - z.re * w.im;
    GaussianInt q{round_tie_down(a, n), round_tie_down(b, n)};
    GaussianInt r = z - q * w;
    return {q, r};
}

bool divides(const GaussianInt& d, const GaussianInt& z) {
    if (d.is_zero()) return z.is_zero();
    return divmod(z, d).r.is_zero();
}

CanonicalAssociate canonical_associate(const GaussianInt& z) {
    if (z.is_zero()) return {z};
    GaussianInt c = z;
    for (int i = 0; i < 3 && !(c.re > 0 && c.im >= 0); ++i) c = c.times_i();
    return {c};
}

CanonicalAssociate gcd(const GaussianInt& z, const GaussianInt& w) {
    if (z.is_zero() && w.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    GaussianInt a = z, b = w;
    while (!b.is_zero()) {
        GaussianInt r = divmod(a, b).r;
        a = b;
        b = r;
    }
    return canonical_associate(a);
}

Valuation val_one_plus_i(const GaussianInt& z) {
    if (z.is_zero()) return {true, 0};
    GaussianInt cur = z;
    unsigned long v = 0;
    // (1+i) | z  iff  re+im is even; z/(1+i) = ((re+im) + (im-re)i)/2
    while (mpz_even_p(mpz_class(cur.re + cur.im).get_mpz_t())) {
        mpz_class nre = (cur.re + cur.im) / 2;
        mpz_class nim = (cur.im - cur.re) / 2;
        cur = GaussianInt{nre, nim};
        ++v;
    }
    return {false, v};
}

}  // namespace catalan
