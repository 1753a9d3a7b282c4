#include "catalan/residue_ring.hpp"

#include <set>
#include <stdexcept>

namespace catalan {

namespace {

const GaussianInt kOnePlusI{1, 1};

void check_k(unsigned k) {
    if (k == 0) throw std::invalid_argument("modulus exponent k must be >= 1");
    if (k > 20) throw std::invalid_argument("modulus exponent k > 20 not supported");
}

}  // namespace

ResidueClass reduce(const GaussianInt& z, unsigned k) {
    check_k(k);
    GaussianInt cur = z;
    GaussianInt rep;
    GaussianInt place(1);
    for (unsigned j = 0; j < k; ++j) {
        // digit = cur mod (1+i), in {0, 1}
        if (mpz_odd_p(mpz_class(cur.re + cur.im).get_mpz_t())) {
            rep = rep + place;
            cur.re -= 1;
        }
        mpz_class nre = (cur.re + cur.im) / 2;
        mpz_class nim = (cur.im - cur.re) / 2;
        cur = GaussianInt{nre, nim};
        place = place * kOnePlusI;
    }
    return {k, rep};
}

ResidueClass ResidueClass::add(const ResidueClass& o) const {
    if (k != o.k) throw std::invalid_argument("residue moduli differ");
    return reduce(rep + o.rep, k);
}

ResidueClass ResidueClass::mul(const ResidueClass& o) const {
    if (k != o.k) throw std::invalid_argument("residue moduli differ");
    return reduce(rep * o.rep, k);
}

ResidueClass ResidueClass::pow(unsigned long e) const {
    ResidueClass result = reduce(GaussianInt(1), k);
    ResidueClass base = *this;
    while (e > 0) {
        if (e & 1) result = result.mul(base);
        base = base.mul(base);
        e >>= 1;
    }
    return result;
}

std::vector<GaussianInt> ring_representatives(unsigned k) {
    check_k(k);
    std::vector<GaussianInt> powers(k);
    GaussianInt place(1);
    for (unsigned j = 0; j < k; ++j) {
        powers[j] = place;
        place = place * kOnePlusI;
    }
    std::vector<GaussianInt> reps;
    reps.reserve(1ull << k);
    for (unsigned long mask = 0; mask < (1ull << k); ++mask) {
        GaussianInt r;
        for (unsigned j = 0; j < k; ++j)
            if (mask & (1ull << j)) r = r + powers[j];
        reps.push_back(r);
    }
    return reps;
}

mpz_class unit_group_order(unsigned k) {
    check_k(k);
    mpz_class formula = 1;
    mpz_mul_2exp(formula.get_mpz_t(), formula.get_mpz_t(), k - 1);
    if (k <= 14) {
        unsigned long enumerated = 0;
        for (const GaussianInt& r : ring_representatives(k))
            if (mpz_odd_p(r.norm().get_mpz_t())) ++enumerated;
        if (formula != enumerated)
            throw std::logic_error("unit group enumeration disagrees with 2^{k-1}");
    }
    return formula;
}

PthPowerIdentityCheck pth_power_forces_identity(unsigned p, unsigned k) {
    check_k(k);
    const ResidueClass one = reduce(GaussianInt(1), k);
    for (const GaussianInt& r : ring_representatives(k)) {
        ResidueClass u{k, r};
        if (!u.is_unit()) continue;
        if (u.pow(p) == one && u != one) return {false, r};
    }
    return {true, std::nullopt};
}

bool pth_power_map_bijective(unsigned p, unsigned k) {
    check_k(k);
    std::set<std::pair<std::string, std::string>> image;
    unsigned long n_units = 0;
    for (const GaussianInt& r : ring_representatives(k)) {
        ResidueClass u{k, r};
        if (!u.is_unit()) continue;
        ++n_units;
        GaussianInt v = u.pow(p).rep;
        image.insert({v.re.get_str(), v.im.get_str()});
    }
    return image.size() == n_units;
}

}  // namespace catalan
