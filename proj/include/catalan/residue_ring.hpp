#pragma once

#include <optional>
#include <vector>

#include "catalan/gaussian_int.hpp"

namespace catalan {

// Element of the finite ring Z[i]/(1+i)^k. The canonical representative is
// the base-(1+i) digit expansion with digits {0, 1} of length k, so the ring
// has exactly 2^k structurally distinct reps and equality is field-wise.
struct ResidueClass {
    unsigned k = 1;
    GaussianInt rep;

    bool operator==(const ResidueClass& o) const { return k == o.k && rep == o.rep; }
    bool operator!=(const ResidueClass& o) const { return !(*this == o); }

    // Units are the classes not divisible by (1+i), i.e. reps of odd norm.
    bool is_unit() const { return mpz_odd_p(rep.norm().get_mpz_t()); }

    ResidueClass add(const ResidueClass& o) const;
    ResidueClass mul(const ResidueClass& o) const;
    ResidueClass pow(unsigned long e) const;
};

ResidueClass reduce(const GaussianInt& z, unsigned k);

// All 2^k canonical representatives; k is capped at 20 to keep enumeration
// desk-scale.
std::vector<GaussianInt> ring_representatives(unsigned k);

// |(Z[i]/(1+i)^k)^*| = 2^{k-1}. For k <= 14 the formula is cross-checked
// against explicit enumeration of residues coprime to (1+i).
mpz_class unit_group_order(unsigned k);

struct PthPowerIdentityCheck {
    bool forces_identity = false;
    std::optional<GaussianInt> witness;  // a unit u with u^p = 1 but u != 1
};

// Whether u^p = 1 implies u = 1 on the unit group of Z[i]/(1+i)^k. True
// whenever gcd(p, 2^{k-1}) = 1 (the p-th power map is then a bijection).
PthPowerIdentityCheck pth_power_forces_identity(unsigned p, unsigned k);

// Exhaustive check that u -> u^p permutes the units.
bool pth_power_map_bijective(unsigned p, unsigned k);

}  // namespace catalan
