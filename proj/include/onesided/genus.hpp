#pragma once

#include <vector>

#include "onesided/continued_fraction.hpp"

namespace onesided {

// The b-sequence of a canonical continued fraction [a_0,...,a_n]:
//   b_0 = a_0, and for i >= 1
//   b_i = 0    if b_{i-1} = a_{i-1} and b_0 + ... + b_{i-1} is even,
//   b_i = a_i  otherwise.
// On lens-space inputs the sum is always even, so N = (sum b_i)/2 is integral.
struct BSequence {
    std::vector<Int> values;

    Int sum() const;
    bool operator==(const BSequence&) const = default;
};

BSequence b_sequence(const ContinuedFraction& cf);

// Minimal genus N(p,q) of a closed non-orientable surface embedded in the
// lens space L(p,q): half the b-sequence sum of p/q.  Requires p even and
// gcd(p,q)=1, 0 < q < p; odd p is rejected with std::domain_error, since a
// lens space with odd p contains no non-orientable surface at all.
Int minimal_genus_formula(const Int& p, const Int& q);

// All genera g <= bound for which a closed non-orientable surface of genus g
// embeds in L(p,q): exactly g = N(p,q) + 2h with h >= 0.
std::vector<Int> embeddable_genera(const Int& p, const Int& q, const Int& bound);

}  // namespace onesided
