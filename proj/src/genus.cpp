#include "onesided/genus.hpp"

#include <cassert>
#include <stdexcept>

namespace onesided {

Int BSequence::sum() const {
    Int s = 0;
    for (const Int& b : values) s += b;
    return s;
}

BSequence b_sequence(const ContinuedFraction& cf) {
    if (!cf.canonical()) throw std::invalid_argument("b_sequence: continued fraction not canonical");
    BSequence bs;
    bs.values.reserve(cf.terms.size());
    Int running = 0;
    for (std::size_t i = 0; i < cf.terms.size(); ++i) {
        Int b;
        if (i == 0) {
            b = cf.terms[0];
        } else if (bs.values[i - 1] == cf.terms[i - 1] && running % 2 == 0) {
            b = 0;
        } else {
            b = cf.terms[i];
        }
        running += b;
        bs.values.push_back(b);
    }
    return bs;
}

Int minimal_genus_formula(const Int& p, const Int& q) {
    if (p % 2 != 0)
        throw std::domain_error("non-splittable lens space: L(p,q) with p odd contains no non-orientable surface");
    Int s = b_sequence(continued_fraction(p, q)).sum();
    // The half-sum is the genus; the sum is even on every valid input.
    assert(s % 2 == 0);
    if (s % 2 != 0) throw std::logic_error("b-sequence sum is odd");
    return s / 2;
}

std::vector<Int> embeddable_genera(const Int& p, const Int& q, const Int& bound) {
    Int n = minimal_genus_formula(p, q);
    std::vector<Int> out;
    for (Int g = n; g <= bound; g += 2) out.push_back(g);
    return out;
}

}  // namespace onesided
