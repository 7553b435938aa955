#pragma once

#include <vector>

#include "onesided/numeric.hpp"

namespace onesided {

// Simple continued fraction a_0 + 1/(a_1 + 1/(... + 1/a_n)) of a rational
// p/q with 0 < q < p.  Canonical form: every term >= 1 and the last term
// >= 2 whenever there is more than one term; this makes the representation
// of a rational unique.
struct ContinuedFraction {
    std::vector<Int> terms;

    bool canonical() const;
    bool operator==(const ContinuedFraction&) const = default;
};

// Euclidean expansion of p/q.  Requires gcd(p,q) = 1 and 0 < q < p; the
// result is canonical.  Throws std::invalid_argument otherwise.
ContinuedFraction continued_fraction(const Int& p, const Int& q);

// Value of an arbitrary positive term list, canonical or not (the trailing-1
// variant [a_0,...,a_n,1] denotes the same rational as [a_0,...,a_n+1]).
Rational rational_from_terms(const std::vector<Int>& terms);

// Re-expands the value of `terms` in canonical form.  The value must exceed 1.
ContinuedFraction canonicalize(const std::vector<Int>& terms);

}  // namespace onesided
