#include "onesided/continued_fraction.hpp"

#include <stdexcept>

namespace onesided {

bool ContinuedFraction::canonical() const {
    if (terms.empty()) return false;
    for (const Int& t : terms)
        if (t < 1) return false;
    if (terms.size() > 1 && terms.back() < 2) return false;
    return true;
}

ContinuedFraction continued_fraction(const Int& p, const Int& q) {
    if (q <= 0) throw std::invalid_argument("continued_fraction: q must be positive");
    if (q >= p) throw std::invalid_argument("continued_fraction: requires 0 < q < p");
    if (gcd(p, q) != 1) throw std::invalid_argument("continued_fraction: p, q must be coprime");

    ContinuedFraction cf;
    Int a = p, b = q;
    while (b != 0) {
        cf.terms.push_back(a / b);
        Int r = a % b;
        a = b;
        b = r;
    }
    // Euclid on a coprime pair with p > q > 0 ends with a quotient >= 2, so
    // the expansion is already canonical.
    return cf;
}

Rational rational_from_terms(const std::vector<Int>& terms) {
    if (terms.empty()) throw std::invalid_argument("rational_from_terms: empty term list");
    for (const Int& t : terms)
        if (t < 1) throw std::invalid_argument("rational_from_terms: terms must be >= 1");

    Rational value(terms.back());
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it)
        value = Rational(*it) + Rational(1) / value;
    return value;
}

ContinuedFraction canonicalize(const std::vector<Int>& terms) {
    Rational v = rational_from_terms(terms);
    return continued_fraction(numerator(v), denominator(v));
}

}  // namespace onesided
