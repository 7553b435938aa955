#include "onesided/splittings.hpp"

#include <stdexcept>

#include "onesided/genus.hpp"

namespace onesided {

std::string ManifoldName::to_string() const {
    switch (kind) {
        case ManifoldKind::Lens:
            return "L(" + p.str() + "," + q.str() + ")";
        case ManifoldKind::TrivialBundle:
            return "Sigma_" + std::to_string(g) + " x S^1";
        default:
            return "custom";
    }
}

namespace {

std::optional<TauInvolution> lens_witness(const Int& p, const Int& q, int max_k) {
    // Building an explicit family witness is linear in k; cap it so
    // descriptors for astronomically large p still come back.
    if (p / 2 > 1000000) return std::nullopt;
    int k = static_cast<int>(p / 2);
    int qi = static_cast<int>(q % p);
    if (q == 1) return adjacent_pair_tau(k);
    if (p % 4 == 0 && p >= 8 && q == p / 2 - 1) return long_chord_tau(static_cast<int>((p - 4) / 4));
    if (k <= max_k) return max_cycles(k, qi, max_k).witness;
    return std::nullopt;
}

}  // namespace

SplittingDescriptor lens_splitting(const Int& p, const Int& q, int max_k) {
    Int n = minimal_genus_formula(p, q);  // validates parity, range, coprimality

    SplittingDescriptor d;
    d.manifold = ManifoldName{ManifoldKind::Lens, p, q, 0};
    d.u_genus = n;
    d.handlebody_genus = n - 1;
    d.braid_surface_genus = n - 1;
    d.witness_tau = lens_witness(p, q, max_k);
    return d;
}

SplittingDescriptor trivial_bundle_splitting(int g) {
    if (g < 0) throw std::invalid_argument("trivial_bundle_splitting: g must be >= 0");
    SplittingDescriptor d;
    d.manifold = ManifoldName{ManifoldKind::TrivialBundle, 0, 0, g};
    d.u_genus = 2 * g + 4;
    d.handlebody_genus = 2 * g + 3;
    d.braid_surface_genus = 2 * g + 3;
    return d;
}

bool is_splittable_lens(const Int& p, const Int& q) {
    if (p < 1) throw std::invalid_argument("is_splittable_lens: p must be positive");
    if (gcd(p, q) != 1) throw std::invalid_argument("is_splittable_lens: p, q must be coprime");
    return p % 2 == 0;
}

}  // namespace onesided
