#pragma once

#include <optional>
#include <string>

#include "onesided/curve_system.hpp"
#include "onesided/numeric.hpp"

namespace onesided {

enum class ManifoldKind { Lens, TrivialBundle, Custom };

struct ManifoldName {
    ManifoldKind kind = ManifoldKind::Custom;
    Int p = 0, q = 0;  // Lens(p,q)
    int g = 0;         // TrivialBundle: Sigma_g x S^1

    std::string to_string() const;
    bool operator==(const ManifoldName&) const = default;
};

// One-sided splitting bookkeeping: the manifold decomposes as a handlebody
// glued to a tubular neighbourhood of a closed non-orientable surface U, and
// the shared boundary is the orientable double cover of U, so both the
// handlebody genus and the braid surface genus equal u_genus - 1.
struct SplittingDescriptor {
    ManifoldName manifold;
    Int u_genus = 0;
    Int handlebody_genus = 0;
    Int braid_surface_genus = 0;
    std::optional<TauInvolution> witness_tau;

    bool operator==(const SplittingDescriptor&) const = default;
};

// Splitting of L(p,q) along a minimal-genus non-orientable surface.  The
// witness comes from the explicit family when q = 1 (adjacent pairing) or
// p = 4a+4, q = 2a+1 (long-chord pattern), otherwise from the exhaustive
// search when k = p/2 is within the enumeration bound; beyond that the
// descriptor carries no witness.  Odd p is rejected with std::domain_error.
SplittingDescriptor lens_splitting(const Int& p, const Int& q, int max_k = kDefaultEnumMaxK);

// Splitting of Sigma_g x S^1 along a non-orientable surface of genus 2g+4.
// The construction is stated for g >= 1; g = 0 (S^2 x S^1) is allowed, the
// formula extends.  No canonical witness tau exists for the bundle case.
SplittingDescriptor trivial_bundle_splitting(int g);

// A lens space contains a non-orientable surface (equivalently, admits a
// one-sided splitting) exactly when p is even.
bool is_splittable_lens(const Int& p, const Int& q);

}  // namespace onesided
