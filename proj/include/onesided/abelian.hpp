#pragma once

#include <string>
#include <vector>

#include "onesided/smith.hpp"

namespace onesided {

// Finitely generated abelian group in canonical form: Z^rank plus cyclic
// factors Z/d_1 + ... + Z/d_t with d_1 | d_2 | ... and every d_i >= 2.
struct AbelianGroup {
    int rank = 0;
    std::vector<Int> torsion;

    bool operator==(const AbelianGroup&) const = default;
    std::string to_string() const;  // "Z + Z/2 + Z/2", "0" for the trivial group
};

// Quotient of Z^generators by the row space of `relations`: one relation per
// row, one column per generator (the fixed file-format convention).
AbelianGroup group_from_presentation(int generators, const IntMatrix& relations);

// Torsion in prime-power form, for display only: [2,6] -> [2,2,3].
std::vector<Int> primary_decomposition(const std::vector<Int>& invariant_factors);

// Gluing matrix [[p_l,q_l],[p_m,q_m]] writing the solid-torus boundary basis
// (l',m') in the mapping-cylinder boundary basis (l,m).  The gluing reverses
// orientation, so the determinant must be -1.
struct GluingMatrix {
    Int p_l, q_l, p_m, q_m;

    Int det() const { return p_l * q_m - p_m * q_l; }
};

// H_1 of the manifold glued from a solid torus V and the mapping cylinder C
// of the orientating double cover of the Klein bottle.  Presentation on
// generators (v, l1, l2, mu), where v is the solid-torus core, l1, l2 the
// Mobius-band cores and mu the meridian class of C.  The boundary longitude
// double-covers l1 and the boundary meridian double-covers mu, and only l'
// survives inclusion into V, so with (l,m)^T = G^{-1} (l',m')^T the
// Mayer-Vietoris relations are
//   alpha*v + 2*l1 = 0,  gamma*v + 2*mu = 0,  2*(l1 - l2) = 0,
// alpha, gamma the first column of G^{-1}.  Rejects det != -1.
AbelianGroup h1_from_klein_gluing(const GluingMatrix& g);

}  // namespace onesided
