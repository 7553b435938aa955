#include "onesided/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace onesided {

std::string AbelianGroup::to_string() const {
    if (rank == 0 && torsion.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < rank; ++i) {
        os << (first ? "" : " + ") << "Z";
        first = false;
    }
    for (const Int& d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return os.str();
}

AbelianGroup group_from_presentation(int generators, const IntMatrix& relations) {
    if (generators < 0) throw std::invalid_argument("group_from_presentation: negative generator count");
    if (relations.rows() > 0 && relations.cols() != generators)
        throw std::invalid_argument("group_from_presentation: relation columns must match generator count");

    AbelianGroup g;
    if (relations.rows() == 0) {
        g.rank = generators;
        return g;
    }
    SmithResult snf = smith_normal_form(relations);
    std::vector<Int> factors = snf.invariant_factors();
    g.rank = generators - static_cast<int>(factors.size());
    for (const Int& d : factors)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

std::vector<Int> primary_decomposition(const std::vector<Int>& invariant_factors) {
    std::vector<Int> out;
    for (Int d : invariant_factors) {
        for (Int p = 2; p * p <= d; ++p) {
            if (d % p != 0) continue;
            Int power = 1;
            while (d % p == 0) {
                power *= p;
                d /= p;
            }
            out.push_back(power);
        }
        if (d > 1) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

AbelianGroup h1_from_klein_gluing(const GluingMatrix& g) {
    if (g.det() != -1)
        throw std::invalid_argument("klein gluing: matrix determinant must be -1");

    // G^{-1} = -adj(G) since det = -1; its first column is (-q_m, p_m).
    Int alpha = -g.q_m;
    Int gamma = g.p_m;

    IntMatrix rel(3, 4);
    rel(0, 0) = alpha;
    rel(0, 1) = 2;  // alpha*v + 2*l1
    rel(1, 0) = gamma;
    rel(1, 3) = 2;  // gamma*v + 2*mu
    rel(2, 1) = 2;
    rel(2, 2) = -2;  // 2*(l1 - l2)
    return group_from_presentation(4, rel);
}

}  // namespace onesided
