#pragma once

#include <string>

#include "onesided/tau.hpp"

namespace onesided {

// Boundary nodes of D^2 x I: label a (1..2k) at the bottom disk has id a-1,
// at the top disk id 2k + a - 1.
int node_id(int label, bool top, int k);
int node_label(int id, int k);
bool node_is_top(int id, int k);
std::string node_name(int id, int k);  // "3b" / "3t"

// The degree-2 graph cut out on the cylinder boundary by the chord system:
// tau chords on both disks plus the helices (a, bottom) -- (a+q, top).
struct CurveSystem {
    int k = 0;
    int q = 0;
    std::vector<std::pair<int, int>> chord_edges;
    std::vector<std::pair<int, int>> helix_edges;
};

CurveSystem build_curve_system(const TauInvolution& tau, int q);

// Connected components of the curve system.  Each cycle starts at its
// smallest node, takes the chord edge first, and cycles are listed by
// starting node; this is the deterministic order golden files rely on.
struct CycleDecomposition {
    int k = 0;
    int q = 0;
    std::vector<std::vector<int>> cycles;  // node ids in traversal order

    int count() const { return static_cast<int>(cycles.size()); }
    std::vector<int> lengths() const;
};

// Requires gcd(q, 2k) = 1; q is reduced mod 2k.
CycleDecomposition cycle_decomposition(const TauInvolution& tau, int q);

// Invariants of the non-orientable surface spanned by tau in D^2 x S^1:
// genus = k + 1 - c and euler characteristic = c - k.
struct TauSurface {
    int cycles = 0;
    int genus = 0;
    int euler = 0;
};

TauSurface surface_invariants(const TauInvolution& tau, int q);
int genus_of_tau(const TauInvolution& tau, int q);

// Exhaustive maximum of c(tau) over all non-crossing fixed-point-free
// involutions of Z_{2k}; the witness is the lexicographically smallest
// maximizer.  k + 1 - c_max is the minimal embedded genus N(2k,q).
struct MaxCyclesResult {
    int c_max = 0;
    TauInvolution witness;
};

MaxCyclesResult max_cycles(int k, int q, int max_k = kDefaultEnumMaxK);

}  // namespace onesided
