#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace onesided {

// A fixed-point-free non-crossing involution of Z_{2k}: a perfect matching
// of the points 1..2k on a circle (point h at angle 2*pi*h/2k) whose chords
// are pairwise disjoint in the disk.
struct TauInvolution {
    int k = 0;
    std::vector<std::pair<int, int>> pairs;  // k pairs (a,b), a < b, sorted by a

    // partner[a] = tau(a) for a in 1..2k; index 0 unused.
    std::vector<int> partner_table() const;

    bool operator==(const TauInvolution&) const = default;
};

enum class TauError { FixedPoint, NotMatching, Crossing };

class invalid_tau : public std::invalid_argument {
public:
    invalid_tau(TauError kind, int a, int b, const std::string& what)
        : std::invalid_argument(what), kind_(kind), a_(a), b_(b) {}
    TauError kind() const { return kind_; }
    int a() const { return a_; }
    int b() const { return b_; }

private:
    TauError kind_;
    int a_, b_;
};

// Checks that `pairs` describes a fixed-point-free non-crossing perfect
// matching of {1..2k} and returns it in canonical order.  Throws invalid_tau
// naming the violated invariant: FixedPoint(a), NotMatching, or Crossing(a,b)
// where a, b are the smaller endpoints of the two offending chords.
TauInvolution validate_tau(std::vector<std::pair<int, int>> pairs, int k);

// Enumeration is Catalan(k) diagrams; beyond this bound the search refuses
// to start instead of grinding forever.
inline constexpr int kDefaultEnumMaxK = 16;

class enumeration_capacity_error : public std::length_error {
public:
    explicit enumeration_capacity_error(const std::string& what) : std::length_error(what) {}
};

// Calls fn once for each non-crossing fixed-point-free involution of Z_{2k},
// in lexicographic order of the sorted pair list; `partner` is the table
// view (partner[a] = tau(a), 1-based).
void for_each_tau(int k, const std::function<void(const std::vector<int>&)>& fn,
                  int max_k = kDefaultEnumMaxK);

// Materialized enumeration, same order.
std::vector<TauInvolution> enumerate_taus(int k, int max_k = kDefaultEnumMaxK);

TauInvolution tau_from_partner(const std::vector<int>& partner, int k);

// The explicit minimal-genus families: the adjacent pairing (2i-1, 2i) used
// for L(2k,1), and the long-chord pattern used for L(4a+4, 2a+1), which
// pairs 1 with 2a+2 and everything else with a neighbour.
TauInvolution adjacent_pair_tau(int k);
TauInvolution long_chord_tau(int a);

}  // namespace onesided
