#pragma once

#include "onesided/morse.hpp"

namespace onesided {

struct BottomCap {
    int a = 0, b = 0;        // matched strand positions, a < b
    std::string decoration;  // handle-wrap word; empty under the conservative scheme

    bool operator==(const BottomCap&) const = default;
};

struct TopCap {
    int a = 0, b = 0;
    int band = 1;  // cross-cap region of N(U) threaded by the capping curve

    bool operator==(const TopCap&) const = default;
};

// Normal form bottom | braid | top: all births first, a strand-count
// preserving braid word, then all deaths.  Both matchings are perfect
// matchings of {1..n}.
struct PlatPresentation {
    int surface_genus = 0;
    int n = 0;
    std::vector<BottomCap> bottom;
    std::vector<Event> braid;  // Sigma/Handle only
    std::vector<TopCap> top;
    bool band_heuristic = false;  // true when some band index came from handle history

    bool operator==(const PlatPresentation&) const = default;
};

// Link components of the plat: cycles of the composite of the bottom
// matching, the braid permutation, and the top matching.
int plat_components(const PlatPresentation& p);

class rewrite_budget_error : public std::runtime_error {
public:
    explicit rewrite_budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Default rewrite budget: 50 * (event count)^2 rule applications.
long default_rewrite_budget(std::size_t event_count);

// Rewrites a closed word into plat form.  Births bubble to the front and
// deaths to the end (deaths via word reversal through the same rule table);
// crossings interleaved with a migrating pair are resolved by three-crossing
// detours, kinks directly on a migrating pair are absorbed, and handle
// letters are never absorbed, they stay in the braid verbatim.  Every rule
// application preserves the trace (asserted in builds with assertions).
// Open words are rejected with std::invalid_argument; exceeding the budget
// raises rewrite_budget_error (a diagnostic that should not fire in practice).
// budget < 0 selects the default.
PlatPresentation normalize(const MorseWord& word, long budget = -1);

// A word realizing the presentation (decorations and band indices are not
// representable in the event alphabet and are dropped).
MorseWord word_from_presentation(const PlatPresentation& p);

}  // namespace onesided
