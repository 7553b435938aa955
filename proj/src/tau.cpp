#include "onesided/tau.hpp"

#include <algorithm>

namespace onesided {

std::vector<int> TauInvolution::partner_table() const {
    std::vector<int> partner(2 * k + 1, 0);
    for (auto [a, b] : pairs) {
        partner[a] = b;
        partner[b] = a;
    }
    return partner;
}

TauInvolution validate_tau(std::vector<std::pair<int, int>> pairs, int k) {
    if (k < 1) throw std::invalid_argument("validate_tau: k must be >= 1");

    for (auto& [a, b] : pairs) {
        if (a == b)
            throw invalid_tau(TauError::FixedPoint, a, 0,
                              "tau has a fixed point at " + std::to_string(a));
        if (a > b) std::swap(a, b);
    }

    std::vector<int> seen(2 * k + 1, 0);
    if (static_cast<int>(pairs.size()) != k)
        throw invalid_tau(TauError::NotMatching, 0, 0,
                          "expected " + std::to_string(k) + " pairs, got " +
                              std::to_string(pairs.size()));
    for (auto [a, b] : pairs) {
        if (a < 1 || b > 2 * k)
            throw invalid_tau(TauError::NotMatching, 0, 0,
                              "labels must lie in 1.." + std::to_string(2 * k));
        if (++seen[a] > 1 || ++seen[b] > 1)
            throw invalid_tau(TauError::NotMatching, 0, 0,
                              "a label is matched more than once");
    }

    std::sort(pairs.begin(), pairs.end());
    // Chords (a1,b1), (a2,b2) with a1 < a2 cross exactly when a2 < b1 < b2.
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            if (pairs[j].first < pairs[i].second && pairs[i].second < pairs[j].second)
                throw invalid_tau(TauError::Crossing, pairs[i].first, pairs[j].first,
                                  "chords " + std::to_string(pairs[i].first) + "-" +
                                      std::to_string(pairs[i].second) + " and " +
                                      std::to_string(pairs[j].first) + "-" +
                                      std::to_string(pairs[j].second) + " cross");

    TauInvolution tau;
    tau.k = k;
    tau.pairs = std::move(pairs);
    return tau;
}

namespace {

// Matches the smallest unmatched point to each unmatched partner at odd
// distance, recursing; visiting partners in increasing order yields the
// lexicographic order on sorted pair lists.
void enumerate_rec(int two_k, int hint, std::vector<int>& partner,
                   const std::function<void(const std::vector<int>&)>& fn) {
    int a = hint;
    while (a <= two_k && partner[a] != 0) ++a;
    if (a > two_k) {
        fn(partner);
        return;
    }
    for (int b = a + 1; b <= two_k && partner[b] == 0; b += 2) {
        partner[a] = b;
        partner[b] = a;
        enumerate_rec(two_k, a + 1, partner, fn);
        partner[a] = 0;
        partner[b] = 0;
    }
}

void check_enum_bounds(int k, int max_k) {
    if (k < 1) throw std::invalid_argument("tau enumeration: k must be >= 1");
    if (k > max_k)
        throw enumeration_capacity_error("tau enumeration: k = " + std::to_string(k) +
                                         " exceeds the enumeration bound " +
                                         std::to_string(max_k));
}

}  // namespace

void for_each_tau(int k, const std::function<void(const std::vector<int>&)>& fn, int max_k) {
    check_enum_bounds(k, max_k);
    std::vector<int> partner(2 * k + 1, 0);
    enumerate_rec(2 * k, 1, partner, fn);
}

std::vector<TauInvolution> enumerate_taus(int k, int max_k) {
    std::vector<TauInvolution> out;
    for_each_tau(
        k, [&](const std::vector<int>& partner) { out.push_back(tau_from_partner(partner, k)); },
        max_k);
    return out;
}

TauInvolution tau_from_partner(const std::vector<int>& partner, int k) {
    TauInvolution tau;
    tau.k = k;
    tau.pairs.reserve(k);
    for (int a = 1; a <= 2 * k; ++a)
        if (partner[a] > a) tau.pairs.emplace_back(a, partner[a]);
    return tau;
}

TauInvolution adjacent_pair_tau(int k) {
    if (k < 1) throw std::invalid_argument("adjacent_pair_tau: k must be >= 1");
    TauInvolution tau;
    tau.k = k;
    for (int i = 1; i <= k; ++i) tau.pairs.emplace_back(2 * i - 1, 2 * i);
    return tau;
}

TauInvolution long_chord_tau(int a) {
    if (a < 1) throw std::invalid_argument("long_chord_tau: a must be >= 1");
    TauInvolution tau;
    tau.k = 2 * a + 2;
    tau.pairs.emplace_back(1, 2 * a + 2);
    for (int i = 1; i <= a; ++i) tau.pairs.emplace_back(2 * i, 2 * i + 1);
    for (int j = a + 1; j <= 2 * a + 1; ++j) tau.pairs.emplace_back(2 * j + 1, 2 * j + 2);
    std::sort(tau.pairs.begin(), tau.pairs.end());
    return tau;
}

}  // namespace onesided
