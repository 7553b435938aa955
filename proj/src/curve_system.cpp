#include "onesided/curve_system.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace onesided {

int node_id(int label, bool top, int k) { return (top ? 2 * k : 0) + label - 1; }
int node_label(int id, int k) { return id % (2 * k) + 1; }
bool node_is_top(int id, int k) { return id >= 2 * k; }

std::string node_name(int id, int k) {
    return std::to_string(node_label(id, k)) + (node_is_top(id, k) ? "t" : "b");
}

namespace {

int reduced_q(int q, int k) {
    int n = 2 * k;
    int qr = ((q % n) + n) % n;
    if (std::gcd(qr, n) != 1)
        throw std::invalid_argument("curve system: q must be coprime to 2k");
    return qr;
}

// In-place cycle count for a partner table; helix joins bottom a to top a+q.
int count_cycles(const std::vector<int>& partner, int k, int qr, std::vector<int>& stamp,
                 int generation) {
    int n = 2 * k;
    int cycles = 0;
    for (int start = 0; start < 2 * n; ++start) {
        if (stamp[start] == generation) continue;
        ++cycles;
        int cur = start;
        bool via_chord = true;
        do {
            stamp[cur] = generation;
            int label = cur % n + 1;
            if (via_chord) {
                cur = (cur < n ? 0 : n) + partner[label] - 1;
            } else if (cur < n) {
                cur = n + (label - 1 + qr) % n;  // bottom -> top
            } else {
                cur = ((label - 1 - qr) % n + n) % n;  // top -> bottom
            }
            via_chord = !via_chord;
        } while (cur != start);
    }
    return cycles;
}

}  // namespace

CurveSystem build_curve_system(const TauInvolution& tau, int q) {
    CurveSystem cs;
    cs.k = tau.k;
    cs.q = reduced_q(q, tau.k);
    int n = 2 * tau.k;
    for (auto [a, b] : tau.pairs) {
        cs.chord_edges.emplace_back(node_id(a, false, tau.k), node_id(b, false, tau.k));
        cs.chord_edges.emplace_back(node_id(a, true, tau.k), node_id(b, true, tau.k));
    }
    for (int a = 1; a <= n; ++a) {
        int b = (a - 1 + cs.q) % n + 1;
        cs.helix_edges.emplace_back(node_id(a, false, tau.k), node_id(b, true, tau.k));
    }
    return cs;
}

std::vector<int> CycleDecomposition::lengths() const {
    std::vector<int> out;
    out.reserve(cycles.size());
    for (const auto& c : cycles) out.push_back(static_cast<int>(c.size()));
    return out;
}

CycleDecomposition cycle_decomposition(const TauInvolution& tau, int q) {
    int k = tau.k;
    int qr = reduced_q(q, k);
    int n = 2 * k;
    std::vector<int> partner = tau.partner_table();

    CycleDecomposition dec;
    dec.k = k;
    dec.q = qr;
    std::vector<char> visited(2 * n, 0);
    for (int start = 0; start < 2 * n; ++start) {
        if (visited[start]) continue;
        std::vector<int> cycle;
        int cur = start;
        bool via_chord = true;
        do {
            visited[cur] = 1;
            cycle.push_back(cur);
            int label = cur % n + 1;
            if (via_chord) {
                cur = (cur < n ? 0 : n) + partner[label] - 1;
            } else if (cur < n) {
                cur = n + (label - 1 + qr) % n;
            } else {
                cur = ((label - 1 - qr) % n + n) % n;
            }
            via_chord = !via_chord;
        } while (cur != start);
        dec.cycles.push_back(std::move(cycle));
    }
    return dec;
}

TauSurface surface_invariants(const TauInvolution& tau, int q) {
    CycleDecomposition dec = cycle_decomposition(tau, q);
    TauSurface s;
    s.cycles = dec.count();
    s.genus = tau.k + 1 - s.cycles;
    s.euler = s.cycles - tau.k;
    // The spanned surface is non-orientable, so its genus is at least 1.
    assert(s.genus >= 1);
    return s;
}

int genus_of_tau(const TauInvolution& tau, int q) { return surface_invariants(tau, q).genus; }

MaxCyclesResult max_cycles(int k, int q, int max_k) {
    int qr = reduced_q(q, k);
    MaxCyclesResult result;
    std::vector<int> stamp(4 * k, -1);
    int generation = 0;
    for_each_tau(
        k,
        [&](const std::vector<int>& partner) {
            int c = count_cycles(partner, k, qr, stamp, generation++);
            if (c > result.c_max) {
                result.c_max = c;
                result.witness = tau_from_partner(partner, k);
            }
        },
        max_k);
    return result;
}

}  // namespace onesided
