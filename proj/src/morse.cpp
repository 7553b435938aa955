#include "onesided/morse.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace onesided {

Event Event::cup(int i) { return Event{EventKind::Cup, i, +1, 'a', 1}; }
Event Event::cap(int i) { return Event{EventKind::Cap, i, +1, 'a', 1}; }

Event Event::sigma(int i, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sigma sign must be +1 or -1");
    return Event{EventKind::Sigma, i, sign, 'a', 1};
}

Event Event::handle(char kind, int r, int i) {
    if (kind != 'a' && kind != 'b') throw std::invalid_argument("handle kind must be 'a' or 'b'");
    return Event{EventKind::Handle, i, +1, kind, r};
}

std::string event_to_string(const Event& e) {
    switch (e.kind) {
        case EventKind::Cup:
            return "cup " + std::to_string(e.position);
        case EventKind::Cap:
            return "cap " + std::to_string(e.position);
        case EventKind::Sigma:
            return "sigma " + std::to_string(e.position) + (e.sign > 0 ? " +" : " -");
        case EventKind::Handle:
            return std::string("handle ") + e.handle_kind + " " + std::to_string(e.handle_index) +
                   " " + std::to_string(e.position);
    }
    return {};
}

MorseWord validate_word(std::vector<Event> events, int surface_genus, int start_strands) {
    if (surface_genus < 0) throw std::invalid_argument("validate_word: negative genus");
    if (start_strands < 0 || start_strands % 2 != 0)
        throw std::invalid_argument("validate_word: start_strands must be even and non-negative");

    int width = start_strands;
    for (std::size_t step = 0; step < events.size(); ++step) {
        const Event& e = events[step];
        switch (e.kind) {
            case EventKind::Cup:
                if (width < 2)
                    throw invalid_word(WordError::NegativeStrands, static_cast<int>(step),
                                       "cup at step " + std::to_string(step) +
                                           " with fewer than two strands");
                if (e.position < 1 || e.position + 1 > width)
                    throw invalid_word(WordError::IndexOutOfRange, static_cast<int>(step),
                                       "cup position out of range at step " + std::to_string(step));
                width -= 2;
                break;
            case EventKind::Cap:
                if (e.position < 1 || e.position > width + 1)
                    throw invalid_word(WordError::IndexOutOfRange, static_cast<int>(step),
                                       "cap position out of range at step " + std::to_string(step));
                width += 2;
                break;
            case EventKind::Sigma:
                if (e.position < 1 || e.position + 1 > width)
                    throw invalid_word(WordError::IndexOutOfRange, static_cast<int>(step),
                                       "sigma position out of range at step " + std::to_string(step));
                break;
            case EventKind::Handle:
                if (e.position < 1 || e.position > width)
                    throw invalid_word(WordError::IndexOutOfRange, static_cast<int>(step),
                                       "handle position out of range at step " + std::to_string(step));
                if (e.handle_index < 1 || e.handle_index > surface_genus)
                    throw invalid_word(WordError::GenusExceeded, static_cast<int>(step),
                                       "handle generator index exceeds surface genus at step " +
                                           std::to_string(step));
                break;
        }
    }

    MorseWord w;
    w.surface_genus = surface_genus;
    w.start_strands = start_strands;
    w.events = std::move(events);
    w.end_strands = width;
    return w;
}

namespace {

struct UnionFind {
    std::vector<int> parent;

    int make() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // Returns true when x and y were already connected (a closed curve).
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return true;
        parent[x] = y;
        return false;
    }
};

}  // namespace

TraceResult trace(const MorseWord& word) {
    UnionFind uf;
    std::vector<int> strand;  // segment id per live strand position
    strand.reserve(16);
    for (int i = 0; i < word.start_strands; ++i) strand.push_back(uf.make());
    std::vector<int> bottom_ids = strand;

    int closed = 0;
    for (const Event& e : word.events) {
        switch (e.kind) {
            case EventKind::Cap: {
                // Both new strand ends belong to the same arc through the birth.
                int id = uf.make();
                strand.insert(strand.begin() + (e.position - 1), 2, id);
                break;
            }
            case EventKind::Cup: {
                int a = strand[e.position - 1];
                int b = strand[e.position];
                if (uf.unite(a, b)) ++closed;
                strand.erase(strand.begin() + (e.position - 1), strand.begin() + (e.position + 1));
                break;
            }
            case EventKind::Sigma:
                std::swap(strand[e.position - 1], strand[e.position]);
                break;
            case EventKind::Handle:
                break;  // does not change connectivity
        }
    }

    TraceResult result;
    // Boundary endpoints pair up by segment class; each class meets the
    // boundary exactly twice.
    std::vector<std::pair<int, int>> by_root;  // (root, endpoint index)
    for (int i = 0; i < word.start_strands; ++i) by_root.emplace_back(uf.find(bottom_ids[i]), i + 1);
    for (std::size_t i = 0; i < strand.size(); ++i)
        by_root.emplace_back(uf.find(strand[i]), word.start_strands + static_cast<int>(i) + 1);
    std::sort(by_root.begin(), by_root.end());
    for (std::size_t i = 0; i + 1 < by_root.size(); i += 2) {
        assert(by_root[i].first == by_root[i + 1].first);
        result.pairing.emplace_back(by_root[i].second, by_root[i + 1].second);
    }
    std::sort(result.pairing.begin(), result.pairing.end());
    result.component_count = closed + static_cast<int>(result.pairing.size());
    return result;
}

}  // namespace onesided
