#include "onesided/plat.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace onesided {

long default_rewrite_budget(std::size_t event_count) {
    return 50L * static_cast<long>(event_count) * static_cast<long>(event_count);
}

namespace {

// Reading a word upside down swaps births and deaths at the same positions
// and inverts crossings; handle traversals keep their strand.
void reverse_morse(std::vector<Event>& ev) {
    std::reverse(ev.begin(), ev.end());
    for (Event& e : ev) {
        switch (e.kind) {
            case EventKind::Cup:
                e.kind = EventKind::Cap;
                break;
            case EventKind::Cap:
                e.kind = EventKind::Cup;
                break;
            case EventKind::Sigma:
                e.sign = -e.sign;
                break;
            case EventKind::Handle:
                break;
        }
    }
}

#ifndef NDEBUG
int closed_component_count(const std::vector<Event>& ev, int genus) {
    return trace(validate_word(ev, genus, 0)).component_count;
}
#endif

struct Budget {
    long remaining = 0;

    void spend(const char* rule) {
        if (--remaining < 0)
            throw rewrite_budget_error(
                std::string("normalize: rewrite budget exhausted, possible non-termination (") +
                rule + ")");
    }
};

// Slides the cap at index c below its predecessor; returns the cap's new
// index.  Positions follow the exact relabeling each move induces.
std::size_t bubble_once(std::vector<Event>& ev, std::size_t c, Budget& budget) {
    const Event x = ev[c - 1];
    const int i = ev[c].position;
    switch (x.kind) {
        case EventKind::Sigma: {
            const int j = x.position;
            if (i <= j) {
                budget.spend("sigma-commute");
                ev[c - 1] = Event::cap(i);
                ev[c] = Event::sigma(j + 2, x.sign);
            } else if (i >= j + 2) {
                budget.spend("sigma-commute");
                ev[c - 1] = Event::cap(i);
                ev[c] = Event::sigma(j, x.sign);
            } else {
                // i == j+1: the birth sits between the crossing strands.
                // Birth first on the left, then walk the right strand around
                // the newborn pair.
                budget.spend("sigma-detour");
                ev[c - 1] = Event::cap(j);
                ev[c] = Event::sigma(j + 2, x.sign);
                ev.insert(ev.begin() + static_cast<long>(c) + 1,
                          {Event::sigma(j + 1, x.sign), Event::sigma(j, x.sign)});
            }
            break;
        }
        case EventKind::Handle: {
            budget.spend("handle-commute");
            const int h = x.position;
            ev[c - 1] = Event::cap(i);
            ev[c] = Event::handle(x.handle_kind, x.handle_index, h < i ? h : h + 2);
            break;
        }
        case EventKind::Cup: {
            budget.spend("cup-commute");
            const int j = x.position;
            if (i <= j - 1) {
                ev[c - 1] = Event::cap(i);
                ev[c] = Event::cup(j + 2);
            } else {
                ev[c - 1] = Event::cap(i + 2);
                ev[c] = Event::cup(j);
            }
            break;
        }
        case EventKind::Cap:
            assert(false && "cap bubbling reached another cap");
            break;
    }
    return c - 1;
}

// Migrates every cap into the leading cap prefix, leftmost first.  Caps
// already in the prefix are never touched; on plat-shaped words this is a
// no-op, so normalization is idempotent.
void migrate_caps(std::vector<Event>& ev, int genus, Budget& budget) {
#ifndef NDEBUG
    const int expect = closed_component_count(ev, genus);
#else
    (void)genus;
#endif
    for (;;) {
        std::size_t prefix = 0;
        while (prefix < ev.size() && ev[prefix].kind == EventKind::Cap) ++prefix;
        std::size_t c = prefix;
        while (c < ev.size() && ev[c].kind != EventKind::Cap) ++c;
        if (c == ev.size()) return;

        while (c > prefix) {
            // A crossing of the two newborn strands is a kink; absorb it.
            while (c + 1 < ev.size() && ev[c + 1].kind == EventKind::Sigma &&
                   ev[c + 1].position == ev[c].position) {
                budget.spend("kink-absorb");
                ev.erase(ev.begin() + static_cast<long>(c) + 1);
                assert(closed_component_count(ev, genus) == expect);
            }
            c = bubble_once(ev, c, budget);
            assert(closed_component_count(ev, genus) == expect);
        }
    }
}

PlatPresentation assemble(const std::vector<Event>& ev, int genus) {
    std::size_t cap_end = 0;
    while (cap_end < ev.size() && ev[cap_end].kind == EventKind::Cap) ++cap_end;
    std::size_t cup_begin = ev.size();
    while (cup_begin > cap_end && ev[cup_begin - 1].kind == EventKind::Cup) --cup_begin;
    assert(ev.size() - cup_begin == cap_end);

    PlatPresentation p;
    p.surface_genus = genus;
    p.n = static_cast<int>(2 * cap_end);

    // Bottom matching: final positions of each birth pair.
    std::vector<int> slots;
    for (std::size_t j = 0; j < cap_end; ++j)
        slots.insert(slots.begin() + (ev[j].position - 1), 2, static_cast<int>(j));
    std::vector<std::pair<int, int>> born(cap_end, {0, 0});
    for (std::size_t pos = 0; pos < slots.size(); ++pos) {
        auto& pr = born[slots[pos]];
        (pr.first == 0 ? pr.first : pr.second) = static_cast<int>(pos) + 1;
    }
    for (auto [a, b] : born) p.bottom.push_back(BottomCap{a, b, ""});
    std::sort(p.bottom.begin(), p.bottom.end(),
              [](const BottomCap& l, const BottomCap& r) { return l.a < r.a; });

    for (std::size_t j = cap_end; j < cup_begin; ++j) {
        assert(ev[j].kind == EventKind::Sigma || ev[j].kind == EventKind::Handle);
        p.braid.push_back(ev[j]);
    }

    // Top matching: the top-boundary positions each death joins.
    std::vector<int> alive(p.n);
    std::iota(alive.begin(), alive.end(), 1);
    for (std::size_t j = cup_begin; j < ev.size(); ++j) {
        const int i = ev[j].position;
        const int a = alive[i - 1], b = alive[i];
        p.top.push_back(TopCap{std::min(a, b), std::max(a, b), 1});
        alive.erase(alive.begin() + (i - 1), alive.begin() + (i + 1));
    }
    assert(alive.empty());
    std::sort(p.top.begin(), p.top.end(),
              [](const TopCap& l, const TopCap& r) { return l.a < r.a; });

    // Band bookkeeping (heuristic): a capping curve is filed under the lowest
    // handle generator its two strands traverse, default band 1.
    for (TopCap& t : p.top) {
        int s1 = t.a, s2 = t.b;
        int best = 0;
        for (auto it = p.braid.rbegin(); it != p.braid.rend(); ++it) {
            if (it->kind == EventKind::Sigma) {
                for (int* s : {&s1, &s2}) {
                    if (*s == it->position)
                        *s = it->position + 1;
                    else if (*s == it->position + 1)
                        *s = it->position;
                }
            } else if (it->position == s1 || it->position == s2) {
                if (best == 0 || it->handle_index < best) best = it->handle_index;
            }
        }
        if (best > 0) {
            t.band = best;
            p.band_heuristic = true;
        }
    }
    return p;
}

void check_matching(const std::vector<std::pair<int, int>>& pairs, int n, const char* side) {
    std::vector<int> seen(n + 1, 0);
    if (static_cast<int>(pairs.size()) * 2 != n)
        throw std::invalid_argument(std::string("plat: ") + side + " matching is not perfect");
    for (auto [a, b] : pairs) {
        if (a < 1 || b < 1 || a > n || b > n || a == b || ++seen[a] > 1 || ++seen[b] > 1)
            throw std::invalid_argument(std::string("plat: ") + side + " matching is not perfect");
    }
}

}  // namespace

int plat_components(const PlatPresentation& p) {
    if (p.n < 0 || p.n % 2 != 0) throw std::invalid_argument("plat: n must be even");
    std::vector<std::pair<int, int>> bottom, top;
    for (const auto& c : p.bottom) bottom.emplace_back(c.a, c.b);
    for (const auto& c : p.top) top.emplace_back(c.a, c.b);
    check_matching(bottom, p.n, "bottom");
    check_matching(top, p.n, "top");

    std::vector<int> at(p.n);
    std::iota(at.begin(), at.end(), 1);
    for (const Event& e : p.braid) {
        if (e.kind == EventKind::Cup || e.kind == EventKind::Cap)
            throw std::invalid_argument("plat: braid word may contain only sigma and handle events");
        if (e.position < 1 || e.position + (e.kind == EventKind::Sigma ? 1 : 0) > p.n)
            throw std::invalid_argument("plat: braid event position out of range");
        if (e.kind == EventKind::Sigma) std::swap(at[e.position - 1], at[e.position]);
    }

    // Degree-2 graph on bottom and top endpoints.
    std::vector<int> parent(2 * p.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };

    for (auto [a, b] : bottom) unite(a - 1, b - 1);
    for (auto [a, b] : top) unite(p.n + a - 1, p.n + b - 1);
    for (int pos = 1; pos <= p.n; ++pos) unite(at[pos - 1] - 1, p.n + pos - 1);

    int components = 0;
    for (int x = 0; x < 2 * p.n; ++x)
        if (find(x) == x) ++components;
    return components;
}

PlatPresentation normalize(const MorseWord& input, long budget_in) {
    MorseWord word = validate_word(input.events, input.surface_genus, input.start_strands);
    if (!word.closed())
        throw std::invalid_argument("normalize: requires a closed word (zero boundary strands)");

    Budget budget{budget_in >= 0 ? budget_in : default_rewrite_budget(word.events.size())};

    std::vector<Event> ev = word.events;
    migrate_caps(ev, word.surface_genus, budget);
    reverse_morse(ev);
    migrate_caps(ev, word.surface_genus, budget);
    reverse_morse(ev);

    PlatPresentation p = assemble(ev, word.surface_genus);
    assert(plat_components(p) == trace(word).component_count);
    return p;
}

MorseWord word_from_presentation(const PlatPresentation& p) {
    std::vector<Event> ev;

    auto bottom = p.bottom;
    std::sort(bottom.begin(), bottom.end(),
              [](const BottomCap& l, const BottomCap& r) { return l.a < r.a; });
    std::vector<int> present;  // strand labels already born, sorted
    for (const auto& c : bottom) {
        auto ita = std::lower_bound(present.begin(), present.end(), c.a);
        int idx = static_cast<int>(ita - present.begin());
        present.insert(ita, c.a);
        auto itb = std::lower_bound(present.begin(), present.end(), c.b);
        if (itb - present.begin() != idx + 1)
            throw std::invalid_argument("word_from_presentation: bottom matching crosses");
        present.insert(itb, c.b);
        ev.push_back(Event::cap(idx + 1));
    }

    ev.insert(ev.end(), p.braid.begin(), p.braid.end());

    auto top = p.top;
    std::sort(top.begin(), top.end(), [](const TopCap& l, const TopCap& r) { return l.a > r.a; });
    std::vector<int> alive(p.n);
    std::iota(alive.begin(), alive.end(), 1);
    for (const auto& c : top) {
        auto it = std::lower_bound(alive.begin(), alive.end(), c.a);
        int idx = static_cast<int>(it - alive.begin());
        if (it == alive.end() || *it != c.a || idx + 1 >= static_cast<int>(alive.size()) ||
            alive[idx + 1] != c.b)
            throw std::invalid_argument("word_from_presentation: top matching crosses");
        alive.erase(it, it + 2);
        ev.push_back(Event::cup(idx + 1));
    }

    return validate_word(std::move(ev), p.surface_genus, 0);
}

}  // namespace onesided
