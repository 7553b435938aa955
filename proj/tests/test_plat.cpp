#include <doctest.h>

#include <random>

#include "onesided/plat.hpp"
#include "word_gen.hpp"

using namespace onesided;

namespace {

using E = Event;

PlatPresentation make_plat(int genus, int n, std::vector<BottomCap> bottom,
                           std::vector<Event> braid, std::vector<TopCap> top) {
    PlatPresentation p;
    p.surface_genus = genus;
    p.n = n;
    p.bottom = std::move(bottom);
    p.braid = std::move(braid);
    p.top = std::move(top);
    return p;
}

bool plat_shaped(const PlatPresentation& p) {
    for (const Event& e : p.braid)
        if (e.kind == EventKind::Cup || e.kind == EventKind::Cap) return false;
    return static_cast<int>(p.bottom.size()) * 2 == p.n &&
           static_cast<int>(p.top.size()) * 2 == p.n;
}

}  // namespace

TEST_SUITE("plat") {

TEST_CASE("plat_components worked cases") {
    CHECK(plat_components(make_plat(0, 2, {{1, 2, ""}}, {}, {{1, 2, 1}})) == 1);
    CHECK(plat_components(make_plat(0, 2, {{1, 2, ""}}, {E::sigma(1, +1)}, {{1, 2, 1}})) == 1);
    CHECK(plat_components(make_plat(0, 4, {{1, 2, ""}, {3, 4, ""}}, {},
                                    {{2, 3, 1}, {1, 4, 1}})) == 1);
}

TEST_CASE("plat_components rejects malformed input") {
    CHECK_THROWS_AS(plat_components(make_plat(0, 2, {{1, 1, ""}}, {}, {{1, 2, 1}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(plat_components(make_plat(0, 2, {{1, 2, ""}}, {E::cup(1)}, {{1, 2, 1}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(plat_components(make_plat(0, 2, {{1, 2, ""}}, {E::sigma(2, 1)}, {{1, 2, 1}})),
                    std::invalid_argument);
}

TEST_CASE("normalize of the trivial plat word") {
    PlatPresentation p = normalize(validate_word({E::cap(1), E::cup(1)}, 0, 0));
    CHECK(p.n == 2);
    CHECK(p.bottom == std::vector<BottomCap>{{1, 2, ""}});
    CHECK(p.braid.empty());
    CHECK(p.top == std::vector<TopCap>{{1, 2, 1}});
    CHECK_FALSE(p.band_heuristic);
    CHECK(plat_components(p) == 1);
}

TEST_CASE("normalize keeps a kinked unknot intact") {
    PlatPresentation p = normalize(validate_word({E::cap(1), E::sigma(1, -1), E::cup(1)}, 0, 0));
    CHECK(p.n == 2);
    // The word is already in plat shape, so nothing is absorbed.
    CHECK(p.braid == std::vector<Event>{E::sigma(1, -1)});
    CHECK(plat_components(p) == 1);
}

TEST_CASE("golden rewrite: interleaved births") {
    // cap, kink, a second birth between crossing strands, then closure.
    MorseWord w = validate_word(
        {E::cap(1), E::sigma(1, +1), E::cap(2), E::sigma(2, +1), E::cup(2), E::cup(1)}, 0, 0);
    REQUIRE(trace(w).component_count == 2);

    PlatPresentation p = normalize(w);
    CHECK(p.n == 4);
    CHECK(p.bottom == std::vector<BottomCap>{{1, 2, ""}, {3, 4, ""}});
    // The kink on the migrating birth is absorbed; the detour leaves three
    // crossings.
    CHECK(p.braid ==
          std::vector<Event>{E::sigma(3, +1), E::sigma(2, +1), E::sigma(1, +1)});
    CHECK(p.top == std::vector<TopCap>{{1, 4, 1}, {2, 3, 1}});
    CHECK(plat_components(p) == 2);
}

TEST_CASE("disjoint supports commute through the rewriter") {
    // The same link presented with a death before or after a far-away handle
    // letter normalizes identically.
    MorseWord wa = validate_word({E::cap(1), E::cap(1), E::cap(1), E::cup(1),
                                  E::handle('a', 1, 3), E::sigma(1, +1), E::cup(1), E::cup(1)},
                                 1, 0);
    MorseWord wb = validate_word({E::cap(1), E::cap(1), E::cap(1), E::handle('a', 1, 5),
                                  E::cup(1), E::sigma(1, +1), E::cup(1), E::cup(1)},
                                 1, 0);
    REQUIRE(trace(wa).component_count == trace(wb).component_count);
    PlatPresentation pa = normalize(wa);
    PlatPresentation pb = normalize(wb);
    CHECK(pa == pb);
    CHECK(plat_components(pa) == trace(wa).component_count);
}

TEST_CASE("sequential links add components") {
    std::mt19937 rng(90210);
    for (int trial = 0; trial < 100; ++trial) {
        MorseWord u = testgen::random_closed_word(rng, 2, 10);
        MorseWord v = testgen::random_closed_word(rng, 2, 10);
        std::vector<Event> joined = u.events;
        joined.insert(joined.end(), v.events.begin(), v.events.end());
        MorseWord uv = validate_word(joined, 2, 0);
        int expect = trace(u).component_count + trace(v).component_count;
        CHECK(trace(uv).component_count == expect);
        CHECK(plat_components(normalize(uv)) == expect);
    }
}

TEST_CASE("handle letters decorate the band heuristically") {
    PlatPresentation p =
        normalize(validate_word({E::cap(1), E::handle('a', 2, 1), E::handle('b', 1, 2),
                                 E::cup(1)}, 2, 0));
    REQUIRE(p.top.size() == 1);
    CHECK(p.top[0].band == 1);
    CHECK(p.band_heuristic);

    PlatPresentation q =
        normalize(validate_word({E::cap(1), E::handle('a', 3, 1), E::cup(1)}, 3, 0));
    CHECK(q.top[0].band == 3);
    CHECK(q.band_heuristic);

    PlatPresentation r = normalize(validate_word({E::cap(1), E::cup(1)}, 3, 0));
    CHECK(r.top[0].band == 1);
    CHECK_FALSE(r.band_heuristic);
}

TEST_CASE("normalize rejects open words") {
    CHECK_THROWS_AS(normalize(validate_word({E::cap(1)}, 0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(normalize(validate_word({}, 0, 2)), std::invalid_argument);
}

TEST_CASE("rewrite budget") {
    MorseWord busy = validate_word(
        {E::cap(1), E::sigma(1, +1), E::cap(2), E::sigma(2, +1), E::cup(2), E::cup(1)}, 0, 0);
    CHECK_THROWS_AS(normalize(busy, 0), rewrite_budget_error);
    CHECK_NOTHROW(normalize(busy));  // the default budget is plenty

    // A word already in plat shape needs no budget at all.
    CHECK_NOTHROW(normalize(validate_word({E::cap(1), E::cup(1)}, 0, 0), 0));
    CHECK(default_rewrite_budget(6) == 1800);
}

TEST_CASE("word_from_presentation round trip and crossing rejection") {
    MorseWord nested = validate_word({E::cap(1), E::cap(2), E::cup(2), E::cup(1)}, 0, 0);
    PlatPresentation p = normalize(nested);
    MorseWord rebuilt = word_from_presentation(p);
    CHECK(normalize(rebuilt) == p);

    PlatPresentation crossing =
        make_plat(0, 4, {{1, 3, ""}, {2, 4, ""}}, {}, {{1, 2, 1}, {3, 4, 1}});
    CHECK_THROWS_AS(word_from_presentation(crossing), std::invalid_argument);
}

TEST_CASE("property: conservation, shape, idempotence") {
    std::mt19937 rng(20250810);
    for (int trial = 0; trial < 200; ++trial) {
        int genus = trial % 4;
        MorseWord w = testgen::random_closed_word(rng, genus, 24);
        TraceResult before = trace(w);
        PlatPresentation p = normalize(w);

        CHECK(plat_shaped(p));
        CHECK(plat_components(p) == before.component_count);
        for (const TopCap& t : p.top) {
            CHECK(t.band >= 1);
            CHECK(t.band <= genus + 1);
        }

        // Normalizing a word already in plat shape changes nothing.
        PlatPresentation again = normalize(word_from_presentation(p));
        CHECK(again == p);
    }
}

}  // TEST_SUITE
