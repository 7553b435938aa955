#include <doctest.h>

#include <algorithm>
#include <random>

#include "onesided/abelian.hpp"

using namespace onesided;

namespace {

std::vector<Int> torsion(std::initializer_list<int> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

}  // namespace

TEST_SUITE("abelian") {

TEST_CASE("presentations") {
    CHECK(group_from_presentation(1, IntMatrix(0, 0)) == AbelianGroup{1, {}});

    // relations 2(l1 - l2) = 0 and 2 mu = 0 on three generators
    IntMatrix rel(2, 3, {2, -2, 0, 0, 0, 2});
    CHECK(group_from_presentation(3, rel) == AbelianGroup{1, torsion({2, 2})});

    IntMatrix cyclic(1, 1, {6});
    CHECK(group_from_presentation(1, cyclic) == AbelianGroup{0, torsion({6})});

    CHECK_THROWS_AS(group_from_presentation(2, IntMatrix(1, 3)), std::invalid_argument);
}

TEST_CASE("invariant factors of 1 do not show up as torsion") {
    IntMatrix rel(2, 2, {1, 0, 0, 4});
    CHECK(group_from_presentation(2, rel) == AbelianGroup{0, torsion({4})});
}

TEST_CASE("presentation is invariant under row operations") {
    std::mt19937 rng(417);
    std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9), coin(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        int gens = dim(rng), rels = dim(rng);
        IntMatrix rel(rels, gens);
        for (int i = 0; i < rels; ++i)
            for (int j = 0; j < gens; ++j) rel(i, j) = entry(rng);
        AbelianGroup expect = group_from_presentation(gens, rel);

        IntMatrix shuffled = rel;
        std::vector<int> order(rels);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (int i = 0; i < rels; ++i)
            for (int j = 0; j < gens; ++j) shuffled(i, j) = rel(order[i], j);
        for (int i = 0; i < rels; ++i)
            if (coin(rng)) shuffled.negate_row(i);
        if (rels >= 2) {
            std::uniform_int_distribution<int> pick(0, rels - 1);
            int a = pick(rng), b = pick(rng);
            if (a != b) shuffled.add_row_multiple(a, b, 1);
        }
        CHECK(group_from_presentation(gens, shuffled) == expect);
    }
}

TEST_CASE("primary decomposition for display") {
    CHECK(primary_decomposition(torsion({2, 2})) == torsion({2, 2}));
    CHECK(primary_decomposition(torsion({6})) == torsion({2, 3}));
    CHECK(primary_decomposition(torsion({4, 12})) == torsion({3, 4, 4}));
    CHECK(primary_decomposition(torsion({2, 2, 156})) == torsion({2, 2, 3, 4, 13}));
    CHECK(primary_decomposition({}).empty());
}

TEST_CASE("group rendering") {
    CHECK(AbelianGroup{0, {}}.to_string() == "0");
    CHECK(AbelianGroup{2, {}}.to_string() == "Z + Z");
    CHECK(AbelianGroup{1, torsion({2, 2})}.to_string() == "Z + Z/2 + Z/2");
}

TEST_CASE("klein gluing, worked matrix") {
    GluingMatrix g{0, 1, 1, 0};
    REQUIRE(g.det() == -1);
    AbelianGroup h1 = h1_from_klein_gluing(g);
    CHECK(h1.rank == 1);
    CHECK(h1.torsion == torsion({2, 2}));
    // The torsion subgroup contains Z/2 + Z/2, so the glued manifold is not a
    // lens space and not a trivial surface bundle.
    REQUIRE(h1.torsion.size() >= 2);
    CHECK(h1.torsion[0] % 2 == 0);
    CHECK(h1.torsion[1] % 2 == 0);
}

TEST_CASE("klein gluing, diagonal matrix") {
    // Relations reduce by hand to 2(l1 - l2) = 0 and 2 mu = 0 after
    // eliminating v, the same group as the worked matrix.
    AbelianGroup h1 = h1_from_klein_gluing(GluingMatrix{1, 0, 0, -1});
    CHECK(h1 == (AbelianGroup{1, torsion({2, 2})}));

    IntMatrix rel(2, 3, {2, -2, 0, 0, 0, 2});
    CHECK(h1 == group_from_presentation(3, rel));
}

TEST_CASE("klein gluing rejects orientation-preserving matrices") {
    CHECK_THROWS_AS(h1_from_klein_gluing(GluingMatrix{1, 0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(h1_from_klein_gluing(GluingMatrix{2, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("torsion exponent divides 4 over all small gluings") {
    for (int pl = -3; pl <= 3; ++pl)
        for (int ql = -3; ql <= 3; ++ql)
            for (int pm = -3; pm <= 3; ++pm)
                for (int qm = -3; qm <= 3; ++qm) {
                    GluingMatrix g{pl, ql, pm, qm};
                    if (g.det() != -1) continue;
                    AbelianGroup h1 = h1_from_klein_gluing(g);
                    CHECK(h1.rank == 1);
                    for (const Int& d : h1.torsion) CHECK(4 % d == 0);
                }
}

}  // TEST_SUITE
