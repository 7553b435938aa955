#include <doctest.h>

#include <algorithm>

#include "onesided/genus.hpp"
#include "onesided/splittings.hpp"

using namespace onesided;

TEST_SUITE("splittings") {

TEST_CASE("lens family worked descriptors") {
    SplittingDescriptor d = lens_splitting(8, 1);
    CHECK(d.u_genus == 4);
    CHECK(d.handlebody_genus == 3);
    CHECK(d.braid_surface_genus == 3);
    REQUIRE(d.witness_tau.has_value());
    CHECK(*d.witness_tau == adjacent_pair_tau(4));

    SplittingDescriptor e = lens_splitting(8, 3);
    CHECK(e.u_genus == 2);
    CHECK(e.handlebody_genus == 1);
    REQUIRE(e.witness_tau.has_value());
    CHECK(*e.witness_tau == long_chord_tau(1));

    SplittingDescriptor f = lens_splitting(6, 1);
    CHECK(f.u_genus == 3);
    CHECK(f.handlebody_genus == 2);

    CHECK(lens_splitting(2, 1).handlebody_genus == 0);  // RP^3: ball complement
}

TEST_CASE("searched witness spans the claimed surface") {
    for (int p = 2; p <= 20; p += 2)
        for (int q = 1; q < p; ++q) {
            if (boost::multiprecision::gcd(Int(p), Int(q)) != 1) continue;
            SplittingDescriptor d = lens_splitting(p, q);
            CHECK(d.handlebody_genus == d.u_genus - 1);
            CHECK(d.braid_surface_genus == d.u_genus - 1);
            REQUIRE(d.witness_tau.has_value());
            CHECK(genus_of_tau(*d.witness_tau, q) == static_cast<int>(d.u_genus));
        }
}

TEST_CASE("long-chord witness cycle structure for the 4a+4 family") {
    for (int a = 1; a <= 5; ++a) {
        SplittingDescriptor d = lens_splitting(4 * a + 4, 2 * a + 1);
        REQUIRE(d.witness_tau.has_value());
        CycleDecomposition dec = cycle_decomposition(*d.witness_tau, 2 * a + 1);
        std::vector<int> lens = dec.lengths();
        std::sort(lens.begin(), lens.end());
        std::vector<int> expect(2 * a, 4);
        expect.push_back(8);
        CHECK(lens == expect);
    }
}

TEST_CASE("beyond the enumeration bound the descriptor carries genus but no search witness") {
    // k = 17 with q neither 1 nor the long-chord pattern
    SplittingDescriptor d = lens_splitting(34, 9);
    CHECK(d.u_genus == minimal_genus_formula(34, 9));
    CHECK(d.handlebody_genus == d.u_genus - 1);
    CHECK_FALSE(d.witness_tau.has_value());

    // explicit families still produce witnesses out there
    SplittingDescriptor e = lens_splitting(40, 1);
    REQUIRE(e.witness_tau.has_value());
    CHECK(e.witness_tau->k == 20);
    SplittingDescriptor f = lens_splitting(44, 21);  // a = 10
    REQUIRE(f.witness_tau.has_value());
    CHECK(*f.witness_tau == long_chord_tau(10));
}

TEST_CASE("odd p is rejected") {
    CHECK_THROWS_AS(lens_splitting(7, 2), std::domain_error);
    CHECK_THROWS_AS(lens_splitting(3, 1), std::domain_error);
}

TEST_CASE("trivial bundle splittings") {
    CHECK(trivial_bundle_splitting(5).u_genus == 14);
    CHECK(trivial_bundle_splitting(0).u_genus == 4);
    CHECK(trivial_bundle_splitting(1).u_genus == 6);
    for (int g = 0; g <= 10; ++g) {
        SplittingDescriptor d = trivial_bundle_splitting(g);
        CHECK(d.u_genus == 2 * g + 4);
        CHECK(d.handlebody_genus == 2 * g + 3);
        CHECK(d.braid_surface_genus == 2 * g + 3);
        CHECK_FALSE(d.witness_tau.has_value());
        CHECK(d.manifold.kind == ManifoldKind::TrivialBundle);
    }
    CHECK_THROWS_AS(trivial_bundle_splitting(-1), std::invalid_argument);
}

TEST_CASE("splittability predicate") {
    CHECK_FALSE(is_splittable_lens(3, 1));
    CHECK(is_splittable_lens(2, 1));
    CHECK(is_splittable_lens(12, 5));
    CHECK_THROWS_AS(is_splittable_lens(4, 2), std::invalid_argument);
}

TEST_CASE("manifold names") {
    CHECK(lens_splitting(8, 3).manifold.to_string() == "L(8,3)");
    CHECK(trivial_bundle_splitting(5).manifold.to_string() == "Sigma_5 x S^1");
}

}  // TEST_SUITE
