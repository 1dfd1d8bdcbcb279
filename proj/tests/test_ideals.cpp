#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace hyperlab;
using fx::H1;
using fx::H3;
using fx::set;

TEST_CASE("hyperideal membership and generation") {
    CHECK(is_hyperideal(H1(), set({0, 2})));
    CHECK_FALSE(is_hyperideal(H1(), set({0, 1})));
    CHECK(is_hyperideal(H1(), set({0})));
    CHECK(generate_hyperideal(H1(), set({2})) == set({0, 2}));
    CHECK(generate_hyperideal(H1(), set({1})) == set({0, 1, 2, 3}));
    CHECK(generate_hyperideal(H1(), set({0})) == set({0}));
}

TEST_CASE("enumeration of hyperideals") {
    const auto h1 = enumerate_hyperideals(H1());
    REQUIRE(h1.size() == 3);
    CHECK(h1[0] == set({0}));
    CHECK(h1[1] == set({0, 2}));
    CHECK(h1[2] == set({0, 1, 2, 3}));
    const auto h3 = enumerate_hyperideals(H3());
    CHECK(std::find(h3.begin(), h3.end(), set({0})) != h3.end());
    CHECK(std::find(h3.begin(), h3.end(), set({0, 2})) != h3.end());
    CHECK(h3.back() == H3().carrier());
    CHECK_THROWS_AS(enumerate_hyperideals(product_ring(H1(), H3()), 8), Error);
}

TEST_CASE("enumeration equals the brute-force subset filter up to order 8") {
    for (const auto& inst : fx::instances_up_to(8)) {
        const auto lib = enumerate_hyperideals(*inst.ring);
        auto brute = oracle::hyperideals(oracle::from(*inst.ring));
        std::vector<oracle::Set> got;
        for (const auto& i : lib) got.push_back(oracle::to_set(i));
        std::sort(brute.begin(), brute.end());
        std::sort(got.begin(), got.end());
        CHECK_MESSAGE(got == brute, inst.name);
    }
}

TEST_CASE("prime, maximal, coprime") {
    CHECK_FALSE(is_prime(H1(), set({0, 2})));
    CHECK(is_maximal(H1(), set({0, 2})));
    CHECK_FALSE(is_maximal(H1(), set({0})));
    CHECK_THROWS_AS(is_prime(H1(), H1().carrier()), Error);
    CHECK(is_coprime(H1(), set({0}), H1().carrier()));
    CHECK_FALSE(is_coprime(H1(), set({0}), set({0, 2})));
}

TEST_CASE("C-hyperideals") {
    CHECK(is_C_hyperideal(H1(), set({0})));
    CHECK(is_strong_C_hyperideal(H1(), set({0})));
    CHECK(is_C_hyperideal(H1(), set({0, 2})));
    const auto pc = product_classes(H3());
    CHECK(std::find(pc.U.begin(), pc.U.end(), set({0, 2})) != pc.U.end());
    CHECK(std::find(pc.C.begin(), pc.C.end(), set({1, 3})) != pc.C.end());
    // {1,3} is a product, so a C-hyperideal meeting it must contain it.
    CHECK(is_C_hyperideal(H3(), set({0, 2})));
    CHECK(is_strong_C_hyperideal(H3(), set({0, 2})));
    CHECK_FALSE(is_strong_C_hyperideal(H3(), set({0})));
}

TEST_CASE("n-absorbing") {
    const auto r = n_absorbing(H1(), set({0}), 2);
    CHECK_FALSE(r.absorbing);
    CHECK(r.witness.size() == 3);
    CHECK_FALSE(is_n_absorbing(H1(), set({0, 2}), 1));
    CHECK(is_n_absorbing(H1(), set({0, 2}), 2));
    CHECK_THROWS_AS(n_absorbing(H1(), H1().carrier(), 1), Error);
    CHECK_THROWS_AS(n_absorbing(H1(), set({0}), 0), Error);
}

TEST_CASE("radical, nilpotents, units") {
    CHECK(radical(H1(), set({0})) == H1().carrier());
    CHECK(power_members_D(H1(), set({0})) == H1().carrier());
    CHECK(nilpotents(H1()) == H1().carrier());
    CHECK_FALSE(units(H1()).has_value());
    REQUIRE(units(H3()).has_value());
    CHECK(*units(H3()) == set({1, 3}));
    CHECK(weak_zero_divisors(H3()) == set({0, 2}));
}

TEST_CASE("i-sets") {
    CHECK(find_i_sets(H1()).empty());
    CHECK(has_i_set(H1()) == false);
    CHECK(is_i_set(H3(), set({1})));
    const auto found = find_i_sets(H3());
    CHECK(std::find(found.begin(), found.end(), set({1})) != found.end());
}

TEST_CASE("ideal products and sums") {
    CHECK(ideal_product(H1(), set({0, 2}), set({0, 2})) == set({0}));
    CHECK(ideal_power(H1(), set({0, 1, 2, 3}), 2) == set({0, 2}));
    CHECK(ideal_sum(H1(), set({0}), set({0, 2})) == set({0, 2}));
}

TEST_CASE("classification") {
    const auto pc = product_classes(H1());
    const auto c = classify(H1(), pc, set({0, 2}));
    CHECK(c.proper);
    CHECK_FALSE(c.prime);
    CHECK(c.maximal);
    CHECK(c.c_hyperideal);
    const auto g = classify(H1(), pc, H1().carrier());
    CHECK_FALSE(g.proper);
    CHECK_FALSE(g.prime);
}

TEST_CASE("product and sum classes match the oracle up to order 8") {
    for (const auto& inst : fx::instances_up_to(8)) {
        const auto pc = product_classes(*inst.ring);
        const auto t = oracle::from(*inst.ring);
        const auto C = oracle::products(t);
        const auto U = oracle::sums(t, C);
        std::set<oracle::Set> libC, libU;
        for (const auto& s : pc.C) libC.insert(oracle::to_set(s));
        for (const auto& s : pc.U) libU.insert(oracle::to_set(s));
        CHECK_MESSAGE(libC == C, inst.name);
        CHECK_MESSAGE(libU == U, inst.name);
    }
}
