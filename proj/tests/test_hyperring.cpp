#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

#include <random>

using namespace hyperlab;
using fx::H1;
using fx::H3;
using fx::set;

TEST_CASE("H1 and H3 axioms") {
    const auto r1 = validate_axioms(H1().tables());
    CHECK(r1.is_hyperring);
    CHECK(r1.strongly_distributive);
    CHECK(r1.identities.empty());
    CHECK_FALSE(H1().has_identity());

    const auto r3 = validate_axioms(H3().tables());
    CHECK(r3.is_hyperring);
    CHECK(H3().identities() == std::vector<Element>{1, 3});
    CHECK(H3().identity() == 1);
    CHECK_FALSE(H3().has_scalar_identity());
}

TEST_CASE("altered table fails with the first witness") {
    auto t = H1().tables();
    t.mul[1][1] = set({1});
    const auto r = validate_axioms(t);
    CHECK_FALSE(r.is_hyperring);
    const auto* f = r.first_failure();
    REQUIRE(f != nullptr);
    CHECK((f->axiom == "mul_associative" || f->axiom == "distributive"));
    REQUIRE(f->witness.has_value());
    CHECK_THROWS_AS(FiniteHyperring::build(t), Error);
    try {
        FiniteHyperring::build(t);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::AxiomFailure);
    }
}

TEST_CASE("malformed tables") {
    auto t = H1().tables();
    t.add[0][1] = 9;
    CHECK_THROWS_AS(check_well_formed(t), Error);
    auto u = H1().tables();
    u.mul[2][3] = ElementSet{};
    CHECK_THROWS_AS(check_well_formed(u), Error);
}

TEST_CASE("hyperproducts and powers") {
    CHECK(H1().hyper_product(set({1}), set({1})) == set({2}));
    CHECK(H3().hyper_product(set({1}), set({1})) == set({1, 3}));
    CHECK(H1().hyper_product(set({0}), set({1, 2, 3})) == set({0}));
    CHECK_THROWS_AS(H1().hyper_product(ElementSet{}, set({1})), Error);

    CHECK(H1().power(1, 2) == set({2}));
    CHECK(H1().power(1, 3) == set({0}));
    CHECK(H3().power(1, 2) == set({1, 3}));
    CHECK(H3().power(1, 3) == set({1, 3}));
    for (Element a = 0; a < 4; ++a) CHECK(H1().power(a, 1) == set({a}));
    CHECK_THROWS_AS(H1().power(1, 0), Error);
}

TEST_CASE("power profiles are eventually periodic and agree with direct powers") {
    for (const auto& inst : fx::instances_up_to(12)) {
        const auto& h = *inst.ring;
        const auto t = oracle::from(h);
        for (Element a = 0; a < h.order(); ++a) {
            const auto& p = h.power_profile(a);
            CHECK(p.period >= 1);
            for (std::size_t k = 1; k <= p.tail + 2 * p.period + 3; ++k)
                CHECK(oracle::to_set(p.at(k)) == oracle::power(t, a, k));
        }
    }
}

TEST_CASE("zx_mod construction") {
    const std::array<std::int64_t, 1> x{2};
    const auto h = make_zx_mod(4, x);
    CHECK(h.name() == "zx_mod(4,{2})");
    CHECK(h.meta().family == "zx_mod");
    CHECK(h == H1());
    const std::array<std::int64_t, 2> x3{1, 3};
    CHECK(make_zx_mod(4, x3) == H3());
    const std::array<std::int64_t, 2> big{2, 4};
    CHECK(make_zx_mod(105, big).order() == 105);
}

TEST_CASE("product rings") {
    CHECK(product_ring(H1(), H1()).order() == 16);
    const auto p = product_ring(H1(), H3());
    CHECK(validate_axioms(p.tables()).is_hyperring);
    const Element one_one = pair_index(H3(), 1, 1);
    CHECK(p.mul(one_one, one_one) == set({pair_index(H3(), 2, 1), pair_index(H3(), 2, 3)}));
}

TEST_CASE("quotients") {
    const auto q = quotient_by_ideal(H1(), set({0, 2}));
    CHECK(q.ring.order() == 2);
    const Element c1 = q.projection(1);
    CHECK(q.ring.mul(c1, c1) == set({q.projection(2)}));
    CHECK(q.projection(2) == q.projection(0));
    CHECK(check_good_hom(H1(), q.ring, q.projection));

    const auto same = quotient_by_ideal(H3(), set({0}));
    CHECK(same.ring.order() == 4);
    CHECK(same.ring.mul(1, 1) == H3().mul(1, 1));

    CHECK_THROWS_AS(quotient_by_ideal(H1(), set({0, 1})), Error);
    CHECK_THROWS_AS(quotient_by_ideal(H1(), set({0, 1, 2, 3})), Error);
}

TEST_CASE("good homomorphisms") {
    HomMap id{{0, 1, 2, 3}};
    CHECK(check_good_hom(H1(), H1(), id));
    HomMap swap{{0, 3, 2, 1}};
    CHECK(check_good_hom(H1(), H1(), swap));
    HomMap bad{{0, 2, 0, 2}};
    CHECK_FALSE(check_good_hom(H3(), H3(), bad));
    CHECK(is_injective(swap, 4));
    CHECK(is_surjective(swap, 4));
    CHECK(kernel(id, 4) == set({0}));
    CHECK(hom_image(swap, set({1})) == set({3}));
    CHECK(hom_preimage(swap, 4, set({1, 2})) == set({2, 3}));
}

TEST_CASE("library axioms agree with the oracle on random tables") {
    std::mt19937_64 rng(11);
    int agree = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 2 + trial % 3;
        RawTables t;
        t.order = n;
        t.add.assign(n, std::vector<Element>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) t.add[a][b] = static_cast<Element>((a + b) % n);
        t.mul.assign(n, std::vector<ElementSet>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const auto mask = std::uniform_int_distribution<unsigned>(1, (1U << n) - 1)(rng);
                for (std::size_t e = 0; e < n; ++e)
                    if (mask >> e & 1U) t.mul[a][b].insert(static_cast<Element>(e));
            }
        if (trial % 2 == 0)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < a; ++b) t.mul[a][b] = t.mul[b][a];
        oracle::Tables o;
        o.n = static_cast<unsigned>(n);
        o.add.assign(n, std::vector<unsigned>(n));
        o.mul.assign(n, std::vector<oracle::Set>(n));
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b) {
                o.add[a][b] = t.add[a][b];
                for (auto e : t.mul[a][b].members()) o.mul[a][b].insert(e);
            }
        CHECK(validate_axioms(t).is_hyperring == oracle::is_hyperring(o));
        ++agree;
    }
    CHECK(agree == 400);
}
