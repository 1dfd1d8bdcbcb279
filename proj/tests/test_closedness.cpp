#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

#include <random>

using namespace hyperlab;
using fx::H1;
using fx::H3;
using fx::set;

TEST_CASE("(s,n)-closed on H1") {
    CHECK(is_sn_closed(H1(), set({0, 2}), 3, 2));
    const auto v = sn_closed(H1(), set({0}), 3, 2);
    CHECK_FALSE(v.closed);
    CHECK(v.witness == Element{1});
    for (std::size_t s = 1; s <= 5; ++s)
        for (std::size_t n = s; n <= 6; ++n) CHECK(is_sn_closed(H1(), set({0}), s, n));
    CHECK_THROWS_AS(sn_closed(H1(), H1().carrier(), 1, 1), Error);
    CHECK_THROWS_AS(sn_closed(H1(), set({0}), 0, 1), Error);
}

TEST_CASE("weakly (s,n)-closed on H1") {
    CHECK(is_weakly_sn_closed(H1(), set({0}), 3, 2));
    const auto v = weakly_sn_closed(H1(), set({0, 2}), 2, 1);
    CHECK_FALSE(v.closed);
    CHECK(v.witness == Element{1});
}

TEST_CASE("tough-zero elements") {
    CHECK(find_tough_zero(H1(), set({0}), 3, 2) == Element{1});
    CHECK_FALSE(find_tough_zero(H1(), set({0, 2}), 3, 2).has_value());
}

TEST_CASE("profile of {0,2} in H1") {
    const ClosedProfile p(H1(), set({0, 2}));
    CHECK(p.omega_table(6) == std::vector<std::size_t>{1, 2, 2, 2, 2, 2});
    const auto big = p.Omega_table(6);
    REQUIRE(big.size() == 6);
    CHECK(big[0] == std::size_t{1});
    for (std::size_t i = 1; i < 6; ++i) CHECK_FALSE(big[i].has_value());
    CHECK_FALSE(p.all_closed());
    const auto w = p.witnesses(3, 3);
    CHECK(w.at({2, 1}) == 1);
}

TEST_CASE("profile agrees with direct closedness beyond the bound") {
    for (const auto& inst : fx::instances_up_to(10)) {
        const auto& h = *inst.ring;
        for (const auto& q : enumerate_hyperideals(h)) {
            if (!is_proper(h, q)) continue;
            const ClosedProfile p(h, q);
            const std::size_t top = p.bound_L() + 4;
            for (std::size_t s = 1; s <= top; ++s)
                for (std::size_t n = 1; n <= top; ++n) {
                    const bool direct = is_sn_closed(h, q, s, n);
                    CHECK(p.closed(s, n) == direct);
                    CHECK(direct == (n >= p.omega(s)));
                    const auto big = p.Omega(n);
                    CHECK(direct == (!big || s <= *big));
                }
        }
    }
}

TEST_CASE("direct closedness equals the oracle up to order 8") {
    for (const auto& inst : fx::instances_up_to(8)) {
        const auto& h = *inst.ring;
        const auto t = oracle::from(h);
        for (const auto& q : enumerate_hyperideals(h)) {
            if (!is_proper(h, q)) continue;
            const auto oq = oracle::to_set(q);
            for (std::size_t s = 1; s <= 6; ++s)
                for (std::size_t n = 1; n <= 6; ++n) {
                    CHECK(is_sn_closed(h, q, s, n) == oracle::sn_closed(t, oq, s, n));
                    CHECK(is_weakly_sn_closed(h, q, s, n) == oracle::weakly_sn_closed(t, oq, s, n));
                }
        }
    }
}

TEST_CASE("regularity") {
    CHECK_FALSE(is_sn_regular(H1(), 1, 3, 2));
    CHECK_FALSE(is_sn_Regular(H1(), 1, 3, 2));
    // 1 is a unit of H3, so it is Regular everywhere.
    for (std::size_t s = 1; s <= 5; ++s)
        for (std::size_t n = 1; n <= 5; ++n) CHECK(is_sn_Regular(H3(), 1, s, n));
    for (Element a = 0; a < 4; ++a)
        for (std::size_t s = 1; s <= 4; ++s)
            for (std::size_t n = 1; n <= 4; ++n)
                CHECK(is_sn_Regular(H3(), a, s, n) == is_sn_Regular_by_subsets(H3(), a, s, n));
}

TEST_CASE("residue model for dZ") {
    const ZxResidueModel m{4, {2}};
    const auto v = zx_residue_closed(m, 3, 2);
    CHECK_FALSE(v.closed);
    CHECK(v.witness_residue == std::int64_t{1});
    const ZxResidueModel m105{105, {2, 4}};
    for (std::size_t s = 1; s <= 12; ++s) {
        CHECK(zx_residue_closed(m105, s, 3).closed);
        CHECK(zx_residue_closed(m105, s, 1).closed);
    }
    const ZxResidueModel m390{390, {7, 11}};
    for (std::size_t s = 1; s <= 12; ++s) CHECK(zx_residue_weakly_closed(m390, s, 4).closed);
}

TEST_CASE("residue model agrees with the finite zx_mod quotient") {
    // dZ in Z_X is closed iff {0} is closed in zx_mod(d, X) reduced: a^s in dZ
    // depends only on a mod d, so the finite model over Z_d decides it.
    for (std::int64_t d = 2; d <= 12; ++d)
        for (std::int64_t x = 1; x < d; ++x) {
            const std::array<std::int64_t, 1> X{x};
            const auto h = make_zx_mod(d, X);
            const ZxResidueModel m{d, {x}};
            for (std::size_t s = 1; s <= 5; ++s)
                for (std::size_t n = 1; n <= 5; ++n)
                    CHECK(zx_residue_closed(m, s, n).closed == is_sn_closed(h, set({0}), s, n));
        }
}
