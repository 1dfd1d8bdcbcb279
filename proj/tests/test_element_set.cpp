#include "doctest.h"
#include "fixtures.hpp"

using namespace hyperlab;
using fx::set;

TEST_CASE("element set basics") {
    ElementSet s;
    CHECK(s.empty());
    s.insert(3);
    s.insert(200);
    s.insert(64);
    CHECK(s.size() == 3);
    CHECK(s.contains(200));
    CHECK_FALSE(s.contains(4));
    CHECK(s.min() == 3);
    CHECK(s.members() == std::vector<Element>{3, 64, 200});
    s.erase(64);
    CHECK(s.to_string() == "{3,200}");
}

TEST_CASE("element set algebra") {
    const auto a = set({0, 1, 2});
    const auto b = set({2, 3});
    CHECK((a | b) == set({0, 1, 2, 3}));
    CHECK((a & b) == set({2}));
    CHECK((a - b) == set({0, 1}));
    CHECK(set({1}).subset_of(a));
    CHECK_FALSE(b.subset_of(a));
    CHECK(a.intersects(b));
    CHECK_FALSE(set({0}).intersects(set({1})));
    CHECK(ElementSet::full(4) == set({0, 1, 2, 3}));
    CHECK(ElementSet::full(ElementSet::kCapacity).size() == ElementSet::kCapacity);
}

TEST_CASE("element set orders") {
    CHECK(lex_less(set({0, 1}), set({0, 2})));
    CHECK(lex_less(set({0}), set({0, 1})));
    CHECK_FALSE(lex_less(set({1}), set({0, 5})));
    CHECK(size_lex_less(set({3}), set({0, 1})));
    CHECK(size_lex_less(set({0, 1}), set({0, 2})));
}

TEST_CASE("element set iteration is ascending") {
    const auto s = set({130, 5, 64, 63});
    std::vector<Element> seen;
    s.for_each([&](Element e) { seen.push_back(e); });
    CHECK(seen == std::vector<Element>{5, 63, 64, 130});
}
