#include "doctest.h"
#include "fixtures.hpp"

#include <algorithm>

using namespace hyperlab;
using fx::H1;
using fx::H3;

namespace {

Instance named(const std::string& name, const FiniteHyperring& h) {
    Instance i;
    i.name = name;
    i.ring = std::make_shared<const FiniteHyperring>(h);
    return i;
}

SuiteConfig only(std::vector<std::string> ids) {
    SuiteConfig c;
    c.only = std::move(ids);
    return c;
}

} // namespace

TEST_CASE("instance generation") {
    InstanceConfig c;
    c.zx_max_m = 6;
    c.product_factor_order = 4;
    GenerationStats st;
    const auto all = generate_instances(c, &st);
    REQUIRE(!all.empty());
    CHECK(all.front().ring->order() <= all.back().ring->order());
    CHECK(std::is_sorted(all.begin(), all.end(),
                         [](const Instance& a, const Instance& b) { return a.ring->order() < b.ring->order(); }));
    const auto has = [&](const FiniteHyperring& h) {
        return std::any_of(all.begin(), all.end(), [&](const Instance& i) { return *i.ring == h; });
    };
    CHECK(has(H1()));
    CHECK(has(H3()));
    CHECK(has(product_ring(H1(), H3())));
    // H1 reappears as zx_mod(4,{2}) and is skipped.
    CHECK(st.duplicates_skipped > 0);
    for (const auto& i : all) {
        CHECK(validate_axioms(i.ring->tables()).is_hyperring);
        if (i.is_product()) CHECK(i.ring->order() == i.left->order() * i.right->order());
    }
}

TEST_CASE("random instances are valid and reproducible") {
    InstanceConfig c;
    c.named_seeds = false;
    c.zx_max_m = 0;
    c.product_factor_order = 0;
    c.random_count = 300;
    c.seed = 11;
    GenerationStats st;
    const auto a = generate_instances(c, &st);
    CHECK(st.random_attempts == 300);
    CHECK(st.random_accepted > 0);
    CHECK(!a.empty());
    for (const auto& i : a) CHECK(validate_axioms(i.ring->tables()).is_hyperring);
    const auto b = generate_instances(c);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(*a[k].ring == *b[k].ring);
}

TEST_CASE("single checks on the seeds") {
    const SuiteConfig config;
    SUBCASE("L2_11 on H1") {
        const auto r = check_theorem(find_check("L2_11"), {named("H1", H1())}, config);
        CHECK(r.applicable == 1);
        CHECK(r.ok());
    }
    SUBCASE("T2_9 passes on H1") {
        const auto r = check_theorem(find_check("T2_9"), {named("H1", H1())}, config);
        CHECK(r.applicable == 1);
        CHECK(r.ok());
    }
    SUBCASE("T2_9 fails on H3 at {0}") {
        const auto r = check_theorem(find_check("T2_9"), {named("H3", H3())}, config);
        REQUIRE(r.counterexample);
        CHECK(r.counterexample_instance == "H3");
        REQUIRE(r.counterexample->ideals.size() == 2);
        CHECK(r.counterexample->ideals[0] == fx::set({0}));
        CHECK(r.counterexample->s == 2u);
        CHECK(r.counterexample->n == 1u);
    }
    SUBCASE("T3_13hom on H1") {
        const auto r = check_theorem(find_check("T3_13hom"), {named("H1", H1())}, config);
        CHECK(r.applicable == 1);
        CHECK(r.ok());
    }
}

TEST_CASE("a corrupted check reports a minimal counterexample") {
    // Negated closure: "Q is (s,n)-closed ⇒ Q is not (s,n)-closed" fails on
    // the first instance with a closed proper ideal.
    TheoremCheck broken{"broken", "negated closedness", "", [](Analysis& a, CaseLog& log) {
                            for (const auto& q : a.proper_ideals()) {
                                const auto& p = a.profile(q);
                                for (std::size_t s = 1; s <= 2; ++s)
                                    if (p.closed(s, 1) &&
                                        !log.expect(!p.closed(s, 1), [&] {
                                            return Counterexample{{q}, {}, s, 1, "negated"};
                                        }))
                                        return;
                            }
                        },
                        {}};
    SuiteConfig config;
    config.instances.zx_max_m = 6;
    config.instances.product_factor_order = 0;
    const auto rep = run_suite(config, {broken});
    REQUIRE(rep.checks.size() == 1);
    const auto& r = rep.checks[0];
    REQUIRE(r.counterexample);
    CHECK(r.counterexample->s == 1u);
    CHECK(rep.any_counterexample());
    // Smallest instances come first, so the witness has order 2.
    CHECK(r.counterexample_ring["order"] == 2);
}

TEST_CASE("empty instance family is vacuous everywhere") {
    SuiteConfig config;
    config.instances.named_seeds = false;
    config.instances.zx_max_m = 0;
    config.instances.product_factor_order = 0;
    const auto rep = run_suite(config);
    CHECK(rep.instance_count == 0);
    CHECK(!rep.any_counterexample());
    for (const auto& r : rep.checks) CHECK(r.vacuous());
}

TEST_CASE("reports do not depend on thread count") {
    SuiteConfig config;
    config.instances.zx_max_m = 6;
    config.instances.product_factor_order = 3;
    config.threads = 1;
    const auto one = run_suite(config).to_json(false);
    config.threads = 4;
    const auto four = run_suite(config).to_json(false);
    CHECK(canonical_dump(one) == canonical_dump(four));
    CHECK(!one.contains("timing"));
}

TEST_CASE("registry") {
    const auto& reg = default_registry();
    CHECK(reg.size() == 35);
    for (const auto& c : reg) {
        CHECK(!c.statement.empty());
        CHECK(&find_check(c.id) == &c);
    }
    try {
        find_check("T9_99");
        FAIL("unknown id accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownCheckId);
    }
    const auto r = check_theorem("R2_rad", only({"R2_rad"}));
    CHECK(r.ok());
    CHECK(!r.vacuous());
}

TEST_CASE("suite configuration") {
    const auto c = suite_config_from_json(Json::parse(R"({"s_max": 4, "instances": {"zx_max_m": 5}})"));
    CHECK(c.s_max == 4);
    CHECK(c.instances.zx_max_m == 5);
    CHECK(suite_config_from_json(to_json(c)).s_max == 4);
    CHECK_THROWS_AS(suite_config_from_json(Json::parse(R"({"smax": 4})")), Error);
    CHECK_THROWS_AS(suite_config_from_json(Json::parse(R"({"instances": {"bogus": 1}})")), Error);
}
