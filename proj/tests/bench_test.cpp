#include <doctest.h>

#include "support.hpp"

using namespace tarzan;
using namespace tarzan::testing;

TEST_CASE("flower shape") {
    const TimedAutomaton fl = gen_flower(4);
    CHECK(fl.clocks.size() == 5);
    CHECK(fl.transitions.size() == 5);
    CHECK(fl.max_constants() == std::vector<int>{1, 2, 3, 4, 1});
    CHECK_THROWS_AS(gen_flower(0), std::invalid_argument);
}

TEST_CASE("family shapes") {
    const Network b = gen_boolean(2);
    CHECK(b.components.size() == 2);
    CHECK(b.vars.size() == 2);

    const Network r = gen_ring(2);
    for (const auto& c : r.components) {
        CHECK(c.locations.size() == 6);
        CHECK(c.transitions.size() == 6);
    }

    const Network g = gen_gates(3);
    CHECK(g.components.size() == 3);
    const int gate = g.find_var("gate");
    REQUIRE(gate >= 0);
    CHECK(g.vars[gate].lo == 0);
    CHECK(g.vars[gate].hi == 2);

    CHECK_THROWS(gen_ring(0));
    CHECK_THROWS(gen_boolean(1));
    CHECK_THROWS(gen_gates(1));
    CHECK_THROWS(generate("tree", 3));
}

TEST_CASE("generated models validate") {
    for (int k = 2; k <= 8; ++k) {
        CHECK(validate_model(gen_boolean(k)).empty());
        CHECK(validate_model(gen_ring(k)).empty());
        CHECK(validate_model(gen_gates(k)).empty());
    }
    for (int n = 1; n <= 8; ++n) CHECK(validate_model(as_network(gen_flower(n))).empty());
}

TEST_CASE("generated files parse back to the model") {
    for (const std::string family : {"flower", "boolean", "ring", "gates"}) {
        const Generated g = generate(family, 3);
        CHECK(parse_model(g.files) == g.model);
        CHECK_NOTHROW(parse_query(g.query, g.model));
    }
    CHECK(generate("flower", 4).query == "E<> (Flower.Goal)");
    CHECK(generate("gates", 5).files.size() == 5);
    CHECK(generate("gates", 5).query == "E<> (Unlocker.Goal)");
}

TEST_CASE("small instances reach their targets") {
    for (int k = 2; k <= 3; ++k) {
        for (const std::string family : {"boolean", "ring", "gates"}) {
            const Generated g = generate(family, k);
            INFO(family << " " << k);
            CHECK(forward_reach(g.model, parse_query(g.query, g.model), {}).verdict == Verdict::reachable);
        }
    }
    for (int n = 1; n <= 3; ++n) {
        const Generated g = generate("flower", n);
        CHECK(forward_reach(g.model, parse_query(g.query, g.model), {}).verdict == Verdict::reachable);
    }
}
