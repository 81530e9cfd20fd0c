#include <doctest.h>

#include "support.hpp"

using namespace tarzan;
using namespace tarzan::testing;

namespace {

SearchConfig with(Strategy s) {
    SearchConfig c;
    c.strategy = s;
    return c;
}

std::set<RegionKey> keys_of(const std::vector<SearchState>& states) {
    std::set<RegionKey> out;
    for (const auto& s : states) out.insert(state_key(s));
    return out;
}

}  // namespace

TEST_CASE("one clock with maximum zero has two regions") {
    const Network net = as_network(clocks_only({0}));
    const auto st = explore_full(net, {});
    CHECK(st.verdict == Verdict::unreachable);
    CHECK(st.regions_stored == 2);
    CHECK(st.states_stored == 1);
}

TEST_CASE("small flower") {
    const Network net = as_network(gen_flower(2));
    const auto dfs = explore_full(net, with(Strategy::dfs));
    const auto bfs = explore_full(net, with(Strategy::bfs));
    CHECK(dfs.regions_stored == 35);
    CHECK(bfs.regions_stored == dfs.regions_stored);
    CHECK(keys_of(reachable_states(net, with(Strategy::dfs))) == keys_of(reachable_states(net, with(Strategy::bfs))));

    const auto goal = forward_reach(net, parse_query(flower_query(), net), {});
    CHECK(goal.verdict == Verdict::reachable);
    REQUIRE_FALSE(goal.witness.empty());
    CHECK(goal.witness.front().state == initial_states(net).front());
    CHECK(goal.witness.back().state.region.loc[0] == 1);
}

TEST_CASE("witness steps are successors of their predecessors") {
    const Network net = gen_gates(3);
    const auto st = forward_reach(net, parse_query(gates_query(), net), {});
    REQUIRE(st.verdict == Verdict::reachable);
    for (std::size_t i = 1; i < st.witness.size(); ++i) {
        const auto& prev = st.witness[i - 1].state;
        const auto& step = st.witness[i];
        if (step.move.is_delay()) {
            CHECK(network_delay_successor(prev, net) == step.state);
        } else {
            bool found = false;
            for (const auto& s : network_discrete_moves(prev, net))
                found = found || (s.state == step.state && s.move.component == step.move.component);
            CHECK(found);
        }
    }
}

TEST_CASE("limits") {
    const Network net = as_network(gen_flower(4));
    SearchConfig cfg;
    cfg.max_regions = 10;
    const auto st = explore_full(net, cfg);
    CHECK(st.verdict == Verdict::limit_exceeded);
    CHECK(st.regions_stored <= 10 + 8);

    SearchConfig timed;
    timed.max_millis = 0;
    CHECK(explore_full(gen_boolean(5), timed).verdict == Verdict::limit_exceeded);
}

TEST_CASE("backward search") {
    const TimedAutomaton fl = gen_flower(4);
    const std::string base = "location q0\nx1 = 1\nx2 > max\ny > max\nx3 = 0\nx4 = 0\n";
    const auto r2 = backward_reach(fl, parse_pattern(base + "order unbounded: [y] < [x2]\n", fl), {});
    CHECK(r2.verdict == Verdict::reachable);
    CHECK(r2.direction == Direction::backward);
    REQUIRE_FALSE(r2.witness.empty());
    CHECK(r2.witness.front().state.region == initial_region(fl));

    // replaying the backward witness forward
    const auto cm = fl.max_constants();
    for (std::size_t i = 1; i < r2.witness.size(); ++i) {
        const Region& prev = r2.witness[i - 1].state.region;
        const auto& step = r2.witness[i];
        if (step.move.is_delay()) {
            CHECK(immediate_delay_successor(prev, cm) == step.state.region);
        } else {
            auto next = find_discrete_successors(prev, fl);
            CHECK(std::find(next.begin(), next.end(), step.state.region) != next.end());
        }
    }

    // at Goal the clocks leave their bounds one maximum at a time, y first
    const std::string at_goal = "location Goal\nx1 > max\nx2 > max\nx3 > max\nx4 > max\ny > max\n";
    CHECK(backward_reach(fl, parse_pattern(at_goal + "order unbounded: [y] < [x1] < [x2] < [x3] < [x4]\n", fl), {})
              .verdict == Verdict::reachable);
    CHECK(backward_reach(fl, parse_pattern(at_goal + "order unbounded: [x1,x2,x3,x4,y]\n", fl), {}).verdict ==
          Verdict::unreachable);

    TimedAutomaton island = clocks_only({1});
    island.locations.push_back({"q1", false, false, {}, {}});
    const auto lone = backward_reach(island, parse_pattern("location q1\nx0 = 0\n", island), {});
    CHECK(lone.verdict == Verdict::unreachable);
    CHECK(lone.regions_stored == 1);
}

TEST_CASE("backward search rejects variables and channels") {
    const Network net = gen_boolean(2);
    RegionPattern p;
    p.clocks.assign(1, {ClockPattern::Kind::exact, 0, true});
    const auto st = backward_reach(net.components[0], p, {});
    CHECK(st.verdict == Verdict::error);
    CHECK_FALSE(st.message.empty());
}

TEST_CASE("bounded predecessor chain with and without period skipping") {
    Region r;
    r.loc = {0};
    r.h = {5, 4, 3};
    r.unit = {0};
    r.frac = {{1}, {2}};
    for (std::int64_t n = 0; n <= 40; ++n) CHECK(delay_predecessor_n(r, n, true) == delay_predecessor_n(r, n, false));
}

TEST_CASE("names") {
    CHECK(std::string(verdict_name(Verdict::limit_exceeded)) == "limit-exceeded");
    CHECK(std::string(strategy_name(Strategy::bfs)) == "bfs");
    CHECK(std::string(direction_name(Direction::backward)) == "backward");
}
