#include <doctest.h>

#include "support.hpp"

using namespace tarzan;
using namespace tarzan::testing;

namespace {

void expect(const checks::Report& rep) {
    INFO("cases " << rep.cases << ", violations " << rep.violations << ", first: " << rep.first);
    CHECK(rep.cases > 0);
    CHECK(rep.violations == 0);
}

std::set<RegionKey> keys(const std::vector<SearchState>& states) {
    std::set<RegionKey> out;
    for (const auto& s : states) out.insert(state_key(s));
    return out;
}

/// Restriction of a product region to one component's clocks, renumbered from zero.
Region project(const Region& r, int first, int count) {
    auto keep = [&](const ClockSet& s) {
        ClockSet out;
        for (int x : s)
            if (x >= first && x < first + count) out.push_back(x - first);
        return out;
    };
    Region p;
    p.loc = {0};
    p.h.assign(r.h.begin() + first, r.h.begin() + first + count);
    for (const auto& s : r.unbounded) p.unbounded.push_back(keep(s));
    p.unit = keep(r.unit);
    for (const auto& s : r.frac) p.frac.push_back(keep(s));
    canonicalize(p);
    return p;
}

}  // namespace

TEST_CASE("delay predecessors: at most three, each leading back") { expect(checks::delay_predecessor_bound(4, 2)); }

TEST_CASE("delay successor: deterministic, no self loops, class table") { expect(checks::delay_successor_shape(4, 2)); }

TEST_CASE("successor and predecessor duality on random automata") { expect(checks::duality(200, 7)); }

TEST_CASE("discrete predecessors are the inverse image of firing") { expect(checks::discrete_inverse_image(60, 11)); }

TEST_CASE("delay chains match concrete sweeps") { expect(checks::sweep_agreement(3, 2)); }

TEST_CASE("guard decisions match concrete evaluation") { expect(checks::guard_soundness(3, 2)); }

TEST_CASE("firing a transition matches the concrete step") { expect(checks::discrete_successor_oracle(100, 13)); }

TEST_CASE("backward search agrees with forward reachability") { expect(checks::forward_backward(40, 17)); }

TEST_CASE("period skipping equals single steps") { expect(checks::skip_agreement(3, 4)); }

TEST_CASE("all-reset predecessor counts") {
    for (int n = 1; n <= 3; ++n)
        for (int c = 1; c <= 2; ++c) {
            INFO(n << " clocks, max " << c);
            const auto brute = oracle::enumerate_regions({0}, std::vector<int>(n, c)).size();
            CHECK(checks::all_reset_predecessors(n, c) == brute);
            CHECK(oracle::region_count(n, c) == brute);
            CHECK(oracle::lemma1_bound(n, c) >= brute);
        }
}

TEST_CASE("sampled valuations abstract to valid regions that re-sample consistently") {
    for (const auto& cm : checks::bound_vectors(3, 2))
        for (const auto& r : oracle::enumerate_regions({0}, cm)) {
            CHECK(valid_region(r, cm));
            const auto s = oracle::sample(r, cm);
            const Region back = oracle::abstract(s.values, {0}, cm, s.tags);
            CHECK(canonical_key(back) == canonical_key(r));
            const auto again = oracle::sample(back, cm);
            CHECK(canonical_key(oracle::abstract(again.values, {0}, cm, again.tags)) == canonical_key(r));
        }
}

TEST_CASE("classification is total and keys are stable under canonicalization") {
    for (const auto& cm : checks::bound_vectors(3, 2))
        for (const auto& r : oracle::enumerate_regions({0}, cm)) {
            const bool z = r.r() == 0 && !r.unit.empty();
            const bool p = r.r() > 0 && r.unit.empty();
            const bool m = r.r() > 0 && !r.unit.empty();
            const bool u = r.ell() > 0 && r.r() == 0 && r.unit.empty();
            CHECK(int(z) + int(p) + int(m) + int(u) == 1);
            const RegionClass c = classify(r);
            CHECK(((c == RegionClass::Z && z) || (c == RegionClass::P && p) || (c == RegionClass::M && m) ||
                   (c == RegionClass::U && u)));
            CHECK(canonical_key(canonicalized(r)) == canonical_key(r));
        }
}

TEST_CASE("full exploration is strategy independent") {
    std::vector<Network> models{as_network(gen_flower(3)), gen_boolean(3), gen_gates(3), gen_ring(2)};
    std::mt19937 rng(23);
    for (int i = 0; i < 30; ++i) models.push_back(as_network(random_ta(rng, 3, 4, 2)));
    for (const auto& net : models) {
        SearchConfig dfs, bfs;
        bfs.strategy = Strategy::bfs;
        const auto a = reachable_states(net, dfs);
        const auto b = reachable_states(net, bfs);
        CHECK(keys(a) == keys(b));
        CHECK(a.size() == keys(a).size());
        CHECK(explore_full(net, dfs).regions_stored == a.size());
    }
}

TEST_CASE("render and parse round trip random automata") {
    std::mt19937 rng(29);
    for (int i = 0; i < 200; ++i) {
        const Network net = as_network(random_ta(rng, 3, 4, 2));
        CHECK(parse_model(render_model(net)) == net);
    }
}

TEST_CASE("product delay projects onto component delays") {
    for (const Network& net : {gen_boolean(3), gen_ring(2), gen_gates(3)}) {
        for (const auto& s : reachable_states(net)) {
            const auto next = network_delay_successor(s, net);
            if (!next) continue;
            for (int c = 0; c < static_cast<int>(net.components.size()); ++c) {
                const int first = net.clock_offset(c);
                const int count = static_cast<int>(net.components[c].clocks.size());
                const Region before = project(s.region, first, count);
                const Region after = project(next->region, first, count);
                const auto own = immediate_delay_successor(before, net.components[c].max_constants());
                CHECK((after == before || (own && after == *own)));
            }
        }
    }
}
