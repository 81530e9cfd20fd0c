#include "tarzan/network.hpp"

#include <unordered_set>

#include "tarzan/kinematics.hpp"

namespace tarzan {

VerificationError::VerificationError(const std::string& what, SearchState s)
    : std::runtime_error(what), state(std::move(s)) {}

std::string Move::describe(const Network& net) const {
    if (is_delay()) return "delay";
    auto edge = [&](int c, int t) {
        const auto& ta = net.components[c];
        const auto& tr = ta.transitions[t];
        std::string s = ta.name + ": " + ta.locations[tr.source].name + " -> " + ta.locations[tr.target].name;
        if (!tr.action.empty()) s += " (" + tr.action + ")";
        if (tr.sync) s += " [" + net.channels.at(tr.sync->channel) + (tr.sync->emit ? "!]" : "?]");
        return s;
    };
    std::string s = edge(component, transition);
    if (partner_component >= 0) s += " | " + edge(partner_component, partner_transition);
    return s;
}

std::vector<SearchState> initial_states(const Network& net) {
    std::vector<std::vector<int>> per;
    for (const auto& ta : net.components) per.push_back(ta.initial_locations());
    std::vector<SearchState> out;
    std::vector<int> idx(per.size(), 0);
    for (const auto& p : per)
        if (p.empty()) return out;
    while (true) {
        std::vector<int> locs;
        for (std::size_t c = 0; c < per.size(); ++c) locs.push_back(per[c][idx[c]]);
        Region r = initial_region(net, locs);
        if (satisfies_invariant(r, net)) out.push_back({std::move(r), net.initial_vars()});
        std::size_t c = 0;
        for (; c < per.size(); ++c) {
            if (++idx[c] < static_cast<int>(per[c].size())) break;
            idx[c] = 0;
        }
        if (c == per.size()) break;
    }
    return out;
}

std::optional<SearchState> network_delay_successor(const SearchState& state, const Network& net) {
    for (std::size_t c = 0; c < net.components.size(); ++c)
        if (net.components[c].locations[state.region.loc[c]].urgent) return std::nullopt;
    auto next = immediate_delay_successor(state.region, net.max_constants());
    if (!next || !satisfies_invariant(*next, net)) return std::nullopt;
    return SearchState{std::move(*next), state.vars};
}

void apply_updates(Valuation& vars, const std::vector<Update>& updates, const Network& net) {
    for (const auto& u : updates) {
        const std::int64_t v = eval(u.value, vars);
        const auto& decl = net.vars.at(u.var);
        if (v < decl.lo || v > decl.hi) throw RangeError(decl.name, v);
        vars[u.var] = v;
    }
}

namespace {

bool enabled(const SearchState& s, const Transition& t, int component, int offset) {
    return s.region.loc[component] == t.source && satisfies_int_guard(s.vars, t.guard) &&
           satisfies_clock_guard(s.region, t.guard, offset);
}

}  // namespace

std::vector<Successor> network_discrete_moves(const SearchState& state, const Network& net) {
    std::vector<Successor> out;
    std::unordered_set<RegionKey, KeyHash> seen;
    const int n = static_cast<int>(net.components.size());
    std::vector<int> offset(n);
    for (int c = 0; c < n; ++c) offset[c] = net.clock_offset(c);

    auto emit = [&](SearchState next, Move m) {
        if (!satisfies_invariant(next.region, net)) return;
        if (!seen.insert(state_key(next)).second) return;
        out.push_back({std::move(next), m});
    };
    auto fire = [&](SearchState& s, const Transition& t, int c) {
        s.region = reset_clocks(s.region, t.resets, offset[c]);
        s.region.loc[c] = t.target;
        try {
            apply_updates(s.vars, t.updates, net);
        } catch (const RangeError& e) {
            throw VerificationError(e.what(), state);
        }
    };

    for (int c = 0; c < n; ++c) {
        const auto& ta = net.components[c];
        for (int i = 0; i < static_cast<int>(ta.transitions.size()); ++i) {
            const auto& t = ta.transitions[i];
            if (t.sync || !enabled(state, t, c, offset[c])) continue;
            SearchState next = state;
            fire(next, t, c);
            emit(std::move(next), {c, i, -1, -1});
        }
    }

    for (int c = 0; c < n; ++c) {
        const auto& ta = net.components[c];
        for (int i = 0; i < static_cast<int>(ta.transitions.size()); ++i) {
            const auto& t = ta.transitions[i];
            if (!t.sync || !t.sync->emit || !enabled(state, t, c, offset[c])) continue;
            for (int d = 0; d < n; ++d) {
                if (d == c) continue;
                const auto& tb = net.components[d];
                for (int j = 0; j < static_cast<int>(tb.transitions.size()); ++j) {
                    const auto& u = tb.transitions[j];
                    if (!u.sync || u.sync->emit || u.sync->channel != t.sync->channel) continue;
                    if (!enabled(state, u, d, offset[d])) continue;
                    SearchState next = state;
                    fire(next, t, c);
                    fire(next, u, d);
                    emit(std::move(next), {c, i, d, j});
                }
            }
        }
    }
    return out;
}

std::vector<SearchState> network_discrete_successors(const SearchState& state, const Network& net) {
    std::vector<SearchState> out;
    for (auto& s : network_discrete_moves(state, net)) out.push_back(std::move(s.state));
    return out;
}

}  // namespace tarzan
