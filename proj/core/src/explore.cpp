#include "tarzan/explore.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <set>
#include <unordered_map>

namespace tarzan {

const char* strategy_name(Strategy s) { return s == Strategy::dfs ? "dfs" : "bfs"; }
const char* direction_name(Direction d) { return d == Direction::forward ? "forward" : "backward"; }
const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::reachable: return "reachable";
        case Verdict::unreachable: return "unreachable";
        case Verdict::limit_exceeded: return "limit-exceeded";
        case Verdict::error: return "error";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Node {
    SearchState state;
    std::size_t parent;
    Move move;
};

constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

/// Visited store plus frontier shared by both directions.
class Search {
public:
    explicit Search(const SearchConfig& cfg) : cfg_(cfg), start_(Clock::now()) {}

    /// Returns false when the state was already stored.
    bool add(SearchState s, std::size_t parent, Move m) {
        auto [it, fresh] = index_.try_emplace(state_key(s), nodes_.size());
        if (!fresh) return false;
        nodes_.push_back({std::move(s), parent, m});
        return true;
    }

    /// Pushes a batch of new nodes in expansion order.
    void schedule(std::size_t first, std::size_t last) {
        if (cfg_.strategy == Strategy::bfs) {
            for (std::size_t i = first; i < last; ++i) frontier_.push_back(i);
        } else {
            for (std::size_t i = last; i > first; --i) frontier_.push_back(i - 1);
        }
    }

    bool empty() const { return frontier_.empty(); }

    std::size_t pop() {
        std::size_t i;
        if (cfg_.strategy == Strategy::bfs) {
            i = frontier_.front();
            frontier_.pop_front();
        } else {
            i = frontier_.back();
            frontier_.pop_back();
        }
        return i;
    }

    bool over_limit() {
        if (cfg_.max_regions && nodes_.size() > *cfg_.max_regions) return true;
        if (cfg_.max_millis && (++polls_ & 255u) == 0 && elapsed_ms() > static_cast<double>(*cfg_.max_millis))
            return true;
        return false;
    }

    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    }

    std::size_t size() const { return nodes_.size(); }
    const Node& node(std::size_t i) const { return nodes_[i]; }

    std::vector<TraceStep> path_to(std::size_t i) const {
        std::vector<TraceStep> out;
        for (; i != kNoParent; i = nodes_[i].parent) out.push_back({nodes_[i].state, nodes_[i].move});
        std::reverse(out.begin(), out.end());
        return out;
    }

    SearchStats finish(Verdict v) const {
        SearchStats s;
        s.verdict = v;
        s.regions_stored = nodes_.size();
        std::set<std::pair<std::vector<int>, Valuation>> discrete;
        for (const auto& n : nodes_) discrete.emplace(n.state.region.loc, n.state.vars);
        s.states_stored = discrete.size();
        s.elapsed_ms = elapsed_ms();
        s.strategy = cfg_.strategy;
        s.direction = cfg_.direction;
        return s;
    }

private:
    SearchConfig cfg_;
    Clock::time_point start_;
    std::vector<Node> nodes_;
    std::unordered_map<RegionKey, std::size_t, KeyHash> index_;
    std::deque<std::size_t> frontier_;
    unsigned polls_ = 0;
};

SearchStats run_forward(const Network& net, const Query& query, SearchConfig cfg,
                        std::vector<SearchState>* all) {
    cfg.direction = Direction::forward;
    Search search(cfg);
    const auto init = initial_states(net);
    const std::size_t first = search.size();
    for (const auto& s : init) search.add(s, kNoParent, {});
    search.schedule(first, search.size());

    while (!search.empty()) {
        if (search.over_limit()) return search.finish(Verdict::limit_exceeded);
        const std::size_t i = search.pop();
        const SearchState cur = search.node(i).state;
        if (all) all->push_back(cur);
        if (eval_query(query, cur)) {
            SearchStats st = search.finish(Verdict::reachable);
            st.witness = search.path_to(i);
            return st;
        }
        const std::size_t batch = search.size();
        try {
            if (auto d = network_delay_successor(cur, net)) search.add(std::move(*d), i, {});
            for (auto& s : network_discrete_moves(cur, net)) search.add(std::move(s.state), i, s.move);
        } catch (const VerificationError& e) {
            SearchStats st = search.finish(Verdict::error);
            st.message = e.what();
            st.witness = search.path_to(i);
            return st;
        }
        search.schedule(batch, search.size());
    }
    return search.finish(Verdict::unreachable);
}

bool is_initial(const Region& r, const TimedAutomaton& ta) {
    if (!ta.locations[r.loc[0]].initial || !r.frac.empty() || !r.unbounded.empty()) return false;
    return std::all_of(r.h.begin(), r.h.end(), [](int v) { return v == 0; });
}

}  // namespace

SearchStats forward_reach(const Network& net, const Query& query, const SearchConfig& cfg) {
    return run_forward(net, query, cfg, nullptr);
}

SearchStats explore_full(const Network& net, const SearchConfig& cfg) {
    Query q;
    q.falsum = true;
    return run_forward(net, q, cfg, nullptr);
}

std::vector<SearchState> reachable_states(const Network& net, const SearchConfig& cfg) {
    std::vector<SearchState> all;
    Query q;
    q.falsum = true;
    run_forward(net, q, cfg, &all);
    return all;
}

SearchStats backward_reach(const TimedAutomaton& ta, const RegionPattern& pattern,
                           const SearchConfig& cfg_in) {
    SearchConfig cfg = cfg_in;
    cfg.direction = Direction::backward;
    Search search(cfg);

    for (const auto& t : ta.transitions)
        if (!t.guard.ints.empty() || !t.updates.empty() || t.sync) {
            SearchStats st = search.finish(Verdict::error);
            st.message = "backward exploration needs a single automaton without integer variables or channels";
            return st;
        }

    std::vector<std::string> diags;
    const auto seeds = enumerate_pattern(pattern, ta, &diags);
    if (seeds.empty()) {
        SearchStats st = search.finish(Verdict::unreachable);
        st.message = diags.empty() ? "pattern expands to no region" : diags.front();
        return st;
    }
    for (const auto& r : seeds) search.add({r, {}}, kNoParent, {});
    search.schedule(0, search.size());

    while (!search.empty()) {
        if (search.over_limit()) return search.finish(Verdict::limit_exceeded);
        const std::size_t i = search.pop();
        const Region cur = search.node(i).state.region;
        if (is_initial(cur, ta)) {
            SearchStats st = search.finish(Verdict::reachable);
            // parent links point towards the seed, i.e. forward in time
            Move into{};
            for (std::size_t j = i; j != kNoParent; j = search.node(j).parent) {
                st.witness.push_back({search.node(j).state, into});
                into = search.node(j).move;
            }
            return st;
        }
        const std::size_t batch = search.size();
        for (auto& p : find_immediate_delay_predecessors(cur)) search.add({std::move(p), {}}, i, {});
        for (int t = 0; t < static_cast<int>(ta.transitions.size()); ++t)
            for (auto& p : find_discrete_predecessors(cur, ta, ta.transitions[t]))
                search.add({std::move(p), {}}, i, {0, t, -1, -1});
        search.schedule(batch, search.size());
    }
    return search.finish(Verdict::unreachable);
}

std::optional<Region> delay_predecessor_n(const Region& region, std::int64_t n, bool skip_periods) {
    Region cur = region;
    std::int64_t left = n;
    if (skip_periods && region.ell() == 0 && region.r() > 0) {
        if (auto jumped = delay_predecessor_skip(region, n)) {
            cur = std::move(*jumped);
            left = n % period(region);
        }
    }
    for (; left > 0; --left) {
        auto preds = find_immediate_delay_predecessors(cur);
        if (preds.size() != 1) return std::nullopt;
        cur = std::move(preds.front());
    }
    return cur;
}

}  // namespace tarzan
