#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tarzan/kinematics.hpp"
#include "tarzan/model.hpp"
#include "tarzan/network.hpp"
#include "tarzan/region.hpp"

namespace tarzan {

enum class Strategy { dfs, bfs };
enum class Direction { forward, backward };
enum class Verdict { reachable, unreachable, limit_exceeded, error };

const char* strategy_name(Strategy s);
const char* direction_name(Direction d);
const char* verdict_name(Verdict v);

struct SearchConfig {
    Strategy strategy = Strategy::dfs;
    Direction direction = Direction::forward;
    std::optional<std::size_t> max_regions;
    std::optional<std::int64_t> max_millis;
};

/// One step of a trace, in forward time order. The move led into this state.
struct TraceStep {
    SearchState state;
    Move move;
};

struct SearchStats {
    Verdict verdict = Verdict::unreachable;
    /// Size of the visited store (regions paired with integer valuations).
    std::size_t regions_stored = 0;
    /// Distinct location tuples with integer valuations among the stored regions.
    std::size_t states_stored = 0;
    double elapsed_ms = 0.0;
    Strategy strategy = Strategy::dfs;
    Direction direction = Direction::forward;
    std::vector<TraceStep> witness;
    std::string message;
};

SearchStats forward_reach(const Network& net, const Query& query, const SearchConfig& cfg);
SearchStats backward_reach(const TimedAutomaton& ta, const RegionPattern& pattern,
                           const SearchConfig& cfg);
SearchStats explore_full(const Network& net, const SearchConfig& cfg);

/// Every region visited by a full forward exploration, in visiting order.
std::vector<SearchState> reachable_states(const Network& net, const SearchConfig& cfg = {});

/// n-th region of the bounded delay-predecessor chain, stepping one region at a time
/// or skipping whole periods first; absent when the chain reaches time zero early.
std::optional<Region> delay_predecessor_n(const Region& region, std::int64_t n, bool skip_periods);

}  // namespace tarzan
