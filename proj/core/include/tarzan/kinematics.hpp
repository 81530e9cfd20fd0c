#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tarzan/model.hpp"
#include "tarzan/region.hpp"

namespace tarzan {

/// Next region in the time-elapse chain; absent for class U.
std::optional<Region> immediate_delay_successor(const Region& region, const std::vector<int>& cm);

/// Fires one transition on the clock part; clock ids of t are shifted by clock_offset.
/// Only the clock guard is checked. Returns nothing if it is not satisfied.
std::optional<Region> fire_transition(const Region& region, const Transition& t, int component,
                                      int clock_offset);

/// Applies resets: clocks go to h = 0 in the unit set.
Region reset_clocks(const Region& region, const std::vector<int>& clocks, int clock_offset);

/// Single automaton; results sorted by canonical key.
std::vector<Region> find_discrete_successors(const Region& region, const TimedAutomaton& ta);

std::vector<Region> find_immediate_delay_predecessors(const Region& region);

std::vector<Region> find_discrete_predecessors(const Region& region, const TimedAutomaton& ta);
/// Predecessors over one transition only.
std::vector<Region> find_discrete_predecessors(const Region& region, const TimedAutomaton& ta,
                                               const Transition& t);

/// All ways of inserting the clocks of X into the sets at positions lo..hi (negative
/// positions are unbounded sets, X-1 = -1) without reordering those sets.
/// With lo >= 0, clocks with H(x) = cm(x) go straight into X0 and no group may
/// precede X0. With lo < 0 the range must lie entirely among the unbounded sets,
/// and lo > hi denotes an empty range. On the bounded side lo = hi + 1 >= 1 is the
/// empty range just after X_hi.
std::vector<Region> part_regs(const Region& region, int lo, int hi, const ClockSet& X,
                              const std::vector<int>& H, const std::vector<int>& cm);

/// Every ordered partition of items (Fubini many).
std::vector<std::vector<ClockSet>> ordered_partitions(const ClockSet& items);

/// Length of the structural cycle of a bounded region's predecessor chain.
/// Throws std::invalid_argument unless ell == 0 and r > 0.
int period(const Region& region);

/// Skips floor(n / period) whole periods of delay predecessors; absent when the
/// chain would touch a clock at exact zero or the region has no period.
std::optional<Region> delay_predecessor_skip(const Region& region, std::int64_t n);

/// Per-clock description of a target set of regions.
struct ClockPattern {
    enum class Kind { exact, open, unbounded };
    Kind kind = Kind::exact;
    int value = 0;  // exact value, or lower end of the open unit interval
    bool set = false;
};

struct RegionPattern {
    int location = 0;
    std::vector<ClockPattern> clocks;
    /// Earliest first; empty means every order.
    std::vector<ClockSet> unbounded_order;
    /// Smallest fraction first; empty means every order.
    std::vector<ClockSet> frac_order;
};

std::vector<Region> enumerate_pattern(const RegionPattern& pattern, const TimedAutomaton& ta,
                                      std::vector<std::string>* diagnostics = nullptr);

void sort_unique(std::vector<Region>& regions);

}  // namespace tarzan
