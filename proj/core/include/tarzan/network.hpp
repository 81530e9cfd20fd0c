#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tarzan/model.hpp"
#include "tarzan/region.hpp"

namespace tarzan {

/// Update out of range while firing a transition; carries the source state.
struct VerificationError : std::runtime_error {
    VerificationError(const std::string& what, SearchState state);
    SearchState state;
};

/// One initial state per combination of initial locations whose invariants hold.
std::vector<SearchState> initial_states(const Network& net);

std::optional<SearchState> network_delay_successor(const SearchState& state, const Network& net);

/// How a successor was produced; component == -1 means a delay step.
struct Move {
    int component = -1;
    int transition = -1;
    int partner_component = -1;
    int partner_transition = -1;

    bool is_delay() const { return component < 0; }
    std::string describe(const Network& net) const;
};

struct Successor {
    SearchState state;
    Move move;
};

/// Internal moves first (component order, then declaration order), then handshakes.
/// Duplicates are dropped keeping the first occurrence.
std::vector<Successor> network_discrete_moves(const SearchState& state, const Network& net);
std::vector<SearchState> network_discrete_successors(const SearchState& state, const Network& net);

/// Applies an ordered list of updates; throws RangeError on a value outside its range.
void apply_updates(Valuation& vars, const std::vector<Update>& updates, const Network& net);

}  // namespace tarzan
