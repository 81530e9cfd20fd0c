#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tarzan {

struct Region;

/// Comparison operator shared by clock atoms and integer atoms.
enum class Rel { lt, le, eq, ge, gt };

const char* rel_text(Rel r);
bool compare(std::int64_t lhs, Rel r, std::int64_t rhs);

/// Where a declaration came from. Positions never take part in equality.
struct SourcePos {
    std::string file;
    int line = 0;
    int col = 0;

    friend bool operator==(const SourcePos&, const SourcePos&) { return true; }
    std::string str() const;
};

struct ClockConstraint {
    int clock = 0;  // component-local clock id
    Rel rel = Rel::eq;
    int bound = 0;

    bool operator==(const ClockConstraint&) const = default;
};

/// Integer expression over shared variables: literals, variables, + - * and unary minus.
struct Expr {
    enum class Kind { lit, var, add, sub, mul, neg };
    Kind kind = Kind::lit;
    std::int64_t value = 0;
    int var = -1;
    std::vector<Expr> args;

    static Expr literal(std::int64_t v);
    static Expr variable(int id);
    static Expr binary(Kind k, Expr lhs, Expr rhs);
    static Expr negate(Expr e);

    bool operator==(const Expr&) const = default;
};

using Valuation = std::vector<std::int64_t>;

std::int64_t eval(const Expr& e, const Valuation& vars);

struct IntAtom {
    Expr lhs;
    Rel rel = Rel::eq;
    Expr rhs;
    SourcePos pos;

    bool operator==(const IntAtom&) const = default;
};

/// Conjunction of clock atoms and integer atoms; empty means true.
struct Guard {
    std::vector<ClockConstraint> clocks;
    std::vector<IntAtom> ints;
    SourcePos pos;

    bool empty() const { return clocks.empty() && ints.empty(); }
    bool operator==(const Guard&) const = default;
};

struct Sync {
    int channel = 0;
    bool emit = true;

    bool operator==(const Sync&) const = default;
};

struct Update {
    int var = 0;
    Expr value;

    bool operator==(const Update&) const = default;
};

struct Transition {
    int source = 0;
    int target = 0;
    std::string action;
    std::optional<Sync> sync;
    Guard guard;
    std::vector<int> resets;
    std::vector<Update> updates;
    SourcePos pos;

    bool operator==(const Transition&) const = default;
};

struct Location {
    std::string name;
    bool initial = false;
    bool urgent = false;
    Guard invariant;
    SourcePos pos;

    bool operator==(const Location&) const = default;
};

struct Clock {
    std::string name;
    int max_const = 0;
    SourcePos pos;

    bool operator==(const Clock&) const = default;
};

struct IntVar {
    std::string name;
    std::int64_t init = 0;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    SourcePos pos;

    bool operator==(const IntVar&) const = default;
};

struct TimedAutomaton {
    std::string name;
    std::vector<Clock> clocks;
    std::vector<Location> locations;
    std::vector<Transition> transitions;
    SourcePos pos;

    int find_location(const std::string& n) const;
    int find_clock(const std::string& n) const;
    std::vector<int> max_constants() const;
    std::vector<int> initial_locations() const;

    bool operator==(const TimedAutomaton&) const = default;
};

/// Parallel composition; variables and channels are shared by all components.
struct Network {
    std::vector<TimedAutomaton> components;
    std::vector<IntVar> vars;
    std::vector<std::string> channels;

    int find_component(const std::string& n) const;
    int find_var(const std::string& n) const;
    int find_channel(const std::string& n) const;

    int clock_count() const;
    int clock_offset(int component) const;
    std::vector<int> max_constants() const;
    /// "Comp.x" for every global clock id.
    std::vector<std::string> clock_names() const;
    Valuation initial_vars() const;

    bool operator==(const Network&) const = default;
};

Network as_network(TimedAutomaton ta);

struct LocationAtom {
    int component = 0;
    int location = 0;

    bool operator==(const LocationAtom&) const = default;
};

/// Conjunction of location predicates and integer comparisons.
struct Query {
    std::vector<LocationAtom> locations;
    std::vector<IntAtom> ints;
    bool falsum = false;

    bool operator==(const Query&) const = default;
};

struct Diagnostic {
    SourcePos pos;
    std::string message;

    std::string str() const;
};

/// Thrown for references to unknown clocks or variables.
struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An update assigned a value outside the declared range.
struct RangeError : std::runtime_error {
    RangeError(const std::string& var, std::int64_t value);
    std::string var;
    std::int64_t value;
};

std::vector<Diagnostic> validate_model(const Network& net);

/// Clock atoms only; clock ids are shifted by clock_offset into the region's clock universe.
bool satisfies_clock_guard(const Region& region, const Guard& guard, int clock_offset = 0);
bool satisfies_int_guard(const Valuation& vars, const Guard& guard);
bool satisfies_guard(const Region& region, const Valuation& vars, const Guard& guard,
                     int clock_offset = 0);
bool satisfies_invariant(const Region& region, const Network& net);
bool satisfies_invariant(const Region& region, const Network& net, const std::vector<int>& locations);

struct SearchState;
bool eval_query(const Query& query, const SearchState& state);

}  // namespace tarzan
