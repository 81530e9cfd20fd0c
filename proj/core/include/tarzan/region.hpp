#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tarzan/model.hpp"

namespace tarzan {

/// Sorted list of global clock ids.
using ClockSet = std::vector<int>;

/// Location tuple, integer parts and the ordered clock partition.
///
/// unbounded[0] is X-1 (earliest to become unbounded), unbounded.back() is X-l.
/// frac[0] is X1 (smallest fractional part), frac.back() is Xr.
struct Region {
    std::vector<int> loc;
    std::vector<int> h;
    std::vector<ClockSet> unbounded;
    ClockSet unit;
    std::vector<ClockSet> frac;

    int ell() const { return static_cast<int>(unbounded.size()); }
    int r() const { return static_cast<int>(frac.size()); }
    int clock_count() const { return static_cast<int>(h.size()); }

    bool operator==(const Region&) const = default;
};

enum class RegionClass { Z, P, M, U };
enum class ClockStatus { unit, fractional, unbounded };

const char* class_name(RegionClass c);

ClockStatus clock_status(const Region& region, int clock);
bool exactly_zero(const Region& region, int clock);

Region initial_region(const Network& net, const std::vector<int>& locations);
Region initial_region(const TimedAutomaton& ta);

RegionClass classify(const Region& region);

/// Sorts every set and drops empty non-unit sets.
void canonicalize(Region& region);
Region canonicalized(Region region);

/// Structural check against the per-clock maximum constants; fills why on failure.
bool valid_region(const Region& region, const std::vector<int>& cm, std::string* why = nullptr);

using RegionKey = std::vector<std::int32_t>;

RegionKey canonical_key(const Region& region);

struct KeyHash {
    std::size_t operator()(const RegionKey& k) const noexcept;
};

/// Region paired with the integer valuation.
struct SearchState {
    Region region;
    Valuation vars;

    bool operator==(const SearchState&) const = default;
};

RegionKey state_key(const SearchState& state);

/// Names used to print regions: one location list per component plus the clock names.
struct NameTable {
    std::vector<std::string> components;
    std::vector<std::vector<std::string>> locations;
    std::vector<std::string> clocks;

    static NameTable of(const Network& net);
    static NameTable of(const TimedAutomaton& ta);
};

/// `{q, h(x)=2 h(y)=2, X-2={w} X-1={z} X0={} X1={x,y}}`
std::string render_region(const Region& region, const NameTable& names);
std::string render_state(const SearchState& state, const NameTable& names, const Network& net);

}  // namespace tarzan
