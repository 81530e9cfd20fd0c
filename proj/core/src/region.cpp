#include "tarzan/region.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tarzan {

namespace {

bool contains(const ClockSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

void append_set(std::ostringstream& os, const ClockSet& s, const NameTable& names) {
    os << '{';
    std::vector<std::string> sorted;
    for (int x : s) sorted.push_back(names.clocks.at(x));
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) os << (i ? "," : "") << sorted[i];
    os << '}';
}

}  // namespace

const char* class_name(RegionClass c) {
    switch (c) {
        case RegionClass::Z: return "Z";
        case RegionClass::P: return "P";
        case RegionClass::M: return "M";
        case RegionClass::U: return "U";
    }
    return "?";
}

ClockStatus clock_status(const Region& region, int clock) {
    if (contains(region.unit, clock)) return ClockStatus::unit;
    for (const auto& s : region.unbounded)
        if (contains(s, clock)) return ClockStatus::unbounded;
    return ClockStatus::fractional;
}

bool exactly_zero(const Region& region, int clock) {
    return region.h[clock] == 0 && contains(region.unit, clock);
}

Region initial_region(const Network& net, const std::vector<int>& locations) {
    if (locations.size() != net.components.size())
        throw ModelError("location tuple does not match the number of automata");
    for (std::size_t c = 0; c < locations.size(); ++c) {
        const auto& ta = net.components[c];
        if (locations[c] < 0 || locations[c] >= static_cast<int>(ta.locations.size()) ||
            !ta.locations[locations[c]].initial)
            throw ModelError("location is not initial in automaton " + ta.name);
    }
    Region r;
    r.loc = locations;
    const int n = net.clock_count();
    r.h.assign(n, 0);
    for (int x = 0; x < n; ++x) r.unit.push_back(x);
    return r;
}

Region initial_region(const TimedAutomaton& ta) {
    const auto init = ta.initial_locations();
    if (init.empty()) throw ModelError("automaton " + ta.name + " has no initial location");
    Region r;
    r.loc = {init.front()};
    r.h.assign(ta.clocks.size(), 0);
    for (int x = 0; x < static_cast<int>(ta.clocks.size()); ++x) r.unit.push_back(x);
    return r;
}

RegionClass classify(const Region& region) {
    const bool x0 = !region.unit.empty();
    if (region.frac.empty()) return x0 ? RegionClass::Z : RegionClass::U;
    return x0 ? RegionClass::M : RegionClass::P;
}

void canonicalize(Region& region) {
    auto tidy = [](std::vector<ClockSet>& sets) {
        for (auto& s : sets) std::sort(s.begin(), s.end());
        sets.erase(std::remove_if(sets.begin(), sets.end(), [](const ClockSet& s) { return s.empty(); }),
                   sets.end());
    };
    tidy(region.unbounded);
    tidy(region.frac);
    std::sort(region.unit.begin(), region.unit.end());
}

Region canonicalized(Region region) {
    canonicalize(region);
    return region;
}

bool valid_region(const Region& region, const std::vector<int>& cm, std::string* why) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    const int n = region.clock_count();
    if (static_cast<int>(cm.size()) != n) return fail("clock count mismatch");
    std::vector<int> seen(n, 0);
    auto visit = [&](const ClockSet& s, bool allow_empty) -> bool {
        if (s.empty() && !allow_empty) return false;
        if (!std::is_sorted(s.begin(), s.end())) return false;
        for (int x : s) {
            if (x < 0 || x >= n) return false;
            ++seen[x];
        }
        return true;
    };
    for (const auto& s : region.unbounded)
        if (!visit(s, false)) return fail("bad unbounded set");
    if (!visit(region.unit, true)) return fail("bad unit set");
    for (const auto& s : region.frac)
        if (!visit(s, false)) return fail("bad fractional set");
    for (int x = 0; x < n; ++x)
        if (seen[x] != 1) return fail("sets do not partition the clocks");
    for (const auto& s : region.unbounded)
        for (int x : s)
            if (region.h[x] != cm[x]) return fail("unbounded clock with h != max");
    for (int x : region.unit)
        if (region.h[x] < 0 || region.h[x] > cm[x]) return fail("unit clock out of range");
    for (const auto& s : region.frac)
        for (int x : s)
            if (region.h[x] < 0 || region.h[x] > cm[x] - 1) return fail("fractional clock out of range");
    return true;
}

RegionKey canonical_key(const Region& region) {
    RegionKey k;
    k.reserve(region.loc.size() + 2 * region.h.size() + region.unbounded.size() + region.frac.size() + 4);
    for (int l : region.loc) k.push_back(l);
    k.push_back(-1);
    for (int v : region.h) k.push_back(v);
    k.push_back(-1);
    // one group tag per clock: -(position) for unbounded, 0 for unit, +position for fractional
    const std::size_t base = k.size();
    k.resize(base + region.h.size(), 0);
    for (std::size_t i = 0; i < region.unbounded.size(); ++i)
        for (int x : region.unbounded[i]) k[base + x] = -static_cast<std::int32_t>(i + 1);
    for (std::size_t i = 0; i < region.frac.size(); ++i)
        for (int x : region.frac[i]) k[base + x] = static_cast<std::int32_t>(i + 1);
    return k;
}

std::size_t KeyHash::operator()(const RegionKey& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : k) {
        h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
        h *= 1099511628211ull;
    }
    return h;
}

RegionKey state_key(const SearchState& state) {
    RegionKey k = canonical_key(state.region);
    k.push_back(-2);
    for (auto v : state.vars) {
        k.push_back(static_cast<std::int32_t>(v));
        k.push_back(static_cast<std::int32_t>(v >> 32));
    }
    return k;
}

NameTable NameTable::of(const Network& net) {
    if (net.components.size() == 1) return of(net.components.front());
    NameTable t;
    for (const auto& c : net.components) {
        t.components.push_back(c.name);
        std::vector<std::string> locs;
        for (const auto& l : c.locations) locs.push_back(l.name);
        t.locations.push_back(std::move(locs));
    }
    t.clocks = net.clock_names();
    return t;
}

NameTable NameTable::of(const TimedAutomaton& ta) {
    NameTable t;
    t.components.push_back(ta.name);
    std::vector<std::string> locs;
    for (const auto& l : ta.locations) locs.push_back(l.name);
    t.locations.push_back(std::move(locs));
    for (const auto& c : ta.clocks) t.clocks.push_back(c.name);
    return t;
}

std::string render_region(const Region& region, const NameTable& names) {
    std::ostringstream os;
    os << '{';
    if (names.locations.size() == 1) {
        os << names.locations[0].at(region.loc.at(0));
    } else {
        os << '<';
        for (std::size_t c = 0; c < region.loc.size(); ++c)
            os << (c ? "," : "") << names.components.at(c) << '.' << names.locations.at(c).at(region.loc[c]);
        os << '>';
    }
    os << ", ";
    for (std::size_t x = 0; x < region.h.size(); ++x)
        os << (x ? " " : "") << "h(" << names.clocks.at(x) << ")=" << region.h[x];
    os << ", ";
    bool first = true;
    for (int i = region.ell() - 1; i >= 0; --i) {
        os << (first ? "" : " ") << "X-" << (i + 1) << '=';
        append_set(os, region.unbounded[i], names);
        first = false;
    }
    os << (first ? "" : " ") << "X0=";
    append_set(os, region.unit, names);
    for (int i = 0; i < region.r(); ++i) {
        os << " X" << (i + 1) << '=';
        append_set(os, region.frac[i], names);
    }
    os << '}';
    return os.str();
}

std::string render_state(const SearchState& state, const NameTable& names, const Network& net) {
    std::string s = render_region(state.region, names);
    if (state.vars.empty()) return s;
    std::ostringstream os;
    os << s << " [";
    for (std::size_t i = 0; i < state.vars.size(); ++i)
        os << (i ? " " : "") << net.vars.at(i).name << '=' << state.vars[i];
    os << ']';
    return os.str();
}

}  // namespace tarzan
