#include "tarzan/kinematics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tarzan {

namespace {

void erase_clock(std::vector<ClockSet>& sets, int x) {
    for (auto& s : sets) {
        auto it = std::lower_bound(s.begin(), s.end(), x);
        if (it != s.end() && *it == x) {
            s.erase(it);
            return;
        }
    }
}

void insert_sorted(ClockSet& s, int x) {
    auto it = std::lower_bound(s.begin(), s.end(), x);
    if (it == s.end() || *it != x) s.insert(it, x);
}

ClockSet merged(const ClockSet& a, const ClockSet& b) {
    ClockSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Removes clocks from every set of the region (they are re-inserted by the caller).
void detach(Region& r, const ClockSet& clocks) {
    for (int x : clocks) {
        erase_clock(r.unbounded, x);
        auto it = std::lower_bound(r.unit.begin(), r.unit.end(), x);
        if (it != r.unit.end() && *it == x) r.unit.erase(it);
        erase_clock(r.frac, x);
    }
    canonicalize(r);
}

/// All ways to place ordered groups among existing sets: every group either merges
/// into one existing set or becomes a new set in a gap; groups keep their order.
std::vector<std::vector<ClockSet>> interleave(const std::vector<ClockSet>& existing,
                                              const std::vector<ClockSet>& groups,
                                              bool allow_leading_gap) {
    const int m = static_cast<int>(existing.size());
    const int g = static_cast<int>(groups.size());
    std::vector<std::vector<ClockSet>> out;
    std::vector<int> pos(g, 0);

    auto build = [&]() {
        std::vector<ClockSet> seq;
        for (int p = 0; p <= 2 * m; ++p) {
            if (p % 2 == 1) {
                ClockSet s = existing[(p - 1) / 2];
                for (int i = 0; i < g; ++i)
                    if (pos[i] == p) s = merged(s, groups[i]);
                seq.push_back(std::move(s));
            } else {
                for (int i = 0; i < g; ++i)
                    if (pos[i] == p) seq.push_back(groups[i]);
            }
        }
        out.push_back(std::move(seq));
    };

    auto rec = [&](auto&& self, int i, int min_pos) -> void {
        if (i == g) {
            build();
            return;
        }
        for (int p = min_pos; p <= 2 * m; ++p) {
            if (p == 0 && !allow_leading_gap) continue;
            pos[i] = p;
            self(self, i + 1, p % 2 == 0 ? p : p + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

void set_partitions(const ClockSet& items, std::size_t i, std::vector<ClockSet>& cur,
                    std::vector<std::vector<ClockSet>>& out) {
    if (i == items.size()) {
        out.push_back(cur);
        return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
        cur[b].push_back(items[i]);
        set_partitions(items, i + 1, cur, out);
        cur[b].pop_back();
    }
    cur.push_back({items[i]});
    set_partitions(items, i + 1, cur, out);
    cur.pop_back();
}

}  // namespace

void sort_unique(std::vector<Region>& regions) {
    std::vector<std::pair<RegionKey, std::size_t>> keyed;
    keyed.reserve(regions.size());
    for (std::size_t i = 0; i < regions.size(); ++i) keyed.emplace_back(canonical_key(regions[i]), i);
    std::sort(keyed.begin(), keyed.end());
    std::vector<Region> out;
    out.reserve(regions.size());
    for (std::size_t i = 0; i < keyed.size(); ++i)
        if (i == 0 || keyed[i].first != keyed[i - 1].first) out.push_back(std::move(regions[keyed[i].second]));
    regions = std::move(out);
}

std::optional<Region> immediate_delay_successor(const Region& region, const std::vector<int>& cm) {
    const RegionClass cls = classify(region);
    if (cls == RegionClass::U) return std::nullopt;
    Region out = region;
    if (cls == RegionClass::Z || cls == RegionClass::M) {
        ClockSet leaving, staying;
        for (int x : region.unit) (region.h[x] == cm[x] ? leaving : staying).push_back(x);
        out.unit.clear();
        if (!leaving.empty()) out.unbounded.push_back(std::move(leaving));
        if (!staying.empty()) out.frac.insert(out.frac.begin(), std::move(staying));
        return out;
    }
    ClockSet top = std::move(out.frac.back());
    out.frac.pop_back();
    for (int x : top) ++out.h[x];
    out.unit = std::move(top);
    return out;
}

Region reset_clocks(const Region& region, const std::vector<int>& clocks, int clock_offset) {
    Region out = region;
    ClockSet ids;
    for (int x : clocks) ids.push_back(x + clock_offset);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    detach(out, ids);
    for (int x : ids) {
        out.h[x] = 0;
        insert_sorted(out.unit, x);
    }
    return out;
}

std::optional<Region> fire_transition(const Region& region, const Transition& t, int component,
                                      int clock_offset) {
    if (region.loc.at(component) != t.source) return std::nullopt;
    if (!satisfies_clock_guard(region, t.guard, clock_offset)) return std::nullopt;
    Region out = reset_clocks(region, t.resets, clock_offset);
    out.loc[component] = t.target;
    return out;
}

std::vector<Region> find_discrete_successors(const Region& region, const TimedAutomaton& ta) {
    std::vector<Region> out;
    for (const auto& t : ta.transitions) {
        auto next = fire_transition(region, t, 0, 0);
        if (!next) continue;
        if (!satisfies_clock_guard(*next, ta.locations[t.target].invariant, 0)) continue;
        out.push_back(std::move(*next));
    }
    sort_unique(out);
    return out;
}

std::vector<Region> find_immediate_delay_predecessors(const Region& region) {
    for (int x : region.unit)
        if (region.h[x] == 0) return {};
    std::vector<Region> out;
    switch (classify(region)) {
        case RegionClass::U: {
            Region p = region;
            p.unit = std::move(p.unbounded.back());
            p.unbounded.pop_back();
            out.push_back(std::move(p));
            break;
        }
        case RegionClass::Z:
        case RegionClass::M: {
            Region p = region;
            for (int x : p.unit) --p.h[x];
            p.frac.push_back(std::move(p.unit));
            p.unit.clear();
            out.push_back(std::move(p));
            break;
        }
        case RegionClass::P: {
            Region base = region;
            base.unit = base.frac.front();
            base.frac.erase(base.frac.begin());
            out.push_back(base);
            if (region.ell() >= 1) {
                Region a = region;
                a.unit = std::move(a.unbounded.back());
                a.unbounded.pop_back();
                out.push_back(std::move(a));
                Region b = base;
                b.unit = merged(b.unit, b.unbounded.back());
                b.unbounded.pop_back();
                out.push_back(std::move(b));
            }
            break;
        }
    }
    sort_unique(out);
    return out;
}

std::vector<std::vector<ClockSet>> ordered_partitions(const ClockSet& items) {
    std::vector<std::vector<ClockSet>> parts;
    std::vector<ClockSet> cur;
    set_partitions(items, 0, cur, parts);
    std::vector<std::vector<ClockSet>> out;
    for (auto& p : parts) {
        for (auto& b : p) std::sort(b.begin(), b.end());
        std::sort(p.begin(), p.end());
        do {
            out.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return out;
}

std::vector<Region> part_regs(const Region& region, int lo, int hi, const ClockSet& X,
                              const std::vector<int>& H, const std::vector<int>& cm) {
    if (X.empty()) return {region};
    std::vector<Region> out;

    if (hi < 0) {
        // unbounded side: storage slice [-hi-1, -lo-1], earliest first
        const int first = -hi - 1;
        const int last = -lo - 1;
        if (first < 0 || last >= region.ell() + (lo > hi ? 1 : 0))
            throw std::invalid_argument("part_regs: range outside the unbounded sets");
        const int count = lo > hi ? 0 : last - first + 1;
        std::vector<ClockSet> existing(region.unbounded.begin() + first,
                                       region.unbounded.begin() + first + count);
        Region base = region;
        for (int x : X) base.h[x] = cm[x];
        for (const auto& groups : ordered_partitions(X)) {
            for (auto& seq : interleave(existing, groups, true)) {
                Region r = base;
                std::vector<ClockSet> unb(region.unbounded.begin(), region.unbounded.begin() + first);
                unb.insert(unb.end(), seq.begin(), seq.end());
                unb.insert(unb.end(), region.unbounded.begin() + first + count, region.unbounded.end());
                r.unbounded = std::move(unb);
                out.push_back(std::move(r));
            }
        }
        sort_unique(out);
        return out;
    }

    if (lo < 0 || lo > hi + 1 || hi > region.r() || (lo > hi && lo == 0))
        throw std::invalid_argument("part_regs: range outside the bounded sets");
    Region base = region;
    ClockSet rest;
    for (int x : X) {
        const int v = std::min(H[x], cm[x]);
        base.h[x] = v;
        if (lo >= 0 && H[x] >= cm[x])
            insert_sorted(base.unit, x);
        else
            rest.push_back(x);
    }
    if (rest.empty()) return {base};

    // positions: 0 = X0, i > 0 = X_i
    std::vector<ClockSet> existing;
    for (int p = lo; p <= hi; ++p) existing.push_back(p == 0 ? base.unit : base.frac[p - 1]);
    for (const auto& groups : ordered_partitions(rest)) {
        for (auto& seq : interleave(existing, groups, lo > 0)) {
            Region r = base;
            std::vector<ClockSet> frac_before(base.frac.begin(), base.frac.begin() + std::max(lo - 1, 0));
            std::vector<ClockSet> frac_after(base.frac.begin() + hi, base.frac.end());
            std::vector<ClockSet> mid = std::move(seq);
            if (lo == 0) {
                r.unit = mid.front();
                mid.erase(mid.begin());
            }
            r.frac = std::move(frac_before);
            r.frac.insert(r.frac.end(), mid.begin(), mid.end());
            r.frac.insert(r.frac.end(), frac_after.begin(), frac_after.end());
            out.push_back(std::move(r));
        }
    }
    sort_unique(out);
    return out;
}

std::vector<Region> find_discrete_predecessors(const Region& region, const TimedAutomaton& ta,
                                               const Transition& t) {
    std::vector<Region> out;
    if (region.loc.at(0) != t.target) return out;
    for (int y : t.resets)
        if (!exactly_zero(region, y)) return out;

    const std::vector<int> cm = ta.max_constants();
    std::vector<int> H = region.h;
    ClockSet pinned, forced_unbounded, bounded;
    std::set<int> resets(t.resets.begin(), t.resets.end());
    for (int y : resets) {
        bool done = false;
        for (const auto& a : t.guard.clocks)
            if (a.clock == y && a.rel == Rel::eq) {
                H[y] = a.bound;
                pinned.push_back(y);
                done = true;
                break;
            }
        if (done) continue;
        for (const auto& a : t.guard.clocks)
            if (a.clock == y && a.rel == Rel::gt && a.bound == cm[y]) {
                forced_unbounded.push_back(y);
                done = true;
                break;
            }
        if (!done) bounded.push_back(y);
    }

    Region base = region;
    ClockSet moving = forced_unbounded;
    moving.insert(moving.end(), bounded.begin(), bounded.end());
    std::sort(moving.begin(), moving.end());
    detach(base, moving);
    base.loc[0] = t.source;
    for (int y : pinned) base.h[y] = H[y];

    // integer candidates per bounded clock; cm + 1 stands for "was unbounded"
    std::vector<std::pair<int, int>> range;
    for (int y : bounded) {
        int lo = 0, hi = cm[y] + 1;
        for (const auto& a : t.guard.clocks) {
            if (a.clock != y) continue;
            switch (a.rel) {
                case Rel::lt: hi = std::min(hi, a.bound - 1); break;
                case Rel::le: hi = std::min(hi, a.bound); break;
                case Rel::gt:
                case Rel::ge: lo = std::max(lo, a.bound); break;
                case Rel::eq: break;
            }
        }
        range.emplace_back(lo, hi);
    }
    for (const auto& [lo, hi] : range)
        if (lo > hi) return out;

    std::vector<Region> candidates;
    std::vector<int> choice(bounded.size());
    for (std::size_t i = 0; i < bounded.size(); ++i) choice[i] = range[i].first;
    while (true) {
        std::vector<int> Hc = H;
        ClockSet to_unbounded = forced_unbounded, to_bounded;
        for (std::size_t i = 0; i < bounded.size(); ++i) {
            const int y = bounded[i];
            if (choice[i] > cm[y]) {
                to_unbounded.push_back(y);
                Hc[y] = cm[y];
            } else {
                to_bounded.push_back(y);
                Hc[y] = choice[i];
            }
        }
        std::sort(to_unbounded.begin(), to_unbounded.end());
        std::sort(to_bounded.begin(), to_bounded.end());
        for (const auto& u : part_regs(base, -base.ell(), -1, to_unbounded, Hc, cm))
            for (auto& b : part_regs(u, 0, u.r(), to_bounded, Hc, cm)) candidates.push_back(std::move(b));

        std::size_t i = 0;
        for (; i < bounded.size(); ++i) {
            if (choice[i] < range[i].second) {
                ++choice[i];
                break;
            }
            choice[i] = range[i].first;
        }
        if (i == bounded.size()) break;
    }

    for (auto& c : candidates)
        if (satisfies_clock_guard(c, t.guard, 0)) out.push_back(std::move(c));
    sort_unique(out);
    return out;
}

std::vector<Region> find_discrete_predecessors(const Region& region, const TimedAutomaton& ta) {
    std::vector<Region> out;
    for (const auto& t : ta.transitions) {
        auto part = find_discrete_predecessors(region, ta, t);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    sort_unique(out);
    return out;
}

int period(const Region& region) {
    if (region.ell() != 0 || region.r() == 0)
        throw std::invalid_argument("period needs a fully bounded region with fractional clocks");
    return region.unit.empty() ? 2 * region.r() : 2 * (region.r() + 1);
}

std::optional<Region> delay_predecessor_skip(const Region& region, std::int64_t n) {
    if (region.ell() != 0 || region.r() == 0 || n < 0) return std::nullopt;
    const std::int64_t k = n / period(region);
    if (k == 0) return region;
    for (int x : region.unit)
        if (region.h[x] <= k) return std::nullopt;
    for (const auto& s : region.frac)
        for (int x : s)
            if (region.h[x] < k) return std::nullopt;
    Region out = region;
    for (auto& v : out.h) v -= static_cast<int>(k);
    return out;
}

std::vector<Region> enumerate_pattern(const RegionPattern& pattern, const TimedAutomaton& ta,
                                      std::vector<std::string>* diagnostics) {
    auto fail = [&](const std::string& m) {
        if (diagnostics) diagnostics->push_back(m);
        return std::vector<Region>{};
    };
    const auto cm = ta.max_constants();
    const int n = static_cast<int>(cm.size());
    if (static_cast<int>(pattern.clocks.size()) != n) return fail("pattern does not cover every clock");
    if (pattern.location < 0 || pattern.location >= static_cast<int>(ta.locations.size()))
        return fail("unknown location");

    Region base;
    base.loc = {pattern.location};
    base.h.assign(n, 0);
    ClockSet open, unb;
    for (int x = 0; x < n; ++x) {
        const auto& p = pattern.clocks[x];
        if (!p.set) return fail("clock " + ta.clocks[x].name + " is not constrained");
        switch (p.kind) {
            case ClockPattern::Kind::exact:
                if (p.value < 0 || p.value > cm[x])
                    return fail("clock " + ta.clocks[x].name + " = " + std::to_string(p.value) +
                                " is outside [0, max]");
                base.h[x] = p.value;
                base.unit.push_back(x);
                break;
            case ClockPattern::Kind::open:
                if (p.value < 0 || p.value + 1 > cm[x])
                    return fail("clock " + ta.clocks[x].name + " interval exceeds the maximum constant");
                base.h[x] = p.value;
                open.push_back(x);
                break;
            case ClockPattern::Kind::unbounded:
                base.h[x] = cm[x];
                unb.push_back(x);
                break;
        }
    }

    auto check_order = [&](const std::vector<ClockSet>& order, const ClockSet& expected,
                           const char* what) -> bool {
        ClockSet seen;
        for (const auto& g : order) {
            if (g.empty()) return false;
            seen.insert(seen.end(), g.begin(), g.end());
        }
        std::sort(seen.begin(), seen.end());
        if (seen != expected) {
            if (diagnostics)
                diagnostics->push_back(std::string(what) + " order does not match the constrained clocks");
            return false;
        }
        return true;
    };

    std::vector<std::vector<ClockSet>> unb_orders, frac_orders;
    if (pattern.unbounded_order.empty()) {
        unb_orders = ordered_partitions(unb);
    } else {
        if (!check_order(pattern.unbounded_order, unb, "unbounded")) return {};
        std::vector<ClockSet> o = pattern.unbounded_order;
        for (auto& g : o) std::sort(g.begin(), g.end());
        unb_orders.push_back(std::move(o));
    }
    if (pattern.frac_order.empty()) {
        frac_orders = ordered_partitions(open);
    } else {
        if (!check_order(pattern.frac_order, open, "fractional")) return {};
        std::vector<ClockSet> o = pattern.frac_order;
        for (auto& g : o) std::sort(g.begin(), g.end());
        frac_orders.push_back(std::move(o));
    }

    std::vector<Region> out;
    for (const auto& u : unb_orders)
        for (const auto& f : frac_orders) {
            Region r = base;
            r.unbounded = u;
            r.frac = f;
            canonicalize(r);
            out.push_back(std::move(r));
        }
    sort_unique(out);
    return out;
}

}  // namespace tarzan
