#include "tarzan/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tarzan/kinematics.hpp"

namespace tarzan::oracle {

namespace {

std::int64_t floor_of(const Rational& q) {
    std::int64_t f = q.numerator() / q.denominator();
    if (q.numerator() < 0 && f * q.denominator() != q.numerator()) --f;
    return f;
}

Rational frac_of(const Rational& q) { return q - Rational(floor_of(q)); }

}  // namespace

Region abstract(const ClockValues& values, const std::vector<int>& locations, const std::vector<int>& cm,
                const std::vector<Rational>& tags) {
    const int n = static_cast<int>(values.size());
    Region r;
    r.loc = locations;
    r.h.assign(n, 0);
    std::map<Rational, ClockSet> by_frac, by_tag;
    int unbounded = 0;
    for (int x = 0; x < n; ++x) {
        if (values[x] < Rational(0)) throw std::invalid_argument("negative clock value");
        if (values[x] > Rational(cm[x])) {
            r.h[x] = cm[x];
            ++unbounded;
            by_tag[tags.empty() ? Rational(0) : tags.at(x)].push_back(x);
            continue;
        }
        r.h[x] = static_cast<int>(floor_of(values[x]));
        const Rational f = frac_of(values[x]);
        if (f == Rational(0))
            r.unit.push_back(x);
        else
            by_frac[f].push_back(x);
    }
    if (unbounded >= 2 && tags.empty()) throw std::invalid_argument("unbounded order tags are required");
    for (auto& [t, s] : by_tag) r.unbounded.push_back(s);
    for (auto& [f, s] : by_frac) r.frac.push_back(s);
    canonicalize(r);
    return r;
}

Sample sample(const Region& region, const std::vector<int>& cm) {
    const int n = region.clock_count();
    Sample s;
    s.values.assign(n, Rational(0));
    s.tags.assign(n, Rational(0));
    for (int x : region.unit) s.values[x] = Rational(region.h[x]);
    const int r = region.r();
    for (int i = 0; i < r; ++i)
        for (int x : region.frac[i]) s.values[x] = Rational(region.h[x]) + Rational(i + 1, r + 1);
    for (int k = 0; k < region.ell(); ++k)
        for (int x : region.unbounded[k]) {
            s.values[x] = Rational(cm[x] + k + 1);
            s.tags[x] = Rational(k + 1);
        }
    return s;
}

bool holds(const ClockValues& values, const ClockConstraint& a, int clock_offset) {
    const Rational& v = values.at(a.clock + clock_offset);
    const Rational c(a.bound);
    switch (a.rel) {
        case Rel::lt: return v < c;
        case Rel::le: return v <= c;
        case Rel::eq: return v == c;
        case Rel::ge: return v >= c;
        case Rel::gt: return v > c;
    }
    return false;
}

std::vector<Region> delay_sweep(const Region& region, const std::vector<int>& cm) {
    const Sample s = sample(region, cm);
    const int n = region.clock_count();
    const Rational step(1, 2 * (region.r() + 1));
    const int top = cm.empty() ? 0 : *std::max_element(cm.begin(), cm.end());
    std::vector<Region> out;
    for (Rational d(0); d <= Rational(top + 2); d += step) {
        ClockValues v(n);
        std::vector<Rational> tags(n);
        for (int x = 0; x < n; ++x) {
            v[x] = s.values[x] + d;
            if (s.values[x] > Rational(cm[x]))
                tags[x] = s.tags[x];
            else
                tags[x] = Rational(region.ell() + 1) + (Rational(cm[x]) - s.values[x]);
        }
        Region a = abstract(v, region.loc, cm, tags);
        if (out.empty() || !(out.back() == a)) out.push_back(std::move(a));
    }
    return out;
}

std::vector<Region> enumerate_regions(const std::vector<int>& locations, const std::vector<int>& cm) {
    const int n = static_cast<int>(cm.size());
    std::vector<Region> out;
    // status per clock: 0 unit, 1 fractional, 2 unbounded
    std::vector<int> status(n, 0);
    while (true) {
        ClockSet unit, fr, unb;
        bool ok = true;
        for (int x = 0; x < n; ++x) {
            if (status[x] == 0) unit.push_back(x);
            if (status[x] == 1) {
                fr.push_back(x);
                ok = ok && cm[x] >= 1;
            }
            if (status[x] == 2) unb.push_back(x);
        }
        if (ok) {
            const auto unb_orders = ordered_partitions(unb);
            const auto frac_orders = ordered_partitions(fr);
            // integer parts: unit clocks 0..cm, fractional clocks 0..cm-1
            std::vector<int> h(n, 0);
            for (int x : unb) h[x] = cm[x];
            while (true) {
                for (const auto& uo : unb_orders)
                    for (const auto& fo : frac_orders) {
                        Region r;
                        r.loc = locations;
                        r.h = h;
                        r.unbounded = uo;
                        r.unit = unit;
                        r.frac = fo;
                        canonicalize(r);
                        out.push_back(std::move(r));
                    }
                int x = 0;
                for (; x < n; ++x) {
                    const int lim = status[x] == 0 ? cm[x] : status[x] == 1 ? cm[x] - 1 : cm[x];
                    if (status[x] != 2 && h[x] < lim) {
                        ++h[x];
                        break;
                    }
                    if (status[x] != 2) h[x] = 0;
                }
                if (x == n) break;
            }
        }
        int x = 0;
        for (; x < n; ++x) {
            if (++status[x] < 3) break;
            status[x] = 0;
        }
        if (x == n) break;
    }
    return out;
}

Replay replay_trace(const std::vector<TraceStep>& trace, const Network& net) {
    Replay out;
    if (trace.empty()) return out;
    const auto cm = net.max_constants();
    const int n = net.clock_count();
    ClockValues v(n, Rational(0));
    std::vector<Rational> tags(n, Rational(0));
    Rational now(0);

    auto check = [&](const Region& expected, std::size_t k) {
        if (!(abstract(v, expected.loc, cm, tags) == expected))
            throw std::logic_error("trace step " + std::to_string(k) + " cannot be realised");
    };
    check(trace[0].state.region, 0);
    out.values.push_back(v);
    out.time.push_back(now);

    for (std::size_t k = 1; k < trace.size(); ++k) {
        const Region& prev = trace[k - 1].state.region;
        const Move& m = trace[k].move;
        if (m.is_delay()) {
            Rational top(0);
            bool any_frac = false;
            for (int x = 0; x < n; ++x)
                if (v[x] <= Rational(cm[x]) && frac_of(v[x]) != Rational(0)) {
                    top = std::max(top, frac_of(v[x]));
                    any_frac = true;
                }
            Rational d;
            if (!prev.unit.empty())
                d = any_frac ? (Rational(1) - top) / Rational(2) : Rational(1, 2);
            else
                d = Rational(1) - top;
            for (int x = 0; x < n; ++x) {
                const bool was_bounded = v[x] <= Rational(cm[x]);
                v[x] += d;
                if (was_bounded && v[x] > Rational(cm[x])) tags[x] = now + d - (v[x] - Rational(cm[x]));
            }
            now += d;
        } else {
            auto apply = [&](int c, int t) {
                const int off = net.clock_offset(c);
                const auto& tr = net.components[c].transitions[t];
                for (const auto& a : tr.guard.clocks)
                    if (!holds(v, a, off)) throw std::logic_error("guard fails in concrete replay");
                for (int x : tr.resets) v[x + off] = Rational(0);
            };
            apply(m.component, m.transition);
            if (m.partner_component >= 0) apply(m.partner_component, m.partner_transition);
        }
        check(trace[k].state.region, k);
        out.values.push_back(v);
        out.time.push_back(now);
    }
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t fubini(int n) {
    std::vector<std::uint64_t> a(n + 1, 0);
    a[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int i = 1; i <= m; ++i) a[m] += binomial(m, i) * a[m - i];
    return a[n];
}

std::uint64_t stirling2(int n, int k) {
    if (n < 0 || k < 0) return 0;
    // (1/k!) * sum_{d=0}^{k} (-1)^d C(k,d) (k-d)^n
    __int128 sum = 0;
    for (int d = 0; d <= k; ++d) {
        __int128 p = 1;
        for (int i = 0; i < n; ++i) p *= (k - d);
        const __int128 term = static_cast<__int128>(binomial(k, d)) * p;
        sum += (d % 2 == 0) ? term : -term;
    }
    __int128 fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    return static_cast<std::uint64_t>(sum / fact);
}

namespace {

std::uint64_t ordered_sum(int m) {
    std::uint64_t s = 0;
    std::uint64_t fact = 1;
    for (int w = 0; w <= m; ++w) {
        if (w > 0) fact *= static_cast<std::uint64_t>(w);
        s += fact * stirling2(m, w);
    }
    return s;
}

std::uint64_t power(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

std::uint64_t bounded_sum(int n, int u, int cm, bool choose_from_remaining) {
    std::uint64_t s = 0;
    for (int i = 0; i <= n - u; ++i) {
        const int f = n - u - i;
        const std::uint64_t choose = choose_from_remaining ? binomial(n - u, f) : binomial(n, f);
        s += power(cm + 1, i) * power(cm, f) * choose * ordered_sum(f);
    }
    return s;
}

}  // namespace

std::uint64_t lemma1_bound(int n, int cm) {
    std::uint64_t total = 0;
    for (int u = 0; u <= n; ++u) total += bounded_sum(n, u, cm, false) * binomial(n, u) * ordered_sum(u);
    return total;
}

std::uint64_t region_count(int n, int cm) {
    std::uint64_t total = 0;
    for (int u = 0; u <= n; ++u) total += bounded_sum(n, u, cm, true) * binomial(n, u) * ordered_sum(u);
    return total;
}

}  // namespace tarzan::oracle
