#include "tarzan/model.hpp"

#include <set>
#include <sstream>

#include "tarzan/region.hpp"

namespace tarzan {

const char* rel_text(Rel r) {
    switch (r) {
        case Rel::lt: return "<";
        case Rel::le: return "<=";
        case Rel::eq: return "==";
        case Rel::ge: return ">=";
        case Rel::gt: return ">";
    }
    return "?";
}

bool compare(std::int64_t lhs, Rel r, std::int64_t rhs) {
    switch (r) {
        case Rel::lt: return lhs < rhs;
        case Rel::le: return lhs <= rhs;
        case Rel::eq: return lhs == rhs;
        case Rel::ge: return lhs >= rhs;
        case Rel::gt: return lhs > rhs;
    }
    return false;
}

std::string SourcePos::str() const {
    std::ostringstream os;
    os << (file.empty() ? "<input>" : file) << ':' << line << ':' << col;
    return os.str();
}

std::string Diagnostic::str() const { return pos.str() + ": " + message; }

Expr Expr::literal(std::int64_t v) {
    Expr e;
    e.kind = Kind::lit;
    e.value = v;
    return e;
}

Expr Expr::variable(int id) {
    Expr e;
    e.kind = Kind::var;
    e.var = id;
    return e;
}

Expr Expr::binary(Kind k, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = k;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
}

Expr Expr::negate(Expr inner) {
    Expr e;
    e.kind = Kind::neg;
    e.args.push_back(std::move(inner));
    return e;
}

std::int64_t eval(const Expr& e, const Valuation& vars) {
    switch (e.kind) {
        case Expr::Kind::lit: return e.value;
        case Expr::Kind::var:
            if (e.var < 0 || e.var >= static_cast<int>(vars.size()))
                throw ModelError("unknown variable id " + std::to_string(e.var));
            return vars[e.var];
        case Expr::Kind::add: return eval(e.args[0], vars) + eval(e.args[1], vars);
        case Expr::Kind::sub: return eval(e.args[0], vars) - eval(e.args[1], vars);
        case Expr::Kind::mul: return eval(e.args[0], vars) * eval(e.args[1], vars);
        case Expr::Kind::neg: return -eval(e.args[0], vars);
    }
    return 0;
}

RangeError::RangeError(const std::string& v, std::int64_t val)
    : std::runtime_error("value " + std::to_string(val) + " out of range for variable " + v),
      var(v),
      value(val) {}

int TimedAutomaton::find_location(const std::string& n) const {
    for (std::size_t i = 0; i < locations.size(); ++i)
        if (locations[i].name == n) return static_cast<int>(i);
    return -1;
}

int TimedAutomaton::find_clock(const std::string& n) const {
    for (std::size_t i = 0; i < clocks.size(); ++i)
        if (clocks[i].name == n) return static_cast<int>(i);
    return -1;
}

std::vector<int> TimedAutomaton::max_constants() const {
    std::vector<int> cm;
    cm.reserve(clocks.size());
    for (const auto& c : clocks) cm.push_back(c.max_const);
    return cm;
}

std::vector<int> TimedAutomaton::initial_locations() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < locations.size(); ++i)
        if (locations[i].initial) out.push_back(static_cast<int>(i));
    return out;
}

int Network::find_component(const std::string& n) const {
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].name == n) return static_cast<int>(i);
    return -1;
}

int Network::find_var(const std::string& n) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i].name == n) return static_cast<int>(i);
    return -1;
}

int Network::find_channel(const std::string& n) const {
    for (std::size_t i = 0; i < channels.size(); ++i)
        if (channels[i] == n) return static_cast<int>(i);
    return -1;
}

int Network::clock_count() const {
    int n = 0;
    for (const auto& c : components) n += static_cast<int>(c.clocks.size());
    return n;
}

int Network::clock_offset(int component) const {
    int n = 0;
    for (int i = 0; i < component; ++i) n += static_cast<int>(components[i].clocks.size());
    return n;
}

std::vector<int> Network::max_constants() const {
    std::vector<int> cm;
    for (const auto& c : components)
        for (const auto& x : c.clocks) cm.push_back(x.max_const);
    return cm;
}

std::vector<std::string> Network::clock_names() const {
    std::vector<std::string> out;
    for (const auto& c : components)
        for (const auto& x : c.clocks) out.push_back(c.name + "." + x.name);
    return out;
}

Valuation Network::initial_vars() const {
    Valuation v;
    v.reserve(vars.size());
    for (const auto& x : vars) v.push_back(x.init);
    return v;
}

Network as_network(TimedAutomaton ta) {
    Network net;
    net.components.push_back(std::move(ta));
    return net;
}

namespace {

void check_expr(const Expr& e, const Network& net, const SourcePos& pos,
                std::vector<Diagnostic>& out) {
    if (e.kind == Expr::Kind::var && (e.var < 0 || e.var >= static_cast<int>(net.vars.size())))
        out.push_back({pos, "unknown variable"});
    for (const auto& a : e.args) check_expr(a, net, pos, out);
}

void check_guard(const Guard& g, const TimedAutomaton& ta, const Network& net,
                 const SourcePos& pos, bool invariant, std::vector<Diagnostic>& out) {
    for (const auto& a : g.clocks) {
        if (a.clock < 0 || a.clock >= static_cast<int>(ta.clocks.size())) {
            out.push_back({pos, "unknown clock"});
            continue;
        }
        const auto& clk = ta.clocks[a.clock];
        if (a.bound < 0) out.push_back({pos, "negative constant on clock " + clk.name});
        if (a.bound > clk.max_const)
            out.push_back({pos, "constant exceeds maximum: " + clk.name + " " + rel_text(a.rel) + " " +
                                    std::to_string(a.bound) + " with max " +
                                    std::to_string(clk.max_const)});
        if (invariant && a.rel != Rel::le && a.rel != Rel::lt)
            out.push_back({pos, "invariant must be an upper bound: " + clk.name + " " +
                                    rel_text(a.rel) + " " + std::to_string(a.bound)});
    }
    if (invariant && !g.ints.empty())
        out.push_back({pos, "invariant must only constrain clocks"});
    for (const auto& a : g.ints) {
        check_expr(a.lhs, net, a.pos, out);
        check_expr(a.rhs, net, a.pos, out);
    }
}

}  // namespace

std::vector<Diagnostic> validate_model(const Network& net) {
    std::vector<Diagnostic> out;
    if (net.components.empty()) out.push_back({{}, "model has no automaton"});

    std::set<std::string> comp_names;
    for (const auto& ta : net.components) {
        if (!comp_names.insert(ta.name).second)
            out.push_back({ta.pos, "duplicate automaton name " + ta.name});

        std::set<std::string> names;
        for (const auto& c : ta.clocks) {
            if (!names.insert(c.name).second) out.push_back({c.pos, "duplicate clock " + c.name});
            if (c.max_const < 0) out.push_back({c.pos, "negative maximum on clock " + c.name});
        }
        names.clear();
        bool has_initial = false;
        for (const auto& l : ta.locations) {
            if (!names.insert(l.name).second) out.push_back({l.pos, "duplicate location " + l.name});
            has_initial = has_initial || l.initial;
            check_guard(l.invariant, ta, net, l.pos, true, out);
        }
        if (!has_initial) out.push_back({ta.pos, "automaton " + ta.name + " has no initial location"});

        const int nloc = static_cast<int>(ta.locations.size());
        for (const auto& t : ta.transitions) {
            if (t.source < 0 || t.source >= nloc || t.target < 0 || t.target >= nloc)
                out.push_back({t.pos, "edge references an unknown location"});
            check_guard(t.guard, ta, net, t.pos, false, out);
            for (int x : t.resets)
                if (x < 0 || x >= static_cast<int>(ta.clocks.size()))
                    out.push_back({t.pos, "reset of unknown clock"});
            for (const auto& u : t.updates) {
                if (u.var < 0 || u.var >= static_cast<int>(net.vars.size()))
                    out.push_back({t.pos, "update of unknown variable"});
                check_expr(u.value, net, t.pos, out);
            }
            if (t.sync && (t.sync->channel < 0 ||
                           t.sync->channel >= static_cast<int>(net.channels.size())))
                out.push_back({t.pos, "unknown channel"});
        }
    }

    std::set<std::string> var_names;
    for (const auto& v : net.vars) {
        if (!var_names.insert(v.name).second) out.push_back({v.pos, "duplicate variable " + v.name});
        if (v.lo > v.hi) out.push_back({v.pos, "empty range for variable " + v.name});
        if (v.init < v.lo || v.init > v.hi)
            out.push_back({v.pos, "initial value outside range for variable " + v.name});
    }
    std::set<std::string> chan_names;
    for (const auto& c : net.channels)
        if (!chan_names.insert(c).second) out.push_back({{}, "duplicate channel " + c});
    return out;
}

namespace {

bool clock_atom_holds(const Region& region, int clock, Rel rel, int c) {
    if (clock < 0 || clock >= region.clock_count())
        throw ModelError("unknown clock id " + std::to_string(clock));
    const ClockStatus s = clock_status(region, clock);
    const int h = region.h[clock];
    switch (rel) {
        case Rel::eq: return s == ClockStatus::unit && h == c;
        case Rel::lt: return s != ClockStatus::unbounded && h < c;
        case Rel::le:
            return (s == ClockStatus::unit && h <= c) || (s == ClockStatus::fractional && h < c);
        case Rel::gt:
            return s == ClockStatus::unbounded || (s == ClockStatus::fractional && h >= c) ||
                   (s == ClockStatus::unit && h > c);
        case Rel::ge: return s == ClockStatus::unbounded || h >= c;
    }
    return false;
}

}  // namespace

bool satisfies_clock_guard(const Region& region, const Guard& guard, int clock_offset) {
    for (const auto& a : guard.clocks)
        if (!clock_atom_holds(region, a.clock + clock_offset, a.rel, a.bound)) return false;
    return true;
}

bool satisfies_int_guard(const Valuation& vars, const Guard& guard) {
    for (const auto& a : guard.ints)
        if (!compare(eval(a.lhs, vars), a.rel, eval(a.rhs, vars))) return false;
    return true;
}

bool satisfies_guard(const Region& region, const Valuation& vars, const Guard& guard,
                     int clock_offset) {
    return satisfies_clock_guard(region, guard, clock_offset) && satisfies_int_guard(vars, guard);
}

bool satisfies_invariant(const Region& region, const Network& net,
                         const std::vector<int>& locations) {
    int offset = 0;
    for (std::size_t c = 0; c < net.components.size(); ++c) {
        const auto& ta = net.components[c];
        if (!satisfies_clock_guard(region, ta.locations[locations[c]].invariant, offset)) return false;
        offset += static_cast<int>(ta.clocks.size());
    }
    return true;
}

bool satisfies_invariant(const Region& region, const Network& net) {
    return satisfies_invariant(region, net, region.loc);
}

bool eval_query(const Query& query, const SearchState& state) {
    if (query.falsum) return false;
    for (const auto& a : query.locations)
        if (state.region.loc[a.component] != a.location) return false;
    for (const auto& a : query.ints)
        if (!compare(eval(a.lhs, state.vars), a.rel, eval(a.rhs, state.vars))) return false;
    return true;
}

}  // namespace tarzan
