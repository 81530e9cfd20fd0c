#include "tarzan/bench.hpp"

#include <stdexcept>

namespace tarzan {

namespace {

ClockConstraint eq(int clock, int c) { return {clock, Rel::eq, c}; }

Transition edge(int from, int to, Guard g, std::vector<int> resets = {}, std::vector<Update> updates = {}) {
    Transition t;
    t.source = from;
    t.target = to;
    t.guard = std::move(g);
    t.resets = std::move(resets);
    t.updates = std::move(updates);
    return t;
}

Guard clock_guard(std::vector<ClockConstraint> atoms) {
    Guard g;
    g.clocks = std::move(atoms);
    return g;
}

Location loc(std::string name, bool initial = false) {
    Location l;
    l.name = std::move(name);
    l.initial = initial;
    return l;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

TimedAutomaton gen_flower(int n) {
    require(n >= 1, "flower needs n >= 1");
    TimedAutomaton ta;
    ta.name = "Flower";
    for (int i = 1; i <= n; ++i) ta.clocks.push_back({"x" + std::to_string(i), i, {}});
    ta.clocks.push_back({"y", 1, {}});
    ta.locations = {loc("q0", true), loc("Goal")};
    for (int i = 1; i <= n; ++i) ta.transitions.push_back(edge(0, 0, clock_guard({eq(i - 1, i)}), {i - 1}));
    std::vector<ClockConstraint> goal;
    for (int i = 0; i < n; ++i) goal.push_back(eq(i, 0));
    goal.push_back({n, Rel::ge, 1});
    ta.transitions.push_back(edge(0, 1, clock_guard(goal)));
    return ta;
}

Network gen_boolean(int K) {
    require(K >= 2, "boolean needs K >= 2");
    Network net;
    for (int i = 1; i <= K; ++i) net.vars.push_back({"ctr" + std::to_string(i), 0, 0, 1, {}});
    for (int i = 1; i <= K; ++i) {
        TimedAutomaton ta;
        ta.name = "Boolean" + std::to_string(i);
        ta.clocks.push_back({"x" + std::to_string(i), i, {}});
        ta.locations = {loc("q0", true), loc("q1")};
        const int v = i - 1;
        auto flip = [&] {
            return std::vector<Update>{
                {v, Expr::binary(Expr::Kind::sub, Expr::literal(1), Expr::variable(v))}};
        };
        ta.transitions.push_back(edge(0, 1, clock_guard({eq(0, i)}), {0}, flip()));
        ta.transitions.push_back(edge(1, 0, clock_guard({eq(0, i)}), {0}, flip()));
        net.components.push_back(std::move(ta));
    }
    return net;
}

Network gen_ring(int K) {
    require(K >= 2, "ring needs K >= 2");
    Network net;
    for (int i = 1; i <= K; ++i) {
        TimedAutomaton ta;
        ta.name = "P" + std::to_string(i);
        ta.clocks.push_back({"x" + std::to_string(i), i, {}});
        ta.locations = {loc("q0", true), loc("q1"), loc("q2"), loc("q3"), loc("q4"), loc("Goal")};
        for (int l = 0; l < 6; ++l) ta.transitions.push_back(edge(l, (l + 1) % 6, clock_guard({eq(0, i)}), {0}));
        net.components.push_back(std::move(ta));
    }
    return net;
}

Network gen_gates(int K) {
    require(K >= 2, "gates needs K >= 2");
    Network net;
    net.vars.push_back({"gate", 0, 0, K - 1, {}});
    for (int i = 1; i <= K - 1; ++i) {
        TimedAutomaton ta;
        ta.name = "Key" + std::to_string(i);
        ta.clocks.push_back({"x" + std::to_string(i), i, {}});
        for (int l = 0; l <= i; ++l) ta.locations.push_back(loc("q" + std::to_string(l), l == 0));
        for (int l = 0; l + 1 < i; ++l) ta.transitions.push_back(edge(l, l + 1, clock_guard({eq(0, i)}), {0}));
        ta.transitions.push_back(
            edge(i - 1, i, clock_guard({eq(0, i)}), {},
                 {{0, Expr::binary(Expr::Kind::add, Expr::variable(0), Expr::literal(1))}}));
        net.components.push_back(std::move(ta));
    }
    TimedAutomaton u;
    u.name = "Unlocker";
    u.clocks.push_back({"x", K - 1, {}});
    for (int l = 0; l < K; ++l) u.locations.push_back(loc("q" + std::to_string(l), l == 0));
    u.locations.push_back(loc("Goal"));
    for (int l = 0; l + 1 < K; ++l) u.transitions.push_back(edge(l, l + 1, clock_guard({eq(0, K - 1)}), {0}));
    Guard last = clock_guard({eq(0, K - 1)});
    IntAtom a;
    a.lhs = Expr::variable(0);
    a.rel = Rel::eq;
    a.rhs = Expr::literal(K - 1);
    last.ints.push_back(a);
    u.transitions.push_back(edge(K - 1, K, last));
    net.components.push_back(std::move(u));
    return net;
}

std::string flower_query() { return "E<> (Flower.Goal)"; }

std::string boolean_query(int K) {
    std::string q = "E<> (";
    for (int i = 1; i <= K; ++i) q += (i > 1 ? " && " : "") + std::string("ctr") + std::to_string(i) + " == 1";
    return q + ")";
}

std::string ring_query(int K) {
    std::string q = "E<> (";
    for (int i = 1; i <= K; ++i) q += (i > 1 ? " && " : "") + std::string("P") + std::to_string(i) + ".Goal";
    return q + ")";
}

std::string gates_query() { return "E<> (Unlocker.Goal)"; }

Generated generate(const std::string& family, int size) {
    Generated g;
    if (family == "flower") {
        g.model = as_network(gen_flower(size));
        g.query = flower_query();
    } else if (family == "boolean") {
        g.model = gen_boolean(size);
        g.query = boolean_query(size);
    } else if (family == "ring") {
        g.model = gen_ring(size);
        g.query = ring_query(size);
    } else if (family == "gates") {
        g.model = gen_gates(size);
        g.query = gates_query();
    } else {
        throw std::invalid_argument("unknown family " + family);
    }
    g.files = render_model(g.model);
    return g;
}

}  // namespace tarzan
