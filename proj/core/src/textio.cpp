#include "tarzan/textio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace tarzan {

ParseError::ParseError(std::vector<Diagnostic> diags)
    : std::runtime_error(diags.empty() ? std::string("parse error") : diags.front().str()),
      diagnostics(std::move(diags)) {}

ModelSource load_source(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError({{{path, 0, 0}, "cannot open file"}});
    std::ostringstream os;
    os << in.rdbuf();
    return {path, os.str()};
}

namespace {

// ---------------------------------------------------------------- lexer

struct Token {
    enum Kind { ident, number, punct, end } kind = end;
    std::string text;
    std::int64_t value = 0;
    SourcePos pos;
};

struct Failure {
    Diagnostic diag;
};

[[noreturn]] void fail_at(const SourcePos& pos, const std::string& msg) { throw Failure{{pos, msg}}; }

std::vector<Token> lex(const std::string& text, const std::string& file) {
    static const char* multi[] = {"->", ":=", "==", "<=", ">=", "&&"};
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        Token t;
        t.pos = {file, line, col};
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            t.kind = Token::ident;
            t.text = text.substr(i, j - i);
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            t.kind = Token::number;
            t.text = text.substr(i, j - i);
            try {
                t.value = std::stoll(t.text);
            } catch (const std::exception&) {
                fail_at(t.pos, "integer literal out of range");
            }
            advance(j - i);
        } else {
            t.kind = Token::punct;
            for (const char* m : multi)
                if (text.compare(i, 2, m) == 0) t.text = m;
            if (t.text.empty()) {
                if (std::string(";,{}()[]<>=!?+-*.:@").find(c) == std::string::npos)
                    fail_at(t.pos, std::string("unexpected character '") + c + "'");
                t.text = std::string(1, c);
            }
            advance(t.text.size());
        }
        out.push_back(std::move(t));
    }
    Token e;
    e.kind = Token::end;
    e.pos = {file, line, col};
    out.push_back(e);
    return out;
}

class Cursor {
public:
    explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    const Token& next() {
        const Token& t = toks_[pos_];
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }
    bool at_end() const { return peek().kind == Token::end; }
    bool is(const char* p, std::size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.kind == Token::punct && t.text == p;
    }
    bool is_word(const char* w, std::size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.kind == Token::ident && t.text == w;
    }
    bool accept(const char* p) {
        if (!is(p)) return false;
        next();
        return true;
    }
    bool accept_word(const char* w) {
        if (!is_word(w)) return false;
        next();
        return true;
    }
    void expect(const char* p) {
        if (!accept(p)) fail_at(peek().pos, std::string("expected '") + p + "' but found " + describe(peek()));
    }
    void expect_word(const char* w) {
        if (!accept_word(w)) fail_at(peek().pos, std::string("expected '") + w + "' but found " + describe(peek()));
    }
    const Token& ident(const char* what) {
        if (peek().kind != Token::ident) fail_at(peek().pos, std::string("expected ") + what + " but found " + describe(peek()));
        return next();
    }
    std::int64_t integer(const char* what) {
        bool neg = accept("-");
        if (peek().kind != Token::number)
            fail_at(peek().pos, std::string("expected ") + what + " but found " + describe(peek()));
        const std::int64_t v = next().value;
        return neg ? -v : v;
    }

    static std::string describe(const Token& t) {
        if (t.kind == Token::end) return "end of input";
        return "'" + t.text + "'";
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

std::optional<Rel> rel_of(const Token& t) {
    if (t.kind != Token::punct) return std::nullopt;
    if (t.text == "<") return Rel::lt;
    if (t.text == "<=") return Rel::le;
    if (t.text == "==") return Rel::eq;
    if (t.text == ">=") return Rel::ge;
    if (t.text == ">") return Rel::gt;
    return std::nullopt;
}

// ---------------------------------------------------------------- unresolved syntax

struct PExpr {
    Expr::Kind kind = Expr::Kind::lit;
    std::int64_t value = 0;
    std::string name;
    std::vector<PExpr> args;
    SourcePos pos;
};

struct PAtom {
    PExpr lhs;
    Rel rel = Rel::eq;
    PExpr rhs;
    SourcePos pos;
};

struct PEdge {
    std::string src, dst, label;
    SourcePos pos, src_pos, dst_pos;
    std::vector<PAtom> guard;
    std::optional<std::pair<std::string, bool>> sync;
    SourcePos sync_pos;
    std::vector<std::pair<std::string, SourcePos>> resets;
    std::vector<std::pair<std::pair<std::string, SourcePos>, PExpr>> updates;
};

struct PLoc {
    std::string name;
    bool initial = false, urgent = false;
    std::vector<PAtom> invariant;
    SourcePos pos;
};

struct PClock {
    std::string name;
    std::optional<int> max;
    SourcePos pos;
};

struct PFile {
    std::string name;
    SourcePos pos;
    std::vector<PClock> clocks;
    std::vector<IntVar> vars;
    std::vector<std::pair<std::string, SourcePos>> channels;
    std::vector<PLoc> locs;
    std::vector<PEdge> edges;
};

PExpr parse_expr(Cursor& c);

PExpr parse_unary(Cursor& c) {
    const SourcePos pos = c.peek().pos;
    if (c.accept("-")) {
        if (c.peek().kind == Token::number) {
            PExpr e;
            e.kind = Expr::Kind::lit;
            e.value = -c.next().value;
            e.pos = pos;
            return e;
        }
        PExpr e;
        e.kind = Expr::Kind::neg;
        e.args.push_back(parse_unary(c));
        e.pos = pos;
        return e;
    }
    if (c.accept("(")) {
        PExpr e = parse_expr(c);
        c.expect(")");
        return e;
    }
    if (c.peek().kind == Token::number) {
        PExpr e;
        e.value = c.next().value;
        e.pos = pos;
        return e;
    }
    if (c.peek().kind == Token::ident) {
        PExpr e;
        e.kind = Expr::Kind::var;
        e.name = c.next().text;
        e.pos = pos;
        return e;
    }
    fail_at(pos, "expected an expression but found " + Cursor::describe(c.peek()));
}

PExpr parse_term(Cursor& c) {
    PExpr lhs = parse_unary(c);
    while (c.is("*")) {
        const SourcePos pos = c.next().pos;
        PExpr e;
        e.kind = Expr::Kind::mul;
        e.pos = pos;
        e.args.push_back(std::move(lhs));
        e.args.push_back(parse_unary(c));
        lhs = std::move(e);
    }
    return lhs;
}

PExpr parse_expr(Cursor& c) {
    PExpr lhs = parse_term(c);
    while (c.is("+") || c.is("-")) {
        const Token& op = c.next();
        PExpr e;
        e.kind = op.text == "+" ? Expr::Kind::add : Expr::Kind::sub;
        e.pos = op.pos;
        e.args.push_back(std::move(lhs));
        e.args.push_back(parse_term(c));
        lhs = std::move(e);
    }
    return lhs;
}

/// Conjunction of atoms; `true` contributes nothing.
std::vector<PAtom> parse_conjunction(Cursor& c) {
    std::vector<PAtom> out;
    do {
        if (c.accept_word("true")) continue;
        PAtom a;
        a.pos = c.peek().pos;
        a.lhs = parse_expr(c);
        auto r = rel_of(c.peek());
        if (!r) fail_at(c.peek().pos, "expected a comparison operator but found " + Cursor::describe(c.peek()));
        c.next();
        a.rel = *r;
        a.rhs = parse_expr(c);
        out.push_back(std::move(a));
    } while (c.accept("&&"));
    return out;
}

PFile parse_file(const ModelSource& src) {
    Cursor c(lex(src.text, src.path));
    PFile f;
    f.pos = c.peek().pos;
    c.expect_word("automaton");
    f.name = c.ident("automaton name").text;
    c.expect(";");
    while (!c.at_end()) {
        const Token& kw = c.ident("a declaration");
        if (kw.text == "clock") {
            PClock k;
            k.pos = c.peek().pos;
            k.name = c.ident("clock name").text;
            if (c.accept_word("max")) {
                const std::int64_t v = c.integer("maximum constant");
                if (v < 0 || v > 1000000) fail_at(k.pos, "maximum constant out of range");
                k.max = static_cast<int>(v);
            }
            c.expect(";");
            f.clocks.push_back(std::move(k));
        } else if (kw.text == "int") {
            IntVar v;
            v.pos = c.peek().pos;
            v.name = c.ident("variable name").text;
            c.expect("=");
            v.init = c.integer("initial value");
            v.lo = -32768;
            v.hi = 32767;
            if (c.accept_word("range")) {
                c.expect("[");
                v.lo = c.integer("lower bound");
                c.expect(",");
                v.hi = c.integer("upper bound");
                c.expect("]");
            }
            c.expect(";");
            f.vars.push_back(std::move(v));
        } else if (kw.text == "channel") {
            const Token& n = c.ident("channel name");
            f.channels.emplace_back(n.text, n.pos);
            c.expect(";");
        } else if (kw.text == "location") {
            PLoc l;
            l.pos = c.peek().pos;
            l.name = c.ident("location name").text;
            while (true) {
                const SourcePos at = c.peek().pos;
                if (c.accept_word("initial")) {
                    if (l.initial) fail_at(at, "repeated flag initial");
                    l.initial = true;
                } else if (c.accept_word("urgent")) {
                    if (l.urgent) fail_at(at, "repeated flag urgent");
                    l.urgent = true;
                } else if (c.accept_word("invariant")) {
                    auto atoms = parse_conjunction(c);
                    l.invariant.insert(l.invariant.end(), atoms.begin(), atoms.end());
                } else {
                    break;
                }
            }
            c.expect(";");
            f.locs.push_back(std::move(l));
        } else if (kw.text == "edge") {
            PEdge e;
            e.pos = kw.pos;
            const Token& src = c.ident("source location");
            e.src = src.text;
            e.src_pos = src.pos;
            c.expect("->");
            const Token& dst = c.ident("target location");
            e.dst = dst.text;
            e.dst_pos = dst.pos;
            c.expect("{");
            while (!c.accept("}")) {
                const Token& clause = c.ident("an edge clause");
                if (clause.text == "guard") {
                    auto atoms = parse_conjunction(c);
                    e.guard.insert(e.guard.end(), atoms.begin(), atoms.end());
                } else if (clause.text == "sync") {
                    if (e.sync) fail_at(clause.pos, "edge has more than one sync clause");
                    e.sync_pos = c.peek().pos;
                    const std::string ch = c.ident("channel name").text;
                    if (c.accept("!")) {
                        e.sync = std::make_pair(ch, true);
                    } else if (c.accept("?")) {
                        e.sync = std::make_pair(ch, false);
                    } else {
                        fail_at(c.peek().pos, "expected '!' or '?' after channel name");
                    }
                } else if (clause.text == "reset") {
                    do {
                        const Token& x = c.ident("clock name");
                        e.resets.emplace_back(x.text, x.pos);
                    } while (c.accept(","));
                } else if (clause.text == "do") {
                    do {
                        const Token& v = c.ident("variable name");
                        c.expect(":=");
                        e.updates.push_back({{v.text, v.pos}, parse_expr(c)});
                    } while (c.accept(","));
                } else if (clause.text == "label") {
                    e.label = c.ident("label").text;
                } else {
                    fail_at(clause.pos, "unknown edge clause '" + clause.text + "'");
                }
                c.expect(";");
            }
            f.edges.push_back(std::move(e));
        } else {
            fail_at(kw.pos, "unknown declaration '" + kw.text + "'");
        }
    }
    return f;
}

// ---------------------------------------------------------------- resolution

struct Resolver {
    const Network& net;
    std::vector<Diagnostic>& diags;
    const std::map<std::string, int>* clocks = nullptr;  // clocks of the current automaton

    Expr expr(const PExpr& p) {
        switch (p.kind) {
            case Expr::Kind::lit: return Expr::literal(p.value);
            case Expr::Kind::var: {
                if (clocks && clocks->count(p.name)) {
                    diags.push_back({p.pos, "clock " + p.name + " used in an integer expression"});
                    return Expr::literal(0);
                }
                const int id = net.find_var(p.name);
                if (id < 0) diags.push_back({p.pos, "unknown variable " + p.name});
                return Expr::variable(id);
            }
            case Expr::Kind::neg: return Expr::negate(expr(p.args[0]));
            default: return Expr::binary(p.kind, expr(p.args[0]), expr(p.args[1]));
        }
    }

    Guard guard(const std::vector<PAtom>& atoms, const SourcePos& pos) {
        Guard g;
        g.pos = pos;
        for (const auto& a : atoms) {
            const bool lhs_clock = a.lhs.kind == Expr::Kind::var && clocks && clocks->count(a.lhs.name);
            if (lhs_clock) {
                if (a.rhs.kind != Expr::Kind::lit) {
                    diags.push_back({a.rhs.pos, "clock constraint must compare " + a.lhs.name + " with an integer"});
                    continue;
                }
                if (a.rhs.value < 0 || a.rhs.value > 1000000) {
                    diags.push_back({a.rhs.pos, "clock constant out of range"});
                    continue;
                }
                g.clocks.push_back({clocks->at(a.lhs.name), a.rel, static_cast<int>(a.rhs.value)});
                continue;
            }
            IntAtom ia;
            ia.lhs = expr(a.lhs);
            ia.rel = a.rel;
            ia.rhs = expr(a.rhs);
            ia.pos = a.pos;
            g.ints.push_back(std::move(ia));
        }
        return g;
    }
};

}  // namespace

Network parse_model(const std::vector<ModelSource>& sources) {
    std::vector<Diagnostic> diags;
    std::vector<PFile> files;
    for (const auto& s : sources) {
        try {
            files.push_back(parse_file(s));
        } catch (const Failure& f) {
            diags.push_back(f.diag);
        }
    }
    if (!diags.empty()) throw ParseError(diags);

    Network net;
    for (const auto& f : files) {
        for (const auto& v : f.vars) net.vars.push_back(v);
        for (const auto& [ch, pos] : f.channels)
            if (net.find_channel(ch) < 0) net.channels.push_back(ch);
    }

    for (const auto& f : files) {
        TimedAutomaton ta;
        ta.name = f.name;
        ta.pos = f.pos;
        std::map<std::string, int> clock_ids;
        for (const auto& k : f.clocks) {
            if (clock_ids.count(k.name)) {
                diags.push_back({k.pos, "duplicate clock " + k.name});
                continue;
            }
            clock_ids[k.name] = static_cast<int>(ta.clocks.size());
            ta.clocks.push_back({k.name, k.max.value_or(0), k.pos});
        }
        Resolver res{net, diags, &clock_ids};
        std::map<std::string, int> loc_ids;
        for (const auto& l : f.locs) {
            Location loc;
            loc.name = l.name;
            loc.initial = l.initial;
            loc.urgent = l.urgent;
            loc.pos = l.pos;
            loc.invariant = res.guard(l.invariant, l.pos);
            if (!loc_ids.count(l.name)) loc_ids[l.name] = static_cast<int>(ta.locations.size());
            ta.locations.push_back(std::move(loc));
        }
        for (const auto& e : f.edges) {
            Transition t;
            t.pos = e.pos;
            t.action = e.label;
            auto find_loc = [&](const std::string& n, const SourcePos& at) {
                auto it = loc_ids.find(n);
                if (it == loc_ids.end()) {
                    diags.push_back({at, "unknown location " + n});
                    return -1;
                }
                return it->second;
            };
            t.source = find_loc(e.src, e.src_pos);
            t.target = find_loc(e.dst, e.dst_pos);
            t.guard = res.guard(e.guard, e.pos);
            if (e.sync) {
                const int ch = net.find_channel(e.sync->first);
                if (ch < 0) diags.push_back({e.sync_pos, "unknown channel " + e.sync->first});
                t.sync = Sync{ch, e.sync->second};
            }
            for (const auto& [x, pos] : e.resets) {
                auto it = clock_ids.find(x);
                if (it == clock_ids.end()) {
                    diags.push_back({pos, "unknown clock " + x});
                    continue;
                }
                if (std::find(t.resets.begin(), t.resets.end(), it->second) == t.resets.end())
                    t.resets.push_back(it->second);
            }
            for (const auto& [target, value] : e.updates) {
                const int id = net.find_var(target.first);
                if (id < 0) diags.push_back({target.second, "unknown variable " + target.first});
                t.updates.push_back({id, res.expr(value)});
            }
            ta.transitions.push_back(std::move(t));
        }
        // clocks without an explicit maximum take the largest constant they are compared with
        for (std::size_t k = 0; k < f.clocks.size() && k < ta.clocks.size(); ++k) {
            if (f.clocks[k].max) continue;
            int m = 0;
            auto scan = [&](const Guard& g) {
                for (const auto& a : g.clocks)
                    if (a.clock == static_cast<int>(k)) m = std::max(m, a.bound);
            };
            for (const auto& l : ta.locations) scan(l.invariant);
            for (const auto& t : ta.transitions) scan(t.guard);
            ta.clocks[k].max_const = m;
        }
        net.components.push_back(std::move(ta));
    }
    if (!diags.empty()) throw ParseError(diags);
    auto v = validate_model(net);
    if (!v.empty()) throw ParseError(v);
    return net;
}

// ---------------------------------------------------------------- rendering

namespace {

int precedence(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::add:
        case Expr::Kind::sub: return 1;
        case Expr::Kind::mul: return 2;
        default: return 3;
    }
}

void render_expr_into(std::ostringstream& os, const Expr& e, const Network& net) {
    switch (e.kind) {
        case Expr::Kind::lit: os << e.value; return;
        case Expr::Kind::var:
            os << (e.var >= 0 && e.var < static_cast<int>(net.vars.size()) ? net.vars[e.var].name : "?");
            return;
        case Expr::Kind::neg:
            os << "-(";
            render_expr_into(os, e.args[0], net);
            os << ')';
            return;
        default: break;
    }
    const int p = precedence(e);
    const bool lp = precedence(e.args[0]) < p;
    const bool rp = precedence(e.args[1]) <= p;
    if (lp) os << '(';
    render_expr_into(os, e.args[0], net);
    if (lp) os << ')';
    os << (e.kind == Expr::Kind::add ? " + " : e.kind == Expr::Kind::sub ? " - " : " * ");
    if (rp) os << '(';
    render_expr_into(os, e.args[1], net);
    if (rp) os << ')';
}

}  // namespace

std::string render_expr(const Expr& e, const Network& net) {
    std::ostringstream os;
    render_expr_into(os, e, net);
    return os.str();
}

std::string render_guard(const Guard& g, const TimedAutomaton& ta, const Network& net) {
    std::vector<std::string> parts;
    for (const auto& a : g.clocks)
        parts.push_back(ta.clocks.at(a.clock).name + " " + rel_text(a.rel) + " " + std::to_string(a.bound));
    for (const auto& a : g.ints)
        parts.push_back(render_expr(a.lhs, net) + " " + rel_text(a.rel) + " " + render_expr(a.rhs, net));
    if (parts.empty()) return "true";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " && " : "") + parts[i];
    return out;
}

std::vector<ModelSource> render_model(const Network& net) {
    std::vector<ModelSource> out;
    for (std::size_t c = 0; c < net.components.size(); ++c) {
        const auto& ta = net.components[c];
        std::ostringstream os;
        os << "automaton " << ta.name << ";\n";
        for (const auto& k : ta.clocks) os << "clock " << k.name << " max " << k.max_const << ";\n";
        if (c == 0) {
            for (const auto& v : net.vars)
                os << "int " << v.name << " = " << v.init << " range [" << v.lo << ", " << v.hi << "];\n";
            for (const auto& ch : net.channels) os << "channel " << ch << ";\n";
        }
        for (const auto& l : ta.locations) {
            os << "location " << l.name;
            if (l.initial) os << " initial";
            if (l.urgent) os << " urgent";
            if (!l.invariant.empty()) os << " invariant " << render_guard(l.invariant, ta, net);
            os << ";\n";
        }
        for (const auto& t : ta.transitions) {
            os << "edge " << ta.locations.at(t.source).name << " -> " << ta.locations.at(t.target).name << " {";
            if (!t.action.empty()) os << " label " << t.action << ";";
            if (!t.guard.empty()) os << " guard " << render_guard(t.guard, ta, net) << ";";
            if (t.sync) os << " sync " << net.channels.at(t.sync->channel) << (t.sync->emit ? "!" : "?") << ";";
            if (!t.resets.empty()) {
                os << " reset ";
                for (std::size_t i = 0; i < t.resets.size(); ++i)
                    os << (i ? ", " : "") << ta.clocks.at(t.resets[i]).name;
                os << ";";
            }
            if (!t.updates.empty()) {
                os << " do ";
                for (std::size_t i = 0; i < t.updates.size(); ++i)
                    os << (i ? ", " : "") << net.vars.at(t.updates[i].var).name << " := "
                       << render_expr(t.updates[i].value, net);
                os << ";";
            }
            os << " }\n";
        }
        out.push_back({ta.name + ".ta", os.str()});
    }
    return out;
}

// ---------------------------------------------------------------- queries

Query parse_query(const std::string& text, const Network& net) {
    std::vector<Diagnostic> diags;
    Query q;
    try {
        Cursor c(lex(text, "query"));
        c.expect_word("E");
        c.expect("<");
        c.expect(">");
        const bool paren = c.accept("(");
        do {
            if (c.accept_word("true")) continue;
            if (c.accept_word("false")) {
                q.falsum = true;
                continue;
            }
            if (c.peek().kind == Token::ident && c.is(".", 1)) {
                const Token comp = c.next();
                c.next();
                const Token loc = c.ident("location name");
                const int ci = net.find_component(comp.text);
                if (ci < 0) {
                    diags.push_back({comp.pos, "unknown automaton " + comp.text});
                    continue;
                }
                const int li = net.components[ci].find_location(loc.text);
                if (li < 0) {
                    diags.push_back({loc.pos, "unknown location " + comp.text + "." + loc.text});
                    continue;
                }
                q.locations.push_back({ci, li});
                continue;
            }
            PAtom a;
            a.pos = c.peek().pos;
            a.lhs = parse_expr(c);
            auto r = rel_of(c.peek());
            if (!r) fail_at(c.peek().pos, "expected a comparison operator but found " + Cursor::describe(c.peek()));
            c.next();
            a.rel = *r;
            a.rhs = parse_expr(c);
            Resolver res{net, diags, nullptr};
            IntAtom ia;
            ia.lhs = res.expr(a.lhs);
            ia.rel = a.rel;
            ia.rhs = res.expr(a.rhs);
            ia.pos = a.pos;
            q.ints.push_back(std::move(ia));
        } while (c.accept("&&"));
        if (paren) c.expect(")");
        if (!c.at_end()) fail_at(c.peek().pos, "unexpected " + Cursor::describe(c.peek()) + " after query");
    } catch (const Failure& f) {
        diags.push_back(f.diag);
    }
    if (!diags.empty()) throw ParseError(diags);
    return q;
}

std::string render_query(const Query& q, const Network& net) {
    std::vector<std::string> parts;
    if (q.falsum) parts.push_back("false");
    for (const auto& a : q.locations)
        parts.push_back(net.components.at(a.component).name + "." +
                        net.components[a.component].locations.at(a.location).name);
    for (const auto& a : q.ints)
        parts.push_back(render_expr(a.lhs, net) + " " + rel_text(a.rel) + " " + render_expr(a.rhs, net));
    if (parts.empty()) parts.push_back("true");
    std::string out = "E<> (";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " && " : "") + parts[i];
    return out + ")";
}

// ---------------------------------------------------------------- patterns

RegionPattern parse_pattern(const std::string& text, const TimedAutomaton& ta) {
    std::vector<Diagnostic> diags;
    RegionPattern p;
    p.clocks.assign(ta.clocks.size(), {});
    bool have_location = false;
    try {
        Cursor c(lex(text, "pattern"));
        auto clock_group = [&]() {
            ClockSet g;
            c.expect("[");
            do {
                const Token& x = c.ident("clock name");
                const int id = ta.find_clock(x.text);
                if (id < 0) fail_at(x.pos, "unknown clock " + x.text);
                g.push_back(id);
            } while (c.accept(","));
            c.expect("]");
            std::sort(g.begin(), g.end());
            return g;
        };
        while (!c.at_end()) {
            if (c.accept(";")) continue;
            const Token& head = c.ident("a pattern line");
            if (head.text == "location") {
                const Token& l = c.ident("location name");
                p.location = ta.find_location(l.text);
                if (p.location < 0) fail_at(l.pos, "unknown location " + l.text);
                have_location = true;
            } else if (head.text == "order") {
                const Token& kind = c.ident("'unbounded' or 'frac'");
                if (kind.text != "unbounded" && kind.text != "frac")
                    fail_at(kind.pos, "expected 'unbounded' or 'frac'");
                c.expect(":");
                std::vector<ClockSet> order;
                do {
                    order.push_back(clock_group());
                } while (c.accept("<"));
                (kind.text == "unbounded" ? p.unbounded_order : p.frac_order) = std::move(order);
            } else {
                const int id = ta.find_clock(head.text);
                if (id < 0) fail_at(head.pos, "unknown clock " + head.text);
                auto& cp = p.clocks[id];
                if (cp.set) fail_at(head.pos, "clock " + head.text + " is constrained twice");
                cp.set = true;
                if (c.accept("=")) {
                    cp.kind = ClockPattern::Kind::exact;
                    cp.value = static_cast<int>(c.integer("integer value"));
                } else if (c.accept(">")) {
                    c.expect_word("max");
                    cp.kind = ClockPattern::Kind::unbounded;
                } else if (c.accept_word("in")) {
                    const SourcePos pos = c.peek().pos;
                    c.expect("(");
                    const std::int64_t a = c.integer("lower bound");
                    c.expect(",");
                    const std::int64_t b = c.integer("upper bound");
                    c.expect(")");
                    if (b != a + 1 || a < 0) fail_at(pos, "interval must be (c, c+1) with c >= 0");
                    cp.kind = ClockPattern::Kind::open;
                    cp.value = static_cast<int>(a);
                } else {
                    fail_at(c.peek().pos, "expected '=', 'in' or '>' after clock " + head.text);
                }
            }
        }
    } catch (const Failure& f) {
        diags.push_back(f.diag);
    }
    if (diags.empty()) {
        if (!have_location) diags.push_back({{"pattern", 0, 0}, "missing location line"});
        for (std::size_t x = 0; x < p.clocks.size(); ++x)
            if (!p.clocks[x].set) diags.push_back({{"pattern", 0, 0}, "clock " + ta.clocks[x].name + " is unconstrained"});
    }
    if (!diags.empty()) throw ParseError(diags);
    return p;
}

// ---------------------------------------------------------------- regions

Region parse_region(const std::string& text, const Network& net) {
    const NameTable names = NameTable::of(net);
    std::map<std::string, int> clock_ids;
    for (std::size_t i = 0; i < names.clocks.size(); ++i) clock_ids[names.clocks[i]] = static_cast<int>(i);
    try {
        Cursor c(lex(text, "region"));
        auto dotted = [&](const char* what) {
            std::string s = c.ident(what).text;
            while (c.accept(".")) s += "." + c.ident(what).text;
            return s;
        };
        Region r;
        c.expect("{");
        if (net.components.size() == 1) {
            const Token& l = c.ident("location");
            const int id = net.components[0].find_location(l.text);
            if (id < 0) fail_at(l.pos, "unknown location " + l.text);
            r.loc.push_back(id);
        } else {
            c.expect("<");
            for (std::size_t k = 0; k < net.components.size(); ++k) {
                if (k) c.expect(",");
                const Token& comp = c.ident("automaton");
                if (comp.text != net.components[k].name) fail_at(comp.pos, "expected automaton " + net.components[k].name);
                c.expect(".");
                const Token& l = c.ident("location");
                const int id = net.components[k].find_location(l.text);
                if (id < 0) fail_at(l.pos, "unknown location " + l.text);
                r.loc.push_back(id);
            }
            c.expect(">");
        }
        c.expect(",");
        const int n = net.clock_count();
        r.h.assign(n, 0);
        while (c.is_word("h")) {
            c.next();
            c.expect("(");
            const SourcePos pos = c.peek().pos;
            const std::string x = dotted("clock");
            c.expect(")");
            c.expect("=");
            auto it = clock_ids.find(x);
            if (it == clock_ids.end()) fail_at(pos, "unknown clock " + x);
            r.h[it->second] = static_cast<int>(c.integer("integer part"));
        }
        c.expect(",");
        std::map<int, ClockSet> sets;
        while (!c.accept("}")) {
            const Token& head = c.ident("set name");
            int index = 0;
            if (head.text == "X") {
                c.expect("-");
                index = -static_cast<int>(c.integer("set index"));
            } else if (head.text.size() > 1 && head.text[0] == 'X' &&
                       std::all_of(head.text.begin() + 1, head.text.end(), ::isdigit)) {
                index = std::stoi(head.text.substr(1));
            } else {
                fail_at(head.pos, "expected a set such as X0");
            }
            c.expect("=");
            c.expect("{");
            ClockSet s;
            if (!c.is("}")) {
                do {
                    const SourcePos pos = c.peek().pos;
                    const std::string x = dotted("clock");
                    auto it = clock_ids.find(x);
                    if (it == clock_ids.end()) fail_at(pos, "unknown clock " + x);
                    s.push_back(it->second);
                } while (c.accept(","));
            }
            c.expect("}");
            std::sort(s.begin(), s.end());
            sets[index] = std::move(s);
        }
        for (auto& [i, s] : sets) {
            if (i < 0) {
                if (static_cast<int>(r.unbounded.size()) < -i) r.unbounded.resize(-i);
                r.unbounded[-i - 1] = s;
            } else if (i == 0) {
                r.unit = s;
            } else {
                if (static_cast<int>(r.frac.size()) < i) r.frac.resize(i);
                r.frac[i - 1] = s;
            }
        }
        canonicalize(r);
        std::string why;
        if (!valid_region(r, net.max_constants(), &why)) fail_at({"region", 1, 1}, "invalid region: " + why);
        return r;
    } catch (const Failure& f) {
        throw ParseError({f.diag});
    }
}

// ---------------------------------------------------------------- stats

std::string render_stats_text(const SearchStats& s) {
    std::ostringstream os;
    os << "verdict:        " << verdict_name(s.verdict) << '\n'
       << "regions stored: " << s.regions_stored << '\n'
       << "states stored:  " << s.states_stored << '\n'
       << "elapsed:        " << std::fixed << std::setprecision(3) << s.elapsed_ms << " ms\n"
       << "strategy:       " << strategy_name(s.strategy) << '\n'
       << "direction:      " << direction_name(s.direction) << '\n';
    if (!s.message.empty()) os << "note:           " << s.message << '\n';
    return os.str();
}

std::string render_stats_json(const SearchStats& s) {
    nlohmann::ordered_json j;
    j["verdict"] = verdict_name(s.verdict);
    j["regions_stored"] = s.regions_stored;
    j["states_stored"] = s.states_stored;
    j["elapsed_ms"] = s.elapsed_ms;
    j["strategy"] = strategy_name(s.strategy);
    j["direction"] = direction_name(s.direction);
    return j.dump();
}

}  // namespace tarzan
