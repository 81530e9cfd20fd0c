#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "tarzan/tarzan.hpp"

namespace tarzan::cli {

namespace {

void setup_logging() {
    static bool done = false;
    if (done) return;
    done = true;
    auto logger = spdlog::stderr_color_mt("tarzan");
    spdlog::set_default_logger(logger);
    spdlog::set_pattern("[%l] %v");
    const char* env = std::getenv("TARZAN_LOG");
    spdlog::set_level(env ? spdlog::level::from_str(env) : spdlog::level::warn);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct CheckArgs {
    std::vector<std::string> models;
    std::string query;
    std::string pattern;
    std::string strategy = "dfs";
    std::string direction;
    std::int64_t max_regions = -1;
    std::int64_t max_ms = -1;
    std::string stats = "text";
    bool witness = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
    if (a.query.empty() == a.pattern.empty()) {
        err << "error: give exactly one of --query or --pattern\n";
        return failure;
    }
    const std::string direction = a.direction.empty() ? (a.pattern.empty() ? "forward" : "backward") : a.direction;
    if (!a.pattern.empty() && direction != "backward") {
        err << "error: --pattern requires --direction backward\n";
        return failure;
    }
    if (!a.query.empty() && direction == "backward") {
        err << "error: backward exploration starts from --pattern, not --query\n";
        return failure;
    }
    if (direction == "backward" && a.models.size() != 1) {
        err << "error: backward exploration takes exactly one --model\n";
        return failure;
    }

    std::vector<ModelSource> sources;
    for (const auto& m : a.models) sources.push_back(load_source(m));
    const Network net = parse_model(sources);
    spdlog::info("parsed {} automata, {} clocks, {} variables", net.components.size(), net.clock_count(),
                 net.vars.size());

    SearchConfig cfg;
    cfg.strategy = a.strategy == "bfs" ? Strategy::bfs : Strategy::dfs;
    if (a.max_regions >= 0) cfg.max_regions = static_cast<std::size_t>(a.max_regions);
    if (a.max_ms >= 0) cfg.max_millis = a.max_ms;

    SearchStats stats;
    if (direction == "backward") {
        if (!net.vars.empty()) {
            err << "error: backward exploration does not support integer variables\n";
            return failure;
        }
        const std::string text = a.pattern.front() == '@' ? read_file(a.pattern.substr(1)) : read_file(a.pattern);
        const RegionPattern pattern = parse_pattern(text, net.components.front());
        stats = backward_reach(net.components.front(), pattern, cfg);
    } else {
        const std::string text = a.query.front() == '@' ? read_file(a.query.substr(1)) : a.query;
        const Query q = parse_query(text, net);
        stats = forward_reach(net, q, cfg);
    }
    spdlog::info("search finished: {}", verdict_name(stats.verdict));

    if (a.stats == "json")
        out << render_stats_json(stats) << '\n';
    else
        out << render_stats_text(stats);
    if (a.witness && !stats.witness.empty()) {
        const NameTable names = NameTable::of(net);
        out << "witness:\n";
        for (const auto& step : stats.witness) {
            if (&step != &stats.witness.front()) out << "  --" << step.move.describe(net) << "-->\n";
            out << "  " << render_state(step.state, names, net) << '\n';
        }
    }
    switch (stats.verdict) {
        case Verdict::reachable:
        case Verdict::unreachable: return ok;
        case Verdict::limit_exceeded: return limit;
        case Verdict::error:
            err << "error: " << stats.message << '\n';
            return failure;
    }
    return failure;
}

int cmd_gen(const std::string& family, int size, const std::string& dir, std::ostream& out) {
    const Generated g = generate(family, size);
    std::filesystem::create_directories(dir);
    for (const auto& f : g.files) {
        const auto path = std::filesystem::path(dir) / f.path;
        std::ofstream os(path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot write " + path.string());
        os << f.text;
        out << path.string() << '\n';
    }
    const auto qpath = std::filesystem::path(dir) / "query.q";
    std::ofstream(qpath, std::ios::binary) << g.query << '\n';
    out << "query: " << g.query << '\n';
    return ok;
}

int cmd_math(const std::string& fn, const std::vector<int>& args, std::ostream& out, std::ostream& err) {
    auto need = [&](std::size_t n) {
        if (args.size() != n) throw std::invalid_argument(fn + " takes " + std::to_string(n) + " argument(s)");
        for (int v : args)
            if (v < 0) throw std::invalid_argument("arguments must be non-negative");
    };
    if (fn == "fubini") {
        need(1);
        out << oracle::fubini(args[0]) << '\n';
    } else if (fn == "stirling2") {
        need(2);
        out << oracle::stirling2(args[0], args[1]) << '\n';
    } else if (fn == "lemma1") {
        need(2);
        if (args[0] < 1 || args[1] < 1) throw std::invalid_argument("lemma1 needs n >= 1 and cm >= 1");
        out << oracle::lemma1_bound(args[0], args[1]) << '\n';
    } else if (fn == "regions") {
        need(2);
        out << oracle::region_count(args[0], args[1]) << '\n';
    } else {
        err << "error: unknown function " << fn << " (fubini, stirling2, lemma1, regions)\n";
        return failure;
    }
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    setup_logging();
    CLI::App app{"Region-based reachability for timed automata"};
    app.require_subcommand(1);

    CheckArgs check;
    auto* c = app.add_subcommand("check", "Decide a reachability query");
    c->add_option("--model", check.models, "Model file (.ta); repeat for networks")->required();
    c->add_option("--query", check.query, "Query text or @file");
    c->add_option("--pattern", check.pattern, "Region pattern file (.pat) for backward search");
    c->add_option("--strategy", check.strategy)->check(CLI::IsMember({"dfs", "bfs"}));
    c->add_option("--direction", check.direction)->check(CLI::IsMember({"forward", "backward"}));
    c->add_option("--max-regions", check.max_regions, "Stop after storing this many regions");
    c->add_option("--max-ms", check.max_ms, "Stop after this many milliseconds");
    c->add_option("--stats", check.stats)->check(CLI::IsMember({"text", "json"}));
    c->add_flag("--witness", check.witness, "Print the trace when the target is reachable");

    std::string family, dir = ".";
    int size = 0;
    auto* g = app.add_subcommand("gen", "Write a benchmark model");
    g->add_option("family", family)->required()->check(CLI::IsMember({"flower", "boolean", "ring", "gates"}));
    g->add_option("size", size)->required();
    g->add_option("-o,--output", dir, "Output directory");

    std::string fn;
    std::vector<int> margs;
    auto* m = app.add_subcommand("math", "Print counting functions");
    m->add_option("function", fn)->required();
    m->add_option("args", margs)->required();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return failure;
    }

    try {
        if (c->parsed()) return cmd_check(check, out, err);
        if (g->parsed()) return cmd_gen(family, size, dir, out);
        if (m->parsed()) return cmd_math(fn, margs, out, err);
    } catch (const ParseError& e) {
        for (const auto& d : e.diagnostics) err << d.str() << '\n';
        return failure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return failure;
    }
    return failure;
}

}  // namespace tarzan::cli
