#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tarzan/explore.hpp"
#include "tarzan/kinematics.hpp"
#include "tarzan/model.hpp"
#include "tarzan/region.hpp"

namespace tarzan {

/// One `.ta` file: a single automaton.
struct ModelSource {
    std::string path;
    std::string text;
};

struct ParseError : std::runtime_error {
    explicit ParseError(std::vector<Diagnostic> diags);
    std::vector<Diagnostic> diagnostics;
};

ModelSource load_source(const std::string& path);

/// Parses and validates; throws ParseError carrying every diagnostic.
Network parse_model(const std::vector<ModelSource>& sources);

/// One source per component, named after the component. Shared variables and
/// channels are declared in the first file.
std::vector<ModelSource> render_model(const Network& net);

/// `E<> (A.q && v == 1 && true)`
Query parse_query(const std::string& text, const Network& net);
std::string render_query(const Query& query, const Network& net);

/// Lines such as `location q`, `x = 1`, `x in (2, 3)`, `x > max`,
/// `order unbounded: [a,b] < [c]`, `order frac: [x] < [y,z]`.
RegionPattern parse_pattern(const std::string& text, const TimedAutomaton& ta);

/// Inverse of render_region.
Region parse_region(const std::string& text, const Network& net);

std::string render_expr(const Expr& e, const Network& net);
std::string render_guard(const Guard& g, const TimedAutomaton& ta, const Network& net);

std::string render_stats_text(const SearchStats& stats);
/// Single-line object with verdict, regions_stored, states_stored, elapsed_ms, strategy, direction.
std::string render_stats_json(const SearchStats& stats);

}  // namespace tarzan
