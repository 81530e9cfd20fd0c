#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "checks.hpp"
#include "tarzan/tarzan.hpp"

namespace tarzan::testing {

using checks::clocks_only;
using checks::random_ta;

/// Parses a single `.ta` text.
Network net_of(const std::string& text, const std::string& path = "model.ta");
Network net_of_all(const std::vector<std::string>& texts);

Region region_of(const std::string& text, const Network& net);
std::string show(const Region& region, const Network& net);

/// All single clock atoms over clock x whose constant is at most cm.
std::vector<ClockConstraint> atoms_for(int clock, int cm);

std::string read_text(const std::string& path);

}  // namespace tarzan::testing
