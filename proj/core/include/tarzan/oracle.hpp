#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "tarzan/explore.hpp"
#include "tarzan/model.hpp"
#include "tarzan/region.hpp"

namespace tarzan::oracle {

using Rational = boost::rational<std::int64_t>;
using ClockValues = std::vector<Rational>;

/// A concrete valuation plus, for unbounded clocks, a tag ordering the moments
/// they exceeded their maximum (equal tags = simultaneously, smaller = earlier).
struct Sample {
    ClockValues values;
    std::vector<Rational> tags;
};

/// The region containing the valuation. Throws std::invalid_argument when two or
/// more clocks are unbounded and no tags are given.
Region abstract(const ClockValues& values, const std::vector<int>& locations, const std::vector<int>& cm,
                const std::vector<Rational>& tags = {});

/// Representative valuation: fractional sets get i/(r+1), unbounded sets get
/// cm(x) + k for the k-th set counted from the earliest.
Sample sample(const Region& region, const std::vector<int>& cm);

bool holds(const ClockValues& values, const ClockConstraint& atom, int clock_offset = 0);

/// Regions met while letting time pass from sample(region), consecutive repeats removed.
std::vector<Region> delay_sweep(const Region& region, const std::vector<int>& cm);

/// Every valid region over the given clock bounds at one location tuple.
std::vector<Region> enumerate_regions(const std::vector<int>& locations, const std::vector<int>& cm);

/// Concrete replay of a forward trace: one valuation per step, plus the total time elapsed.
/// Throws std::logic_error if a step cannot be realised.
struct Replay {
    std::vector<ClockValues> values;
    std::vector<Rational> time;
};
Replay replay_trace(const std::vector<TraceStep>& trace, const Network& net);

std::uint64_t binomial(int n, int k);
/// Ordered partitions of an n-element set.
std::uint64_t fubini(int n);
std::uint64_t stirling2(int n, int k);
/// Upper bound on discrete predecessors over one transition for n clocks sharing maximum cm.
std::uint64_t lemma1_bound(int n, int cm);
/// Exact number of regions over n clocks sharing maximum cm at one location.
std::uint64_t region_count(int n, int cm);

}  // namespace tarzan::oracle
