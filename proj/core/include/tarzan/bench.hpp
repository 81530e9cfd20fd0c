#pragma once

#include <string>
#include <vector>

#include "tarzan/model.hpp"
#include "tarzan/textio.hpp"

namespace tarzan {

/// q0 with one self-loop per clock x_i (x_i == i, reset x_i) and an edge to Goal
/// once every x_i is zero and y >= 1. Throws std::invalid_argument for n < 1.
TimedAutomaton gen_flower(int n);
/// K automata flipping ctr_i between q0 and q1 on x_i == i.
Network gen_boolean(int K);
/// K automata cycling through q0, q1, q2, q3, q4, Goal on x_i == i.
Network gen_ring(int K);
/// K - 1 keys incrementing gate, plus the Unlocker that needs gate == K - 1.
Network gen_gates(int K);

std::string flower_query();
std::string boolean_query(int K);
std::string ring_query(int K);
std::string gates_query();

/// Model files plus the query used for the family; family is flower, boolean, ring or gates.
struct Generated {
    Network model;
    std::vector<ModelSource> files;
    std::string query;
};

Generated generate(const std::string& family, int size);

}  // namespace tarzan
