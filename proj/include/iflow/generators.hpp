#pragma once

#include "iflow/model.hpp"

#include <cstdint>
#include <vector>

namespace iflow {

/// Binary knapsack data: capacity b, item weights a, item values c'.
struct KnapsackData {
    Value b = 0;
    std::vector<Value> weights;
    std::vector<Value> values;
};

/// Instance whose worst optimal value equals the knapsack optimum:
/// per item i an arc s->i with interval [0, a_i] and cost 0, an arc
/// i->t with crisp capacity 1 and cost c'_i, and a subdivided parallel
/// route i->aux_i->t of crisp capacity a_i - 1 and cost 0. The
/// requested flow is min{b, sum a_i}.
Instance gen_knapsack_reduction(const KnapsackData& knapsack);

/// Chain-with-shortcuts family on n >= 6 nodes whose unique worst
/// scenario sets all n-1 interval arcs to the interior value 1.
/// Throws std::invalid_argument for n < 6.
Instance gen_interior_chain(int n);

/// The two fixed paradox examples (f = 1).
Instance gen_paradox_simple();
Instance gen_paradox_complex();

/// Complete directed graph on n nodes, intervals [0,2], unit costs,
/// f = 1; its feasible-capacity set needs exponentially many cut
/// inequalities. Throws std::invalid_argument outside [3, limit].
Instance gen_cut_complete(int n, int limit = 12);

/// Seeded random connected instance: a planted s-t path guarantees
/// connectivity at the upper capacities; remaining arcs, intervals and
/// costs are drawn reproducibly (identical seed, identical instance).
/// Throws std::invalid_argument for unsatisfiable parameters.
Instance gen_random(int n, int m, Value cap_hi, Value cost_hi, Value f, std::uint64_t seed);

} // namespace iflow
