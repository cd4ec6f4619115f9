#pragma once

#include "iflow/model.hpp"

#include <string>
#include <vector>

namespace iflow {

/// Arc ids whose capacity sits strictly between its interval bounds.
using InteriorSet = std::vector<int>;

/// Componentwise max{lower bound, flow}: the smallest scenario for which
/// the flow stays feasible and optimal at the same cost.
Scenario minimal_capacities(const Instance& instance, const Scenario& scenario, const Flow& flow);

/// Arcs with interior capacity under the scenario, ascending.
InteriorSet interior_arcs(const Instance& instance, const Scenario& scenario);

struct ExtremalizeResult {
    bool ok = false;
    std::string error;
    Scenario scenario;
    Flow flow;
    InteriorSet interior; // interior arcs of the final scenario
    int iterations = 0;   // cycles canceled
};

/// Cycle-canceling post-processing of a worst result: normalizes the
/// input (complementary flow, minimal capacities), then repeatedly finds
/// an undirected cycle among interior arcs, shifts the flow by the
/// slack-limited step around it and re-pins the cycle capacities to the
/// flow, until the interior arcs form a forest. Cost, optimality and
/// feasibility are preserved; a cycle whose cost is nonzero (possible
/// only when the scenario is not a worst scenario) or a flow that fails
/// validation is reported as inconsistent input.
ExtremalizeResult extremalize_to_forest(const Instance& instance, const Scenario& scenario,
                                        const Flow& flow);

} // namespace iflow
