#pragma once

#include "iflow/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace iflow {

/// Node potentials (dual values of the balance constraints), indexed by
/// node id; slot 0 is unused.
struct Potentials {
    std::vector<Value> pi;
};

/// Reduced cost c - pi[tail] + pi[head] of an arc.
Value reduced_cost(const Arc& arc, const Potentials& potentials);

struct McfResult {
    Flow flow;
    Potentials potentials;
};

/// Exact integral minimum cost flow of size instance.flow_amount under
/// the given scenario, via successive shortest augmenting paths with
/// node potentials. Returns std::nullopt when no flow of that size
/// exists. The potentials certify optimality of the returned flow.
/// Deterministic: shortest-path ties resolve to the lowest arc id.
std::optional<McfResult> min_cost_flow(const Instance& instance, const Scenario& scenario);

/// Maximum s-t flow value under the scenario capacities (Edmonds-Karp).
Value max_flow_value(const Instance& instance, const Scenario& scenario);

/// One arc of the residual graph of (scenario, flow): forward slack
/// capacity - flow at cost +c, backward slack flow at cost -c.
struct ResidualArc {
    int arc_id;
    bool forward;
    int from;
    int to;
    Value residual; // > 0 by construction
    Value cost;
};

/// All residual arcs with positive slack, ascending arc id, forward
/// before backward.
std::vector<ResidualArc> residual_arcs(const Instance& instance, const Scenario& scenario,
                                       const Flow& flow);

/// Complementary-slackness check of (flow, potentials) under scenario:
/// reduced cost > 0 forces x = 0 and reduced cost < 0 forces x = u.
/// Flow balance is not examined here; only per-arc conditions are.
/// Returns the offending arc ids with one message each, empty = certified.
std::vector<std::string> certify_optimality(const Instance& instance, const Scenario& scenario,
                                            const Flow& flow, const Potentials& potentials);

/// Cancels flow on opposite-direction arc pairs so that at most one
/// direction carries flow, preserving size and cost. Throws
/// std::logic_error if a cancellation would change the cost (possible
/// only when the input flow is not optimal).
Flow make_complementary(const Instance& instance, const Flow& flow);

/// Potentials certifying optimality of `flow` under `scenario`, built by
/// a shortest-path computation on the residual graph. Returns
/// std::nullopt when the residual graph has a negative cycle, i.e. the
/// flow is not optimal.
std::optional<Potentials> potentials_for_flow(const Instance& instance, const Scenario& scenario,
                                              const Flow& flow);

} // namespace iflow
