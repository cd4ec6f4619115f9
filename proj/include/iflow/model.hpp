#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace iflow {

/// Integer value type for capacities, costs and flow amounts.
using Value = long long;

/// Closed integer interval [lower, upper] of admissible capacities.
struct IntervalCapacity {
    Value lower = 0;
    Value upper = 0;

    bool is_crisp() const { return lower == upper; }
    bool operator==(const IntervalCapacity&) const = default;
};

/// A directed arc of the network. `id` equals the arc's position in
/// Instance::arcs; parallel and antiparallel arcs are allowed.
struct Arc {
    int id = 0;
    int tail = 0;
    int head = 0;
    Value cost = 0;
    IntervalCapacity capacity;

    bool operator==(const Arc&) const = default;
};

/// A minimum cost flow instance with interval capacities.
/// Nodes are labeled 1..num_nodes.
struct Instance {
    int num_nodes = 0;
    std::vector<Arc> arcs;
    int source = 0;
    int sink = 0;
    Value flow_amount = 0;

    int num_arcs() const { return static_cast<int>(arcs.size()); }

    bool operator==(const Instance&) const = default;
};

/// One capacity value per arc, indexed by arc id.
struct Scenario {
    std::vector<Value> capacities;

    bool operator==(const Scenario&) const = default;
};

/// One flow value per arc, indexed by arc id, plus the total cost.
struct Flow {
    std::vector<Value> values;
    Value total_cost = 0;

    bool operator==(const Flow&) const = default;
};

/// Recompute the cost of `values` under the instance's arc costs.
Value flow_cost(const Instance& instance, const std::vector<Value>& values);

/// Net outflow of `node` under `values` (outgoing minus incoming).
Value net_outflow(const Instance& instance, const std::vector<Value>& values, int node);

/// Returns std::nullopt when all Instance invariants hold, otherwise a
/// message naming the first violated invariant and the offending arc/node.
/// flow_amount = 0 is accepted: the worst optimal value is 0 by convention.
std::optional<std::string> validate_instance(const Instance& instance);

/// Checks that the scenario has one value per arc and that every value
/// lies inside the arc's capacity interval.
std::optional<std::string> validate_scenario(const Instance& instance, const Scenario& scenario);

/// Checks flow balance, capacity bounds under `scenario`, and that the
/// stored total_cost matches the recomputed one.
std::optional<std::string> validate_flow(const Instance& instance, const Scenario& scenario,
                                         const Flow& flow);

} // namespace iflow
