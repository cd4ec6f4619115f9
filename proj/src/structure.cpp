#include "iflow/structure.hpp"

#include "iflow/mcf.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace iflow {

Scenario minimal_capacities(const Instance& instance, const Scenario& scenario, const Flow& flow) {
    Scenario minimal = scenario;
    for (const Arc& arc : instance.arcs)
        minimal.capacities[arc.id] = std::max(arc.capacity.lower, flow.values[arc.id]);
    return minimal;
}

InteriorSet interior_arcs(const Instance& instance, const Scenario& scenario) {
    InteriorSet interior;
    for (const Arc& arc : instance.arcs) {
        const Value u = scenario.capacities[arc.id];
        if (arc.capacity.lower < u && u < arc.capacity.upper)
            interior.push_back(arc.id);
    }
    return interior;
}

namespace {

struct CycleStep {
    int arc_id;
    bool forward; // traversal direction matches the arc direction
};

// First undirected cycle among the given arcs under ascending arc-id
// adjacency, as a closed traversal. Empty when the arcs form a forest.
std::vector<CycleStep> find_interior_cycle(const Instance& instance,
                                           const std::vector<int>& arc_ids) {
    struct Edge {
        int arc_id;
        int other;
        bool forward;
    };
    std::vector<std::vector<Edge>> adj(instance.num_nodes + 1);
    for (int id : arc_ids) {
        const Arc& arc = instance.arcs[id];
        adj[arc.tail].push_back({id, arc.head, true});
        adj[arc.head].push_back({id, arc.tail, false});
    }
    for (auto& edges : adj)
        std::sort(edges.begin(), edges.end(),
                  [](const Edge& a, const Edge& b) { return a.arc_id < b.arc_id; });

    std::vector<char> visited(instance.num_nodes + 1, 0);
    std::vector<char> on_stack(instance.num_nodes + 1, 0);
    std::vector<int> stack_nodes;
    std::vector<CycleStep> stack_steps; // step i enters stack_nodes[i + 1]
    std::vector<CycleStep> cycle;

    auto dfs = [&](auto&& self, int v, int entry_arc) -> bool {
        visited[v] = 1;
        on_stack[v] = 1;
        stack_nodes.push_back(v);
        for (const Edge& edge : adj[v]) {
            if (edge.arc_id == entry_arc)
                continue; // an edge may not be reused immediately
            if (!visited[edge.other]) {
                stack_steps.push_back({edge.arc_id, edge.forward});
                if (self(self, edge.other, edge.arc_id))
                    return true;
                stack_steps.pop_back();
            } else if (on_stack[edge.other]) {
                size_t start = 0;
                while (stack_nodes[start] != edge.other)
                    ++start;
                cycle.assign(stack_steps.begin() + start, stack_steps.end());
                cycle.push_back({edge.arc_id, edge.forward});
                return true;
            }
        }
        on_stack[v] = 0;
        stack_nodes.pop_back();
        return false;
    };

    for (int v = 1; v <= instance.num_nodes && cycle.empty(); ++v)
        if (!visited[v] && !adj[v].empty())
            dfs(dfs, v, -1);
    return cycle;
}

// Slack against the interval bounds, not the current capacities: the
// re-pinning step moves the capacities along with the flow.
Value cycle_step_size(const Instance& instance, const Flow& flow,
                      const std::vector<CycleStep>& cycle) {
    Value delta = std::numeric_limits<Value>::max();
    for (const CycleStep& step : cycle) {
        const Arc& arc = instance.arcs[step.arc_id];
        if (step.forward)
            delta = std::min(delta, arc.capacity.upper - flow.values[step.arc_id]);
        else
            delta = std::min(delta, flow.values[step.arc_id] - arc.capacity.lower);
    }
    return delta;
}

Value cycle_cost(const Instance& instance, const std::vector<CycleStep>& cycle) {
    Value cost = 0;
    for (const CycleStep& step : cycle)
        cost += step.forward ? instance.arcs[step.arc_id].cost : -instance.arcs[step.arc_id].cost;
    return cost;
}

std::vector<CycleStep> reversed(std::vector<CycleStep> cycle) {
    std::reverse(cycle.begin(), cycle.end());
    for (CycleStep& step : cycle)
        step.forward = !step.forward;
    return cycle;
}

} // namespace

ExtremalizeResult extremalize_to_forest(const Instance& instance, const Scenario& scenario,
                                        const Flow& flow) {
    ExtremalizeResult result;
    if (auto violation = validate_scenario(instance, scenario)) {
        result.error = "invalid scenario: " + *violation;
        return result;
    }
    if (auto violation = validate_flow(instance, scenario, flow)) {
        result.error = "invalid flow: " + *violation;
        return result;
    }

    // Normalize as in the opening reduction: complementary flow, then
    // capacities minimal with respect to it. Optimality is checked
    // against the given scenario before the capacities shrink, since
    // minimal capacities would make any feasible flow look optimal.
    Flow current_flow;
    try {
        current_flow = make_complementary(instance, flow);
    } catch (const std::logic_error& e) {
        result.error = std::string("flow not optimal: ") + e.what();
        return result;
    }
    {
        auto given = potentials_for_flow(instance, scenario, current_flow);
        if (!given || !certify_optimality(instance, scenario, current_flow, *given).empty()) {
            result.error = "flow not optimal for scenario (negative residual cycle)";
            return result;
        }
    }
    Scenario current = minimal_capacities(instance, scenario, current_flow);

    auto potentials = potentials_for_flow(instance, current, current_flow);
    if (!potentials) {
        result.error = "internal: minimal capacities broke optimality";
        return result;
    }
    if (!certify_optimality(instance, current, current_flow, *potentials).empty()) {
        result.error = "internal: minimal capacities broke complementary slackness";
        return result;
    }

    const Value original_cost = current_flow.total_cost;
    for (int iteration = 0; iteration <= instance.num_arcs(); ++iteration) {
        std::vector<int> interior = interior_arcs(instance, current);
        std::vector<CycleStep> cycle = find_interior_cycle(instance, interior);
        if (cycle.empty()) {
            result.ok = true;
            result.interior = std::move(interior);
            result.scenario = std::move(current);
            current_flow.total_cost = flow_cost(instance, current_flow.values);
            result.flow = std::move(current_flow);
            result.iterations = iteration;
            if (result.flow.total_cost != original_cost) {
                result.ok = false;
                result.error = "internal: cost changed during extremalization";
            }
            return result;
        }

        if (cycle_step_size(instance, current_flow, cycle) == 0)
            cycle = reversed(cycle);
        const Value delta = cycle_step_size(instance, current_flow, cycle);
        if (delta <= 0) {
            result.error = "internal: degenerate interior cycle";
            return result;
        }
        if (cycle_cost(instance, cycle) != 0) {
            result.error = "interior cycle with nonzero cost: scenario is not a worst scenario";
            return result;
        }

        for (const CycleStep& step : cycle)
            current_flow.values[step.arc_id] += step.forward ? delta : -delta;
        for (const CycleStep& step : cycle)
            current.capacities[step.arc_id] = current_flow.values[step.arc_id];
    }

    result.error = "internal: cycle canceling did not terminate";
    return result;
}

} // namespace iflow
