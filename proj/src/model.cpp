#include "iflow/model.hpp"

#include <string>
#include <vector>

namespace iflow {

namespace {

std::string arc_msg(const std::string& what, int arc_id) {
    return what + " (arc " + std::to_string(arc_id) + ")";
}

} // namespace

Value flow_cost(const Instance& instance, const std::vector<Value>& values) {
    Value total = 0;
    for (const Arc& arc : instance.arcs)
        total += arc.cost * values[arc.id];
    return total;
}

Value net_outflow(const Instance& instance, const std::vector<Value>& values, int node) {
    Value net = 0;
    for (const Arc& arc : instance.arcs) {
        if (arc.tail == node)
            net += values[arc.id];
        if (arc.head == node)
            net -= values[arc.id];
    }
    return net;
}

std::optional<std::string> validate_instance(const Instance& instance) {
    const int n = instance.num_nodes;
    if (n < 1)
        return "no nodes";
    if (instance.source < 1 || instance.source > n)
        return "source out of range";
    if (instance.sink < 1 || instance.sink > n)
        return "sink out of range";
    if (instance.source == instance.sink)
        return "source equals sink";
    if (instance.flow_amount < 0)
        return "negative flow amount";

    std::vector<char> incident(static_cast<size_t>(n) + 1, 0);
    for (size_t i = 0; i < instance.arcs.size(); ++i) {
        const Arc& arc = instance.arcs[i];
        if (arc.id != static_cast<int>(i))
            return arc_msg("arc id does not match position", static_cast<int>(i));
        if (arc.tail < 1 || arc.tail > n || arc.head < 1 || arc.head > n)
            return arc_msg("arc endpoint out of range", arc.id);
        if (arc.tail == arc.head)
            return arc_msg("self-loop", arc.id);
        if (arc.cost < 0)
            return arc_msg("negative cost", arc.id);
        if (arc.capacity.lower < 0)
            return arc_msg("negative capacity bound", arc.id);
        if (arc.capacity.lower > arc.capacity.upper)
            return arc_msg("interval bounds crossed", arc.id);
        incident[arc.tail] = 1;
        incident[arc.head] = 1;
    }
    for (int v = 1; v <= n; ++v)
        if (!incident[v])
            return "isolated node " + std::to_string(v);
    return std::nullopt;
}

std::optional<std::string> validate_scenario(const Instance& instance, const Scenario& scenario) {
    if (scenario.capacities.size() != instance.arcs.size())
        return "scenario arc count mismatch";
    for (const Arc& arc : instance.arcs) {
        const Value u = scenario.capacities[arc.id];
        if (u < arc.capacity.lower || u > arc.capacity.upper)
            return arc_msg("capacity out of interval", arc.id);
    }
    return std::nullopt;
}

std::optional<std::string> validate_flow(const Instance& instance, const Scenario& scenario,
                                         const Flow& flow) {
    if (flow.values.size() != instance.arcs.size())
        return "flow arc count mismatch";
    if (scenario.capacities.size() != instance.arcs.size())
        return "scenario arc count mismatch";
    for (const Arc& arc : instance.arcs) {
        const Value x = flow.values[arc.id];
        if (x < 0)
            return arc_msg("negative flow", arc.id);
        if (x > scenario.capacities[arc.id])
            return arc_msg("capacity", arc.id);
    }
    for (int v = 1; v <= instance.num_nodes; ++v) {
        const Value net = net_outflow(instance, flow.values, v);
        if (v == instance.source) {
            if (net != instance.flow_amount)
                return "source balance";
        } else if (v == instance.sink) {
            if (net != -instance.flow_amount)
                return "sink balance";
        } else if (net != 0) {
            return "balance at node " + std::to_string(v);
        }
    }
    if (flow.total_cost != flow_cost(instance, flow.values))
        return "total cost mismatch";
    return std::nullopt;
}

} // namespace iflow
