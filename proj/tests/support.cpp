#include "support.hpp"

#include <algorithm>

namespace testsupport {

namespace {

// Walks every integral point of the capacity box, keeping the cheapest
// valid flow of the wanted size.
struct FlowEnumerator {
    const Instance& instance;
    const Scenario& scenario;
    Value wanted;
    std::vector<Value> values;
    std::optional<Value> best;

    FlowEnumerator(const Instance& instance_, const Scenario& scenario_, Value wanted_)
        : instance(instance_), scenario(scenario_), wanted(wanted_),
          values(instance_.arcs.size(), 0) {}

    void run(size_t arc) {
        if (arc == instance.arcs.size()) {
            for (int v = 1; v <= instance.num_nodes; ++v) {
                const Value net = iflow::net_outflow(instance, values, v);
                Value expected = 0;
                if (v == instance.source)
                    expected = wanted;
                else if (v == instance.sink)
                    expected = -wanted;
                if (net != expected)
                    return;
            }
            const Value cost = iflow::flow_cost(instance, values);
            if (!best || cost < *best)
                best = cost;
            return;
        }
        for (Value x = 0; x <= scenario.capacities[arc]; ++x) {
            values[arc] = x;
            run(arc + 1);
        }
        values[arc] = 0;
    }
};

} // namespace

std::optional<Value> enumerate_min_cost(const Instance& instance, const Scenario& scenario) {
    FlowEnumerator enumerator(instance, scenario, instance.flow_amount);
    enumerator.run(0);
    return enumerator.best;
}

Value enumerate_max_flow(const Instance& instance, const Scenario& scenario) {
    Value total_capacity = 0;
    for (Value u : scenario.capacities)
        total_capacity += u;
    for (Value size = total_capacity; size >= 1; --size) {
        FlowEnumerator enumerator(instance, scenario, size);
        enumerator.run(0);
        if (enumerator.best)
            return size;
    }
    return 0;
}

Value knapsack_exhaustive(Value b, const std::vector<Value>& weights,
                          const std::vector<Value>& values) {
    const size_t n = weights.size();
    Value best = 0;
    for (std::uint64_t pick = 0; pick < (1ULL << n); ++pick) {
        Value weight = 0;
        Value value = 0;
        for (size_t i = 0; i < n; ++i)
            if (pick & (1ULL << i)) {
                weight += weights[i];
                value += values[i];
            }
        if (weight <= b)
            best = std::max(best, value);
    }
    return best;
}

namespace {

// Random binary composition tree, materialized with fresh middle nodes
// for serial joins.
struct SpBuilder {
    Rng& rng;
    Instance& instance;

    void build(int leaves, int source, int sink) {
        if (leaves == 1) {
            const int id = instance.num_arcs();
            instance.arcs.push_back({id, source, sink, 0, {0, 0}});
            return;
        }
        const int left = 1 + static_cast<int>(rng.below(leaves - 1));
        if (rng.below(2) == 0) {
            const int middle = ++instance.num_nodes;
            build(left, source, middle);
            build(leaves - left, middle, sink);
        } else {
            build(left, source, sink);
            build(leaves - left, source, sink);
        }
    }
};

} // namespace

Instance random_sp_instance(Rng& rng, int num_arcs, Value cap_hi, Value cost_hi, Value f) {
    Instance instance;
    instance.num_nodes = 2;
    instance.source = 1;
    instance.sink = 2;
    instance.flow_amount = f;
    SpBuilder{rng, instance}.build(num_arcs, 1, 2);
    for (Arc& arc : instance.arcs) {
        const Value a = rng.between(0, cap_hi);
        const Value b = rng.between(0, cap_hi);
        arc.capacity = {std::min(a, b), std::max(a, b)};
        arc.cost = rng.between(0, cost_hi);
    }
    return instance;
}

Scenario random_scenario(Rng& rng, const Instance& instance) {
    Scenario scenario;
    for (const Arc& arc : instance.arcs)
        scenario.capacities.push_back(rng.between(arc.capacity.lower, arc.capacity.upper));
    return scenario;
}

} // namespace testsupport
