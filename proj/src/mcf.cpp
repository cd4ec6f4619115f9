#include "iflow/mcf.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace iflow {

namespace {

constexpr Value kInf = std::numeric_limits<Value>::max();

// Outgoing residual adjacency rebuilt from scratch per query; instances
// are desk-sized throughout.
struct ResidualStep {
    int arc_id;
    bool forward;
};

struct Adjacency {
    std::vector<std::vector<int>> out_arcs; // arcs leaving node, ascending id
    std::vector<std::vector<int>> in_arcs;  // arcs entering node, ascending id

    explicit Adjacency(const Instance& instance)
        : out_arcs(instance.num_nodes + 1), in_arcs(instance.num_nodes + 1) {
        for (const Arc& arc : instance.arcs) {
            out_arcs[arc.tail].push_back(arc.id);
            in_arcs[arc.head].push_back(arc.id);
        }
    }
};

} // namespace

Value reduced_cost(const Arc& arc, const Potentials& potentials) {
    return arc.cost - potentials.pi[arc.tail] + potentials.pi[arc.head];
}

Value max_flow_value(const Instance& instance, const Scenario& scenario) {
    const int n = instance.num_nodes;
    Adjacency adj(instance);
    std::vector<Value> flow(instance.arcs.size(), 0);
    Value total = 0;

    for (;;) {
        // BFS for an augmenting path in the residual graph.
        std::vector<ResidualStep> parent(n + 1, {-1, false});
        std::vector<char> seen(n + 1, 0);
        std::queue<int> queue;
        queue.push(instance.source);
        seen[instance.source] = 1;
        while (!queue.empty() && !seen[instance.sink]) {
            int v = queue.front();
            queue.pop();
            for (int id : adj.out_arcs[v]) {
                const Arc& arc = instance.arcs[id];
                if (!seen[arc.head] && flow[id] < scenario.capacities[id]) {
                    seen[arc.head] = 1;
                    parent[arc.head] = {id, true};
                    queue.push(arc.head);
                }
            }
            for (int id : adj.in_arcs[v]) {
                const Arc& arc = instance.arcs[id];
                if (!seen[arc.tail] && flow[id] > 0) {
                    seen[arc.tail] = 1;
                    parent[arc.tail] = {id, false};
                    queue.push(arc.tail);
                }
            }
        }
        if (!seen[instance.sink])
            break;

        Value bottleneck = kInf;
        for (int v = instance.sink; v != instance.source;) {
            const ResidualStep& step = parent[v];
            const Arc& arc = instance.arcs[step.arc_id];
            if (step.forward) {
                bottleneck = std::min(bottleneck, scenario.capacities[step.arc_id] - flow[step.arc_id]);
                v = arc.tail;
            } else {
                bottleneck = std::min(bottleneck, flow[step.arc_id]);
                v = arc.head;
            }
        }
        for (int v = instance.sink; v != instance.source;) {
            const ResidualStep& step = parent[v];
            const Arc& arc = instance.arcs[step.arc_id];
            if (step.forward) {
                flow[step.arc_id] += bottleneck;
                v = arc.tail;
            } else {
                flow[step.arc_id] -= bottleneck;
                v = arc.head;
            }
        }
        total += bottleneck;
    }
    return total;
}

std::optional<McfResult> min_cost_flow(const Instance& instance, const Scenario& scenario) {
    if (max_flow_value(instance, scenario) < instance.flow_amount)
        return std::nullopt;

    const int n = instance.num_nodes;
    Adjacency adj(instance);
    std::vector<Value> flow(instance.arcs.size(), 0);
    std::vector<Value> pi(n + 1, 0);
    Value remaining = instance.flow_amount;

    while (remaining > 0) {
        // Dijkstra on reduced costs; all costs are nonnegative and the
        // potentials keep reduced costs nonnegative across iterations.
        std::vector<Value> dist(n + 1, kInf);
        std::vector<ResidualStep> parent(n + 1, {-1, false});
        std::vector<char> done(n + 1, 0);
        dist[instance.source] = 0;
        using Entry = std::pair<Value, int>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
        pq.emplace(0, instance.source);

        auto relax = [&](int to, Value nd, int arc_id, bool fwd) {
            if (done[to])
                return; // parent pointers must follow finalization order
            if (nd < dist[to]) {
                dist[to] = nd;
                parent[to] = {arc_id, fwd};
                pq.emplace(nd, to);
            } else if (nd == dist[to] && parent[to].arc_id >= 0) {
                // lowest arc id wins among equal-length paths
                if (arc_id < parent[to].arc_id ||
                    (arc_id == parent[to].arc_id && fwd && !parent[to].forward))
                    parent[to] = {arc_id, fwd};
            }
        };

        while (!pq.empty()) {
            auto [d, v] = pq.top();
            pq.pop();
            if (done[v] || d > dist[v])
                continue;
            done[v] = 1;
            for (int id : adj.out_arcs[v]) {
                const Arc& arc = instance.arcs[id];
                if (flow[id] < scenario.capacities[id])
                    relax(arc.head, d + arc.cost - pi[v] + pi[arc.head], id, true);
            }
            for (int id : adj.in_arcs[v]) {
                const Arc& arc = instance.arcs[id];
                if (flow[id] > 0)
                    relax(arc.tail, d - arc.cost - pi[v] + pi[arc.tail], id, false);
            }
        }

        // Feasibility was established upfront, so the sink is reachable.
        const Value dt = dist[instance.sink];
        if (dt == kInf)
            throw std::logic_error("sink unreachable despite feasibility check");
        for (int v = 1; v <= n; ++v)
            pi[v] -= std::min(dist[v], dt);

        Value bottleneck = remaining;
        for (int v = instance.sink; v != instance.source;) {
            const ResidualStep& step = parent[v];
            const Arc& arc = instance.arcs[step.arc_id];
            if (step.forward) {
                bottleneck = std::min(bottleneck, scenario.capacities[step.arc_id] - flow[step.arc_id]);
                v = arc.tail;
            } else {
                bottleneck = std::min(bottleneck, flow[step.arc_id]);
                v = arc.head;
            }
        }
        for (int v = instance.sink; v != instance.source;) {
            const ResidualStep& step = parent[v];
            const Arc& arc = instance.arcs[step.arc_id];
            if (step.forward) {
                flow[step.arc_id] += bottleneck;
                v = arc.tail;
            } else {
                flow[step.arc_id] -= bottleneck;
                v = arc.head;
            }
        }
        remaining -= bottleneck;
    }

    McfResult result;
    result.flow.values = std::move(flow);
    result.flow.total_cost = flow_cost(instance, result.flow.values);
    result.potentials.pi = std::move(pi);
    return result;
}

std::vector<ResidualArc> residual_arcs(const Instance& instance, const Scenario& scenario,
                                       const Flow& flow) {
    std::vector<ResidualArc> arcs;
    for (const Arc& arc : instance.arcs) {
        const Value x = flow.values[arc.id];
        if (x < scenario.capacities[arc.id])
            arcs.push_back(
                {arc.id, true, arc.tail, arc.head, scenario.capacities[arc.id] - x, arc.cost});
        if (x > 0)
            arcs.push_back({arc.id, false, arc.head, arc.tail, x, -arc.cost});
    }
    return arcs;
}

std::vector<std::string> certify_optimality(const Instance& instance, const Scenario& scenario,
                                            const Flow& flow, const Potentials& potentials) {
    std::vector<std::string> violations;
    for (const Arc& arc : instance.arcs) {
        const Value x = flow.values[arc.id];
        const Value u = scenario.capacities[arc.id];
        const std::string tag = "arc " + std::to_string(arc.id);
        if (x < 0 || x > u) {
            violations.push_back(tag + ": flow outside [0, capacity]");
            continue;
        }
        const Value cpi = reduced_cost(arc, potentials);
        if (cpi > 0 && x != 0)
            violations.push_back(tag + ": positive reduced cost but nonzero flow");
        if (cpi < 0 && x != u)
            violations.push_back(tag + ": negative reduced cost but unsaturated flow");
    }
    return violations;
}

Flow make_complementary(const Instance& instance, const Flow& flow) {
    Flow result = flow;
    const int m = instance.num_arcs();
    for (int e1 = 0; e1 < m; ++e1) {
        for (int e2 = e1 + 1; e2 < m; ++e2) {
            const Arc& a = instance.arcs[e1];
            const Arc& b = instance.arcs[e2];
            if (a.tail != b.head || a.head != b.tail)
                continue;
            const Value eps = std::min(result.values[e1], result.values[e2]);
            if (eps <= 0)
                continue;
            if (a.cost > 0 || b.cost > 0)
                throw std::logic_error(
                    "opposite arcs " + std::to_string(e1) + "," + std::to_string(e2) +
                    " carry flow both ways at positive cost; input flow cannot be optimal");
            result.values[e1] -= eps;
            result.values[e2] -= eps;
        }
    }
    result.total_cost = flow_cost(instance, result.values);
    return result;
}

std::optional<Potentials> potentials_for_flow(const Instance& instance, const Scenario& scenario,
                                              const Flow& flow) {
    const int n = instance.num_nodes;
    // Bellman-Ford from a virtual source connected to every node: a
    // negative residual cycle means the flow is not optimal.
    const std::vector<ResidualArc> residual = residual_arcs(instance, scenario, flow);
    std::vector<Value> dist(n + 1, 0);
    bool changed = true;
    for (int round = 0; round <= n && changed; ++round) {
        changed = false;
        for (const ResidualArc& arc : residual) {
            if (dist[arc.from] + arc.cost < dist[arc.to]) {
                dist[arc.to] = dist[arc.from] + arc.cost;
                changed = true;
            }
        }
    }
    if (changed)
        return std::nullopt;
    Potentials potentials;
    potentials.pi.assign(n + 1, 0);
    for (int v = 1; v <= n; ++v)
        potentials.pi[v] = -dist[v];
    return potentials;
}

} // namespace iflow
