#include "iflow/paradox.hpp"

#include "iflow/mcf.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace iflow {

Value path_signed_cost(const Instance& instance, const std::vector<PathStep>& steps) {
    Value cost = 0;
    for (const PathStep& step : steps)
        cost += step.forward ? instance.arcs[step.arc_id].cost : -instance.arcs[step.arc_id].cost;
    return cost;
}

bool is_augmenting_path(const Instance& instance, const Scenario& scenario, const Flow& flow,
                        const std::vector<PathStep>& steps) {
    if (steps.empty())
        return false;
    std::vector<char> visited(instance.num_nodes + 1, 0);
    int at = instance.source;
    visited[at] = 1;
    for (const PathStep& step : steps) {
        const Arc& arc = instance.arcs[step.arc_id];
        if (step.forward) {
            if (arc.tail != at || flow.values[arc.id] >= scenario.capacities[arc.id])
                return false;
            at = arc.head;
        } else {
            if (arc.head != at || flow.values[arc.id] <= 0)
                return false;
            at = arc.tail;
        }
        if (visited[at])
            return false;
        visited[at] = 1;
    }
    return at == instance.sink;
}

ProfileOutcome worst_value_profile(const Instance& instance, Value f_max,
                                   unsigned long long budget) {
    ProfileOutcome outcome;
    for (Value f = 1; f <= f_max; ++f) {
        Instance sized = instance;
        sized.flow_amount = f;
        WorstOutcome worst = worst_value_bruteforce(sized, budget);
        if (worst.status == WorstOutcome::Status::budget_exceeded) {
            outcome.budget_exceeded = true;
            outcome.required = worst.required;
            return outcome;
        }
        ProfileEntry entry;
        entry.f = f;
        if (worst.found())
            entry.c_w = worst.result.c_w;
        outcome.entries.push_back(entry);
    }
    return outcome;
}

namespace {

// Unit steps of the flow difference x^{f+1} - x^f, grouped per node for
// walking: positive units travel along the arc, negative ones against.
struct UnitGraph {
    struct Unit {
        int arc_id;
        bool forward;
        int to;
    };
    std::vector<std::vector<Unit>> out; // per node, ascending arc id

    UnitGraph(const Instance& instance, const std::vector<Value>& difference)
        : out(instance.num_nodes + 1) {
        for (const Arc& arc : instance.arcs) {
            const Value d = difference[arc.id];
            for (Value k = 0; k < d; ++k)
                out[arc.tail].push_back({arc.id, true, arc.head});
            for (Value k = 0; k < -d; ++k)
                out[arc.head].push_back({arc.id, false, arc.tail});
        }
        for (auto& units : out)
            std::sort(units.begin(), units.end(), [](const Unit& a, const Unit& b) {
                return a.arc_id < b.arc_id || (a.arc_id == b.arc_id && a.forward && !b.forward);
            });
    }
};

// Walk from s consuming units (lowest arc id first), then excise loops
// to obtain a simple s-t path; excised loops are the peeled cycles.
struct Decomposition {
    std::vector<PathStep> path;
    std::vector<std::vector<PathStep>> cycles;
};

Decomposition decompose_difference(const Instance& instance, const std::vector<Value>& difference) {
    UnitGraph graph(instance, difference);
    std::vector<size_t> next(graph.out.size(), 0);
    size_t total_units = 0;
    for (const auto& units : graph.out)
        total_units += units.size();

    std::vector<int> walk_nodes{instance.source};
    std::vector<PathStep> walk_steps;
    int at = instance.source;
    while (at != instance.sink || next[at] < graph.out[at].size()) {
        if (next[at] >= graph.out[at].size() || walk_steps.size() > total_units)
            throw std::logic_error("flow difference is not decomposable into a path and cycles");
        const UnitGraph::Unit& unit = graph.out[at][next[at]++];
        walk_steps.push_back({unit.arc_id, unit.forward});
        at = unit.to;
        walk_nodes.push_back(at);
    }

    Decomposition result;
    std::vector<int> position(instance.num_nodes + 1, -1);
    std::vector<int> kept_nodes;
    std::vector<PathStep> kept_steps;
    position[walk_nodes[0]] = 0;
    kept_nodes.push_back(walk_nodes[0]);
    for (size_t i = 1; i < walk_nodes.size(); ++i) {
        const int node = walk_nodes[i];
        if (position[node] >= 0) {
            // Loop closed: excise it as a peeled cycle.
            std::vector<PathStep> cycle(kept_steps.begin() + position[node], kept_steps.end());
            cycle.push_back(walk_steps[i - 1]);
            result.cycles.push_back(std::move(cycle));
            while (static_cast<int>(kept_nodes.size()) > position[node] + 1) {
                position[kept_nodes.back()] = -1;
                kept_nodes.pop_back();
                kept_steps.pop_back();
            }
        } else {
            position[node] = static_cast<int>(kept_nodes.size());
            kept_nodes.push_back(node);
            kept_steps.push_back(walk_steps[i - 1]);
        }
    }
    result.path = std::move(kept_steps);
    return result;
}

} // namespace

ParadoxOutcome detect_paradox(const Instance& instance, unsigned long long budget) {
    ParadoxOutcome outcome;

    Scenario upper;
    for (const Arc& arc : instance.arcs)
        upper.capacities.push_back(arc.capacity.upper);
    const Value f_max = max_flow_value(instance, upper);

    std::optional<WorstResult> previous;
    for (Value f = 1; f + 1 <= f_max; ++f) {
        Instance at_f = instance;
        at_f.flow_amount = f;
        if (!previous) {
            WorstOutcome worst = worst_value_bruteforce(at_f, budget);
            if (worst.status == WorstOutcome::Status::budget_exceeded) {
                outcome.status = ParadoxOutcome::Status::budget_exceeded;
                outcome.required = worst.required;
                return outcome;
            }
            if (!worst.found())
                return outcome; // no feasible amount at all
            previous = std::move(worst.result);
        }

        Instance at_next = instance;
        at_next.flow_amount = f + 1;
        WorstOutcome worst_next = worst_value_bruteforce(at_next, budget);
        if (worst_next.status == WorstOutcome::Status::budget_exceeded) {
            outcome.status = ParadoxOutcome::Status::budget_exceeded;
            outcome.required = worst_next.required;
            return outcome;
        }
        if (!worst_next.found())
            return outcome; // larger amounts are infeasible as well

        if (worst_next.result.c_w < previous->c_w) {
            outcome.status = ParadoxOutcome::Status::found;
            outcome.report.f = f;
            outcome.report.c_w_at_f = previous->c_w;
            outcome.report.c_w_at_f_plus_1 = worst_next.result.c_w;

            std::vector<Value> difference(instance.arcs.size(), 0);
            for (const Arc& arc : instance.arcs)
                difference[arc.id] =
                    worst_next.result.flow.values[arc.id] - previous->flow.values[arc.id];
            Decomposition d = decompose_difference(instance, difference);
            const Value path_cost = path_signed_cost(instance, d.path);
            if (path_cost >= 0) {
                for (const auto& cycle : d.cycles)
                    if (path_signed_cost(instance, cycle) < 0)
                        throw std::logic_error(
                            "negative-cost cycle in worst flow difference: worst flows "
                            "cannot both be optimal");
                throw std::logic_error("paradox witness extraction failed: no negative path");
            }
            AugmentingPath witness;
            witness.steps = std::move(d.path);
            witness.signed_cost = path_cost;
            outcome.report.witness = std::move(witness);
            return outcome;
        }
        previous = std::move(worst_next.result);
    }
    return outcome;
}

Instance construct_paradox_instance(const Instance& skeleton, const Flow& flow,
                                    const std::vector<PathStep>& path) {
    if (flow.values.size() != skeleton.arcs.size())
        throw std::invalid_argument("flow does not match the skeleton");
    for (const Arc& arc : skeleton.arcs)
        if (flow.values[arc.id] < 0)
            throw std::invalid_argument("negative flow value");
    for (int v = 1; v <= skeleton.num_nodes; ++v)
        if (v != skeleton.source && v != skeleton.sink &&
            net_outflow(skeleton, flow.values, v) != 0)
            throw std::invalid_argument("flow is not balanced");

    // Augmenting against the eventual [0, max{x, x'}] capacities means
    // every backward step needs positive flow to give back.
    std::vector<char> visited(skeleton.num_nodes + 1, 0);
    int at = skeleton.source;
    visited[at] = 1;
    for (const PathStep& step : path) {
        const Arc& arc = skeleton.arcs[step.arc_id];
        if (step.forward) {
            if (arc.tail != at)
                throw std::invalid_argument("path not augmenting for the given flow");
            at = arc.head;
        } else {
            if (arc.head != at || flow.values[arc.id] < 1)
                throw std::invalid_argument("path not augmenting for the given flow");
            at = arc.tail;
        }
        if (visited[at])
            throw std::invalid_argument("path not augmenting for the given flow");
        visited[at] = 1;
    }
    if (at != skeleton.sink)
        throw std::invalid_argument("path not augmenting for the given flow");
    if (path_signed_cost(skeleton, path) >= 0)
        throw std::invalid_argument("nonnegative path cost");

    std::vector<Value> augmented = flow.values;
    for (const PathStep& step : path)
        augmented[step.arc_id] += step.forward ? 1 : -1;

    Instance result = skeleton;
    for (Arc& arc : result.arcs) {
        arc.capacity.lower = 0;
        arc.capacity.upper = std::max(flow.values[arc.id], augmented[arc.id]);
    }
    result.flow_amount = net_outflow(skeleton, flow.values, skeleton.source);
    return result;
}

namespace {

void check_cost_matrix(int n, const CostMatrix& costs, int s, int t, int limit) {
    if (n < 2 || n > limit)
        throw std::invalid_argument("complete graph size must be within [2, " +
                                    std::to_string(limit) + "]");
    if (s < 1 || s > n || t < 1 || t > n || s == t)
        throw std::invalid_argument("invalid source/sink");
    if (static_cast<int>(costs.size()) != n)
        throw std::invalid_argument("cost matrix must have n rows");
    for (const auto& row : costs) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("cost matrix must have n columns per row");
        for (Value c : row)
            if (c < 0)
                throw std::invalid_argument("costs must be nonnegative");
    }
}

} // namespace

ImprovingPath most_negative_improving_path_complete(int n, const CostMatrix& costs, int s, int t,
                                                    int limit) {
    check_cost_matrix(n, costs, s, t, limit);
    auto cost = [&costs](int i, int j) { return costs[i - 1][j - 1]; };

    std::vector<int> inner;
    for (int v = 1; v <= n; ++v)
        if (v != s && v != t)
            inner.push_back(v);
    const int k = static_cast<int>(inner.size());

    // Degenerate candidate: the single arc s -> t.
    ImprovingPath best;
    best.hops = {{s, t, true}};
    best.signed_cost = cost(s, t);

    // Longest simple directed path from each start over subsets of the
    // inner nodes (Held-Karp style); costs are nonnegative, -1 = unset.
    const int full = 1 << k;
    for (int jj = 0; jj < k; ++jj) {
        std::vector<std::vector<Value>> dp(full, std::vector<Value>(k, -1));
        std::vector<std::vector<int>> parent(full, std::vector<int>(k, -1));
        dp[1 << jj][jj] = 0;
        for (int mask = 1; mask < full; ++mask) {
            if (!(mask & (1 << jj)))
                continue;
            for (int v = 0; v < k; ++v) {
                if (!(mask & (1 << v)) || dp[mask][v] < 0)
                    continue;

                // Close the improving path: i = inner[v], j = inner[jj].
                const Value candidate = cost(s, inner[v]) - dp[mask][v] + cost(inner[jj], t);
                if (candidate < best.signed_cost) {
                    best.signed_cost = candidate;
                    best.hops.clear();
                    best.hops.push_back({s, inner[v], true});
                    int cur_mask = mask;
                    int cur = v;
                    while (parent[cur_mask][cur] >= 0) {
                        const int prev = parent[cur_mask][cur];
                        best.hops.push_back({inner[prev], inner[cur], false});
                        cur_mask &= ~(1 << cur);
                        cur = prev;
                    }
                    best.hops.push_back({inner[jj], t, true});
                }

                for (int w = 0; w < k; ++w) {
                    if (mask & (1 << w))
                        continue;
                    const int next_mask = mask | (1 << w);
                    const Value extended = dp[mask][v] + cost(inner[v], inner[w]);
                    if (extended > dp[next_mask][w]) {
                        dp[next_mask][w] = extended;
                        parent[next_mask][w] = v;
                    }
                }
            }
        }
    }
    return best;
}

bool is_immune(int n, const CostMatrix& costs, int s, int t, int limit) {
    return most_negative_improving_path_complete(n, costs, s, t, limit).signed_cost >= 0;
}

Instance construct_paradox_from_improving_path(int n, const CostMatrix& costs, int s, int t,
                                               const ImprovingPath& path) {
    check_cost_matrix(n, costs, s, t, n);
    if (path.signed_cost >= 0)
        throw std::invalid_argument("improving path must have negative cost");

    Instance instance;
    instance.num_nodes = n;
    instance.source = s;
    instance.sink = t;
    std::map<std::pair<int, int>, int> arc_of;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) {
                arc_of[{i, j}] = instance.num_arcs();
                instance.arcs.push_back(
                    {instance.num_arcs(), i, j, costs[i - 1][j - 1], IntervalCapacity{0, 0}});
            }

    // Per backward hop (i, j): a unit flow s -> i -> j -> t keeps the
    // hop's arc saturated, so the improving path stays augmenting.
    std::vector<char> used(instance.arcs.size(), 0);
    Value f = 0;
    for (const ImprovingPath::Hop& hop : path.hops) {
        if (hop.forward) {
            used[arc_of.at({hop.tail, hop.head})] = 1;
            continue;
        }
        ++f;
        used[arc_of.at({s, hop.tail})] = 1;
        used[arc_of.at({hop.tail, hop.head})] = 1;
        used[arc_of.at({hop.head, t})] = 1;
    }
    for (const Arc& arc : instance.arcs)
        if (used[arc.id])
            instance.arcs[arc.id].capacity.upper = 1;
    instance.flow_amount = f;
    return instance;
}

} // namespace iflow
