#include "iflow/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace iflow {

namespace {

Arc make_arc(int id, int tail, int head, Value lower, Value upper, Value cost) {
    return Arc{id, tail, head, cost, IntervalCapacity{lower, upper}};
}

void push_arc(Instance& instance, int tail, int head, Value lower, Value upper, Value cost) {
    instance.arcs.push_back(make_arc(instance.num_arcs(), tail, head, lower, upper, cost));
}

} // namespace

Instance gen_knapsack_reduction(const KnapsackData& knapsack) {
    const size_t items = knapsack.weights.size();
    if (knapsack.values.size() != items)
        throw std::invalid_argument("knapsack weights and values differ in length");
    if (items == 0)
        throw std::invalid_argument("knapsack needs at least one item");
    if (knapsack.b < 0)
        throw std::invalid_argument("knapsack capacity must be nonnegative");
    for (size_t i = 0; i < items; ++i)
        if (knapsack.weights[i] < 1 || knapsack.values[i] < 1)
            throw std::invalid_argument("knapsack entries must be >= 1");

    // s = 1, item nodes 2..items+1, auxiliary nodes items+2..2*items+1,
    // t = 2*items+2. The zero-cost parallel route i->t is subdivided
    // through aux_i to keep the graph simple.
    Instance instance;
    const int n = static_cast<int>(items);
    instance.num_nodes = 2 * n + 2;
    instance.source = 1;
    instance.sink = 2 * n + 2;

    Value total_weight = 0;
    for (int i = 1; i <= n; ++i) {
        const Value a = knapsack.weights[i - 1];
        const Value value = knapsack.values[i - 1];
        const int item_node = 1 + i;
        const int aux_node = n + 1 + i;
        push_arc(instance, instance.source, item_node, 0, a, 0);
        push_arc(instance, item_node, instance.sink, 1, 1, value);
        push_arc(instance, item_node, aux_node, a - 1, a - 1, 0);
        push_arc(instance, aux_node, instance.sink, a, a, 0);
        total_weight += a;
    }
    instance.flow_amount = std::min(knapsack.b, total_weight);
    return instance;
}

Instance gen_interior_chain(int n) {
    if (n < 6)
        throw std::invalid_argument("interior chain needs n >= 6");

    Instance instance;
    instance.num_nodes = n;
    instance.source = 1;
    instance.sink = n;
    instance.flow_amount = n;

    for (int i = 1; i <= n - 4; ++i)
        push_arc(instance, i, i + 1, n - i, n - i, 2);
    for (int i = n - 3; i <= n - 2; ++i)
        push_arc(instance, i, i + 1, n - i - 1, n - i - 1, 2);
    push_arc(instance, n - 1, n, 2, 2, 2);
    for (int i = 1; i <= n - 2; ++i)
        push_arc(instance, i, n, 0, 2, 1);
    push_arc(instance, n - 3, n - 1, 0, 2, 1);
    return instance;
}

Instance gen_paradox_simple() {
    // Nodes: s=1, inner 2 and 3, t=4. Expensive middle arc 2->3.
    Instance instance;
    instance.num_nodes = 4;
    instance.source = 1;
    instance.sink = 4;
    instance.flow_amount = 1;
    push_arc(instance, 1, 2, 1, 1, 1);
    push_arc(instance, 2, 3, 1, 1, 10);
    push_arc(instance, 3, 4, 1, 1, 1);
    push_arc(instance, 2, 4, 0, 1, 1);
    push_arc(instance, 1, 3, 0, 1, 1);
    return instance;
}

Instance gen_paradox_complex() {
    // Nodes: s=1, inner 2..5, t=6. Two cheap interval shortcuts and an
    // expensive zig-zag spine.
    Instance instance;
    instance.num_nodes = 6;
    instance.source = 1;
    instance.sink = 6;
    instance.flow_amount = 1;
    push_arc(instance, 1, 2, 1, 1, 5);
    push_arc(instance, 1, 3, 0, 1, 4);
    push_arc(instance, 2, 3, 1, 1, 7);
    push_arc(instance, 3, 4, 1, 1, 5);
    push_arc(instance, 4, 5, 1, 1, 7);
    push_arc(instance, 2, 5, 0, 1, 4);
    push_arc(instance, 4, 6, 0, 1, 4);
    push_arc(instance, 5, 6, 1, 1, 5);
    return instance;
}

Instance gen_cut_complete(int n, int limit) {
    if (n < 3 || n > limit)
        throw std::invalid_argument("complete cut instance needs 3 <= n <= " +
                                    std::to_string(limit));
    Instance instance;
    instance.num_nodes = n;
    instance.source = 1;
    instance.sink = n;
    instance.flow_amount = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j)
                push_arc(instance, i, j, 0, 2, 1);
    return instance;
}

Instance gen_random(int n, int m, Value cap_hi, Value cost_hi, Value f, std::uint64_t seed) {
    if (n < 2 || m < n - 1 || cap_hi < 1 || cost_hi < 1 || f < 1)
        throw std::invalid_argument("unsatisfiable random-instance parameters");

    // Raw engine draws only; std distributions are not portable across
    // standard library implementations.
    std::mt19937_64 rng(seed);
    auto draw = [&rng](Value bound) { return static_cast<Value>(rng() % static_cast<std::uint64_t>(bound)); };

    Instance instance;
    instance.num_nodes = n;
    instance.source = 1;
    instance.sink = n;
    instance.flow_amount = f;

    // Planted Hamiltonian s-t path: connects every node and keeps the
    // all-upper scenario s-t connected.
    std::vector<int> middle(n >= 2 ? n - 2 : 0);
    std::iota(middle.begin(), middle.end(), 2);
    for (size_t i = middle.size(); i > 1; --i)
        std::swap(middle[i - 1], middle[draw(static_cast<Value>(i))]);

    std::vector<int> path;
    path.push_back(1);
    path.insert(path.end(), middle.begin(), middle.end());
    path.push_back(n);
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        const Value hi = 1 + draw(cap_hi);
        const Value lo = draw(hi + 1);
        push_arc(instance, path[i], path[i + 1], lo, hi, draw(cost_hi + 1));
    }

    while (instance.num_arcs() < m) {
        const int tail = 1 + static_cast<int>(draw(n));
        const int head = 1 + static_cast<int>((tail - 1 + 1 + draw(n - 1)) % n);
        const Value a = draw(cap_hi + 1);
        const Value b = draw(cap_hi + 1);
        push_arc(instance, tail, head, std::min(a, b), std::max(a, b), draw(cost_hi + 1));
    }
    return instance;
}

} // namespace iflow
