#include "iflow/spdp.hpp"

#include "iflow/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <stdexcept>

namespace iflow {

namespace {

// Working edge of the reduction; tree_node tracks the partial
// decomposition accumulated on it.
struct SuperArc {
    int tail;
    int head;
    int tree_node;
    bool alive;
};

bool connected_undirected(const Instance& instance) {
    std::vector<std::vector<int>> adj(instance.num_nodes + 1);
    for (const Arc& arc : instance.arcs) {
        adj[arc.tail].push_back(arc.head);
        adj[arc.head].push_back(arc.tail);
    }
    std::vector<char> seen(instance.num_nodes + 1, 0);
    std::queue<int> queue;
    queue.push(instance.source);
    seen[instance.source] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                queue.push(w);
            }
    }
    for (int v = 1; v <= instance.num_nodes; ++v)
        if (!seen[v])
            return false;
    return true;
}

} // namespace

SpDecomposition sp_decompose(const Instance& instance) {
    SpDecomposition result;
    if (instance.arcs.empty())
        return result;
    if (!connected_undirected(instance)) {
        result.status = SpDecomposition::Status::disconnected;
        return result;
    }

    SpTree tree;
    std::vector<SuperArc> arcs;
    for (const Arc& arc : instance.arcs) {
        tree.nodes.push_back({SpTree::Kind::leaf, arc.id, -1, -1, arc.tail, arc.head});
        arcs.push_back({arc.tail, arc.head, static_cast<int>(tree.nodes.size()) - 1, true});
    }

    auto compose = [&tree](SpTree::Kind kind, int left, int right, int source, int sink) {
        tree.nodes.push_back({kind, -1, left, right, source, sink});
        return static_cast<int>(tree.nodes.size()) - 1;
    };

    bool changed = true;
    while (changed) {
        changed = false;

        // Parallel merges: same tail and head, folded in ascending order.
        std::map<std::pair<int, int>, int> first_of_pair;
        for (size_t i = 0; i < arcs.size(); ++i) {
            if (!arcs[i].alive)
                continue;
            auto key = std::make_pair(arcs[i].tail, arcs[i].head);
            auto [it, inserted] = first_of_pair.try_emplace(key, static_cast<int>(i));
            if (inserted)
                continue;
            SuperArc& keep = arcs[it->second];
            keep.tree_node = compose(SpTree::Kind::parallel, keep.tree_node, arcs[i].tree_node,
                                     keep.tail, keep.head);
            arcs[i].alive = false;
            changed = true;
        }

        // Series contractions: interior nodes with exactly one incoming
        // and one outgoing edge, skipping contractions that would close
        // a loop.
        std::vector<int> in_arc(instance.num_nodes + 1, -1);
        std::vector<int> out_arc(instance.num_nodes + 1, -1);
        std::vector<int> in_deg(instance.num_nodes + 1, 0);
        std::vector<int> out_deg(instance.num_nodes + 1, 0);
        for (size_t i = 0; i < arcs.size(); ++i) {
            if (!arcs[i].alive)
                continue;
            if (in_arc[arcs[i].head] < 0)
                in_arc[arcs[i].head] = static_cast<int>(i);
            if (out_arc[arcs[i].tail] < 0)
                out_arc[arcs[i].tail] = static_cast<int>(i);
            ++in_deg[arcs[i].head];
            ++out_deg[arcs[i].tail];
        }
        for (int v = 1; v <= instance.num_nodes; ++v) {
            if (v == instance.source || v == instance.sink)
                continue;
            if (in_deg[v] != 1 || out_deg[v] != 1)
                continue;
            SuperArc& incoming = arcs[in_arc[v]];
            SuperArc& outgoing = arcs[out_arc[v]];
            if (!incoming.alive || !outgoing.alive)
                continue; // consumed earlier in this pass
            if (incoming.tail == outgoing.head)
                continue;
            incoming.tree_node = compose(SpTree::Kind::serial, incoming.tree_node,
                                         outgoing.tree_node, incoming.tail, outgoing.head);
            incoming.head = outgoing.head;
            outgoing.alive = false;
            changed = true;
            break; // degrees are stale after a contraction; rescan
        }
    }

    int last_alive = -1;
    int alive_count = 0;
    for (size_t i = 0; i < arcs.size(); ++i) {
        if (arcs[i].alive) {
            ++alive_count;
            last_alive = static_cast<int>(i);
        }
    }
    if (alive_count != 1 || arcs[last_alive].tail != instance.source ||
        arcs[last_alive].head != instance.sink)
        return result; // stalled: not series-parallel

    tree.root = arcs[last_alive].tree_node;
    result.status = SpDecomposition::Status::ok;
    result.tree = std::move(tree);
    return result;
}

namespace {

struct SpTreeParser {
    const std::string& text;
    const Instance& instance;
    size_t pos = 0;
    SpTree tree;
    std::vector<char> used;

    SpTreeParser(const std::string& text_, const Instance& instance_)
        : text(text_), instance(instance_), used(instance_.arcs.size(), 0) {}

    void skip_spaces() {
        while (pos < text.size() && text[pos] == ' ')
            ++pos;
    }

    char peek() {
        skip_spaces();
        if (pos >= text.size())
            throw ParseError(1, "unexpected end of decomposition expression");
        return text[pos];
    }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(1, std::string("expected '") + c + "' at position " +
                                    std::to_string(pos) + " of decomposition expression");
        ++pos;
    }

    int parse_term() {
        char c = peek();
        if (c == 'S' || c == 'P') {
            ++pos;
            expect('(');
            int left = parse_term();
            expect(',');
            int right = parse_term();
            expect(')');
            const SpTree::Node& l = tree.nodes[left];
            const SpTree::Node& r = tree.nodes[right];
            SpTree::Node node;
            node.kind = (c == 'S') ? SpTree::Kind::serial : SpTree::Kind::parallel;
            node.left = left;
            node.right = right;
            if (c == 'S') {
                if (l.sink != r.source)
                    throw ParseError(1, "serial composition terminals do not meet");
                node.source = l.source;
                node.sink = r.sink;
            } else {
                if (l.source != r.source || l.sink != r.sink)
                    throw ParseError(1, "parallel composition terminals differ");
                node.source = l.source;
                node.sink = l.sink;
            }
            tree.nodes.push_back(node);
            return static_cast<int>(tree.nodes.size()) - 1;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(1, std::string("unexpected character '") + c +
                                    "' in decomposition expression");
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        int arc_id = std::stoi(text.substr(start, pos - start));
        if (arc_id >= instance.num_arcs())
            throw ParseError(1, "arc id " + std::to_string(arc_id) + " out of range");
        if (used[arc_id])
            throw ParseError(1, "arc id " + std::to_string(arc_id) + " used twice");
        used[arc_id] = 1;
        const Arc& arc = instance.arcs[arc_id];
        tree.nodes.push_back({SpTree::Kind::leaf, arc_id, -1, -1, arc.tail, arc.head});
        return static_cast<int>(tree.nodes.size()) - 1;
    }
};

} // namespace

SpTree parse_sp_tree(const std::string& text, const Instance& instance) {
    SpTreeParser parser(text, instance);
    parser.tree.root = parser.parse_term();
    parser.skip_spaces();
    if (parser.pos != text.size())
        throw ParseError(1, "trailing characters after decomposition expression");
    for (size_t i = 0; i < parser.used.size(); ++i)
        if (!parser.used[i])
            throw ParseError(1, "arc id " + std::to_string(i) + " missing from decomposition");
    const SpTree::Node& root = parser.tree.nodes[parser.tree.root];
    if (root.source != instance.source || root.sink != instance.sink)
        throw ParseError(1, "decomposition terminals do not match source/sink");
    return parser.tree;
}

namespace {

Value add_costs(Value a, Value b) {
    if (a == kInfeasibleAmount || b == kInfeasibleAmount)
        return kInfeasibleAmount;
    return a + b;
}

} // namespace

ComponentData leaf_table(const Arc& arc, Value f) {
    ComponentData data;
    data.r_lo = std::min(arc.capacity.lower, f);
    data.r_hi = std::min(arc.capacity.upper, f);
    data.d.assign(f + 1, kInfeasibleAmount);
    for (Value amount = 0; amount <= data.r_hi; ++amount)
        data.d[amount] = arc.cost * amount;
    return data;
}

ComponentData serial_table(const ComponentData& left, const ComponentData& right, Value f) {
    ComponentData data;
    data.r_lo = std::min(left.r_lo, right.r_lo);
    data.r_hi = std::min(left.r_hi, right.r_hi);
    data.d.assign(f + 1, kInfeasibleAmount);
    for (Value amount = 0; amount <= f; ++amount)
        data.d[amount] = add_costs(left.d[amount], right.d[amount]);
    return data;
}

ComponentData parallel_table(const ComponentData& left, const ComponentData& right, Value f,
                             SpdpStats* stats) {
    ComponentData data;
    const Value lo_sum = left.r_lo + right.r_lo;
    const Value hi_sum = left.r_hi + right.r_hi;
    data.r_lo = std::min(lo_sum, f);
    data.r_hi = std::min(hi_sum, f);
    data.d.assign(f + 1, kInfeasibleAmount);

    for (Value amount = 0; amount <= f; ++amount) {
        if (hi_sum < amount)
            continue; // beyond the combined capacity

        Value from, to;
        bool take_max;
        if (lo_sum > amount) {
            // Not expressible as two restrictable flows: the cheapest
            // split is forced regardless of the scenario.
            from = std::max<Value>(0, amount - right.r_lo);
            to = std::min(left.r_lo, amount);
            take_max = false;
        } else {
            // Both parts restrictable: the adversary picks the split.
            from = std::max(left.r_lo, amount - right.r_hi);
            to = std::min(amount - right.r_lo, left.r_hi);
            take_max = true;
        }

        Value best = kInfeasibleAmount;
        for (Value f1 = from; f1 <= to; ++f1) {
            if (stats)
                ++stats->parallel_ops;
            const Value combined = add_costs(left.d[f1], right.d[amount - f1]);
            if (combined == kInfeasibleAmount)
                continue;
            if (best == kInfeasibleAmount)
                best = combined;
            else
                best = take_max ? std::max(best, combined) : std::min(best, combined);
        }
        data.d[amount] = best;
    }
    return data;
}

ComponentData evaluate_sp_tree(const SpTree& tree, const Instance& instance, Value f,
                               SpdpStats* stats) {
    // Children always precede parents in SpTree::nodes.
    std::vector<ComponentData> tables(tree.nodes.size());
    for (size_t i = 0; i < tree.nodes.size(); ++i) {
        const SpTree::Node& node = tree.nodes[i];
        switch (node.kind) {
        case SpTree::Kind::leaf:
            tables[i] = leaf_table(instance.arcs[node.arc_id], f);
            break;
        case SpTree::Kind::serial:
            tables[i] = serial_table(tables[node.left], tables[node.right], f);
            break;
        case SpTree::Kind::parallel:
            tables[i] = parallel_table(tables[node.left], tables[node.right], f, stats);
            break;
        }
    }
    return std::move(tables[tree.root]);
}

SpWorstOutcome worst_value_sp(const Instance& instance, const SpTree& tree, SpdpStats* stats) {
    SpWorstOutcome outcome;
    const ComponentData root = evaluate_sp_tree(tree, instance, instance.flow_amount, stats);
    const Value value = root.d[instance.flow_amount];
    if (value == kInfeasibleAmount) {
        outcome.status = SpWorstOutcome::Status::infeasible;
        return outcome;
    }
    outcome.status = SpWorstOutcome::Status::found;
    outcome.c_w = value;
    return outcome;
}

SpWorstOutcome worst_value_sp(const Instance& instance, SpdpStats* stats) {
    SpDecomposition decomposition = sp_decompose(instance);
    if (!decomposition.ok()) {
        SpWorstOutcome outcome;
        outcome.status = decomposition.status == SpDecomposition::Status::disconnected
                             ? SpWorstOutcome::Status::disconnected
                             : SpWorstOutcome::Status::not_series_parallel;
        return outcome;
    }
    return worst_value_sp(instance, decomposition.tree, stats);
}

} // namespace iflow
