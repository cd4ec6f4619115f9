#pragma once

#include "iflow/model.hpp"

#include <limits>
#include <string>
#include <vector>

namespace iflow {

/// Binary decomposition tree of a two-terminal series-parallel instance.
/// Leaves are the instance's arcs, each exactly once; every node carries
/// the source/sink terminals of its component in original node ids.
struct SpTree {
    enum class Kind { leaf, serial, parallel };

    struct Node {
        Kind kind = Kind::leaf;
        int arc_id = -1; // leaves only
        int left = -1;
        int right = -1;
        int source = 0;
        int sink = 0;
    };

    std::vector<Node> nodes;
    int root = -1;
};

struct SpDecomposition {
    enum class Status { ok, not_series_parallel, disconnected };
    Status status = Status::not_series_parallel;
    SpTree tree; // valid when status == ok

    bool ok() const { return status == Status::ok; }
};

/// Reduces the instance by repeated series contractions and parallel
/// merges. Stalling before a single s-t arc remains is the
/// not-series-parallel verdict.
SpDecomposition sp_decompose(const Instance& instance);

/// Parses "T := <arc_id> | S(T,T) | P(T,T)" against the instance,
/// checking the composition terminals and that each arc appears exactly
/// once. Throws ParseError on syntax or consistency failures.
SpTree parse_sp_tree(const std::string& text, const Instance& instance);

/// Cost value marking infeasible flow amounts in a costs mapping.
constexpr Value kInfeasibleAmount = std::numeric_limits<Value>::min();

/// Per-component DP state: d[f'] is the worst optimal cost of sending f'
/// units through the component (kInfeasibleAmount when impossible),
/// r_lo the minimal restrictable flow and r_hi the maximal transportable
/// flow, both capped at the requested amount f.
struct ComponentData {
    std::vector<Value> d; // length f + 1
    Value r_lo = 0;
    Value r_hi = 0;
};

ComponentData leaf_table(const Arc& arc, Value f);
ComponentData serial_table(const ComponentData& left, const ComponentData& right, Value f);

struct SpdpStats {
    unsigned long long parallel_ops = 0; // (f', f1) pairs examined
};

ComponentData parallel_table(const ComponentData& left, const ComponentData& right, Value f,
                             SpdpStats* stats = nullptr);

/// Evaluates the costs mappings bottom-up over the tree.
ComponentData evaluate_sp_tree(const SpTree& tree, const Instance& instance, Value f,
                               SpdpStats* stats = nullptr);

struct SpWorstOutcome {
    enum class Status { found, infeasible, not_series_parallel, disconnected };
    Status status = Status::not_series_parallel;
    Value c_w = 0; // valid when status == found

    bool found() const { return status == Status::found; }
};

/// Worst optimal value on a series-parallel instance in O(m f^2) table
/// operations. A caller-supplied decomposition skips recognition.
SpWorstOutcome worst_value_sp(const Instance& instance, SpdpStats* stats = nullptr);
SpWorstOutcome worst_value_sp(const Instance& instance, const SpTree& tree,
                              SpdpStats* stats = nullptr);

} // namespace iflow
