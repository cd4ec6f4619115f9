#pragma once

#include "iflow/model.hpp"
#include "iflow/oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace iflow {

/// Undirected s-t path step over an instance arc; signed cost counts
/// forward arcs positively and backward arcs negatively.
struct PathStep {
    int arc_id;
    bool forward;
};

struct AugmentingPath {
    std::vector<PathStep> steps;
    Value signed_cost = 0;
};

/// Signed cost of a step sequence.
Value path_signed_cost(const Instance& instance, const std::vector<PathStep>& steps);

/// True iff the steps form an undirected s-t path that is augmenting for
/// (flow, scenario): forward arcs have x < u, backward arcs have x > 0.
bool is_augmenting_path(const Instance& instance, const Scenario& scenario, const Flow& flow,
                        const std::vector<PathStep>& steps);

struct ProfileEntry {
    Value f = 0;
    std::optional<Value> c_w; // empty = infeasible at this amount
};

struct ProfileOutcome {
    bool budget_exceeded = false;
    unsigned long long required = 0;
    std::vector<ProfileEntry> entries;
};

/// Worst optimal value for every requested amount 1..f_max.
ProfileOutcome worst_value_profile(const Instance& instance, Value f_max,
                                   unsigned long long budget = kDefaultEnumerationBudget);

struct ParadoxReport {
    Value f = 0;
    Value c_w_at_f = 0;
    Value c_w_at_f_plus_1 = 0;
    std::optional<AugmentingPath> witness;
};

struct ParadoxOutcome {
    enum class Status { found, none, budget_exceeded };
    Status status = Status::none;
    ParadoxReport report;            // valid when found
    unsigned long long required = 0; // budget case

    bool found() const { return status == Status::found; }
};

/// Scans f = 1, 2, ... up to the maximum transportable amount for the
/// first drop in the worst optimal value, and extracts a negative-cost
/// augmenting-path witness from the difference of the two worst flows.
ParadoxOutcome detect_paradox(const Instance& instance,
                              unsigned long long budget = kDefaultEnumerationBudget);

/// Instance with interval capacities [0, max{x_e, x'_e}] where x' is the
/// given flow augmented along the path; the result exhibits the paradox
/// between f and f+1. Throws std::invalid_argument when the path is not
/// augmenting for the flow or its signed cost is nonnegative.
Instance construct_paradox_instance(const Instance& skeleton, const Flow& flow,
                                    const std::vector<PathStep>& path);

/// Improving path on a complete graph, expressed as node-pair hops since
/// there is no Instance context; first and last hops are forward.
struct ImprovingPath {
    struct Hop {
        int tail = 0;        // arc direction is tail -> head
        int head = 0;
        bool forward = true; // false: traversed head -> tail
    };
    std::vector<Hop> hops;
    Value signed_cost = 0;
};

/// Cost matrix of a complete directed graph on nodes 1..n; entry (i, j)
/// is the cost of arc i->j, the diagonal is ignored.
using CostMatrix = std::vector<std::vector<Value>>;

/// Most negative improving path on the complete graph: minimizes
/// c(s,i) - ldp(i,j) + c(j,t) over intermediate pairs, where ldp is the
/// largest cost of a simple directed path from j to i, computed by
/// dynamic programming over node subsets. The single-arc path s->t is
/// also considered. Throws std::invalid_argument when n exceeds the
/// limit or the matrix is malformed.
ImprovingPath most_negative_improving_path_complete(int n, const CostMatrix& costs, int s, int t,
                                                    int limit = 12);

/// True iff no improving path has negative cost, i.e. no interval
/// capacities can make the more-for-less paradox occur on this matrix.
bool is_immune(int n, const CostMatrix& costs, int s, int t, int limit = 12);

/// Instance realizing the paradox from a negative improving path on the
/// complete graph: per backward hop a unit flow s -> tail -> head -> t,
/// intervals [0,1] on arcs used by the flow or the path, [0,0]
/// elsewhere, and f = number of backward hops.
Instance construct_paradox_from_improving_path(int n, const CostMatrix& costs, int s, int t,
                                               const ImprovingPath& path);

} // namespace iflow
