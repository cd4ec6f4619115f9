#pragma once

#include "iflow/mcf.hpp"
#include "iflow/model.hpp"

#include <string>
#include <vector>

namespace iflow {

/// Candidate solution of the worst-value MILP: primal flow x, capacity
/// choice u, duals pi/alpha, reduced costs cpi and the two indicator
/// binaries per arc.
struct MilpAssignment {
    std::vector<Value> x;     // per arc
    std::vector<Value> u;     // per arc
    std::vector<Value> pi;    // per node, slot 0 unused
    std::vector<Value> alpha; // per arc
    std::vector<Value> cpi;   // per arc
    std::vector<Value> y;     // per arc, binary
    std::vector<Value> z;     // per arc, binary
};

/// Big-M constant: max of the largest upper capacity and twice the total
/// cost plus the largest cost.
Value big_m(const Instance& instance);

/// Renders the worst-value maximization MILP in LP text format. With
/// tighten=true the x and u-x indicator rows use the per-arc upper
/// capacity instead of the global M, and the reduced-cost rows use the
/// cost-sum term. Output is canonical and byte-stable.
std::string emit_milp(const Instance& instance, bool tighten);

struct MilpCheck {
    bool satisfied = false;
    Value objective = 0;                    // valid when satisfied
    std::vector<std::string> violated_rows; // row names with detail
};

/// Evaluates every emitted row (and variable bound) on the assignment
/// in exact integer arithmetic.
MilpCheck check_milp_assignment(const Instance& instance, const MilpAssignment& assignment,
                                bool tighten);

/// Builds an assignment from a scenario and an optimal flow for it:
/// potentials come from a fresh solve, alpha closes the dual rows and
/// the binaries follow the sign of the reduced costs. Requires the
/// scenario to be feasible.
MilpAssignment assemble_assignment(const Instance& instance, const Scenario& scenario,
                                   const Flow& flow);

} // namespace iflow
