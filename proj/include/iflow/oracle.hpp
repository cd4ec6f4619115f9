#pragma once

#include "iflow/mcf.hpp"
#include "iflow/model.hpp"

namespace iflow {

/// Ground-truth worst finite optimal value by enumeration of the whole
/// integral scenario grid. Integral scenarios suffice because an
/// integral worst scenario always exists for integral interval bounds.
struct WorstResult {
    Value c_w = 0;
    Scenario scenario;
    Flow flow;
    unsigned long long feasible_count = 0;
};

struct WorstOutcome {
    enum class Status { found, all_infeasible, budget_exceeded };
    Status status = Status::all_infeasible;
    WorstResult result;                  // valid when status == found
    unsigned long long required = 0;     // grid size when the budget is hit

    bool found() const { return status == Status::found; }
};

constexpr unsigned long long kDefaultEnumerationBudget = 10'000'000ULL;

/// True iff a flow of the requested size exists under the scenario.
bool is_feasible_scenario(const Instance& instance, const Scenario& scenario);

/// Maximizes the optimal cost over all integral scenarios in the box.
/// Ties resolve to the lexicographically smallest scenario vector.
/// Large grids are partitioned across worker threads; the combination
/// keeps the result bit-identical to sequential enumeration.
/// max_workers = 0 picks the hardware concurrency.
WorstOutcome worst_value_bruteforce(const Instance& instance,
                                    unsigned long long budget = kDefaultEnumerationBudget,
                                    unsigned max_workers = 0);

/// Number of integral scenarios in the capacity box, saturating at
/// ULLONG_MAX on overflow.
unsigned long long scenario_grid_size(const Instance& instance);

} // namespace iflow
