#include "iflow/oracle.hpp"

#include <algorithm>
#include <climits>
#include <thread>

namespace iflow {

bool is_feasible_scenario(const Instance& instance, const Scenario& scenario) {
    return max_flow_value(instance, scenario) >= instance.flow_amount;
}

unsigned long long scenario_grid_size(const Instance& instance) {
    unsigned long long total = 1;
    for (const Arc& arc : instance.arcs) {
        const unsigned long long width =
            static_cast<unsigned long long>(arc.capacity.upper - arc.capacity.lower) + 1;
        if (total > ULLONG_MAX / width)
            return ULLONG_MAX;
        total *= width;
    }
    return total;
}

namespace {

// Scenarios are indexed lexicographically: arc 0 is the most significant
// digit, so ascending index order is ascending lexicographic order.
Scenario scenario_at_index(const Instance& instance, unsigned long long index) {
    Scenario scenario;
    scenario.capacities.assign(instance.arcs.size(), 0);
    for (int pos = instance.num_arcs() - 1; pos >= 0; --pos) {
        const Arc& arc = instance.arcs[pos];
        const unsigned long long width =
            static_cast<unsigned long long>(arc.capacity.upper - arc.capacity.lower) + 1;
        scenario.capacities[pos] = arc.capacity.lower + static_cast<Value>(index % width);
        index /= width;
    }
    return scenario;
}

void advance_scenario(const Instance& instance, Scenario& scenario) {
    int pos = instance.num_arcs() - 1;
    while (pos >= 0 && scenario.capacities[pos] == instance.arcs[pos].capacity.upper) {
        scenario.capacities[pos] = instance.arcs[pos].capacity.lower;
        --pos;
    }
    if (pos >= 0)
        ++scenario.capacities[pos];
}

struct ChunkBest {
    bool have = false;
    WorstResult result;
};

// Keeps the first strict maximum of a contiguous index range, which is
// the lexicographically smallest maximizer within the chunk.
ChunkBest scan_range(const Instance& instance, unsigned long long begin, unsigned long long end) {
    ChunkBest best;
    Scenario scenario = scenario_at_index(instance, begin);
    for (unsigned long long index = begin; index < end; ++index) {
        if (auto solved = min_cost_flow(instance, scenario)) {
            ++best.result.feasible_count;
            if (!best.have || solved->flow.total_cost > best.result.c_w) {
                best.have = true;
                best.result.c_w = solved->flow.total_cost;
                best.result.scenario = scenario;
                best.result.flow = std::move(solved->flow);
            }
        }
        advance_scenario(instance, scenario);
    }
    return best;
}

} // namespace

WorstOutcome worst_value_bruteforce(const Instance& instance, unsigned long long budget,
                                    unsigned max_workers) {
    WorstOutcome outcome;

    const unsigned long long grid = scenario_grid_size(instance);
    if (grid > budget) {
        outcome.status = WorstOutcome::Status::budget_exceeded;
        outcome.required = grid;
        return outcome;
    }

    // The capacity box is nonempty iff the all-upper scenario is feasible.
    Scenario upper;
    for (const Arc& arc : instance.arcs)
        upper.capacities.push_back(arc.capacity.upper);
    if (!is_feasible_scenario(instance, upper)) {
        outcome.status = WorstOutcome::Status::all_infeasible;
        return outcome;
    }

    unsigned workers = max_workers != 0 ? max_workers : std::thread::hardware_concurrency();
    workers = std::clamp<unsigned>(workers, 1, 16);
    if (grid < 4096)
        workers = 1; // not worth the thread spawn

    std::vector<ChunkBest> chunks(workers);
    if (workers == 1) {
        chunks[0] = scan_range(instance, 0, grid);
    } else {
        const unsigned long long chunk = (grid + workers - 1) / workers;
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            const unsigned long long begin = std::min<unsigned long long>(grid, w * chunk);
            const unsigned long long end = std::min<unsigned long long>(grid, begin + chunk);
            threads.emplace_back(
                [&, w, begin, end] { chunks[w] = scan_range(instance, begin, end); });
        }
        for (std::thread& thread : threads)
            thread.join();
    }

    // Chunks are in ascending lexicographic order, so a strict > keeps
    // the overall smallest maximizer; the counts just add up.
    bool have_best = false;
    WorstResult best;
    for (ChunkBest& chunk : chunks) {
        best.feasible_count += chunk.result.feasible_count;
        if (chunk.have && (!have_best || chunk.result.c_w > best.c_w)) {
            have_best = true;
            best.c_w = chunk.result.c_w;
            best.scenario = std::move(chunk.result.scenario);
            best.flow = std::move(chunk.result.flow);
        }
    }

    outcome.status = WorstOutcome::Status::found;
    outcome.result = std::move(best);
    return outcome;
}

} // namespace iflow
