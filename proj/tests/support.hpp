#pragma once

#include "iflow/model.hpp"
#include "iflow/spdp.hpp"

#include <cstdint>
#include <optional>
#include <vector>

// Test-side oracles and generators. The flow enumerator and the knapsack
// solver are kept independent of the library's solver paths on purpose:
// they establish ground truth the implementations are checked against.

namespace testsupport {

using iflow::Arc;
using iflow::Flow;
using iflow::Instance;
using iflow::Scenario;
using iflow::Value;

// Deterministic across platforms (raw mt19937_64 draws only).
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    Value below(Value bound) { return static_cast<Value>(next() % static_cast<std::uint64_t>(bound)); }
    Value between(Value lo, Value hi) { return lo + below(hi - lo + 1); }
};

// Minimum cost over every integral flow of the requested size, by full
// enumeration of arc values. std::nullopt when no such flow exists.
std::optional<Value> enumerate_min_cost(const Instance& instance, const Scenario& scenario);

// Largest size for which a flow exists under the scenario, by enumeration.
Value enumerate_max_flow(const Instance& instance, const Scenario& scenario);

// Exhaustive binary knapsack optimum.
Value knapsack_exhaustive(Value b, const std::vector<Value>& weights,
                          const std::vector<Value>& values);

// Random two-terminal series-parallel instance with m arcs; also returns
// nothing extra -- the decomposition is rediscovered by the recognizer.
Instance random_sp_instance(Rng& rng, int num_arcs, Value cap_hi, Value cost_hi, Value f);

// Scenario drawn uniformly from the instance's capacity box.
Scenario random_scenario(Rng& rng, const Instance& instance);

} // namespace testsupport
