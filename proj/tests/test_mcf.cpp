#include "iflow/generators.hpp"
#include "iflow/mcf.hpp"

#include "support.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace iflow;
using testsupport::Rng;

namespace {

Scenario upper_scenario(const Instance& instance) {
    Scenario scenario;
    for (const Arc& arc : instance.arcs)
        scenario.capacities.push_back(arc.capacity.upper);
    return scenario;
}

} // namespace

TEST_CASE("worst scenario of the paradox example costs 12") {
    const Instance instance = gen_paradox_simple();
    const Scenario scenario{{1, 1, 1, 0, 0}};
    auto solved = min_cost_flow(instance, scenario);
    REQUIRE(solved);
    CHECK(solved->flow.total_cost == 12);
    CHECK(solved->flow.values == std::vector<Value>{1, 1, 1, 0, 0});
    CHECK(certify_optimality(instance, scenario, solved->flow, solved->potentials).empty());
}

TEST_CASE("doubled flow under full capacities costs 4") {
    Instance instance = gen_paradox_simple();
    instance.flow_amount = 2;
    auto solved = min_cost_flow(instance, upper_scenario(instance));
    REQUIRE(solved);
    CHECK(solved->flow.total_cost == 4);
}

TEST_CASE("infeasible when every capacity is zero") {
    Instance instance;
    instance.num_nodes = 2;
    instance.source = 1;
    instance.sink = 2;
    instance.flow_amount = 1;
    instance.arcs.push_back({0, 1, 2, 3, {0, 0}});
    CHECK(!min_cost_flow(instance, Scenario{{0}}));
    CHECK(max_flow_value(instance, Scenario{{0}}) == 0);
}

TEST_CASE("max flow on simple shapes") {
    const Instance instance = gen_paradox_simple();
    CHECK(max_flow_value(instance, upper_scenario(instance)) == 2);

    Instance single;
    single.num_nodes = 2;
    single.source = 1;
    single.sink = 2;
    single.flow_amount = 1;
    single.arcs.push_back({0, 1, 2, 0, {0, 7}});
    CHECK(max_flow_value(single, Scenario{{7}}) == 7);
}

TEST_CASE("solver matches the enumeration oracle on small instances") {
    Rng rng(7);
    int feasible_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const Instance instance =
            gen_random(2 + static_cast<int>(rng.below(3)), 3 + static_cast<int>(rng.below(4)), 3,
                       7, 1 + rng.below(3), rng.next());
        const Scenario scenario = testsupport::random_scenario(rng, instance);
        const auto oracle = testsupport::enumerate_min_cost(instance, scenario);
        const auto solved = min_cost_flow(instance, scenario);
        REQUIRE(oracle.has_value() == solved.has_value());
        if (solved) {
            ++feasible_seen;
            CHECK(solved->flow.total_cost == *oracle);
            CHECK(!validate_flow(instance, scenario, solved->flow));
            CHECK(certify_optimality(instance, scenario, solved->flow, solved->potentials).empty());
        }
        CHECK(max_flow_value(instance, scenario) ==
              testsupport::enumerate_max_flow(instance, scenario));
    }
    CHECK(feasible_seen > 20); // the mix must exercise the feasible path
}

TEST_CASE("monotonicity: larger capacities never cost more") {
    Rng rng(99);
    int checked = 0;
    while (checked < 100) {
        const Instance instance = gen_random(4, 7, 3, 9, 1 + rng.below(3), rng.next());
        const Scenario small = testsupport::random_scenario(rng, instance);
        Scenario big = small;
        for (const Arc& arc : instance.arcs)
            big.capacities[arc.id] = testsupport::Rng(rng.next()).between(
                small.capacities[arc.id], arc.capacity.upper);
        const auto cost_small = min_cost_flow(instance, small);
        if (!cost_small)
            continue;
        const auto cost_big = min_cost_flow(instance, big);
        REQUIRE(cost_big);
        CHECK(cost_big->flow.total_cost <= cost_small->flow.total_cost);
        ++checked;
    }
}

TEST_CASE("certify accepts the zero flow at zero potentials") {
    const Instance instance = gen_paradox_simple();
    Potentials zero{std::vector<Value>(instance.num_nodes + 1, 0)};
    Flow flow{std::vector<Value>(instance.arcs.size(), 0), 0};
    CHECK(certify_optimality(instance, upper_scenario(instance), flow, zero).empty());
}

TEST_CASE("perturbing a potential breaks certification on incident arcs") {
    const Instance instance = gen_paradox_simple();
    const Scenario scenario{{1, 1, 1, 0, 0}};
    auto solved = min_cost_flow(instance, scenario);
    REQUIRE(solved);
    Potentials perturbed = solved->potentials;
    perturbed.pi[2] += 1; // interior node on the used path
    const auto violations = certify_optimality(instance, scenario, solved->flow, perturbed);
    REQUIRE(!violations.empty());
    for (const std::string& violation : violations) {
        const bool incident = violation.find("arc 0") != std::string::npos ||
                              violation.find("arc 1") != std::string::npos ||
                              violation.find("arc 3") != std::string::npos;
        CHECK(incident); // arcs at node 2: (s,1)=0, (1,2)=1, (1,t)=3
    }
}

TEST_CASE("make_complementary cancels opposite zero-cost flow") {
    Instance instance;
    instance.num_nodes = 3;
    instance.source = 1;
    instance.sink = 3;
    instance.flow_amount = 1;
    instance.arcs.push_back({0, 1, 2, 0, {0, 5}});
    instance.arcs.push_back({1, 2, 1, 0, {0, 5}});
    instance.arcs.push_back({2, 2, 3, 1, {0, 5}});

    Flow flow{{2, 1, 1}, 1};
    Flow complemented = make_complementary(instance, flow);
    CHECK(complemented.values == std::vector<Value>{1, 0, 1});
    CHECK(complemented.total_cost == flow.total_cost);

    SUBCASE("no opposite pair means identity") {
        Flow plain{{1, 0, 1}, 1};
        CHECK(make_complementary(instance, plain).values == plain.values);
    }
    SUBCASE("positive cost on an opposite pair is an internal inconsistency") {
        instance.arcs[1].cost = 3;
        CHECK_THROWS_AS(make_complementary(instance, flow), std::logic_error);
    }
}

TEST_CASE("complementary flows from optimal solves stay optimal") {
    Rng rng(4242);
    int with_pairs = 0;
    for (int trial = 0; trial < 80; ++trial) {
        Instance instance = gen_random(4, 8, 3, 4, 1 + rng.below(3), rng.next());
        // Zero out costs on opposite pairs so both directions may carry flow.
        for (Arc& a : instance.arcs)
            for (const Arc& b : instance.arcs)
                if (a.tail == b.head && a.head == b.tail)
                    a.cost = 0;
        const Scenario scenario = testsupport::random_scenario(rng, instance);
        auto solved = min_cost_flow(instance, scenario);
        if (!solved)
            continue;
        const Flow complemented = make_complementary(instance, solved->flow);
        CHECK(complemented.total_cost == solved->flow.total_cost);
        bool had_pair = complemented.values != solved->flow.values;
        with_pairs += had_pair ? 1 : 0;
        CHECK(!validate_flow(instance, scenario, complemented));
        auto potentials = potentials_for_flow(instance, scenario, complemented);
        REQUIRE(potentials);
        CHECK(certify_optimality(instance, scenario, complemented, *potentials).empty());
        for (const Arc& a : instance.arcs)
            for (const Arc& b : instance.arcs)
                if (a.tail == b.head && a.head == b.tail)
                    CHECK(complemented.values[a.id] * complemented.values[b.id] == 0);
    }
}

TEST_CASE("potentials_for_flow rejects non-optimal flows") {
    const Instance instance = gen_paradox_simple();
    const Scenario full = upper_scenario(instance);
    // Expensive spine while both shortcuts are open: not optimal.
    Flow spine{{1, 1, 1, 0, 0}, 12};
    CHECK(!potentials_for_flow(instance, full, spine));

    Flow cheap{{1, 0, 0, 1, 0}, 2};
    CHECK(potentials_for_flow(instance, full, cheap).has_value());
}

TEST_CASE("certification against solver duals singles out the optima") {
    // With the solver's potentials fixed, an enumerated flow passes the
    // per-arc conditions exactly when its cost is the optimum.
    Rng rng(616);
    int instances_checked = 0;
    while (instances_checked < 15) {
        const Instance instance = gen_random(3, 4, 2, 5, 1 + rng.below(2), rng.next());
        const Scenario scenario = testsupport::random_scenario(rng, instance);
        const auto solved = min_cost_flow(instance, scenario);
        if (!solved)
            continue;
        ++instances_checked;
        const Value optimum = solved->flow.total_cost;

        std::vector<Value> values(instance.arcs.size(), 0);
        auto visit = [&](auto&& self, size_t arc) -> void {
            if (arc == values.size()) {
                Flow candidate{values, flow_cost(instance, values)};
                if (validate_flow(instance, scenario, candidate))
                    return;
                const bool certified =
                    certify_optimality(instance, scenario, candidate, solved->potentials).empty();
                CHECK(certified == (candidate.total_cost == optimum));
                return;
            }
            for (Value x = 0; x <= scenario.capacities[arc]; ++x) {
                values[arc] = x;
                self(self, arc + 1);
            }
            values[arc] = 0;
        };
        visit(visit, 0);
    }
}

TEST_CASE("integrality holds on every solver output") {
    // Value is an integer type, so integrality is structural; this guards
    // the balance arithmetic instead.
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const Instance instance = gen_random(4, 6, 3, 5, 2, rng.next());
        const Scenario scenario = testsupport::random_scenario(rng, instance);
        if (auto solved = min_cost_flow(instance, scenario))
            CHECK(!validate_flow(instance, scenario, solved->flow));
    }
}
