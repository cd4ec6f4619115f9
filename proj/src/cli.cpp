#include "iflow/cli.hpp"

#include "iflow/generators.hpp"
#include "iflow/instance_io.hpp"
#include "iflow/mcf.hpp"
#include "iflow/milp.hpp"
#include "iflow/oracle.hpp"
#include "iflow/paradox.hpp"
#include "iflow/spdp.hpp"
#include "iflow/structure.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace iflow {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct CliError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CliError{kExitInput, "cannot open " + path};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw CliError{kExitInput, "cannot write " + path};
    out << content;
}

Instance load_instance(const std::string& path) {
    try {
        return parse_instance_string(read_file(path));
    } catch (const ParseError& e) {
        throw CliError{kExitInput, path + ": " + e.what()};
    }
}

Scenario load_scenario(const std::string& path, const Instance& instance) {
    try {
        return parse_scenario_string(read_file(path), instance);
    } catch (const ParseError& e) {
        throw CliError{kExitInput, path + ": " + e.what()};
    }
}

Flow load_flow(const std::string& path, const Instance& instance) {
    try {
        return parse_flow_string(read_file(path), instance);
    } catch (const ParseError& e) {
        throw CliError{kExitInput, path + ": " + e.what()};
    }
}

// Potentials file: "p pi <n>" then one "v <node_id> <value>" per node.
Potentials load_potentials(const std::string& path, const Instance& instance) {
    std::istringstream in(read_file(path));
    Potentials potentials;
    potentials.pi.assign(instance.num_nodes + 1, 0);
    std::vector<char> seen(instance.num_nodes + 1, 0);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int filled = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line[0] == 'c' && (line.size() == 1 || line[1] == ' '))
            continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (!have_header) {
            int n = -1;
            std::string kind;
            if (tag != "p" || !(fields >> kind >> n) || kind != "pi" || n != instance.num_nodes)
                throw CliError{kExitInput,
                               path + ": line " + std::to_string(line_no) + ": expected 'p pi " +
                                   std::to_string(instance.num_nodes) + "'"};
            have_header = true;
            continue;
        }
        long long node = 0;
        long long value = 0;
        if (tag != "v" || !(fields >> node >> value) || node < 1 || node > instance.num_nodes)
            throw CliError{kExitInput,
                           path + ": line " + std::to_string(line_no) + ": expected 'v <node> <value>'"};
        if (seen[node])
            throw CliError{kExitInput, path + ": duplicate node " + std::to_string(node)};
        seen[node] = 1;
        potentials.pi[node] = value;
        ++filled;
    }
    if (!have_header || filled != instance.num_nodes)
        throw CliError{kExitInput, path + ": incomplete potentials file"};
    return potentials;
}

std::string write_potentials_text(const Potentials& potentials) {
    std::ostringstream out;
    out << "p pi " << potentials.pi.size() - 1 << '\n';
    for (size_t v = 1; v < potentials.pi.size(); ++v)
        out << "v " << v << ' ' << potentials.pi[v] << '\n';
    return out.str();
}

unsigned long long budget_from_env() {
    const char* raw = std::getenv("IFLOW_BUDGET");
    if (!raw)
        return kDefaultEnumerationBudget;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || value == 0)
        throw CliError{kExitInput, "invalid IFLOW_BUDGET value"};
    return value;
}

void print_flow_table(std::ostream& out, const Instance& instance, const Flow& flow) {
    out << "arc  tail head  flow\n";
    for (const Arc& arc : instance.arcs)
        out << arc.id << "  " << arc.tail << " " << arc.head << "  " << flow.values[arc.id]
            << '\n';
}

CostMatrix load_cost_matrix(const std::string& path, int n) {
    std::istringstream in(read_file(path));
    CostMatrix costs;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == 'c' && (line.size() == 1 || line[1] == ' '))
            continue;
        std::istringstream fields(line);
        std::vector<Value> row;
        Value v;
        while (fields >> v)
            row.push_back(v);
        if (!row.empty())
            costs.push_back(std::move(row));
    }
    if (static_cast<int>(costs.size()) != n)
        throw CliError{kExitInput, path + ": expected " + std::to_string(n) + " matrix rows"};
    for (const auto& row : costs)
        if (static_cast<int>(row.size()) != n)
            throw CliError{kExitInput, path + ": expected " + std::to_string(n) + " entries per row"};
    return costs;
}

struct SolveArgs {
    std::string instance_path;
    std::string scenario_path;
    std::string flow_out;
    std::string pi_out;
    bool quiet = false;
};

int cmd_solve(const SolveArgs& args, std::ostream& out) {
    Instance instance = load_instance(args.instance_path);
    Scenario scenario = load_scenario(args.scenario_path, instance);
    auto solved = min_cost_flow(instance, scenario);
    if (!solved) {
        out << "INFEASIBLE\n";
        return kExitVerdict;
    }
    if (args.quiet)
        out << solved->flow.total_cost << '\n';
    else {
        out << "optimal cost = " << solved->flow.total_cost << '\n';
        print_flow_table(out, instance, solved->flow);
    }
    if (!args.flow_out.empty())
        write_file(args.flow_out, write_flow(solved->flow));
    if (!args.pi_out.empty())
        write_file(args.pi_out, write_potentials_text(solved->potentials));
    return kExitOk;
}

struct WorstArgs {
    std::string instance_path;
    std::string method = "brute";
    std::string sp_tree_expr;
    std::string scenario_out;
    std::string flow_out;
    bool quiet = false;
};

int cmd_worst(const WorstArgs& args, std::ostream& out, std::ostream& err) {
    Instance instance = load_instance(args.instance_path);

    if (args.method == "sp") {
        if (!args.scenario_out.empty() || !args.flow_out.empty())
            throw CliError{kExitInput,
                           "the series-parallel method computes the value only; "
                           "scenario/flow output requires --method brute"};
        SpWorstOutcome outcome;
        if (!args.sp_tree_expr.empty()) {
            try {
                SpTree tree = parse_sp_tree(args.sp_tree_expr, instance);
                outcome = worst_value_sp(instance, tree);
            } catch (const ParseError& e) {
                throw CliError{kExitInput, std::string("--sp-tree: ") + e.what()};
            }
        } else {
            outcome = worst_value_sp(instance);
        }
        switch (outcome.status) {
        case SpWorstOutcome::Status::found:
            out << (args.quiet ? "" : "c_w = ") << outcome.c_w << '\n';
            return kExitOk;
        case SpWorstOutcome::Status::infeasible:
            out << "INFEASIBLE\n";
            return kExitVerdict;
        case SpWorstOutcome::Status::disconnected:
            out << "DISCONNECTED\n";
            return kExitVerdict;
        case SpWorstOutcome::Status::not_series_parallel:
        default:
            out << "NOT SERIES-PARALLEL\n";
            return kExitVerdict;
        }
    }

    if (args.method != "brute")
        throw CliError{kExitInput, "unknown method '" + args.method + "', expected brute or sp"};

    WorstOutcome outcome = worst_value_bruteforce(instance, budget_from_env());
    if (outcome.status == WorstOutcome::Status::budget_exceeded) {
        err << "enumeration budget exceeded: " << outcome.required << " scenarios required\n";
        return kExitBudget;
    }
    if (outcome.status == WorstOutcome::Status::all_infeasible) {
        out << "INFEASIBLE\n";
        return kExitVerdict;
    }
    const WorstResult& result = outcome.result;
    if (args.quiet)
        out << result.c_w << '\n';
    else {
        out << "c_w = " << result.c_w << '\n';
        out << "feasible scenarios examined: " << result.feasible_count << '\n';
        out << "worst scenario:\n" << write_scenario(result.scenario);
        out << "optimal flow under it:\n" << write_flow(result.flow);
    }
    if (!args.scenario_out.empty())
        write_file(args.scenario_out, write_scenario(result.scenario));
    if (!args.flow_out.empty())
        write_file(args.flow_out, write_flow(result.flow));
    return kExitOk;
}

struct ExtremalizeArgs {
    std::string instance_path;
    std::string scenario_path;
    std::string flow_path;
    std::string scenario_out;
    std::string flow_out;
    bool quiet = false;
};

int cmd_extremalize(const ExtremalizeArgs& args, std::ostream& out) {
    Instance instance = load_instance(args.instance_path);
    Scenario scenario = load_scenario(args.scenario_path, instance);
    Flow flow = load_flow(args.flow_path, instance);
    ExtremalizeResult result = extremalize_to_forest(instance, scenario, flow);
    if (!result.ok)
        throw CliError{kExitInput, result.error};

    if (args.quiet)
        out << result.interior.size() << '\n';
    else {
        out << "cost = " << result.flow.total_cost << '\n';
        out << "cycles canceled = " << result.iterations << '\n';
        out << "interior arcs (" << result.interior.size() << ", bound " << instance.num_nodes - 1
            << "):";
        for (int id : result.interior)
            out << ' ' << id;
        out << '\n';
        out << "extremal scenario:\n" << write_scenario(result.scenario);
    }
    if (!args.scenario_out.empty())
        write_file(args.scenario_out, write_scenario(result.scenario));
    if (!args.flow_out.empty())
        write_file(args.flow_out, write_flow(result.flow));
    return kExitOk;
}

struct ParadoxArgs {
    std::string instance_path;
    Value f_max = -1;
    bool quiet = false;
};

int cmd_paradox(const ParadoxArgs& args, std::ostream& out, std::ostream& err) {
    Instance instance = load_instance(args.instance_path);
    const unsigned long long budget = budget_from_env();

    Scenario upper;
    for (const Arc& arc : instance.arcs)
        upper.capacities.push_back(arc.capacity.upper);
    const Value transportable = max_flow_value(instance, upper);
    const Value f_max = args.f_max >= 0 ? std::min(args.f_max, transportable) : transportable;

    ProfileOutcome profile = worst_value_profile(instance, f_max, budget);
    if (profile.budget_exceeded) {
        err << "enumeration budget exceeded: " << profile.required << " scenarios required\n";
        return kExitBudget;
    }
    if (!args.quiet) {
        out << "f  c_w\n";
        for (const ProfileEntry& entry : profile.entries) {
            out << entry.f << "  ";
            if (entry.c_w)
                out << *entry.c_w << '\n';
            else
                out << "infeasible\n";
        }
    }

    ParadoxOutcome outcome = detect_paradox(instance, budget);
    if (outcome.status == ParadoxOutcome::Status::budget_exceeded) {
        err << "enumeration budget exceeded: " << outcome.required << " scenarios required\n";
        return kExitBudget;
    }
    if (!outcome.found()) {
        out << "NO PARADOX\n";
        return kExitOk;
    }
    const ParadoxReport& report = outcome.report;
    out << "PARADOX at f = " << report.f << ": c_w drops " << report.c_w_at_f << " -> "
        << report.c_w_at_f_plus_1 << '\n';
    if (report.witness) {
        out << "witness augmenting path (signed cost " << report.witness->signed_cost << "):";
        for (const PathStep& step : report.witness->steps)
            out << ' ' << step.arc_id << (step.forward ? "+" : "-");
        out << '\n';
    }
    return kExitOk;
}

struct ImmuneArgs {
    int n = 0;
    std::string costs_path;
    int source = 1;
    int sink = -1;
    bool quiet = false;
};

int cmd_immune(const ImmuneArgs& args, std::ostream& out) {
    const int sink = args.sink > 0 ? args.sink : args.n;
    CostMatrix costs = load_cost_matrix(args.costs_path, args.n);
    ImprovingPath path;
    try {
        path = most_negative_improving_path_complete(args.n, costs, args.source, sink);
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitInput, e.what()};
    }
    out << (path.signed_cost >= 0 ? "IMMUNE" : "NOT-IMMUNE") << '\n';
    if (!args.quiet) {
        out << "most negative improving path cost = " << path.signed_cost << '\n';
        out << "path:";
        for (const ImprovingPath::Hop& hop : path.hops)
            out << ' ' << (hop.forward ? "" : "~") << '(' << hop.tail << ',' << hop.head << ')';
        out << '\n';
    }
    return kExitOk;
}

struct EmitMilpArgs {
    std::string instance_path;
    std::string out_path;
    bool tighten = false;
    bool quiet = false;
};

int cmd_emit_milp(const EmitMilpArgs& args, std::ostream& out) {
    Instance instance = load_instance(args.instance_path);
    write_file(args.out_path, emit_milp(instance, args.tighten));
    if (!args.quiet)
        out << "wrote " << args.out_path << '\n';
    return kExitOk;
}

struct CertifyArgs {
    std::string instance_path;
    std::string scenario_path;
    std::string flow_path;
    std::string pi_path;
    bool quiet = false;
};

int cmd_certify(const CertifyArgs& args, std::ostream& out) {
    Instance instance = load_instance(args.instance_path);
    Scenario scenario = load_scenario(args.scenario_path, instance);
    Flow flow = load_flow(args.flow_path, instance);
    Potentials potentials = load_potentials(args.pi_path, instance);

    std::vector<std::string> violations;
    if (auto violation = validate_flow(instance, scenario, flow))
        violations.push_back(*violation);
    for (const std::string& violation : certify_optimality(instance, scenario, flow, potentials))
        violations.push_back(violation);

    if (violations.empty()) {
        out << "CERTIFIED\n";
        return kExitOk;
    }
    out << "NOT CERTIFIED\n";
    if (!args.quiet)
        for (const std::string& violation : violations)
            out << violation << '\n';
    return kExitVerdict;
}

struct GenArgs {
    std::string out_path;
    bool quiet = false;

    Value knap_b = 0;
    std::vector<Value> knap_a;
    std::vector<Value> knap_c;
    int chain_n = 6;
    int cut_n = 3;
    int rand_n = 4;
    int rand_m = 6;
    Value rand_cap_hi = 2;
    Value rand_cost_hi = 5;
    Value rand_f = 2;
    std::uint64_t rand_seed = 1;
};

int emit_generated(const Instance& instance, const GenArgs& args, std::ostream& out) {
    write_file(args.out_path, write_instance(instance));
    if (!args.quiet)
        out << "wrote " << args.out_path << " (n=" << instance.num_nodes
            << ", m=" << instance.num_arcs() << ", f=" << instance.flow_amount << ")\n";
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"worst-case analysis of minimum cost flows with interval capacities"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "minimum cost flow under a fixed scenario");
    solve->add_option("instance", solve_args.instance_path)->required();
    solve->add_option("--scenario", solve_args.scenario_path)->required();
    solve->add_option("--flow-out", solve_args.flow_out);
    solve->add_option("--pi-out", solve_args.pi_out);
    solve->add_flag("--quiet", solve_args.quiet);

    WorstArgs worst_args;
    auto* worst = app.add_subcommand("worst", "worst finite optimal value c_w");
    worst->add_option("instance", worst_args.instance_path)->required();
    worst->add_option("--method", worst_args.method)->check(CLI::IsMember({"brute", "sp"}));
    worst->add_option("--sp-tree", worst_args.sp_tree_expr);
    worst->add_option("--scenario-out", worst_args.scenario_out);
    worst->add_option("--flow-out", worst_args.flow_out);
    worst->add_flag("--quiet", worst_args.quiet);

    ExtremalizeArgs extremalize_args;
    auto* extremalize = app.add_subcommand("extremalize", "forest-extremal worst scenario");
    extremalize->add_option("instance", extremalize_args.instance_path)->required();
    extremalize->add_option("--scenario", extremalize_args.scenario_path)->required();
    extremalize->add_option("--flow", extremalize_args.flow_path)->required();
    extremalize->add_option("--scenario-out", extremalize_args.scenario_out);
    extremalize->add_option("--flow-out", extremalize_args.flow_out);
    extremalize->add_flag("--quiet", extremalize_args.quiet);

    ParadoxArgs paradox_args;
    auto* paradox = app.add_subcommand("paradox", "more-for-less paradox scan");
    paradox->add_option("instance", paradox_args.instance_path)->required();
    paradox->add_option("--fmax", paradox_args.f_max);
    paradox->add_flag("--quiet", paradox_args.quiet);

    ImmuneArgs immune_args;
    auto* immune = app.add_subcommand("immune", "paradox immunity of a complete-graph cost matrix");
    immune->add_option("--complete", immune_args.n)->required();
    immune->add_option("--costs", immune_args.costs_path)->required();
    immune->add_option("--source", immune_args.source);
    immune->add_option("--sink", immune_args.sink);
    immune->add_flag("--quiet", immune_args.quiet);

    EmitMilpArgs emit_args;
    auto* emit = app.add_subcommand("emit-milp", "write the worst-value MILP in LP format");
    emit->add_option("instance", emit_args.instance_path)->required();
    emit->add_option("-o,--output", emit_args.out_path)->required();
    emit->add_flag("--tighten", emit_args.tighten);
    emit->add_flag("--quiet", emit_args.quiet);

    CertifyArgs certify_args;
    auto* certify = app.add_subcommand("certify", "verify an optimality certificate");
    certify->add_option("instance", certify_args.instance_path)->required();
    certify->add_option("--scenario", certify_args.scenario_path)->required();
    certify->add_option("--flow", certify_args.flow_path)->required();
    certify->add_option("--pi", certify_args.pi_path)->required();
    certify->add_flag("--quiet", certify_args.quiet);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    auto add_common = [&gen_args](CLI::App* sub) {
        sub->add_option("-o,--output", gen_args.out_path)->required();
        sub->add_flag("--quiet", gen_args.quiet);
    };
    auto* gen_knapsack = gen->add_subcommand("knapsack", "knapsack reduction instance");
    gen_knapsack->add_option("--b", gen_args.knap_b)->required();
    gen_knapsack->add_option("--a", gen_args.knap_a)->required();
    gen_knapsack->add_option("--c", gen_args.knap_c)->required();
    add_common(gen_knapsack);
    auto* gen_chain = gen->add_subcommand("chain", "interior-chain family");
    gen_chain->add_option("--n", gen_args.chain_n)->required();
    add_common(gen_chain);
    auto* gen_para_simple = gen->add_subcommand("paradox-simple", "small paradox example");
    add_common(gen_para_simple);
    auto* gen_para_complex = gen->add_subcommand("paradox-complex", "larger paradox example");
    add_common(gen_para_complex);
    auto* gen_cut = gen->add_subcommand("cut", "complete-graph cut instance");
    gen_cut->add_option("--n", gen_args.cut_n)->required();
    add_common(gen_cut);
    auto* gen_rand = gen->add_subcommand("random", "seeded random instance");
    gen_rand->add_option("--n", gen_args.rand_n)->required();
    gen_rand->add_option("--m", gen_args.rand_m)->required();
    gen_rand->add_option("--cap-hi", gen_args.rand_cap_hi)->required();
    gen_rand->add_option("--cost-hi", gen_args.rand_cost_hi)->required();
    gen_rand->add_option("--f", gen_args.rand_f)->required();
    gen_rand->add_option("--seed", gen_args.rand_seed)->required();
    add_common(gen_rand);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        err << app.help();
        return kExitInput;
    }

    try {
        if (solve->parsed())
            return cmd_solve(solve_args, out);
        if (worst->parsed())
            return cmd_worst(worst_args, out, err);
        if (extremalize->parsed())
            return cmd_extremalize(extremalize_args, out);
        if (paradox->parsed())
            return cmd_paradox(paradox_args, out, err);
        if (immune->parsed())
            return cmd_immune(immune_args, out);
        if (emit->parsed())
            return cmd_emit_milp(emit_args, out);
        if (certify->parsed())
            return cmd_certify(certify_args, out);
        if (gen->parsed()) {
            if (gen_knapsack->parsed())
                return emit_generated(
                    gen_knapsack_reduction({gen_args.knap_b, gen_args.knap_a, gen_args.knap_c}),
                    gen_args, out);
            if (gen_chain->parsed())
                return emit_generated(gen_interior_chain(gen_args.chain_n), gen_args, out);
            if (gen_para_simple->parsed())
                return emit_generated(gen_paradox_simple(), gen_args, out);
            if (gen_para_complex->parsed())
                return emit_generated(gen_paradox_complex(), gen_args, out);
            if (gen_cut->parsed())
                return emit_generated(gen_cut_complete(gen_args.cut_n), gen_args, out);
            if (gen_rand->parsed())
                return emit_generated(gen_random(gen_args.rand_n, gen_args.rand_m,
                                                 gen_args.rand_cap_hi, gen_args.rand_cost_hi,
                                                 gen_args.rand_f, gen_args.rand_seed),
                                      gen_args, out);
        }
        err << "no subcommand\n";
        return kExitInput;
    } catch (const CliError& e) {
        err << e.message << '\n';
        return e.code;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kExitInput;
    }
}

} // namespace iflow
