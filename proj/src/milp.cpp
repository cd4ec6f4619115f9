#include "iflow/milp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace iflow {

namespace {

enum class VarKind { x, u, pi, alpha, cpi, y, z };

struct VarRef {
    VarKind kind;
    int index; // arc id, or node id for pi
};

struct Term {
    Value coef;
    VarRef var;
};

enum class Sense { le, ge, eq };

struct Row {
    std::vector<Term> terms;
    Sense sense;
    Value rhs;
};

// Single source of truth for the constraint system; the text emitter
// and the assignment checker both walk this.
struct Model {
    std::vector<Term> objective;
    std::vector<Row> rows;
};

Value cost_sum_term(const Instance& instance) {
    Value sum = 0;
    Value max_cost = 0;
    for (const Arc& arc : instance.arcs) {
        sum += arc.cost;
        max_cost = std::max(max_cost, arc.cost);
    }
    return 2 * sum + max_cost;
}

Model build_model(const Instance& instance, bool tighten) {
    Model model;
    const Value m_cpi = tighten ? cost_sum_term(instance) : big_m(instance);

    for (const Arc& arc : instance.arcs)
        model.objective.push_back({arc.cost, {VarKind::x, arc.id}});

    // Flow balance, nodes in ascending order.
    for (int v = 1; v <= instance.num_nodes; ++v) {
        Row row;
        for (const Arc& arc : instance.arcs) {
            if (arc.tail == v)
                row.terms.push_back({1, {VarKind::x, arc.id}});
            else if (arc.head == v)
                row.terms.push_back({-1, {VarKind::x, arc.id}});
        }
        row.sense = Sense::eq;
        row.rhs = (v == instance.source) ? instance.flow_amount
                                         : (v == instance.sink ? -instance.flow_amount : 0);
        model.rows.push_back(std::move(row));
    }

    // x_e <= u_e.
    for (const Arc& arc : instance.arcs)
        model.rows.push_back(
            {{{1, {VarKind::x, arc.id}}, {-1, {VarKind::u, arc.id}}}, Sense::le, 0});

    // Dual feasibility pi_i - pi_j - alpha_e <= c_e.
    for (const Arc& arc : instance.arcs)
        model.rows.push_back({{{1, {VarKind::pi, arc.tail}},
                               {-1, {VarKind::pi, arc.head}},
                               {-1, {VarKind::alpha, arc.id}}},
                              Sense::le,
                              arc.cost});

    // Reduced-cost link cpi_e + pi_i - pi_j = c_e.
    for (const Arc& arc : instance.arcs)
        model.rows.push_back({{{1, {VarKind::cpi, arc.id}},
                               {1, {VarKind::pi, arc.tail}},
                               {-1, {VarKind::pi, arc.head}}},
                              Sense::eq,
                              arc.cost});

    // Indicator pair for positive reduced costs:
    // cpi_e <= M y_e and x_e <= M (1 - y_e).
    for (const Arc& arc : instance.arcs)
        model.rows.push_back(
            {{{1, {VarKind::cpi, arc.id}}, {-m_cpi, {VarKind::y, arc.id}}}, Sense::le, 0});
    for (const Arc& arc : instance.arcs) {
        const Value m_x = tighten ? arc.capacity.upper : big_m(instance);
        model.rows.push_back(
            {{{1, {VarKind::x, arc.id}}, {m_x, {VarKind::y, arc.id}}}, Sense::le, m_x});
    }

    // Indicator pair for negative reduced costs:
    // cpi_e >= -M z_e and u_e - x_e <= M (1 - z_e).
    for (const Arc& arc : instance.arcs)
        model.rows.push_back(
            {{{1, {VarKind::cpi, arc.id}}, {m_cpi, {VarKind::z, arc.id}}}, Sense::ge, 0});
    for (const Arc& arc : instance.arcs) {
        const Value m_u = tighten ? arc.capacity.upper : big_m(instance);
        model.rows.push_back({{{1, {VarKind::u, arc.id}},
                               {-1, {VarKind::x, arc.id}},
                               {m_u, {VarKind::z, arc.id}}},
                              Sense::le,
                              m_u});
    }
    return model;
}

std::string var_name(const VarRef& var) {
    switch (var.kind) {
    case VarKind::x: return "x_" + std::to_string(var.index);
    case VarKind::u: return "u_" + std::to_string(var.index);
    case VarKind::pi: return "pi_" + std::to_string(var.index);
    case VarKind::alpha: return "alpha_" + std::to_string(var.index);
    case VarKind::cpi: return "cpi_" + std::to_string(var.index);
    case VarKind::y: return "y_" + std::to_string(var.index);
    case VarKind::z: return "z_" + std::to_string(var.index);
    }
    return "?";
}

void render_terms(std::ostringstream& out, const std::vector<Term>& terms) {
    bool first = true;
    for (const Term& term : terms) {
        const Value mag = term.coef < 0 ? -term.coef : term.coef;
        if (first) {
            if (term.coef < 0)
                out << "- ";
            first = false;
        } else {
            out << (term.coef < 0 ? " - " : " + ");
        }
        if (mag != 1)
            out << mag << ' ';
        out << var_name(term.var);
    }
}

const char* sense_text(Sense sense) {
    switch (sense) {
    case Sense::le: return " <= ";
    case Sense::ge: return " >= ";
    case Sense::eq: return " = ";
    }
    return " ? ";
}

Value lookup(const MilpAssignment& assignment, const VarRef& var) {
    switch (var.kind) {
    case VarKind::x: return assignment.x[var.index];
    case VarKind::u: return assignment.u[var.index];
    case VarKind::pi: return assignment.pi[var.index];
    case VarKind::alpha: return assignment.alpha[var.index];
    case VarKind::cpi: return assignment.cpi[var.index];
    case VarKind::y: return assignment.y[var.index];
    case VarKind::z: return assignment.z[var.index];
    }
    return 0;
}

} // namespace

Value big_m(const Instance& instance) {
    Value max_upper = 0;
    for (const Arc& arc : instance.arcs)
        max_upper = std::max(max_upper, arc.capacity.upper);
    return std::max(max_upper, cost_sum_term(instance));
}

std::string emit_milp(const Instance& instance, bool tighten) {
    const Model model = build_model(instance, tighten);
    std::ostringstream out;

    out << "Maximize\n obj: ";
    render_terms(out, model.objective);
    out << "\nSubject To\n";
    for (size_t i = 0; i < model.rows.size(); ++i) {
        out << " r" << (i + 1) << ": ";
        render_terms(out, model.rows[i].terms);
        out << sense_text(model.rows[i].sense) << model.rows[i].rhs << '\n';
    }

    out << "Bounds\n";
    for (const Arc& arc : instance.arcs)
        out << " x_" << arc.id << " >= 0\n";
    for (const Arc& arc : instance.arcs)
        out << ' ' << arc.capacity.lower << " <= u_" << arc.id << " <= " << arc.capacity.upper
            << '\n';
    for (const Arc& arc : instance.arcs)
        out << " alpha_" << arc.id << " >= 0\n";
    for (const Arc& arc : instance.arcs)
        out << " cpi_" << arc.id << " free\n";
    for (int v = 1; v <= instance.num_nodes; ++v)
        out << " pi_" << v << " free\n";

    out << "Binary\n";
    for (const Arc& arc : instance.arcs)
        out << " y_" << arc.id << '\n';
    for (const Arc& arc : instance.arcs)
        out << " z_" << arc.id << '\n';
    out << "End\n";
    return out.str();
}

MilpCheck check_milp_assignment(const Instance& instance, const MilpAssignment& assignment,
                                bool tighten) {
    MilpCheck check;
    const size_t m = instance.arcs.size();
    const size_t n = static_cast<size_t>(instance.num_nodes) + 1;
    if (assignment.x.size() != m || assignment.u.size() != m || assignment.alpha.size() != m ||
        assignment.cpi.size() != m || assignment.y.size() != m || assignment.z.size() != m ||
        assignment.pi.size() != n) {
        check.violated_rows.push_back("dimension mismatch");
        return check;
    }

    const Model model = build_model(instance, tighten);
    for (size_t i = 0; i < model.rows.size(); ++i) {
        const Row& row = model.rows[i];
        Value lhs = 0;
        for (const Term& term : row.terms)
            lhs += term.coef * lookup(assignment, term.var);
        const bool holds = (row.sense == Sense::le && lhs <= row.rhs) ||
                           (row.sense == Sense::ge && lhs >= row.rhs) ||
                           (row.sense == Sense::eq && lhs == row.rhs);
        if (!holds)
            check.violated_rows.push_back("r" + std::to_string(i + 1) + ": lhs " +
                                          std::to_string(lhs) + sense_text(row.sense) +
                                          std::to_string(row.rhs) + " violated");
    }

    for (const Arc& arc : instance.arcs) {
        const int e = arc.id;
        if (assignment.x[e] < 0)
            check.violated_rows.push_back("bound x_" + std::to_string(e) + " >= 0");
        if (assignment.u[e] < arc.capacity.lower || assignment.u[e] > arc.capacity.upper)
            check.violated_rows.push_back("bound on u_" + std::to_string(e));
        if (assignment.alpha[e] < 0)
            check.violated_rows.push_back("bound alpha_" + std::to_string(e) + " >= 0");
        if (assignment.y[e] != 0 && assignment.y[e] != 1)
            check.violated_rows.push_back("y_" + std::to_string(e) + " not binary");
        if (assignment.z[e] != 0 && assignment.z[e] != 1)
            check.violated_rows.push_back("z_" + std::to_string(e) + " not binary");
    }

    if (check.violated_rows.empty()) {
        check.satisfied = true;
        for (const Term& term : model.objective)
            check.objective += term.coef * lookup(assignment, term.var);
    }
    return check;
}

MilpAssignment assemble_assignment(const Instance& instance, const Scenario& scenario,
                                   const Flow& flow) {
    auto solved = min_cost_flow(instance, scenario);
    if (!solved)
        throw std::invalid_argument("cannot assemble an assignment for an infeasible scenario");

    MilpAssignment assignment;
    assignment.x = flow.values;
    assignment.u = scenario.capacities;
    assignment.pi = solved->potentials.pi;
    for (const Arc& arc : instance.arcs) {
        const Value cpi = reduced_cost(arc, solved->potentials);
        assignment.cpi.push_back(cpi);
        assignment.alpha.push_back(std::max<Value>(0, -cpi));
        assignment.y.push_back(cpi > 0 ? 1 : 0);
        assignment.z.push_back(cpi < 0 ? 1 : 0);
    }
    return assignment;
}

} // namespace iflow
