#include "iflow/instance_io.hpp"

#include <cctype>
#include <functional>
#include <istream>
#include <sstream>
#include <vector>

namespace iflow {

namespace {

bool is_comment(const std::string& line) {
    return !line.empty() && line[0] == 'c' && (line.size() == 1 || line[1] == ' ');
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok)
        fields.push_back(tok);
    return fields;
}

// Integer tokens only; rationals and junk are syntax errors.
Value parse_value(const std::string& tok, int line) {
    size_t start = (tok[0] == '-') ? 1 : 0;
    if (start == tok.size())
        throw ParseError(line, "expected integer, got '" + tok + "'");
    for (size_t i = start; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            throw ParseError(line, "expected integer, got '" + tok + "'");
    try {
        return std::stoll(tok);
    } catch (const std::out_of_range&) {
        throw ParseError(line, "integer out of range: '" + tok + "'");
    }
}

Value parse_nonnegative(const std::string& tok, int line) {
    Value v = parse_value(tok, line);
    if (v < 0)
        throw ParseError(line, "negative value '" + tok + "'");
    return v;
}

int parse_node_id(const std::string& tok, int line) {
    Value v = parse_nonnegative(tok, line);
    if (v < 1 || v > 1000000000)
        throw ParseError(line, "node id out of range: '" + tok + "'");
    return static_cast<int>(v);
}

struct LineReader {
    std::istream& in;
    int line = 0;

    // Next non-comment line split into fields; empty result = end of input.
    std::vector<std::string> next() {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line;
            if (is_comment(raw))
                continue;
            auto fields = split_fields(raw);
            if (fields.empty())
                throw ParseError(line, "blank line");
            return fields;
        }
        return {};
    }
};

} // namespace

Instance parse_instance(std::istream& in) {
    LineReader reader{in};

    auto fields = reader.next();
    if (fields.empty())
        throw ParseError(reader.line + 1, "missing problem line");
    if (fields[0] != "p")
        throw ParseError(reader.line, "first non-comment line must be the problem line");
    if (fields.size() != 5 || fields[1] != "iflow")
        throw ParseError(reader.line, "malformed problem line, expected 'p iflow <n> <m> <f>'");
    const int p_line = reader.line;

    Instance instance;
    Value n = parse_nonnegative(fields[2], p_line);
    Value m = parse_nonnegative(fields[3], p_line);
    if (n > 1000000 || m > 10000000)
        throw ParseError(p_line, "instance size out of supported range");
    instance.num_nodes = static_cast<int>(n);
    instance.flow_amount = parse_nonnegative(fields[4], p_line);

    bool have_source = false;
    bool have_sink = false;
    while (!(fields = reader.next()).empty()) {
        if (fields[0] == "n") {
            if (fields.size() != 3)
                throw ParseError(reader.line, "malformed node line, expected 'n <node_id> <s|t>'");
            int node = parse_node_id(fields[1], reader.line);
            if (fields[2] == "s") {
                if (have_source)
                    throw ParseError(reader.line, "duplicate source line");
                instance.source = node;
                have_source = true;
            } else if (fields[2] == "t") {
                if (have_sink)
                    throw ParseError(reader.line, "duplicate sink line");
                instance.sink = node;
                have_sink = true;
            } else {
                throw ParseError(reader.line, "node designator must be 's' or 't'");
            }
        } else if (fields[0] == "a") {
            if (fields.size() != 6)
                throw ParseError(reader.line,
                                 "malformed arc line, expected 'a <tail> <head> <lower> <upper> <cost>'");
            Arc arc;
            arc.id = instance.num_arcs();
            arc.tail = parse_node_id(fields[1], reader.line);
            arc.head = parse_node_id(fields[2], reader.line);
            arc.capacity.lower = parse_nonnegative(fields[3], reader.line);
            arc.capacity.upper = parse_nonnegative(fields[4], reader.line);
            arc.cost = parse_nonnegative(fields[5], reader.line);
            if (arc.tail == arc.head)
                throw ParseError(reader.line, "self-loop");
            if (arc.capacity.lower > arc.capacity.upper)
                throw ParseError(reader.line, "interval bounds crossed");
            if (instance.num_arcs() == m)
                throw ParseError(reader.line, "arc count mismatch: more arc lines than declared");
            instance.arcs.push_back(arc);
        } else {
            throw ParseError(reader.line, "unknown record '" + fields[0] + "'");
        }
    }

    if (!have_source)
        throw ParseError(p_line, "missing source line");
    if (!have_sink)
        throw ParseError(p_line, "missing sink line");
    if (instance.num_arcs() != m)
        throw ParseError(p_line, "arc count mismatch: declared " + std::to_string(m) + ", found " +
                                     std::to_string(instance.num_arcs()));
    if (auto violation = validate_instance(instance))
        throw ParseError(p_line, *violation);
    return instance;
}

Instance parse_instance_string(const std::string& text) {
    std::istringstream iss(text);
    return parse_instance(iss);
}

std::string write_instance(const Instance& instance) {
    std::ostringstream out;
    out << "p iflow " << instance.num_nodes << ' ' << instance.num_arcs() << ' '
        << instance.flow_amount << '\n';
    out << "n " << instance.source << " s\n";
    out << "n " << instance.sink << " t\n";
    for (const Arc& arc : instance.arcs)
        out << "a " << arc.tail << ' ' << arc.head << ' ' << arc.capacity.lower << ' '
            << arc.capacity.upper << ' ' << arc.cost << '\n';
    return out.str();
}

namespace {

// Shared reader for scenario-shaped value files ("s iflow <m>" header
// followed by one "u <arc_id> <value>" line per arc). The check hook
// runs per value with the line number at hand.
using ValueCheck = std::function<void(int arc_id, Value value, int line)>;

std::vector<Value> parse_value_file(std::istream& in, const Instance& instance,
                                    const ValueCheck& check = {}) {
    LineReader reader{in};

    auto fields = reader.next();
    if (fields.empty())
        throw ParseError(reader.line + 1, "missing header line");
    if (fields[0] != "s" || fields.size() != 3 || fields[1] != "iflow")
        throw ParseError(reader.line, "malformed header, expected 's iflow <m>'");
    Value m = parse_nonnegative(fields[2], reader.line);
    if (m != instance.num_arcs())
        throw ParseError(reader.line, "arc count mismatch: header declares " + std::to_string(m) +
                                          ", instance has " + std::to_string(instance.num_arcs()));

    std::vector<Value> values(instance.arcs.size(), -1);
    while (!(fields = reader.next()).empty()) {
        if (fields[0] != "u" || fields.size() != 3)
            throw ParseError(reader.line, "malformed value line, expected 'u <arc_id> <value>'");
        Value id = parse_nonnegative(fields[1], reader.line);
        if (id >= instance.num_arcs())
            throw ParseError(reader.line, "arc id " + std::to_string(id) + " out of range");
        if (values[id] >= 0)
            throw ParseError(reader.line, "duplicate arc id " + std::to_string(id));
        values[id] = parse_nonnegative(fields[2], reader.line);
        if (check)
            check(static_cast<int>(id), values[id], reader.line);
    }
    for (size_t i = 0; i < values.size(); ++i)
        if (values[i] < 0)
            throw ParseError(reader.line, "missing value for arc " + std::to_string(i));
    return values;
}

std::string write_value_file(const std::vector<Value>& values) {
    std::ostringstream out;
    out << "s iflow " << values.size() << '\n';
    for (size_t i = 0; i < values.size(); ++i)
        out << "u " << i << ' ' << values[i] << '\n';
    return out.str();
}

} // namespace

Scenario parse_scenario(std::istream& in, const Instance& instance) {
    auto within_box = [&](int arc_id, Value value, int line) {
        const IntervalCapacity& box = instance.arcs[arc_id].capacity;
        if (value < box.lower || value > box.upper)
            throw ParseError(line, "capacity out of interval (arc " + std::to_string(arc_id) + ")");
    };
    return Scenario{parse_value_file(in, instance, within_box)};
}

Scenario parse_scenario_string(const std::string& text, const Instance& instance) {
    std::istringstream iss(text);
    return parse_scenario(iss, instance);
}

std::string write_scenario(const Scenario& scenario) {
    return write_value_file(scenario.capacities);
}

Flow parse_flow(std::istream& in, const Instance& instance) {
    Flow flow;
    flow.values = parse_value_file(in, instance);
    flow.total_cost = flow_cost(instance, flow.values);
    return flow;
}

Flow parse_flow_string(const std::string& text, const Instance& instance) {
    std::istringstream iss(text);
    return parse_flow(iss, instance);
}

std::string write_flow(const Flow& flow) {
    return write_value_file(flow.values);
}

} // namespace iflow
