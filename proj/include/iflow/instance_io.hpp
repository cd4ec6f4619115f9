#pragma once

#include "iflow/model.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace iflow {

/// Parse failure with the 1-based line number it occurred on.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_) + ": " + message), line(line_) {}
};

/// Instance file grammar (single-space separated, "\n"-terminated):
///   c <free text>                          comment, anywhere
///   p iflow <n> <m> <f>                    first non-comment line, once
///   n <node_id> s                          once
///   n <node_id> t                          once
///   a <tail> <head> <lower> <upper> <cost> exactly m lines, arc id = order - 1
/// The parsed instance is checked against all model invariants.
Instance parse_instance(std::istream& in);
Instance parse_instance_string(const std::string& text);

/// Canonical byte-exact form: p line, source, sink, then arcs by id.
std::string write_instance(const Instance& instance);

/// Scenario file grammar:
///   c <free text>
///   s iflow <m>
///   u <arc_id> <capacity>                  exactly m lines, each arc id once
/// Values are checked against the instance's intervals.
Scenario parse_scenario(std::istream& in, const Instance& instance);
Scenario parse_scenario_string(const std::string& text, const Instance& instance);
std::string write_scenario(const Scenario& scenario);

/// Flows travel through the CLI in scenario-shaped files (same grammar,
/// values are flow units). No interval check; total_cost is recomputed.
Flow parse_flow(std::istream& in, const Instance& instance);
Flow parse_flow_string(const std::string& text, const Instance& instance);
std::string write_flow(const Flow& flow);

} // namespace iflow
