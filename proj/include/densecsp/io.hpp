#pragma once

#include <json.hpp>

#include <string>

#include "densecsp/graph.hpp"
#include "densecsp/instance.hpp"
#include "densecsp/report.hpp"

namespace densecsp {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

// Instance files: {format_version, kind, q, n, edges, allowed[, pi]}.
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

// Assignments: {n, labels}.
Json assignment_to_json(const Assignment& phi);
Assignment assignment_from_json(const Json& j);

// Graphs: {n, edges}.
Json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const Json& j);

Json guarantee_to_json(const GuaranteeInfo& g);
GuaranteeInfo guarantee_from_json(const Json& j);

// Report payload: deterministic for identical runs (wall time is excluded).
// `embed` adds the full instance so that `verify` is self-contained.
Json report_to_json(const SolveReport& report, const Instance* embed);

// Canonical bytes: 2-space indent, sorted keys, trailing newline.
std::string dump_deterministic(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

Instance load_instance(const std::string& path);
Assignment load_assignment(const std::string& path);
SimpleGraph load_graph(const std::string& path);

}  // namespace densecsp
