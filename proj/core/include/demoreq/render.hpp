#pragma once

// Report output: sectioned text, machine-readable JSON, and DOT graphs.

#include <string>
#include <string_view>

#include "demoreq/depgraph.hpp"
#include "demoreq/engine.hpp"
#include "demoreq/model.hpp"

namespace demoreq {

enum class OutputFormat { Text, Machine, Dot };

/// One section per block, stable across runs.
std::string render_text(const AnalysisReport& report, const ProjectModel& model);

/// Self-describing JSON document carrying the full report (`report_version: 1`).
std::string render_machine(const AnalysisReport& report);

/// Inverse of render_machine. Throws SyntaxError / SchemaError.
AnalysisReport parse_machine_report(std::string_view source);

/// Graphviz DOT: Direct edges solid, Uncertain dashed, islands annotated.
std::string render_dot(const WpGraph& graph, const ProjectModel& model,
                       const StructureReport& structure);

std::string render_diff(const ReportDiff& diff);

} // namespace demoreq
