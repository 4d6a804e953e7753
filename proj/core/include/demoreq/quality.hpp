#pragma once

// Artifact quality gate.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "demoreq/depgraph.hpp"
#include "demoreq/model.hpp"

namespace demoreq {

struct QualityThreshold {
    TrlLevel trl{1};
    ReadinessGrade required_grade = ReadinessGrade::None;
};

/// Minimal grade whose cap reaches `trl`; the top grade when none does.
QualityThreshold thresholds_for(TrlLevel trl, const GradeCapTable& table = {});

enum class ComplianceFailure { None, Availability, GradeUnknown, GradeInsufficient };

struct ComplianceRow {
    std::string wp_id;
    /// Absent for availability failures (no shared use-case).
    std::optional<std::string> use_case_id;
    ReadinessGrade required = ReadinessGrade::None;
    std::optional<ReadinessGrade> actual;
    bool compliant = false;
    ComplianceFailure failure = ComplianceFailure::None;

    bool operator==(const ComplianceRow&) const = default;
};

struct ComplianceReport {
    std::string demo_id;
    TrlLevel target_trl{1};
    std::vector<ComplianceRow> rows;
    std::vector<std::string> corrective_actions;
    bool affects_dependencies = false;

    bool operator==(const ComplianceReport&) const = default;
};

ComplianceReport assess_compliance(const ConsolidatedInput& input, const DemonstratorTarget& demo,
                                   TrlLevel target_trl, const GradeCapTable& table = {});

/// Per-WP caps implied by the report's failures: availability failures cap at
/// `availability_cap`, insufficient grades at the cap of the best actual grade.
std::map<std::string, TrlLevel> caps_from_compliance(const ComplianceReport& report,
                                                     const GradeCapTable& table,
                                                     TrlLevel availability_cap);

std::string_view to_string(ComplianceFailure);

} // namespace demoreq
