#pragma once

// Seven-block analysis pipeline with bounded feedback re-runs and what-if overrides.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "demoreq/depgraph.hpp"
#include "demoreq/feasibility.hpp"
#include "demoreq/model.hpp"
#include "demoreq/quality.hpp"
#include "demoreq/requirements.hpp"
#include "demoreq/trl.hpp"

namespace demoreq {

struct EngineConfig {
    GapThresholds gap_thresholds;
    GradeCapTable grade_caps;
    LevelBands level_bands;
    /// Cap for a covered WP sharing no use-case with its demonstrator.
    TrlLevel availability_cap{4};
    /// Demonstrator cap when its covered WPs are not connected.
    TrlLevel standalone_cap{4};
    ReadinessGrade extra_functional_grade = ReadinessGrade::IndustrialBaselines;
    int max_feedback_iterations = 3;
    bool strict_schema = true;
    std::vector<std::string> extra_functional_attributes = default_extra_functional_attributes();

    FeasibilityConfig feasibility() const;
    bool operator==(const EngineConfig&) const = default;
};

/// Throws SchemaError when tables are not monotone or the iteration bound is < 1.
void validate_config(const EngineConfig& config);

/// JSON config; absent keys keep their defaults. Throws SyntaxError/SchemaError.
EngineConfig parse_config(std::string_view source);
std::string serialize_config(const EngineConfig& config);

struct FeedbackEvent {
    int from_block = 4;
    int to_block = 1;
    std::string reason;
    int iteration = 1;
    std::optional<std::string> demo_id;
    /// Whether the engine re-ran from `to_block` because of this event.
    bool rerun = false;

    bool operator==(const FeedbackEvent&) const = default;
};

/// Whether (from, to) is one of 4->1, 4->2, 5->3, 6->3.
bool is_allowed_route(int from_block, int to_block);

enum class OverrideOp { Set, Add, Remove };

/// `wp.WP2.estimated_trl=5`, `use_case.CPP.readiness=G3`,
/// `demo.industrial.covered_wps+=WP1`.
struct Override {
    std::string target;  // wp | use_case | demo
    std::string id;
    std::string field;
    OverrideOp op = OverrideOp::Set;
    std::string value;

    std::string text() const;
    bool operator==(const Override&) const = default;
};

/// Throws OverrideError on malformed text.
Override parse_override(std::string_view text);

/// Throws OverrideError when a path does not resolve or a value is invalid.
ProjectModel apply_overrides(ProjectModel model, std::span<const Override> overrides);

struct ConsolidationSummary {
    std::vector<MissingInfo> flags;
    std::vector<AppliedDefault> defaults_applied;
    std::vector<Diagnostic> advisories;

    bool operator==(const ConsolidationSummary&) const = default;
};

/// Demonstrator-specific propagation after quality feedback.
struct DemoPropagation {
    std::string demo_id;
    std::map<std::string, TrlLevel> caps_applied;
    AdjustedTrlMap adjusted;
    std::vector<Bottleneck> bottlenecks;

    bool operator==(const DemoPropagation&) const = default;
};

struct AnalysisReport {
    int report_version = 1;
    std::string project;
    std::vector<Override> overrides;
    ConsolidationSummary consolidated;
    std::vector<WpGap> gaps;
    std::vector<std::string> incomplete_wps;
    std::vector<DemoGap> demo_gaps;
    AdjustedTrlMap adjusted;
    StructureReport structure;
    std::vector<DemoPropagation> demo_adjusted;
    std::vector<ComplianceReport> compliance;
    std::vector<DemonstratorAssessment> assessments;
    std::vector<RequirementsSpec> specs;
    std::vector<FeedbackEvent> feedback;
    int passes = 1;
    EngineConfig config_used;

    const DemonstratorAssessment* assessment(std::string_view demo_id) const;
    const ComplianceReport* compliance_for(std::string_view demo_id) const;
    const RequirementsSpec* spec(std::string_view demo_id) const;
    bool operator==(const AnalysisReport&) const = default;
};

/// Runs Blocks 1-7. Throws ValidationFailed, OverrideError, IterationLimitExceeded.
AnalysisReport run(const ProjectModel& model, const EngineConfig& config = {},
                   std::span<const Override> overrides = {});

/// Whether any demonstrator misses its target TRL or targets an Impractical cell.
bool targets_unmet(const AnalysisReport& report);

struct TrlChange {
    std::string subject;
    std::optional<TrlLevel> before;
    std::optional<TrlLevel> after;

    bool operator==(const TrlChange&) const = default;
};

struct LevelChange {
    std::string demo_id;
    std::optional<DemonstrationLevel> before;
    std::optional<DemonstrationLevel> after;

    bool operator==(const LevelChange&) const = default;
};

struct ConstraintChange {
    std::string demo_id;
    bool added = false;
    Constraint constraint;

    bool operator==(const ConstraintChange&) const = default;
};

struct ReportDiff {
    std::vector<TrlChange> adjusted;
    std::vector<TrlChange> achievable;
    std::vector<LevelChange> recommendations;
    std::vector<ConstraintChange> constraints;

    bool empty() const {
        return adjusted.empty() && achievable.empty() && recommendations.empty() && constraints.empty();
    }
};

/// Throws ProjectMismatch when the reports belong to different projects.
ReportDiff diff_reports(const AnalysisReport& a, const AnalysisReport& b);

std::string_view to_string(OverrideOp);

} // namespace demoreq
