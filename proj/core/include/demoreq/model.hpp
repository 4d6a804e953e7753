#pragma once

// Project data model, structural validation and input consolidation.

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace demoreq {

/// Technology readiness level, always within [1, 9].
class TrlLevel {
public:
    static constexpr int kMin = 1;
    static constexpr int kMax = 9;

    constexpr explicit TrlLevel(int value) : value_(value) {
        if (value < kMin || value > kMax) {
            throw std::out_of_range("TRL must be within 1..9, got " + std::to_string(value));
        }
    }

    static constexpr std::optional<TrlLevel> from_int(int value) noexcept {
        if (value < kMin || value > kMax) return std::nullopt;
        return TrlLevel(value);
    }

    /// Clamps into range; used where arithmetic may leave 1..9.
    static constexpr TrlLevel clamped(int value) noexcept {
        return TrlLevel(value < kMin ? kMin : (value > kMax ? kMax : value));
    }

    constexpr int value() const noexcept { return value_; }
    constexpr auto operator<=>(const TrlLevel&) const = default;

private:
    int value_;
};

enum class WpKind { Technical, Dissemination, Management, Demonstration };
enum class DependencyKind { Data, Temporal, Control, Functional };
enum class Certainty { Direct, Uncertain };

/// Artifact readiness of a use-case's code/data. Totally ordered.
enum class ReadinessGrade {
    None = 0,                 // G0
    SampleData = 1,           // G1
    RepresentativeData = 2,   // G2: representative data and interfaces
    IndustrialBaselines = 3,  // G3: industrial artifacts with baselines
    Operational = 4,          // G4: operational environment
};
inline constexpr int kGradeCount = 5;

enum class Qualities { FunctionalOnly, FunctionalAndExtraFunctional };

struct WorkPackage {
    std::string id;
    std::string name;
    WpKind kind = WpKind::Technical;
    std::optional<TrlLevel> target_trl;
    std::optional<TrlLevel> estimated_trl;
    std::optional<bool> analyzed;
    std::set<std::string> use_cases;

    bool operator==(const WorkPackage&) const = default;
};

struct WpDependency {
    std::string from;
    std::string to;
    DependencyKind kind = DependencyKind::Data;
    Certainty certainty = Certainty::Direct;

    bool operator==(const WpDependency&) const = default;
};

struct UseCase {
    std::string id;
    std::string provider;
    std::optional<std::string> framework_group;
    std::optional<ReadinessGrade> readiness;

    bool operator==(const UseCase&) const = default;
};

struct DemonstratorTarget {
    std::string id;
    std::string name;
    std::optional<TrlLevel> target_trl;
    std::set<std::string> covered_wps;
    std::set<std::string> use_cases;
    Qualities qualities = Qualities::FunctionalOnly;

    bool operator==(const DemonstratorTarget&) const = default;
};

struct TrlRange {
    TrlLevel low{1};
    TrlLevel high{1};

    bool operator==(const TrlRange&) const = default;
};

struct ProjectModel {
    std::string name;
    std::optional<TrlRange> blanket_trl_range;
    std::vector<WorkPackage> work_packages;
    std::vector<WpDependency> dependencies;
    std::vector<UseCase> use_cases;
    std::vector<DemonstratorTarget> demonstrators;

    const WorkPackage* find_wp(std::string_view id) const;
    WorkPackage* find_wp(std::string_view id);
    const UseCase* find_use_case(std::string_view id) const;
    UseCase* find_use_case(std::string_view id);
    const DemonstratorTarget* find_demonstrator(std::string_view id) const;
    DemonstratorTarget* find_demonstrator(std::string_view id);

    bool operator==(const ProjectModel&) const = default;
};

/// Whether the WP is a node of the dependency graph. Management and
/// Dissemination are excluded unless `analyzed` says otherwise.
bool is_analyzed(const WorkPackage& wp);

/// Whether the WP carries per-WP TRL targets/estimates (gap table, defaults,
/// missing-info flags). Technical WPs always; others only when explicitly
/// analyzed, except Demonstration WPs which are never gap-tracked.
bool is_trl_tracked(const WorkPackage& wp);

bool is_valid_id(std::string_view id);

// --- diagnostics -----------------------------------------------------------

enum class Severity { Error, Advisory };

enum class DiagnosticCode {
    DuplicateId,
    SelfDependency,
    InvertedRange,
    CyclicDependency,
    EmptyCoverage,
    CoverageOutsideAnalysis,
    UnpropagatedDependencyKind,
    UncertainDependency,
    EdgeOutsideAnalysis,
    UnknownKey,
    UnknownReference,
};

struct Diagnostic {
    Severity severity = Severity::Error;
    DiagnosticCode code = DiagnosticCode::DuplicateId;
    std::string subject;
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

/// All invariant violations (Severity::Error) and advisories, sorted by
/// subject then code.
std::vector<Diagnostic> validate_model(const ProjectModel& model);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

// --- consolidation (Block 1) ------------------------------------------------

enum class SubjectKind { WorkPackage, Demonstrator, UseCase, Dependency, Field };

struct SubjectRef {
    SubjectKind kind = SubjectKind::WorkPackage;
    std::string id;

    bool operator==(const SubjectRef&) const = default;
};

enum class MissingIssue {
    MissingTargetTrl,
    MissingEstimatedTrl,
    MissingReadiness,
    MissingDemonstratorTrl,
    UncertainDependency,
};

struct MissingInfo {
    SubjectRef subject;
    MissingIssue issue = MissingIssue::MissingTargetTrl;
    std::string note;

    bool operator==(const MissingInfo&) const = default;
};

struct AppliedDefault {
    std::string field_path;
    TrlLevel value{1};
    std::string provenance;

    bool operator==(const AppliedDefault&) const = default;
};

struct ConsolidatedInput {
    ProjectModel model;
    std::vector<MissingInfo> flags;
    std::vector<AppliedDefault> defaults_applied;
};

ConsolidatedInput consolidate(const ProjectModel& model);

/// Subject token of a dependency, "FROM->TO".
std::string dependency_subject(const WpDependency& dep);

// --- parsing / serialization -------------------------------------------------

struct ParseOptions {
    /// Unknown keys become warnings instead of a SchemaError.
    bool lenient = false;
};

/// Parses a JSON project model. Throws SyntaxError, SchemaError, ReferenceError.
/// Unknown-key warnings (lenient mode) are appended to `warnings` if given.
ProjectModel parse_model(std::string_view source, const ParseOptions& options = {},
                         std::vector<Diagnostic>* warnings = nullptr);

std::string serialize_model(const ProjectModel& model);

// --- enum names ----------------------------------------------------------------

std::string_view to_string(WpKind);
std::string_view to_string(DependencyKind);
std::string_view to_string(Certainty);
std::string_view to_string(ReadinessGrade);
std::string_view to_string(Qualities);
std::string_view to_string(Severity);
std::string_view to_string(DiagnosticCode);
std::string_view to_string(SubjectKind);
std::string_view to_string(MissingIssue);

std::optional<WpKind> parse_wp_kind(std::string_view);
std::optional<DependencyKind> parse_dependency_kind(std::string_view);
std::optional<Certainty> parse_certainty(std::string_view);
std::optional<ReadinessGrade> parse_grade(std::string_view);
std::optional<Qualities> parse_qualities(std::string_view);

} // namespace demoreq
