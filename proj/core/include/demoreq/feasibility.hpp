#pragma once

// Demonstrator TRL feasibility (shortfalls, mitigations) and mapping onto
// demonstration levels under the use-case-type risk matrix.

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "demoreq/depgraph.hpp"
#include "demoreq/model.hpp"
#include "demoreq/quality.hpp"
#include "demoreq/trl.hpp"

namespace demoreq {

enum class DemonstrationLevel {
    ProofOfConcept = 1,
    ProofOfIntegration = 2,
    OptimisedProofOfIntegration = 3,
    GrandProofOfIntegration = 4,
    OptimisedGrandProofOfIntegration = 5,
};

inline constexpr std::array<DemonstrationLevel, 5> kAllLevels{
    DemonstrationLevel::ProofOfConcept, DemonstrationLevel::ProofOfIntegration,
    DemonstrationLevel::OptimisedProofOfIntegration, DemonstrationLevel::GrandProofOfIntegration,
    DemonstrationLevel::OptimisedGrandProofOfIntegration};

constexpr int level_number(DemonstrationLevel level) { return static_cast<int>(level); }
constexpr DemonstrationLevel level_from_number(int n) { return static_cast<DemonstrationLevel>(n); }
constexpr bool is_extra_functional(DemonstrationLevel level) {
    return level == DemonstrationLevel::OptimisedProofOfIntegration ||
           level == DemonstrationLevel::OptimisedGrandProofOfIntegration;
}
constexpr bool is_grand(DemonstrationLevel level) {
    return level_number(level) >= 4;
}

enum class UseCaseType { Unified, CoordinatedMulti, Disparate };
enum class RiskLevel { Normal, Moderate, High, Impractical };

/// Minimum TRL associated with each demonstration level.
struct LevelBands {
    std::array<TrlLevel, 5> min_trl{TrlLevel{3}, TrlLevel{5}, TrlLevel{5}, TrlLevel{6}, TrlLevel{7}};

    TrlLevel band(DemonstrationLevel level) const {
        return min_trl[static_cast<std::size_t>(level_number(level) - 1)];
    }
    bool monotone() const;
    bool operator==(const LevelBands&) const = default;
};

struct FeasibilityConfig {
    LevelBands bands;
    GapThresholds gaps;
    GradeCapTable grade_caps;
    /// Highest demonstrator TRL without demonstrable integration.
    TrlLevel standalone_cap{4};
    /// Grade every WP of an extra-functional level needs (baselines/benchmarks).
    ReadinessGrade extra_functional_grade = ReadinessGrade::IndustrialBaselines;
};

std::vector<DemonstrationLevel> feasible_levels(UseCaseType type);
bool is_feasible(DemonstrationLevel level, UseCaseType type);
RiskLevel risk_of(DemonstrationLevel level, UseCaseType type);

/// Min adjusted TRL over the covered WPs, capped at `standalone_cap` when two
/// or more covered WPs are not weakly connected by Direct edges. Throws UnknownWp.
TrlLevel achievable_demo_trl(const DemonstratorTarget& demo, const AdjustedTrlMap& adjusted,
                             const WpGraph& graph, TrlLevel standalone_cap = TrlLevel{4});

/// Same rule over an arbitrary WP scope.
TrlLevel achievable_scope_trl(const std::set<std::string>& scope, const AdjustedTrlMap& adjusted,
                              const WpGraph& graph, TrlLevel standalone_cap);

/// Throws NoUseCase if the demonstrator references no use-case.
UseCaseType classify_use_case_type(const DemonstratorTarget& demo, const ProjectModel& model);

/// Unified if one use-case is associated with every scope WP; CoordinatedMulti
/// if every scope WP has one of `use_cases` and they all share a framework
/// group; Disparate otherwise.
UseCaseType classify_scope(const std::set<std::string>& scope, const std::set<std::string>& use_cases,
                           const ProjectModel& model);

enum class MitigationKind {
    AssociateUseCase,
    ReferenceUseCase,
    RaiseGrade,
    AddCoverage,
    DefineDependency,
    RaiseWpTrl,
};

struct Mitigation {
    MitigationKind kind = MitigationKind::AssociateUseCase;
    std::optional<std::string> use_case;
    std::vector<std::string> wps;
    std::optional<ReadinessGrade> grade;
    std::optional<TrlLevel> trl;
    std::string text;
    /// Level recommended once the mitigation is applied (filled by the engine).
    std::optional<DemonstrationLevel> unlocks;

    bool operator==(const Mitigation&) const = default;
};

enum class ConstraintCode {
    TargetTrlShortfall,
    NoUseCase,
    UseCaseTypeInfeasible,
    NoUnifiedUseCase,
    UseCaseAvailability,
    NotConnected,
    CoverageIncomplete,
    TrlBandShortfall,
    ExtraFunctionalConditional,
    GradeInsufficient,
    ReducedScope,
};

struct Constraint {
    ConstraintCode code = ConstraintCode::TargetTrlShortfall;
    std::optional<DemonstrationLevel> level;
    std::string text;

    bool operator==(const Constraint&) const = default;
};

/// Everything Blocks 4 and 6 read about one demonstrator.
struct DemoContext {
    const ProjectModel& model;
    const WpGraph& graph;
    const AdjustedTrlMap& adjusted;
    const ComplianceReport& compliance;
    const StructureReport& structure;
    FeasibilityConfig config;
};

struct ShortfallResult {
    int shortfall = 0;
    std::vector<Mitigation> mitigations;
};

/// shortfall = max(0, target - achievable); mitigations name each limiting
/// factor (use-case availability, grades, connectivity, WP estimates).
ShortfallResult shortfall_analysis(const DemonstratorTarget& demo, TrlLevel achievable,
                                   const DemoContext& ctx);

/// Analyzed, non-island Technical WPs: the "all WPs" of levels 4 and 5.
std::set<std::string> grand_scope(const ProjectModel& model, const StructureReport& structure);

/// Level the declaration describes: coverage (single/subset/all) x qualities.
DemonstrationLevel described_level(const DemonstratorTarget& demo, const std::set<std::string>& grand);

/// Described level lowered to the highest one whose band fits the target TRL.
std::optional<DemonstrationLevel> target_level(const DemonstratorTarget& demo,
                                               const std::set<std::string>& grand,
                                               const LevelBands& bands);

struct DemonstratorAssessment {
    std::string demo_id;
    TrlLevel achievable_trl{1};
    std::optional<TrlLevel> target_trl;
    int shortfall = 0;
    /// Type of the declared coverage.
    UseCaseType declared_type = UseCaseType::Disparate;
    /// Type of the recommended scope; governs feasibility and risk.
    UseCaseType use_case_type = UseCaseType::Disparate;
    DemonstrationLevel recommended_level = DemonstrationLevel::ProofOfConcept;
    std::vector<std::string> recommended_scope;
    std::optional<DemonstrationLevel> target_level;
    RiskLevel risk = RiskLevel::Normal;
    /// Target level sits in an Impractical cell for the declared type.
    bool impractical_target = false;
    std::vector<Constraint> constraints;
    std::vector<Mitigation> mitigations;

    bool operator==(const DemonstratorAssessment&) const = default;
};

/// Highest level within feasible_levels(type) whose coverage, integration,
/// TRL band (no major gap) and extra-functional grade conditions hold, capped
/// at the target level. Falls back to connected sub-scopes of the coverage
/// when they reach a higher level. `declared_type` is nullopt when the
/// demonstrator references no use-case.
DemonstratorAssessment recommend_level(const DemonstratorTarget& demo, TrlLevel achievable,
                                       std::optional<UseCaseType> declared_type,
                                       const DemoContext& ctx);

std::string_view to_string(DemonstrationLevel);
std::string_view level_name(DemonstrationLevel);
std::string_view to_string(UseCaseType);
std::string_view to_string(RiskLevel);
std::string_view to_string(MitigationKind);
std::string_view to_string(ConstraintCode);

} // namespace demoreq
