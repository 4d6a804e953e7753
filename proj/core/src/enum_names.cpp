#include "enum_names.hpp"

#include <array>

namespace demoreq::detail {

#define DEMOREQ_NAME_TABLE(Enum, ...)                                           \
    template <>                                                                \
    NameTable<Enum> names<Enum>() {                                            \
        static constexpr std::pair<Enum, std::string_view> table[] = {__VA_ARGS__}; \
        return table;                                                          \
    }

DEMOREQ_NAME_TABLE(WpKind,
                   {WpKind::Technical, "Technical"},
                   {WpKind::Dissemination, "Dissemination"},
                   {WpKind::Management, "Management"},
                   {WpKind::Demonstration, "Demonstration"})

DEMOREQ_NAME_TABLE(DependencyKind,
                   {DependencyKind::Data, "Data"},
                   {DependencyKind::Temporal, "Temporal"},
                   {DependencyKind::Control, "Control"},
                   {DependencyKind::Functional, "Functional"})

DEMOREQ_NAME_TABLE(Certainty,
                   {Certainty::Direct, "Direct"},
                   {Certainty::Uncertain, "Uncertain"})

DEMOREQ_NAME_TABLE(ReadinessGrade,
                   {ReadinessGrade::None, "G0"},
                   {ReadinessGrade::SampleData, "G1"},
                   {ReadinessGrade::RepresentativeData, "G2"},
                   {ReadinessGrade::IndustrialBaselines, "G3"},
                   {ReadinessGrade::Operational, "G4"})

DEMOREQ_NAME_TABLE(Qualities,
                   {Qualities::FunctionalOnly, "FunctionalOnly"},
                   {Qualities::FunctionalAndExtraFunctional, "FunctionalAndExtraFunctional"})

DEMOREQ_NAME_TABLE(Severity,
                   {Severity::Error, "error"},
                   {Severity::Advisory, "advisory"})

DEMOREQ_NAME_TABLE(DiagnosticCode,
                   {DiagnosticCode::DuplicateId, "DuplicateId"},
                   {DiagnosticCode::SelfDependency, "SelfDependency"},
                   {DiagnosticCode::InvertedRange, "InvertedRange"},
                   {DiagnosticCode::CyclicDependency, "CyclicDependency"},
                   {DiagnosticCode::EmptyCoverage, "EmptyCoverage"},
                   {DiagnosticCode::CoverageOutsideAnalysis, "CoverageOutsideAnalysis"},
                   {DiagnosticCode::UnpropagatedDependencyKind, "UnpropagatedDependencyKind"},
                   {DiagnosticCode::UncertainDependency, "UncertainDependency"},
                   {DiagnosticCode::EdgeOutsideAnalysis, "EdgeOutsideAnalysis"},
                   {DiagnosticCode::UnknownKey, "UnknownKey"},
                   {DiagnosticCode::UnknownReference, "UnknownReference"})

DEMOREQ_NAME_TABLE(SubjectKind,
                   {SubjectKind::WorkPackage, "wp"},
                   {SubjectKind::Demonstrator, "demo"},
                   {SubjectKind::UseCase, "use_case"},
                   {SubjectKind::Dependency, "dependency"},
                   {SubjectKind::Field, "field"})

DEMOREQ_NAME_TABLE(MissingIssue,
                   {MissingIssue::MissingTargetTrl, "MissingTargetTrl"},
                   {MissingIssue::MissingEstimatedTrl, "MissingEstimatedTrl"},
                   {MissingIssue::MissingReadiness, "MissingReadiness"},
                   {MissingIssue::MissingDemonstratorTrl, "MissingDemonstratorTrl"},
                   {MissingIssue::UncertainDependency, "UncertainDependency"})

DEMOREQ_NAME_TABLE(GapCategory,
                   {GapCategory::OnTrack, "OnTrack"},
                   {GapCategory::MinorGap, "MinorGap"},
                   {GapCategory::MajorGap, "MajorGap"})

DEMOREQ_NAME_TABLE(ComplianceFailure,
                   {ComplianceFailure::None, "None"},
                   {ComplianceFailure::Availability, "Availability"},
                   {ComplianceFailure::GradeUnknown, "GradeUnknown"},
                   {ComplianceFailure::GradeInsufficient, "GradeInsufficient"})

DEMOREQ_NAME_TABLE(DemonstrationLevel,
                   {DemonstrationLevel::ProofOfConcept, "L1"},
                   {DemonstrationLevel::ProofOfIntegration, "L2"},
                   {DemonstrationLevel::OptimisedProofOfIntegration, "L3"},
                   {DemonstrationLevel::GrandProofOfIntegration, "L4"},
                   {DemonstrationLevel::OptimisedGrandProofOfIntegration, "L5"})

DEMOREQ_NAME_TABLE(UseCaseType,
                   {UseCaseType::Unified, "Unified"},
                   {UseCaseType::CoordinatedMulti, "CoordinatedMulti"},
                   {UseCaseType::Disparate, "Disparate"})

DEMOREQ_NAME_TABLE(RiskLevel,
                   {RiskLevel::Normal, "Normal"},
                   {RiskLevel::Moderate, "Moderate"},
                   {RiskLevel::High, "High"},
                   {RiskLevel::Impractical, "Impractical"})

DEMOREQ_NAME_TABLE(MitigationKind,
                   {MitigationKind::AssociateUseCase, "AssociateUseCase"},
                   {MitigationKind::ReferenceUseCase, "ReferenceUseCase"},
                   {MitigationKind::RaiseGrade, "RaiseGrade"},
                   {MitigationKind::AddCoverage, "AddCoverage"},
                   {MitigationKind::DefineDependency, "DefineDependency"},
                   {MitigationKind::RaiseWpTrl, "RaiseWpTrl"})

DEMOREQ_NAME_TABLE(ConstraintCode,
                   {ConstraintCode::TargetTrlShortfall, "TargetTrlShortfall"},
                   {ConstraintCode::NoUseCase, "NoUseCase"},
                   {ConstraintCode::UseCaseTypeInfeasible, "UseCaseTypeInfeasible"},
                   {ConstraintCode::NoUnifiedUseCase, "NoUnifiedUseCase"},
                   {ConstraintCode::UseCaseAvailability, "UseCaseAvailability"},
                   {ConstraintCode::NotConnected, "NotConnected"},
                   {ConstraintCode::CoverageIncomplete, "CoverageIncomplete"},
                   {ConstraintCode::TrlBandShortfall, "TrlBandShortfall"},
                   {ConstraintCode::ExtraFunctionalConditional, "ExtraFunctionalConditional"},
                   {ConstraintCode::GradeInsufficient, "GradeInsufficient"},
                   {ConstraintCode::ReducedScope, "ReducedScope"})

DEMOREQ_NAME_TABLE(RequirementKind,
                   {RequirementKind::Functional, "Functional"},
                   {RequirementKind::ExtraFunctional, "ExtraFunctional"},
                   {RequirementKind::Integration, "Integration"},
                   {RequirementKind::Validation, "Validation"})

DEMOREQ_NAME_TABLE(RequirementSource,
                   {RequirementSource::LevelTemplate, "LevelTemplate"},
                   {RequirementSource::ComplianceGap, "ComplianceGap"},
                   {RequirementSource::DependencyEdge, "DependencyEdge"})

DEMOREQ_NAME_TABLE(OverrideOp,
                   {OverrideOp::Set, "="},
                   {OverrideOp::Add, "+="},
                   {OverrideOp::Remove, "-="})

#undef DEMOREQ_NAME_TABLE

} // namespace demoreq::detail

namespace demoreq {

using detail::enum_name;
using detail::enum_parse;

std::string_view to_string(WpKind v) { return enum_name(v); }
std::string_view to_string(DependencyKind v) { return enum_name(v); }
std::string_view to_string(Certainty v) { return enum_name(v); }
std::string_view to_string(ReadinessGrade v) { return enum_name(v); }
std::string_view to_string(Qualities v) { return enum_name(v); }
std::string_view to_string(Severity v) { return enum_name(v); }
std::string_view to_string(DiagnosticCode v) { return enum_name(v); }
std::string_view to_string(SubjectKind v) { return enum_name(v); }
std::string_view to_string(MissingIssue v) { return enum_name(v); }
std::string_view to_string(GapCategory v) { return enum_name(v); }
std::string_view to_string(ComplianceFailure v) { return enum_name(v); }
std::string_view to_string(DemonstrationLevel v) { return enum_name(v); }
std::string_view to_string(UseCaseType v) { return enum_name(v); }
std::string_view to_string(RiskLevel v) { return enum_name(v); }
std::string_view to_string(MitigationKind v) { return enum_name(v); }
std::string_view to_string(ConstraintCode v) { return enum_name(v); }
std::string_view to_string(RequirementKind v) { return enum_name(v); }
std::string_view to_string(RequirementSource v) { return enum_name(v); }
std::string_view to_string(OverrideOp v) { return enum_name(v); }

std::optional<WpKind> parse_wp_kind(std::string_view s) { return enum_parse<WpKind>(s); }
std::optional<DependencyKind> parse_dependency_kind(std::string_view s) {
    return enum_parse<DependencyKind>(s);
}
std::optional<Certainty> parse_certainty(std::string_view s) { return enum_parse<Certainty>(s); }
std::optional<ReadinessGrade> parse_grade(std::string_view s) { return enum_parse<ReadinessGrade>(s); }
std::optional<Qualities> parse_qualities(std::string_view s) { return enum_parse<Qualities>(s); }

std::string_view level_name(DemonstrationLevel level) {
    switch (level) {
    case DemonstrationLevel::ProofOfConcept: return "Proof of concept";
    case DemonstrationLevel::ProofOfIntegration: return "Proof of integration";
    case DemonstrationLevel::OptimisedProofOfIntegration: return "Optimised proof of integration";
    case DemonstrationLevel::GrandProofOfIntegration: return "Grand proof of integration";
    case DemonstrationLevel::OptimisedGrandProofOfIntegration:
        return "Optimised grand proof of integration";
    }
    return "?";
}

} // namespace demoreq
