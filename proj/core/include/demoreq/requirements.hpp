#pragma once

// Demonstrator requirements specification and WP improvement plan.

#include <string>
#include <vector>

#include "demoreq/depgraph.hpp"
#include "demoreq/feasibility.hpp"
#include "demoreq/model.hpp"

namespace demoreq {

enum class RequirementKind { Functional, ExtraFunctional, Integration, Validation };
enum class RequirementSource { LevelTemplate, ComplianceGap, DependencyEdge };

struct Requirement {
    std::string id;
    RequirementKind kind = RequirementKind::Functional;
    /// WP id, demonstrator id, or "FROM->TO" for an edge.
    std::string subject;
    std::string statement;
    RequirementSource source = RequirementSource::LevelTemplate;

    bool operator==(const Requirement&) const = default;
};

struct ImprovementAction {
    std::vector<std::string> wp_ids;
    std::string action;
    DemonstrationLevel unlocks = DemonstrationLevel::ProofOfConcept;

    bool operator==(const ImprovementAction&) const = default;
};

struct RequirementsSpec {
    std::string demo_id;
    DemonstrationLevel level = DemonstrationLevel::ProofOfConcept;
    std::vector<Requirement> requirements;
    std::vector<ImprovementAction> improvement_plan;

    bool operator==(const RequirementsSpec&) const = default;
};

std::vector<std::string> default_extra_functional_attributes();

/// Functional per scope WP, Integration per Direct edge inside the scope
/// (levels >= 2), ExtraFunctional per quality attribute (levels 3 and 5),
/// Validation per referenced use-case; one plan entry per mitigation.
/// `compliance` marks use-cases whose artifacts fall short.
RequirementsSpec elaborate(const DemonstratorAssessment& assessment, const ProjectModel& model,
                           const WpGraph& graph,
                           const std::vector<std::string>& extra_functional_attributes =
                               default_extra_functional_attributes(),
                           const ComplianceReport* compliance = nullptr);

std::string_view to_string(RequirementKind);
std::string_view to_string(RequirementSource);

} // namespace demoreq
