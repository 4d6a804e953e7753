#include "demoreq/requirements.hpp"

#include <set>

namespace demoreq {

namespace {

std::string wp_label(const ProjectModel& model, const std::string& id) {
    const auto* wp = model.find_wp(id);
    return wp && !wp->name.empty() ? id + " (" + wp->name + ")" : id;
}

} // namespace

std::vector<std::string> default_extra_functional_attributes() {
    return {"performance", "latency", "throughput", "explainability", "resource efficiency"};
}

RequirementsSpec elaborate(const DemonstratorAssessment& assessment, const ProjectModel& model,
                           const WpGraph& graph, const std::vector<std::string>& extra_functional_attributes,
                           const ComplianceReport* compliance) {
    RequirementsSpec spec;
    spec.demo_id = assessment.demo_id;
    spec.level = assessment.recommended_level;
    const auto& demo_id = assessment.demo_id;
    const std::set<std::string> scope(assessment.recommended_scope.begin(), assessment.recommended_scope.end());
    auto& reqs = spec.requirements;

    for (const auto& wp : scope) {
        reqs.push_back({demo_id + "-F-" + wp, RequirementKind::Functional, wp,
                        "The demonstrator shall exhibit the functionality delivered by " + wp_label(model, wp) +
                            " at " + std::string(to_string(spec.level)) + " (" +
                            std::string(level_name(spec.level)) + ").",
                        RequirementSource::LevelTemplate});
    }

    if (level_number(spec.level) >= 2) {
        for (const auto& e : graph.edges) {
            if (e.certainty != Certainty::Direct || !scope.contains(e.from) || !scope.contains(e.to)) continue;
            const auto subject = e.from + "->" + e.to;
            reqs.push_back({demo_id + "-I-" + subject, RequirementKind::Integration, subject,
                            "The " + std::string(to_string(e.kind)) + " flow from " + wp_label(model, e.from) +
                                " to " + wp_label(model, e.to) +
                                " shall be integrated; its input/output data structures and formatting shall be "
                                "defined and agreed between both WPs before integration.",
                            RequirementSource::DependencyEdge});
        }
    }

    if (is_extra_functional(spec.level)) {
        for (std::size_t i = 0; i < extra_functional_attributes.size(); ++i) {
            reqs.push_back({demo_id + "-X-" + std::to_string(i + 1), RequirementKind::ExtraFunctional, demo_id,
                            "The demonstrator shall quantify " + extra_functional_attributes[i] +
                                " against industrial baselines or benchmarks.",
                            RequirementSource::LevelTemplate});
        }
    }

    if (const auto* demo = model.find_demonstrator(demo_id)) {
        for (const auto& uc_id : demo->use_cases) {
            bool gap = false;
            if (compliance) {
                for (const auto& row : compliance->rows) {
                    if (row.use_case_id == uc_id && !row.compliant) gap = true;
                }
            }
            const auto* uc = model.find_use_case(uc_id);
            const auto provider = uc && !uc->provider.empty() ? " provided by " + uc->provider : std::string{};
            std::string statement = "The demonstrator shall be validated on the " + uc_id + " use-case" + provider;
            statement += gap ? ", once its artifacts meet the required readiness grade." : ".";
            reqs.push_back({demo_id + "-V-" + uc_id, RequirementKind::Validation, uc_id, std::move(statement),
                            gap ? RequirementSource::ComplianceGap : RequirementSource::LevelTemplate});
        }
    }

    for (const auto& m : assessment.mitigations) {
        spec.improvement_plan.push_back({m.wps, m.text, m.unlocks.value_or(assessment.recommended_level)});
    }
    return spec;
}

} // namespace demoreq
