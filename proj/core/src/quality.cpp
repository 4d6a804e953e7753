#include "demoreq/quality.hpp"

#include <algorithm>
#include <iterator>

namespace demoreq {

namespace {

std::string grade_text(ReadinessGrade g) { return std::string(to_string(g)); }

std::string list(const std::set<std::string>& items) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += ", ";
        out += s;
    }
    return out;
}

} // namespace

QualityThreshold thresholds_for(TrlLevel trl, const GradeCapTable& table) {
    for (int g = 0; g < kGradeCount; ++g) {
        const auto grade = static_cast<ReadinessGrade>(g);
        if (table.cap(grade) >= trl) return {trl, grade};
    }
    return {trl, ReadinessGrade::Operational};
}

ComplianceReport assess_compliance(const ConsolidatedInput& input, const DemonstratorTarget& demo,
                                   TrlLevel target_trl, const GradeCapTable& table) {
    ComplianceReport report;
    report.demo_id = demo.id;
    report.target_trl = target_trl;
    const auto required = thresholds_for(target_trl, table).required_grade;
    const auto graph = build_graph(input);

    std::set<std::string> non_compliant;
    for (const auto& wp_id : demo.covered_wps) {
        const auto* wp = input.model.find_wp(wp_id);
        if (!wp) continue;
        std::set<std::string> shared;
        std::set_intersection(wp->use_cases.begin(), wp->use_cases.end(), demo.use_cases.begin(),
                              demo.use_cases.end(), std::inserter(shared, shared.end()));
        if (shared.empty()) {
            report.rows.push_back({wp_id, std::nullopt, required, std::nullopt, false,
                                   ComplianceFailure::Availability});
            non_compliant.insert(wp_id);
            if (demo.use_cases.empty()) {
                report.corrective_actions.push_back("reference a use-case associated with " + wp_id +
                                                    " in demonstrator " + demo.id);
            } else {
                report.corrective_actions.push_back("associate " + list(demo.use_cases) +
                                                    " use-case with " + wp_id);
            }
            continue;
        }
        for (const auto& uc_id : shared) {
            const auto* uc = input.model.find_use_case(uc_id);
            ComplianceRow row{wp_id, uc_id, required, uc ? uc->readiness : std::nullopt, false,
                              ComplianceFailure::None};
            if (!row.actual) {
                row.failure = ComplianceFailure::GradeUnknown;
                report.corrective_actions.push_back("assess artifact readiness of " + uc_id + " for " +
                                                    wp_id + " (" + grade_text(required) + " required)");
            } else if (*row.actual < required) {
                row.failure = ComplianceFailure::GradeInsufficient;
                report.corrective_actions.push_back("raise " + uc_id + " artifacts for " + wp_id + " from " +
                                                    grade_text(*row.actual) + " to " + grade_text(required));
            } else {
                row.compliant = true;
            }
            if (!row.compliant) non_compliant.insert(wp_id);
            report.rows.push_back(std::move(row));
        }
    }
    report.affects_dependencies = std::any_of(non_compliant.begin(), non_compliant.end(),
                                              [&](const std::string& id) {
                                                  return !graph.direct_downstream(id).empty();
                                              });
    return report;
}

std::map<std::string, TrlLevel> caps_from_compliance(const ComplianceReport& report,
                                                     const GradeCapTable& table,
                                                     TrlLevel availability_cap) {
    struct Status {
        bool compliant = false;
        bool unavailable = false;
        std::optional<ReadinessGrade> best_known;
    };
    std::map<std::string, Status> per_wp;
    for (const auto& row : report.rows) {
        auto& s = per_wp[row.wp_id];
        if (row.compliant) s.compliant = true;
        if (row.failure == ComplianceFailure::Availability) s.unavailable = true;
        if (row.actual && (!s.best_known || *row.actual > *s.best_known)) s.best_known = row.actual;
    }
    std::map<std::string, TrlLevel> caps;
    for (const auto& [wp, s] : per_wp) {
        if (s.compliant) continue;
        if (s.unavailable) {
            caps.emplace(wp, availability_cap);
        } else if (s.best_known) {
            caps.emplace(wp, table.cap(*s.best_known));
        }
    }
    return caps;
}

} // namespace demoreq
