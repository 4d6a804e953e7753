#include "demoreq/model.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "demoreq/depgraph.hpp"
#include "demoreq/errors.hpp"

namespace demoreq {

namespace {

std::string join(const std::vector<std::string>& items, std::string_view sep) {
    std::string out;
    for (const auto& item : items) {
        if (!out.empty()) out += sep;
        out += item;
    }
    return out;
}

template <class T, class Id>
auto* find_by_id(T& items, Id id) {
    auto it = std::find_if(items.begin(), items.end(), [&](const auto& x) { return x.id == id; });
    return it == items.end() ? nullptr : &*it;
}

} // namespace

IncompleteInput::IncompleteInput(std::vector<std::string> wp_ids)
    : Error("incomplete TRL data for " + join(wp_ids, ", ")), wp_ids_(std::move(wp_ids)) {}

CyclicDependency::CyclicDependency(std::vector<std::string> cycle)
    : Error("cyclic dependency: " + join(cycle, " -> ")), cycle_(std::move(cycle)) {}

ValidationFailed::ValidationFailed(std::vector<std::string> messages)
    : Error("model validation failed: " + join(messages, "; ")), messages_(std::move(messages)) {}

const WorkPackage* ProjectModel::find_wp(std::string_view id) const { return find_by_id(work_packages, id); }
WorkPackage* ProjectModel::find_wp(std::string_view id) { return find_by_id(work_packages, id); }
const UseCase* ProjectModel::find_use_case(std::string_view id) const { return find_by_id(use_cases, id); }
UseCase* ProjectModel::find_use_case(std::string_view id) { return find_by_id(use_cases, id); }
const DemonstratorTarget* ProjectModel::find_demonstrator(std::string_view id) const {
    return find_by_id(demonstrators, id);
}
DemonstratorTarget* ProjectModel::find_demonstrator(std::string_view id) {
    return find_by_id(demonstrators, id);
}

bool is_analyzed(const WorkPackage& wp) {
    if (wp.analyzed) return *wp.analyzed;
    return wp.kind == WpKind::Technical || wp.kind == WpKind::Demonstration;
}

bool is_trl_tracked(const WorkPackage& wp) {
    switch (wp.kind) {
    case WpKind::Technical: return true;
    case WpKind::Demonstration: return false;
    case WpKind::Management:
    case WpKind::Dissemination: return wp.analyzed.value_or(false);
    }
    return false;
}

bool is_valid_id(std::string_view id) {
    if (id.empty()) return false;
    return std::all_of(id.begin(), id.end(), [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
               c == '_' || c == '.' || c == '-';
    });
}

std::string dependency_subject(const WpDependency& dep) { return dep.from + "->" + dep.to; }

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::vector<Diagnostic> validate_model(const ProjectModel& model) {
    std::vector<Diagnostic> out;
    auto error = [&](DiagnosticCode code, std::string subject, std::string message) {
        out.push_back({Severity::Error, code, std::move(subject), std::move(message)});
    };
    auto advisory = [&](DiagnosticCode code, std::string subject, std::string message) {
        out.push_back({Severity::Advisory, code, std::move(subject), std::move(message)});
    };

    auto check_unique = [&](const auto& items, std::string_view what) {
        std::map<std::string, int> seen;
        for (const auto& item : items) ++seen[item.id];
        for (const auto& [id, n] : seen) {
            if (n > 1) {
                error(DiagnosticCode::DuplicateId, id,
                      std::string(what) + " id '" + id + "' declared " + std::to_string(n) + " times");
            }
        }
    };
    check_unique(model.work_packages, "work package");
    check_unique(model.use_cases, "use-case");
    check_unique(model.demonstrators, "demonstrator");

    if (model.blanket_trl_range && model.blanket_trl_range->low > model.blanket_trl_range->high) {
        error(DiagnosticCode::InvertedRange, "project.blanket_trl_range",
              "blanket TRL range (" + std::to_string(model.blanket_trl_range->low.value()) + ", " +
                  std::to_string(model.blanket_trl_range->high.value()) + ") has low > high");
    }

    for (const auto& wp : model.work_packages) {
        for (const auto& uc : wp.use_cases) {
            if (!model.find_use_case(uc)) {
                error(DiagnosticCode::UnknownReference, wp.id, "unknown use-case '" + uc + "'");
            }
        }
    }

    std::set<std::string> analyzed;
    for (const auto& wp : model.work_packages) {
        if (is_analyzed(wp)) analyzed.insert(wp.id);
    }

    std::vector<GraphEdge> propagated;
    for (const auto& dep : model.dependencies) {
        const auto subject = dependency_subject(dep);
        const auto* from = model.find_wp(dep.from);
        const auto* to = model.find_wp(dep.to);
        if (!from || !to) {
            error(DiagnosticCode::UnknownReference, subject,
                  "dependency endpoint '" + (from ? dep.to : dep.from) + "' is not a work package");
            continue;
        }
        if (dep.from == dep.to) {
            error(DiagnosticCode::SelfDependency, subject, "work package depends on itself");
            continue;
        }
        if (dep.kind == DependencyKind::Control || dep.kind == DependencyKind::Functional) {
            advisory(DiagnosticCode::UnpropagatedDependencyKind, subject,
                     std::string(to_string(dep.kind)) + " dependency recorded but not propagated");
            continue;
        }
        if (!analyzed.contains(dep.from) || !analyzed.contains(dep.to)) {
            advisory(DiagnosticCode::EdgeOutsideAnalysis, subject,
                     "dependency touches a work package excluded from TRL analysis");
            continue;
        }
        if (dep.certainty == Certainty::Uncertain) {
            advisory(DiagnosticCode::UncertainDependency, subject,
                     "uncertain dependency does not constrain propagation");
        }
        propagated.push_back({dep.from, dep.to, dep.kind, dep.certainty});
    }

    const auto graph = make_graph({analyzed.begin(), analyzed.end()}, std::move(propagated));
    for (const auto& cycle : detect_structure(graph).cycles) {
        error(DiagnosticCode::CyclicDependency, cycle.front(),
              "direct dependency cycle " + join(cycle, " -> ") + " -> " + cycle.front());
    }

    for (const auto& demo : model.demonstrators) {
        if (demo.covered_wps.empty()) {
            error(DiagnosticCode::EmptyCoverage, demo.id, "demonstrator covers no work package");
        }
        for (const auto& wp : demo.covered_wps) {
            if (!model.find_wp(wp)) {
                error(DiagnosticCode::UnknownReference, demo.id, "unknown work package '" + wp + "'");
            } else if (!analyzed.contains(wp)) {
                error(DiagnosticCode::CoverageOutsideAnalysis, demo.id,
                      "covered work package '" + wp + "' is excluded from TRL analysis");
            }
        }
        for (const auto& uc : demo.use_cases) {
            if (!model.find_use_case(uc)) {
                error(DiagnosticCode::UnknownReference, demo.id, "unknown use-case '" + uc + "'");
            }
        }
    }

    std::stable_sort(out.begin(), out.end(), [](const Diagnostic& a, const Diagnostic& b) {
        return std::tie(a.subject, a.code, a.message) < std::tie(b.subject, b.code, b.message);
    });
    return out;
}

ConsolidatedInput consolidate(const ProjectModel& model) {
    ConsolidatedInput result;
    result.model = model;

    for (auto& wp : result.model.work_packages) {
        if (!is_trl_tracked(wp)) continue;
        if (!wp.target_trl) {
            if (model.blanket_trl_range) {
                wp.target_trl = model.blanket_trl_range->low;
                result.defaults_applied.push_back(
                    {"wp." + wp.id + ".target_trl", *wp.target_trl, "project.blanket_trl_range.low"});
            } else {
                result.flags.push_back({{SubjectKind::WorkPackage, wp.id},
                                        MissingIssue::MissingTargetTrl,
                                        "no per-WP target and no blanket TRL range"});
            }
        }
        if (!wp.estimated_trl) {
            result.flags.push_back({{SubjectKind::WorkPackage, wp.id},
                                    MissingIssue::MissingEstimatedTrl,
                                    "no estimated achievable TRL in the WP planning"});
        }
    }
    for (const auto& demo : model.demonstrators) {
        if (!demo.target_trl) {
            result.flags.push_back({{SubjectKind::Demonstrator, demo.id},
                                    MissingIssue::MissingDemonstratorTrl,
                                    "demonstrator target TRL must be deduced by the planners"});
        }
    }
    for (const auto& uc : model.use_cases) {
        if (!uc.readiness) {
            result.flags.push_back({{SubjectKind::UseCase, uc.id},
                                    MissingIssue::MissingReadiness,
                                    "artifact readiness of " + uc.provider + " not assessed"});
        }
    }
    for (const auto& dep : model.dependencies) {
        if (dep.certainty == Certainty::Uncertain &&
            (dep.kind == DependencyKind::Data || dep.kind == DependencyKind::Temporal)) {
            result.flags.push_back({{SubjectKind::Dependency, dependency_subject(dep)},
                                    MissingIssue::UncertainDependency,
                                    "uncertain/undefined input"});
        }
    }

    std::sort(result.flags.begin(), result.flags.end(), [](const MissingInfo& a, const MissingInfo& b) {
        return std::tie(a.subject.id, a.issue, a.subject.kind) <
               std::tie(b.subject.id, b.issue, b.subject.kind);
    });
    std::sort(result.defaults_applied.begin(), result.defaults_applied.end(),
              [](const AppliedDefault& a, const AppliedDefault& b) { return a.field_path < b.field_path; });
    return result;
}

} // namespace demoreq
