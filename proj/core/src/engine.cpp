#include "demoreq/engine.hpp"

#include <algorithm>
#include <tuple>

#include <json.hpp>

#include "demoreq/errors.hpp"
#include "json_util.hpp"

namespace demoreq {

namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += ", ";
        out += s;
    }
    return out;
}

template <class T>
const T* find_demo(const std::vector<T>& items, std::string_view id) {
    auto it = std::find_if(items.begin(), items.end(), [&](const T& x) { return x.demo_id == id; });
    return it == items.end() ? nullptr : &*it;
}

ProjectModel apply_mitigation(ProjectModel model, const std::string& demo_id, const Mitigation& m) {
    auto* demo = model.find_demonstrator(demo_id);
    switch (m.kind) {
    case MitigationKind::AssociateUseCase:
        if (!m.use_case) throw OverrideError("no use-case to associate");
        for (const auto& id : m.wps) {
            if (auto* wp = model.find_wp(id)) wp->use_cases.insert(*m.use_case);
        }
        if (demo) demo->use_cases.insert(*m.use_case);
        break;
    case MitigationKind::ReferenceUseCase:
        if (demo && m.use_case) demo->use_cases.insert(*m.use_case);
        break;
    case MitigationKind::RaiseGrade:
        if (auto* uc = m.use_case ? model.find_use_case(*m.use_case) : nullptr) {
            if (!uc->readiness || *uc->readiness < *m.grade) uc->readiness = m.grade;
        }
        break;
    case MitigationKind::AddCoverage:
        if (demo) demo->covered_wps.insert(m.wps.begin(), m.wps.end());
        break;
    case MitigationKind::DefineDependency:
        model.dependencies.push_back({m.wps.front(), m.wps.back(), DependencyKind::Data, Certainty::Direct});
        break;
    case MitigationKind::RaiseWpTrl:
        for (const auto& id : m.wps) {
            auto* wp = model.find_wp(id);
            if (wp && (!wp->estimated_trl || *wp->estimated_trl < *m.trl)) wp->estimated_trl = m.trl;
        }
        break;
    }
    return model;
}

std::map<std::string, TrlLevel> merge_caps(std::map<std::string, TrlLevel> base,
                                           const std::map<std::string, TrlLevel>& extra) {
    for (const auto& [wp, cap] : extra) {
        auto [it, inserted] = base.emplace(wp, cap);
        if (!inserted) it->second = std::min(it->second, cap);
    }
    return base;
}

AnalysisReport run_pipeline(const ProjectModel& model, const EngineConfig& config,
                            std::span<const Override> overrides, bool with_unlocks) {
    const auto diagnostics = validate_model(model);
    if (has_errors(diagnostics)) {
        std::vector<std::string> messages;
        for (const auto& d : diagnostics) {
            if (d.severity == Severity::Error) messages.push_back(d.subject + ": " + d.message);
        }
        throw ValidationFailed(std::move(messages));
    }

    AnalysisReport report;
    report.project = model.name;
    report.overrides.assign(overrides.begin(), overrides.end());
    report.config_used = config;
    const auto feas = config.feasibility();

    // Block 1
    const auto input = consolidate(model);
    report.consolidated.flags = input.flags;
    report.consolidated.defaults_applied = input.defaults_applied;
    for (const auto& d : diagnostics) {
        if (d.severity == Severity::Advisory) report.consolidated.advisories.push_back(d);
    }
    const auto& m = input.model;

    // Block 2
    report.gaps = partial_gap_table(input, config.gap_thresholds, report.incomplete_wps);
    report.demo_gaps = demo_gap_table(input, config.gap_thresholds);

    // Block 3
    const auto graph = build_graph(input);
    report.structure = detect_structure(graph);
    std::map<std::string, TrlLevel> estimates;
    std::map<std::string, TrlLevel> global_caps;
    std::set<std::string> estimated;
    for (const auto& id : graph.nodes) {
        const auto* wp = m.find_wp(id);
        if (!wp->estimated_trl) continue;
        estimated.insert(id);
        estimates.emplace(id, *wp->estimated_trl);
        if (auto cap = quality_cap(*wp, m.use_cases, config.grade_caps)) global_caps.emplace(id, *cap);
    }
    const auto est_graph = induced_subgraph(graph, estimated);
    report.adjusted = propagate(est_graph, estimates, global_caps);
    report.structure.bottlenecks = bottlenecks(est_graph, report.adjusted);
    const auto grand = grand_scope(m, report.structure);

    // Block 4 feedback on incomplete data
    const std::set<std::string> incomplete(report.incomplete_wps.begin(), report.incomplete_wps.end());
    for (const auto& demo : m.demonstrators) {
        if (!demo.target_trl) {
            report.feedback.push_back({4, 1, "demonstrator target TRL missing; deduce it from the proposal", 1,
                                       demo.id, false});
        }
        std::vector<std::string> missing;
        for (const auto& wp : demo.covered_wps) {
            if (incomplete.contains(wp) || !report.adjusted.find(wp)) missing.push_back(wp);
        }
        if (!missing.empty()) {
            report.feedback.push_back({4, 2, "incomplete TRL data for covered " + join(missing), 1, demo.id, false});
        }
    }

    // Blocks 3-5 with feedback re-runs
    std::map<std::string, std::map<std::string, TrlLevel>> applied;
    std::map<std::string, ComplianceReport> compliance;
    report.passes = 1;
    while (true) {
        bool rerun = false;
        for (const auto& demo : m.demonstrators) {
            const auto target = demo.target_trl.value_or(feas.bands.band(described_level(demo, grand)));
            auto cr = assess_compliance(input, demo, target, config.grade_caps);
            auto caps = caps_from_compliance(cr, config.grade_caps, config.availability_cap);
            auto& have = applied[demo.id];
            std::vector<std::string> fresh;
            for (const auto& [wp, cap] : caps) {
                auto it = have.find(wp);
                if (it == have.end() || cap < it->second) fresh.push_back(wp);
            }
            if (!fresh.empty()) {
                have = merge_caps(have, caps);
                rerun = true;
                report.feedback.push_back({5, 3,
                                           "artifact quality gaps cap " + join(fresh) +
                                               (cr.affects_dependencies ? " and affect dependencies" : ""),
                                           report.passes, demo.id, true});
            } else if (cr.affects_dependencies && report.passes == 1) {
                report.feedback.push_back({5, 3, "artifact quality gaps on WPs with dependents; no cap derivable",
                                           report.passes, demo.id, false});
            }
            compliance[demo.id] = std::move(cr);
        }
        if (!rerun) break;
        if (report.passes >= config.max_feedback_iterations) {
            throw IterationLimitExceeded(config.max_feedback_iterations);
        }
        ++report.passes;
    }

    // Blocks 4, 6, 7 per demonstrator
    for (const auto& demo : m.demonstrators) {
        DemoPropagation dp;
        dp.demo_id = demo.id;
        dp.caps_applied = applied[demo.id];
        dp.adjusted = dp.caps_applied.empty()
                          ? report.adjusted
                          : propagate(est_graph, estimates, merge_caps(global_caps, dp.caps_applied));
        dp.bottlenecks = bottlenecks(est_graph, dp.adjusted);

        std::set<std::string> known;
        for (const auto& wp : demo.covered_wps) {
            if (dp.adjusted.find(wp)) known.insert(wp);
        }
        const auto achievable = achievable_scope_trl(known, dp.adjusted, graph, config.standalone_cap);
        const auto& cr = compliance.at(demo.id);
        std::optional<UseCaseType> declared;
        if (!demo.use_cases.empty()) declared = classify_use_case_type(demo, m);

        const DemoContext ctx{m, graph, dp.adjusted, cr, report.structure, feas};
        auto assessment = recommend_level(demo, achievable, declared, ctx);
        if (assessment.target_level && assessment.recommended_level < *assessment.target_level) {
            report.feedback.push_back({6, 3,
                                       std::string(to_string(assessment.recommended_level)) + " recommended below " +
                                           std::string(to_string(*assessment.target_level)) +
                                           "; explore TRL upgrades",
                                       report.passes, demo.id, false});
        }
        if (with_unlocks) {
            for (auto& mitigation : assessment.mitigations) {
                try {
                    const auto after = run_pipeline(apply_mitigation(m, demo.id, mitigation), config, {}, false);
                    mitigation.unlocks = after.assessment(demo.id)->recommended_level;
                } catch (const Error&) {
                    mitigation.unlocks = assessment.recommended_level;
                }
            }
        }
        report.specs.push_back(elaborate(assessment, m, graph, config.extra_functional_attributes, &cr));
        report.assessments.push_back(std::move(assessment));
        report.compliance.push_back(cr);
        report.demo_adjusted.push_back(std::move(dp));
    }

    std::stable_sort(report.feedback.begin(), report.feedback.end(),
                     [](const FeedbackEvent& a, const FeedbackEvent& b) {
                         return std::tie(a.iteration, a.from_block, a.to_block, a.demo_id) <
                                std::tie(b.iteration, b.from_block, b.to_block, b.demo_id);
                     });
    return report;
}

json grades_to_json(const GradeCapTable& t) {
    json j = json::object();
    for (int g = 0; g < kGradeCount; ++g) {
        j[std::string(to_string(static_cast<ReadinessGrade>(g)))] = t.caps[static_cast<std::size_t>(g)].value();
    }
    return j;
}

json bands_to_json(const LevelBands& b) {
    json j = json::object();
    for (auto level : kAllLevels) j[std::string(to_string(level))] = b.band(level).value();
    return j;
}

} // namespace

FeasibilityConfig EngineConfig::feasibility() const {
    return {level_bands, gap_thresholds, grade_caps, standalone_cap, extra_functional_grade};
}

void validate_config(const EngineConfig& config) {
    if (!config.grade_caps.monotone()) throw SchemaError("grade_caps", "caps must not decrease with grade");
    if (!config.level_bands.monotone()) throw SchemaError("level_bands", "bands must not decrease with level");
    if (config.max_feedback_iterations < 1) throw SchemaError("max_feedback_iterations", "must be at least 1");
    if (config.gap_thresholds.minor < 1 || config.gap_thresholds.major < config.gap_thresholds.minor) {
        throw SchemaError("gap_thresholds", "need 1 <= minor <= major");
    }
}

EngineConfig parse_config(std::string_view source) {
    const auto root = detail::parse_json(source);
    if (!root.is_object()) throw SchemaError("$", "expected an object at top level");
    detail::JsonReader r{false, nullptr};
    r.check_keys(root, "",
                 {"gap_thresholds", "grade_caps", "level_bands", "availability_cap", "standalone_cap",
                  "extra_functional_grade", "max_feedback_iterations", "strict_schema", "extra_functional_attributes"});
    EngineConfig c;
    if (root.contains("gap_thresholds")) {
        const auto& g = root.at("gap_thresholds");
        if (!g.is_object()) throw SchemaError("gap_thresholds", "expected an object");
        r.check_keys(g, "gap_thresholds", {"minor", "major"});
        if (g.contains("minor")) c.gap_thresholds.minor = r.integer(g, "gap_thresholds", "minor");
        if (g.contains("major")) c.gap_thresholds.major = r.integer(g, "gap_thresholds", "major");
    }
    if (root.contains("grade_caps")) {
        const auto& g = root.at("grade_caps");
        if (!g.is_object()) throw SchemaError("grade_caps", "expected an object");
        r.check_keys(g, "grade_caps", {"G0", "G1", "G2", "G3", "G4"});
        for (int i = 0; i < kGradeCount; ++i) {
            const auto key = std::string(to_string(static_cast<ReadinessGrade>(i)));
            if (g.contains(key)) c.grade_caps.caps[static_cast<std::size_t>(i)] = r.trl(g, "grade_caps", key);
        }
    }
    if (root.contains("level_bands")) {
        const auto& b = root.at("level_bands");
        if (!b.is_object()) throw SchemaError("level_bands", "expected an object");
        r.check_keys(b, "level_bands", {"L1", "L2", "L3", "L4", "L5"});
        for (auto level : kAllLevels) {
            const auto key = std::string(to_string(level));
            if (b.contains(key)) {
                c.level_bands.min_trl[static_cast<std::size_t>(level_number(level) - 1)] = r.trl(b, "level_bands", key);
            }
        }
    }
    if (root.contains("availability_cap")) c.availability_cap = r.trl(root, "", "availability_cap");
    if (root.contains("standalone_cap")) c.standalone_cap = r.trl(root, "", "standalone_cap");
    if (root.contains("extra_functional_grade")) {
        c.extra_functional_grade = r.enumerated(root, "", "extra_functional_grade", parse_grade);
    }
    if (root.contains("max_feedback_iterations")) {
        c.max_feedback_iterations = r.integer(root, "", "max_feedback_iterations");
    }
    if (root.contains("strict_schema")) c.strict_schema = r.boolean(root, "", "strict_schema");
    if (root.contains("extra_functional_attributes")) {
        c.extra_functional_attributes = r.strings(root, "", "extra_functional_attributes", true);
    }
    validate_config(c);
    return c;
}

std::string serialize_config(const EngineConfig& c) {
    json j;
    j["gap_thresholds"] = {{"minor", c.gap_thresholds.minor}, {"major", c.gap_thresholds.major}};
    j["grade_caps"] = grades_to_json(c.grade_caps);
    j["level_bands"] = bands_to_json(c.level_bands);
    j["availability_cap"] = c.availability_cap.value();
    j["standalone_cap"] = c.standalone_cap.value();
    j["extra_functional_grade"] = std::string(to_string(c.extra_functional_grade));
    j["max_feedback_iterations"] = c.max_feedback_iterations;
    j["strict_schema"] = c.strict_schema;
    j["extra_functional_attributes"] = c.extra_functional_attributes;
    return j.dump(2) + "\n";
}

bool is_allowed_route(int from_block, int to_block) {
    return (from_block == 4 && (to_block == 1 || to_block == 2)) ||
           ((from_block == 5 || from_block == 6) && to_block == 3);
}

const DemonstratorAssessment* AnalysisReport::assessment(std::string_view demo_id) const {
    return find_demo(assessments, demo_id);
}

const ComplianceReport* AnalysisReport::compliance_for(std::string_view demo_id) const {
    return find_demo(compliance, demo_id);
}

const RequirementsSpec* AnalysisReport::spec(std::string_view demo_id) const {
    return find_demo(specs, demo_id);
}

AnalysisReport run(const ProjectModel& model, const EngineConfig& config, std::span<const Override> overrides) {
    validate_config(config);
    return run_pipeline(apply_overrides(model, overrides), config, overrides, true);
}

bool targets_unmet(const AnalysisReport& report) {
    return std::any_of(report.assessments.begin(), report.assessments.end(),
                       [](const DemonstratorAssessment& a) { return a.shortfall > 0 || a.impractical_target; });
}

ReportDiff diff_reports(const AnalysisReport& a, const AnalysisReport& b) {
    if (a.project != b.project) throw ProjectMismatch(a.project, b.project);
    ReportDiff d;

    std::set<std::string> wps;
    for (const auto& [id, e] : a.adjusted.entries) wps.insert(id);
    for (const auto& [id, e] : b.adjusted.entries) wps.insert(id);
    for (const auto& id : wps) {
        const auto* x = a.adjusted.find(id);
        const auto* y = b.adjusted.find(id);
        std::optional<TrlLevel> before = x ? std::optional(x->adjusted) : std::nullopt;
        std::optional<TrlLevel> after = y ? std::optional(y->adjusted) : std::nullopt;
        if (before != after) d.adjusted.push_back({id, before, after});
    }

    std::set<std::string> demos;
    for (const auto& s : a.assessments) demos.insert(s.demo_id);
    for (const auto& s : b.assessments) demos.insert(s.demo_id);
    for (const auto& id : demos) {
        const auto* x = a.assessment(id);
        const auto* y = b.assessment(id);
        std::optional<TrlLevel> ta = x ? std::optional(x->achievable_trl) : std::nullopt;
        std::optional<TrlLevel> tb = y ? std::optional(y->achievable_trl) : std::nullopt;
        if (ta != tb) d.achievable.push_back({id, ta, tb});
        std::optional<DemonstrationLevel> la = x ? std::optional(x->recommended_level) : std::nullopt;
        std::optional<DemonstrationLevel> lb = y ? std::optional(y->recommended_level) : std::nullopt;
        if (la != lb) d.recommendations.push_back({id, la, lb});
        const std::vector<Constraint> none;
        const auto& ca = x ? x->constraints : none;
        const auto& cb = y ? y->constraints : none;
        for (const auto& c : ca) {
            if (std::find(cb.begin(), cb.end(), c) == cb.end()) d.constraints.push_back({id, false, c});
        }
        for (const auto& c : cb) {
            if (std::find(ca.begin(), ca.end(), c) == ca.end()) d.constraints.push_back({id, true, c});
        }
    }
    return d;
}

} // namespace demoreq
