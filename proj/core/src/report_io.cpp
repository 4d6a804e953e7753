#include <json.hpp>

#include "demoreq/errors.hpp"
#include "demoreq/render.hpp"
#include "enum_names.hpp"
#include "json_util.hpp"

namespace demoreq {

namespace {

using nlohmann::json;

template <class E>
json en(E e) {
    return std::string(detail::enum_name(e));
}

template <class E>
E de(const json& j) {
    const auto text = j.get<std::string>();
    auto v = detail::enum_parse<E>(text);
    if (!v) throw SchemaError("report", "unrecognised enum value '" + text + "'");
    return *v;
}

json trl(TrlLevel t) { return t.value(); }

TrlLevel trl(const json& j) {
    auto t = TrlLevel::from_int(j.get<int>());
    if (!t) throw SchemaError("report", "TRL out of range");
    return *t;
}

template <class T, class F>
json opt(const std::optional<T>& v, F f) {
    return v ? f(*v) : json(nullptr);
}

template <class T, class F>
std::optional<T> opt_in(const json& j, F f) {
    if (j.is_null()) return std::nullopt;
    return f(j);
}

template <class T, class F>
json arr(const std::vector<T>& items, F f) {
    json out = json::array();
    for (const auto& x : items) out.push_back(f(x));
    return out;
}

template <class T, class F>
std::vector<T> arr_in(const json& j, F f) {
    std::vector<T> out;
    for (const auto& x : j) out.push_back(f(x));
    return out;
}

json str(const std::string& s) { return s; }
std::string str_in(const json& j) { return j.get<std::string>(); }
json lvl(DemonstrationLevel l) { return en(l); }
DemonstrationLevel lvl_in(const json& j) { return de<DemonstrationLevel>(j); }

// --- writers ---

json w_override(const Override& o) {
    return {{"target", o.target}, {"id", o.id}, {"field", o.field}, {"op", en(o.op)}, {"value", o.value}};
}

json w_diagnostic(const Diagnostic& d) {
    return {{"severity", en(d.severity)}, {"code", en(d.code)}, {"subject", d.subject}, {"message", d.message}};
}

json w_adjusted(const AdjustedTrlMap& m) {
    json entries = json::object();
    for (const auto& [id, e] : m.entries) {
        entries[id] = {{"own_estimate", trl(e.own_estimate)},
                       {"quality_cap", opt(e.quality_cap, [](TrlLevel t) { return trl(t); })},
                       {"adjusted", trl(e.adjusted)},
                       {"limiting_upstream", opt(e.limiting_upstream, str)}};
    }
    return {{"entries", entries}, {"advisories", m.advisories}};
}

json w_bottleneck(const Bottleneck& b) { return {{"wp_id", b.wp_id}, {"blocked_downstream", b.blocked_downstream}}; }

json w_constraint(const Constraint& c) {
    return {{"code", en(c.code)}, {"level", opt(c.level, lvl)}, {"text", c.text}};
}

json w_mitigation(const Mitigation& m) {
    return {{"kind", en(m.kind)},
            {"use_case", opt(m.use_case, str)},
            {"wps", m.wps},
            {"grade", opt(m.grade, [](ReadinessGrade g) { return en(g); })},
            {"trl", opt(m.trl, [](TrlLevel t) { return trl(t); })},
            {"text", m.text},
            {"unlocks", opt(m.unlocks, lvl)}};
}

json w_config(const EngineConfig& c) { return json::parse(serialize_config(c)); }

json write(const AnalysisReport& r) {
    json j;
    j["report_version"] = r.report_version;
    j["project"] = r.project;
    j["overrides"] = arr(r.overrides, w_override);
    j["consolidated"] = {
        {"flags", arr(r.consolidated.flags,
                      [](const MissingInfo& f) {
                          return json{{"subject", {{"kind", en(f.subject.kind)}, {"id", f.subject.id}}},
                                      {"issue", en(f.issue)},
                                      {"note", f.note}};
                      })},
        {"defaults_applied", arr(r.consolidated.defaults_applied,
                                 [](const AppliedDefault& d) {
                                     return json{{"field_path", d.field_path},
                                                 {"value", trl(d.value)},
                                                 {"provenance", d.provenance}};
                                 })},
        {"advisories", arr(r.consolidated.advisories, w_diagnostic)}};
    j["gaps"] = arr(r.gaps, [](const WpGap& g) {
        return json{{"wp_id", g.wp_id}, {"target", trl(g.target)}, {"estimated", trl(g.estimated)},
                    {"gap", g.gap}, {"category", en(g.category)}};
    });
    j["incomplete_wps"] = r.incomplete_wps;
    j["demo_gaps"] = arr(r.demo_gaps, [](const DemoGap& g) {
        return json{{"demo_id", g.demo_id}, {"target", trl(g.target)}, {"per_wp_level", trl(g.per_wp_level)},
                    {"gap", g.gap}, {"category", en(g.category)}};
    });
    j["adjusted"] = w_adjusted(r.adjusted);
    j["structure"] = {{"islands", r.structure.islands},
                      {"bottlenecks", arr(r.structure.bottlenecks, w_bottleneck)},
                      {"cycles", r.structure.cycles}};
    j["demo_adjusted"] = arr(r.demo_adjusted, [](const DemoPropagation& p) {
        json caps = json::object();
        for (const auto& [wp, cap] : p.caps_applied) caps[wp] = trl(cap);
        return json{{"demo_id", p.demo_id},
                    {"caps_applied", caps},
                    {"adjusted", w_adjusted(p.adjusted)},
                    {"bottlenecks", arr(p.bottlenecks, w_bottleneck)}};
    });
    j["compliance"] = arr(r.compliance, [](const ComplianceReport& c) {
        return json{{"demo_id", c.demo_id},
                    {"target_trl", trl(c.target_trl)},
                    {"rows", arr(c.rows,
                                 [](const ComplianceRow& row) {
                                     return json{{"wp_id", row.wp_id},
                                                 {"use_case_id", opt(row.use_case_id, str)},
                                                 {"required", en(row.required)},
                                                 {"actual", opt(row.actual, [](ReadinessGrade g) { return en(g); })},
                                                 {"compliant", row.compliant},
                                                 {"failure", en(row.failure)}};
                                 })},
                    {"corrective_actions", c.corrective_actions},
                    {"affects_dependencies", c.affects_dependencies}};
    });
    j["assessments"] = arr(r.assessments, [](const DemonstratorAssessment& a) {
        return json{{"demo_id", a.demo_id},
                    {"achievable_trl", trl(a.achievable_trl)},
                    {"target_trl", opt(a.target_trl, [](TrlLevel t) { return trl(t); })},
                    {"shortfall", a.shortfall},
                    {"declared_type", en(a.declared_type)},
                    {"use_case_type", en(a.use_case_type)},
                    {"recommended_level", lvl(a.recommended_level)},
                    {"recommended_scope", a.recommended_scope},
                    {"target_level", opt(a.target_level, lvl)},
                    {"risk", en(a.risk)},
                    {"impractical_target", a.impractical_target},
                    {"constraints", arr(a.constraints, w_constraint)},
                    {"mitigations", arr(a.mitigations, w_mitigation)}};
    });
    j["specs"] = arr(r.specs, [](const RequirementsSpec& s) {
        return json{{"demo_id", s.demo_id},
                    {"level", lvl(s.level)},
                    {"requirements", arr(s.requirements,
                                         [](const Requirement& q) {
                                             return json{{"id", q.id},
                                                         {"kind", en(q.kind)},
                                                         {"subject", q.subject},
                                                         {"statement", q.statement},
                                                         {"source", en(q.source)}};
                                         })},
                    {"improvement_plan", arr(s.improvement_plan, [](const ImprovementAction& p) {
                         return json{{"wp_ids", p.wp_ids}, {"action", p.action}, {"unlocks", lvl(p.unlocks)}};
                     })}};
    });
    j["feedback"] = arr(r.feedback, [](const FeedbackEvent& e) {
        return json{{"from_block", e.from_block}, {"to_block", e.to_block}, {"reason", e.reason},
                    {"iteration", e.iteration}, {"demo_id", opt(e.demo_id, str)}, {"rerun", e.rerun}};
    });
    j["passes"] = r.passes;
    j["config_used"] = w_config(r.config_used);
    return j;
}

// --- readers ---

Diagnostic r_diagnostic(const json& j) {
    return {de<Severity>(j.at("severity")), de<DiagnosticCode>(j.at("code")), j.at("subject").get<std::string>(),
            j.at("message").get<std::string>()};
}

AdjustedTrlMap r_adjusted(const json& j) {
    AdjustedTrlMap m;
    for (const auto& [id, e] : j.at("entries").items()) {
        AdjustedTrl a;
        a.own_estimate = trl(e.at("own_estimate"));
        a.quality_cap = opt_in<TrlLevel>(e.at("quality_cap"), [](const json& x) { return trl(x); });
        a.adjusted = trl(e.at("adjusted"));
        a.limiting_upstream = opt_in<std::string>(e.at("limiting_upstream"), str_in);
        m.entries.emplace(id, a);
    }
    m.advisories = j.at("advisories").get<std::vector<std::string>>();
    return m;
}

Bottleneck r_bottleneck(const json& j) {
    return {j.at("wp_id").get<std::string>(), j.at("blocked_downstream").get<int>()};
}

AnalysisReport read(const json& j) {
    AnalysisReport r;
    r.report_version = j.at("report_version").get<int>();
    if (r.report_version != 1) throw SchemaError("report_version", "unsupported version");
    r.project = j.at("project").get<std::string>();
    r.overrides = arr_in<Override>(j.at("overrides"), [](const json& o) {
        return Override{o.at("target").get<std::string>(), o.at("id").get<std::string>(),
                        o.at("field").get<std::string>(), de<OverrideOp>(o.at("op")),
                        o.at("value").get<std::string>()};
    });
    const auto& c = j.at("consolidated");
    r.consolidated.flags = arr_in<MissingInfo>(c.at("flags"), [](const json& f) {
        return MissingInfo{{de<SubjectKind>(f.at("subject").at("kind")), f.at("subject").at("id").get<std::string>()},
                           de<MissingIssue>(f.at("issue")),
                           f.at("note").get<std::string>()};
    });
    r.consolidated.defaults_applied = arr_in<AppliedDefault>(c.at("defaults_applied"), [](const json& d) {
        return AppliedDefault{d.at("field_path").get<std::string>(), trl(d.at("value")),
                              d.at("provenance").get<std::string>()};
    });
    r.consolidated.advisories = arr_in<Diagnostic>(c.at("advisories"), r_diagnostic);
    r.gaps = arr_in<WpGap>(j.at("gaps"), [](const json& g) {
        return WpGap{g.at("wp_id").get<std::string>(), trl(g.at("target")), trl(g.at("estimated")),
                     g.at("gap").get<int>(), de<GapCategory>(g.at("category"))};
    });
    r.incomplete_wps = j.at("incomplete_wps").get<std::vector<std::string>>();
    r.demo_gaps = arr_in<DemoGap>(j.at("demo_gaps"), [](const json& g) {
        return DemoGap{g.at("demo_id").get<std::string>(), trl(g.at("target")), trl(g.at("per_wp_level")),
                       g.at("gap").get<int>(), de<GapCategory>(g.at("category"))};
    });
    r.adjusted = r_adjusted(j.at("adjusted"));
    const auto& s = j.at("structure");
    r.structure.islands = s.at("islands").get<std::vector<std::string>>();
    r.structure.bottlenecks = arr_in<Bottleneck>(s.at("bottlenecks"), r_bottleneck);
    r.structure.cycles = s.at("cycles").get<std::vector<std::vector<std::string>>>();
    r.demo_adjusted = arr_in<DemoPropagation>(j.at("demo_adjusted"), [](const json& p) {
        DemoPropagation d;
        d.demo_id = p.at("demo_id").get<std::string>();
        for (const auto& [wp, cap] : p.at("caps_applied").items()) d.caps_applied.emplace(wp, trl(cap));
        d.adjusted = r_adjusted(p.at("adjusted"));
        d.bottlenecks = arr_in<Bottleneck>(p.at("bottlenecks"), r_bottleneck);
        return d;
    });
    r.compliance = arr_in<ComplianceReport>(j.at("compliance"), [](const json& x) {
        ComplianceReport cr;
        cr.demo_id = x.at("demo_id").get<std::string>();
        cr.target_trl = trl(x.at("target_trl"));
        cr.rows = arr_in<ComplianceRow>(x.at("rows"), [](const json& row) {
            return ComplianceRow{row.at("wp_id").get<std::string>(),
                                 opt_in<std::string>(row.at("use_case_id"), str_in),
                                 de<ReadinessGrade>(row.at("required")),
                                 opt_in<ReadinessGrade>(row.at("actual"),
                                                        [](const json& g) { return de<ReadinessGrade>(g); }),
                                 row.at("compliant").get<bool>(),
                                 de<ComplianceFailure>(row.at("failure"))};
        });
        cr.corrective_actions = x.at("corrective_actions").get<std::vector<std::string>>();
        cr.affects_dependencies = x.at("affects_dependencies").get<bool>();
        return cr;
    });
    r.assessments = arr_in<DemonstratorAssessment>(j.at("assessments"), [](const json& x) {
        DemonstratorAssessment a;
        a.demo_id = x.at("demo_id").get<std::string>();
        a.achievable_trl = trl(x.at("achievable_trl"));
        a.target_trl = opt_in<TrlLevel>(x.at("target_trl"), [](const json& t) { return trl(t); });
        a.shortfall = x.at("shortfall").get<int>();
        a.declared_type = de<UseCaseType>(x.at("declared_type"));
        a.use_case_type = de<UseCaseType>(x.at("use_case_type"));
        a.recommended_level = lvl_in(x.at("recommended_level"));
        a.recommended_scope = x.at("recommended_scope").get<std::vector<std::string>>();
        a.target_level = opt_in<DemonstrationLevel>(x.at("target_level"), lvl_in);
        a.risk = de<RiskLevel>(x.at("risk"));
        a.impractical_target = x.at("impractical_target").get<bool>();
        a.constraints = arr_in<Constraint>(x.at("constraints"), [](const json& c) {
            return Constraint{de<ConstraintCode>(c.at("code")), opt_in<DemonstrationLevel>(c.at("level"), lvl_in),
                              c.at("text").get<std::string>()};
        });
        a.mitigations = arr_in<Mitigation>(x.at("mitigations"), [](const json& m) {
            return Mitigation{de<MitigationKind>(m.at("kind")),
                              opt_in<std::string>(m.at("use_case"), str_in),
                              m.at("wps").get<std::vector<std::string>>(),
                              opt_in<ReadinessGrade>(m.at("grade"), [](const json& g) { return de<ReadinessGrade>(g); }),
                              opt_in<TrlLevel>(m.at("trl"), [](const json& t) { return trl(t); }),
                              m.at("text").get<std::string>(),
                              opt_in<DemonstrationLevel>(m.at("unlocks"), lvl_in)};
        });
        return a;
    });
    r.specs = arr_in<RequirementsSpec>(j.at("specs"), [](const json& x) {
        RequirementsSpec sp;
        sp.demo_id = x.at("demo_id").get<std::string>();
        sp.level = lvl_in(x.at("level"));
        sp.requirements = arr_in<Requirement>(x.at("requirements"), [](const json& q) {
            return Requirement{q.at("id").get<std::string>(), de<RequirementKind>(q.at("kind")),
                               q.at("subject").get<std::string>(), q.at("statement").get<std::string>(),
                               de<RequirementSource>(q.at("source"))};
        });
        sp.improvement_plan = arr_in<ImprovementAction>(x.at("improvement_plan"), [](const json& p) {
            return ImprovementAction{p.at("wp_ids").get<std::vector<std::string>>(),
                                     p.at("action").get<std::string>(), lvl_in(p.at("unlocks"))};
        });
        return sp;
    });
    r.feedback = arr_in<FeedbackEvent>(j.at("feedback"), [](const json& e) {
        return FeedbackEvent{e.at("from_block").get<int>(), e.at("to_block").get<int>(),
                             e.at("reason").get<std::string>(), e.at("iteration").get<int>(),
                             opt_in<std::string>(e.at("demo_id"), str_in), e.at("rerun").get<bool>()};
    });
    r.passes = j.at("passes").get<int>();
    r.config_used = parse_config(j.at("config_used").dump());
    return r;
}

} // namespace

std::string render_machine(const AnalysisReport& report) { return write(report).dump(2) + "\n"; }

AnalysisReport parse_machine_report(std::string_view source) {
    const auto j = detail::parse_json(source);
    try {
        return read(j);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("report", e.what());
    }
}

} // namespace demoreq
