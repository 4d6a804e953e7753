#include "demoreq/render.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

namespace demoreq {

namespace {

std::string join(const std::vector<std::string>& items, std::string_view sep = ", ") {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

std::string trl_text(const std::optional<TrlLevel>& t) { return t ? std::to_string(t->value()) : "-"; }

std::string level_text(const std::optional<DemonstrationLevel>& l) {
    return l ? std::string(to_string(*l)) + " " + std::string(level_name(*l)) : "-";
}

std::string quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

void heading(std::ostringstream& os, int block, std::string_view title) {
    os << "\n[" << block << "] " << title << "\n";
}

void consolidation(std::ostringstream& os, const AnalysisReport& r) {
    heading(os, 1, "Consolidated input");
    const auto& c = r.consolidated;
    if (c.flags.empty() && c.defaults_applied.empty() && c.advisories.empty()) os << "  complete\n";
    for (const auto& f : c.flags) {
        os << "  missing: " << to_string(f.subject.kind) << " " << f.subject.id << " " << to_string(f.issue);
        if (!f.note.empty()) os << " (" << f.note << ")";
        os << "\n";
    }
    for (const auto& d : c.defaults_applied) {
        os << "  default: " << d.field_path << " = " << d.value.value() << " from " << d.provenance << "\n";
    }
    for (const auto& a : c.advisories) os << "  advisory: " << a.subject << ": " << a.message << "\n";
}

void gaps(std::ostringstream& os, const AnalysisReport& r) {
    heading(os, 2, "TRL gaps");
    os << "  " << std::left << std::setw(8) << "WP" << std::setw(8) << "target" << std::setw(8) << "est"
       << std::setw(6) << "gap" << "category\n";
    for (const auto& g : r.gaps) {
        os << "  " << std::setw(8) << g.wp_id << std::setw(8) << g.target.value() << std::setw(8)
           << g.estimated.value() << std::setw(6) << g.gap << to_string(g.category) << "\n";
    }
    if (!r.incomplete_wps.empty()) os << "  incomplete: " << join(r.incomplete_wps) << "\n";
}

void dependencies(std::ostringstream& os, const AnalysisReport& r) {
    heading(os, 3, "Dependency-adjusted TRL");
    os << "  " << std::left << std::setw(8) << "WP" << std::setw(6) << "own" << std::setw(6) << "cap"
       << std::setw(10) << "adjusted" << "limited by\n";
    for (const auto& [id, e] : r.adjusted.entries) {
        os << "  " << std::setw(8) << id << std::setw(6) << e.own_estimate.value() << std::setw(6)
           << trl_text(e.quality_cap) << std::setw(10) << e.adjusted.value()
           << e.limiting_upstream.value_or("-") << "\n";
    }
    if (!r.structure.islands.empty()) os << "  islands: " << join(r.structure.islands) << "\n";
    for (const auto& b : r.structure.bottlenecks) {
        os << "  bottleneck: " << b.wp_id << " limits " << b.blocked_downstream << " downstream\n";
    }
    for (const auto& cycle : r.structure.cycles) os << "  cycle: " << join(cycle, " -> ") << "\n";
    for (const auto& a : r.adjusted.advisories) os << "  uncertain edge not propagated: " << a << "\n";
}

void readiness(std::ostringstream& os, const AnalysisReport& r) {
    heading(os, 4, "Demonstrator readiness");
    for (const auto& g : r.demo_gaps) {
        os << "  " << g.demo_id << ": target " << g.target.value() << ", per-WP level " << g.per_wp_level.value()
           << ", gap " << g.gap << " " << to_string(g.category) << "\n";
    }
    for (const auto& a : r.assessments) {
        os << "  " << a.demo_id << ": achievable " << a.achievable_trl.value() << ", target "
           << trl_text(a.target_trl) << ", shortfall " << a.shortfall << "\n";
    }
}

void compliance(std::ostringstream& os, const AnalysisReport& r) {
    heading(os, 5, "Quality compliance");
    for (const auto& c : r.compliance) {
        os << "  " << c.demo_id << " (target TRL " << c.target_trl.value() << ")\n";
        for (const auto& row : c.rows) {
            os << "    " << std::left << std::setw(8) << row.wp_id << std::setw(10) << row.use_case_id.value_or("-")
               << "required " << to_string(row.required) << ", actual "
               << (row.actual ? std::string(to_string(*row.actual)) : "-") << ", "
               << (row.compliant ? "ok" : std::string(to_string(row.failure))) << "\n";
        }
        for (const auto& action : c.corrective_actions) os << "    action: " << action << "\n";
        if (c.affects_dependencies) os << "    affects downstream dependencies\n";
    }
}

void feasibility(std::ostringstream& os, const AnalysisReport& r) {
    heading(os, 6, "Demonstration level");
    for (const auto& a : r.assessments) {
        os << "  " << a.demo_id << "\n";
        os << "    use-cases: declared " << to_string(a.declared_type) << ", scope " << to_string(a.use_case_type)
           << "\n";
        os << "    target level: " << level_text(a.target_level) << "\n";
        os << "    recommended: " << level_text(a.recommended_level) << " on " << join(a.recommended_scope)
           << " (risk " << to_string(a.risk) << ")\n";
        if (a.impractical_target) os << "    target cell is impractical\n";
        for (const auto& c : a.constraints) {
            os << "    constraint: " << to_string(c.code);
            if (c.level) os << " at " << to_string(*c.level);
            os << ": " << c.text << "\n";
        }
        for (const auto& m : a.mitigations) {
            os << "    mitigation: " << m.text;
            if (m.unlocks) os << " (unlocks " << to_string(*m.unlocks) << ")";
            os << "\n";
        }
    }
}

void requirements(std::ostringstream& os, const AnalysisReport& r) {
    heading(os, 7, "Requirements");
    for (const auto& s : r.specs) {
        os << "  " << s.demo_id << " at " << level_text(s.level) << "\n";
        for (const auto& q : s.requirements) os << "    " << q.id << ": " << q.statement << "\n";
        for (const auto& p : s.improvement_plan) {
            os << "    plan: " << p.action << " -> " << to_string(p.unlocks) << "\n";
        }
    }
}

} // namespace

std::string render_text(const AnalysisReport& report, const ProjectModel& model) {
    std::ostringstream os;
    os << "Project: " << report.project;
    if (!model.work_packages.empty()) os << " (" << model.work_packages.size() << " work packages)";
    os << "\n";
    for (const auto& o : report.overrides) os << "override: " << o.text() << "\n";
    consolidation(os, report);
    gaps(os, report);
    dependencies(os, report);
    readiness(os, report);
    compliance(os, report);
    feasibility(os, report);
    requirements(os, report);
    os << "\nFeedback\n";
    for (const auto& e : report.feedback) {
        os << "  " << e.from_block << "->" << e.to_block << " iteration " << e.iteration;
        if (e.demo_id) os << " [" << *e.demo_id << "]";
        os << (e.rerun ? " rerun" : " advisory") << ": " << e.reason << "\n";
    }
    os << "  passes: " << report.passes << "\n";
    return os.str();
}

std::string render_dot(const WpGraph& graph, const ProjectModel& model, const StructureReport& structure) {
    const std::set<std::string> islands(structure.islands.begin(), structure.islands.end());
    std::ostringstream os;
    os << "digraph " << quote(model.name.empty() ? "project" : model.name) << " {\n";
    os << "  rankdir=LR;\n  node [shape=box];\n";
    for (const auto& id : graph.nodes) {
        const auto* wp = model.find_wp(id);
        std::string label = id + ": " + (wp ? wp->name : std::string{});
        os << "  " << quote(id) << " [label=" << quote(label);
        if (islands.contains(id)) os << ", style=dashed, xlabel=\"island\"";
        os << "];\n";
    }
    for (const auto& e : graph.edges) {
        os << "  " << quote(e.from) << " -> " << quote(e.to) << " [label=" << quote(to_string(e.kind))
           << ", style=" << (e.certainty == Certainty::Direct ? "solid" : "dashed") << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string render_diff(const ReportDiff& diff) {
    if (diff.empty()) return "no changes\n";
    std::ostringstream os;
    for (const auto& c : diff.adjusted) {
        os << "adjusted " << c.subject << ": " << trl_text(c.before) << " -> " << trl_text(c.after) << "\n";
    }
    for (const auto& c : diff.achievable) {
        os << "achievable " << c.subject << ": " << trl_text(c.before) << " -> " << trl_text(c.after) << "\n";
    }
    for (const auto& c : diff.recommendations) {
        os << "level " << c.demo_id << ": " << level_text(c.before) << " -> " << level_text(c.after) << "\n";
    }
    for (const auto& c : diff.constraints) {
        os << (c.added ? "+ " : "- ") << c.demo_id << " " << to_string(c.constraint.code);
        if (c.constraint.level) os << " at " << to_string(*c.constraint.level);
        os << ": " << c.constraint.text << "\n";
    }
    return os.str();
}

} // namespace demoreq
