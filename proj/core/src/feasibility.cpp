#include "demoreq/feasibility.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "demoreq/errors.hpp"

namespace demoreq {

namespace {

using Scope = std::set<std::string>;

std::string list(const auto& items) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += ", ";
        out += s;
    }
    return out;
}

std::string lname(DemonstrationLevel level) { return std::string(to_string(level)); }

// Weak components of `subset` over Direct edges with both ends inside it.
std::vector<Scope> components(const WpGraph& graph, const Scope& subset) {
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& e : graph.edges) {
        if (e.certainty != Certainty::Direct) continue;
        if (!subset.contains(e.from) || !subset.contains(e.to)) continue;
        adj[e.from].push_back(e.to);
        adj[e.to].push_back(e.from);
    }
    std::vector<Scope> out;
    Scope seen;
    for (const auto& start : subset) {
        if (seen.contains(start)) continue;
        Scope component{start};
        seen.insert(start);
        std::deque<std::string> queue{start};
        while (!queue.empty()) {
            const auto v = queue.front();
            queue.pop_front();
            for (const auto& w : adj[v]) {
                if (seen.insert(w).second) {
                    component.insert(w);
                    queue.push_back(w);
                }
            }
        }
        out.push_back(std::move(component));
    }
    return out;
}

Scope associated_with(const Scope& wps, const std::string& use_case, const ProjectModel& model) {
    Scope out;
    for (const auto& id : wps) {
        const auto* wp = model.find_wp(id);
        if (wp && wp->use_cases.contains(use_case)) out.insert(id);
    }
    return out;
}

// Use-case associated with most of `scope` (ties: smallest id); `pool` empty means any model use-case.
/// Use-case associated with most of `scope`; ties prefer a connected
/// association, then the smaller id.
std::optional<std::string> best_use_case(const Scope& scope, const Scope& pool, const ProjectModel& model,
                                         const WpGraph& graph) {
    std::optional<std::string> best;
    std::pair<std::size_t, bool> best_rank{0, false};
    for (const auto& uc : model.use_cases) {
        if (!pool.empty() && !pool.contains(uc.id)) continue;
        const auto associated = associated_with(scope, uc.id, model);
        const std::pair rank{associated.size(), weakly_connected(graph, associated)};
        if (!best || rank > best_rank || (rank == best_rank && uc.id < *best)) {
            best = uc.id;
            best_rank = rank;
        }
    }
    return best;
}

std::string mitigation_text(const Mitigation& m) {
    const auto uc = m.use_case.value_or("");
    switch (m.kind) {
    case MitigationKind::AssociateUseCase:
        if (!m.use_case) return "associate a use-case with " + list(m.wps);
        return "associate " + uc + " use-case with " + list(m.wps);
    case MitigationKind::ReferenceUseCase:
        return "reference " + uc + " use-case in the demonstrator (associated with " + list(m.wps) + ")";
    case MitigationKind::RaiseGrade:
        return "raise " + uc + " artifact readiness to " + std::string(to_string(*m.grade)) + " for " +
               list(m.wps);
    case MitigationKind::AddCoverage:
        return "add " + list(m.wps) + " to the demonstrator coverage";
    case MitigationKind::DefineDependency:
        return "define a direct data dependency " + m.wps.front() + " -> " + m.wps.back();
    case MitigationKind::RaiseWpTrl:
        return "raise estimated TRL of " + list(m.wps) + " to " + std::to_string(m.trl->value());
    }
    return {};
}

class MitigationSet {
public:
    void associate(std::optional<std::string> uc, const Scope& wps) {
        if (!wps.empty()) add({MitigationKind::AssociateUseCase, std::move(uc), wps});
    }
    void reference(const std::string& uc, const Scope& wps) {
        add({MitigationKind::ReferenceUseCase, uc, wps});
    }
    void raise_grade(const std::string& uc, const Scope& wps, ReadinessGrade grade) {
        if (!wps.empty()) add({MitigationKind::RaiseGrade, uc, wps, grade});
    }
    void add_coverage(const Scope& wps) {
        if (!wps.empty()) add({MitigationKind::AddCoverage, std::nullopt, wps});
    }
    void define_dependency(const std::string& from, const std::string& to) {
        add({MitigationKind::DefineDependency, std::nullopt, {from, to}});
    }
    void raise_trl(const Scope& wps, TrlLevel trl) {
        if (!wps.empty()) add({MitigationKind::RaiseWpTrl, std::nullopt, wps, std::nullopt, trl});
    }

    std::size_t adds() const { return adds_; }

    std::vector<Mitigation> take() {
        std::vector<Mitigation> out;
        for (auto& [key, p] : items_) {
            Mitigation m;
            m.kind = p.kind;
            m.use_case = p.use_case;
            m.wps.assign(p.wps.begin(), p.wps.end());
            m.grade = p.grade;
            m.trl = p.trl;
            m.text = mitigation_text(m);
            out.push_back(std::move(m));
        }
        return out;
    }

private:
    struct Pending {
        MitigationKind kind;
        std::optional<std::string> use_case;
        Scope wps;
        std::optional<ReadinessGrade> grade;
        std::optional<TrlLevel> trl;
    };
    using Key = std::tuple<MitigationKind, std::string, std::string>;

    void add(Pending p) {
        ++adds_;
        // Dependency proposals keep their endpoints; everything else merges per (kind, use-case).
        const auto pair = p.kind == MitigationKind::DefineDependency ? list(p.wps) : std::string{};
        Key key{p.kind, p.use_case.value_or(""), pair};
        auto [it, inserted] = items_.try_emplace(key, p);
        if (inserted) return;
        auto& q = it->second;
        q.wps.insert(p.wps.begin(), p.wps.end());
        if (p.grade && (!q.grade || *p.grade > *q.grade)) q.grade = p.grade;
        if (p.trl && (!q.trl || *p.trl > *q.trl)) q.trl = p.trl;
    }

    std::map<Key, Pending> items_;
    std::size_t adds_ = 0;
};

std::optional<TrlLevel> scope_trl(const Scope& scope, const AdjustedTrlMap& adjusted, const WpGraph& graph,
                                  TrlLevel standalone_cap) {
    Scope known;
    for (const auto& id : scope) {
        if (adjusted.find(id)) known.insert(id);
    }
    if (known.empty()) return std::nullopt;
    return achievable_scope_trl(known, adjusted, graph, standalone_cap);
}

// Best known grade of a demo use-case associated with the WP.
std::optional<ReadinessGrade> demo_grade(const std::string& wp_id, const Scope& demo_use_cases,
                                         const ProjectModel& model, bool& has_use_case) {
    has_use_case = false;
    std::optional<ReadinessGrade> best;
    const auto* wp = model.find_wp(wp_id);
    if (!wp) return best;
    for (const auto& uc_id : demo_use_cases) {
        if (!wp->use_cases.contains(uc_id)) continue;
        has_use_case = true;
        const auto* uc = model.find_use_case(uc_id);
        if (uc && uc->readiness && (!best || *uc->readiness > *best)) best = uc->readiness;
    }
    return best;
}

struct Evaluation {
    DemonstrationLevel level = DemonstrationLevel::ProofOfConcept;
    std::vector<Constraint> failures;
};

struct Candidate {
    Scope scope;
    UseCaseType type = UseCaseType::Disparate;
    TrlLevel achievable{1};
    Evaluation eval;
};

class LevelEvaluator {
public:
    LevelEvaluator(const DemonstratorTarget& demo, const DemoContext& ctx, Scope grand, bool has_use_case)
        : demo_(demo), ctx_(ctx), grand_(std::move(grand)), has_use_case_(has_use_case) {}

    Evaluation evaluate(const Scope& scope, UseCaseType type, TrlLevel achievable, DemonstrationLevel cap) const {
        Evaluation ev;
        for (int n = level_number(cap); n >= 2; --n) {
            const auto level = level_from_number(n);
            auto reasons = failures(level, scope, type, achievable);
            if (reasons.empty()) {
                ev.level = level;
                return ev;
            }
            ev.failures.insert(ev.failures.end(), reasons.begin(), reasons.end());
        }
        ev.level = DemonstrationLevel::ProofOfConcept;
        return ev;
    }

    std::vector<Constraint> failures(DemonstrationLevel level, const Scope& scope, UseCaseType type,
                                     TrlLevel achievable) const {
        std::vector<Constraint> out;
        auto fail = [&](ConstraintCode code, std::string text) { out.push_back({code, level, std::move(text)}); };

        if (!is_feasible(level, type)) {
            if (!has_use_case_) {
                fail(ConstraintCode::NoUseCase, "no use-case is referenced, so only " +
                                                    lname(DemonstrationLevel::ProofOfConcept) +
                                                    " demonstrations are possible");
            } else if (is_grand(level)) {
                fail(ConstraintCode::NoUnifiedUseCase,
                     "no single referenced use-case is associated with all of " + list(scope));
            } else {
                fail(ConstraintCode::UseCaseTypeInfeasible,
                     lname(level) + " is not feasible for " + std::string(to_string(type)) + " use-cases");
            }
        }
        if (is_grand(level)) {
            Scope missing;
            std::set_difference(grand_.begin(), grand_.end(), scope.begin(), scope.end(),
                                std::inserter(missing, missing.end()));
            if (grand_.empty() || !missing.empty()) {
                fail(ConstraintCode::CoverageIncomplete,
                     grand_.empty() ? "the project has no connected technical WPs"
                                    : "coverage misses " + list(missing));
            }
        } else if (scope.size() < 2) {
            fail(ConstraintCode::CoverageIncomplete, lname(level) + " needs at least two covered WPs");
        }
        if (scope.size() >= 2 && !weakly_connected(ctx_.graph, scope)) {
            fail(ConstraintCode::NotConnected, list(scope) + " are not connected by direct dependencies");
        }
        const int band_gap = ctx_.config.bands.band(level).value() - achievable.value();
        if (categorize(band_gap, ctx_.config.gaps) == GapCategory::MajorGap) {
            fail(ConstraintCode::TrlBandShortfall,
                 lname(level) + " needs TRL " + std::to_string(ctx_.config.bands.band(level).value()) +
                     ", achievable " + std::to_string(achievable.value()));
        }
        if (is_extra_functional(level)) {
            Scope unknown;
            Scope low;
            for (const auto& wp : scope) {
                bool has_uc = false;
                const auto grade = demo_grade(wp, demo_.use_cases, ctx_.model, has_uc);
                if (!grade) {
                    unknown.insert(wp);
                } else if (*grade < ctx_.config.extra_functional_grade) {
                    low.insert(wp);
                }
            }
            const auto need = std::string(to_string(ctx_.config.extra_functional_grade));
            if (!unknown.empty()) {
                fail(ConstraintCode::ExtraFunctionalConditional,
                     lname(level) + " is conditional on baseline-grade (" + need + ") artifacts for " +
                         list(unknown));
            }
            if (!low.empty()) {
                fail(ConstraintCode::GradeInsufficient,
                     lname(level) + " needs " + need + " artifacts; below for " + list(low));
            }
        }
        return out;
    }

private:
    const DemonstratorTarget& demo_;
    const DemoContext& ctx_;
    Scope grand_;
    bool has_use_case_;
};

bool better(const Candidate& a, const Candidate& b) {
    if (a.eval.level != b.eval.level) return a.eval.level > b.eval.level;
    if (a.scope.size() != b.scope.size()) return a.scope.size() > b.scope.size();
    return a.scope < b.scope;
}

void sort_constraints(std::vector<Constraint>& cs) {
    auto key = [](const Constraint& c) {
        return std::make_tuple(c.level ? level_number(*c.level) : 0, c.code, c.text);
    };
    std::sort(cs.begin(), cs.end(), [&](const Constraint& a, const Constraint& b) { return key(a) < key(b); });
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
}

// Connects the components of `scope` through covered-path WPs or, failing that, new edges.
void connect_mitigations(const Scope& scope, const DemoContext& ctx, MitigationSet& ms) {
    const auto parts = components(ctx.graph, scope);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const auto path = undirected_path(ctx.graph, *parts.front().begin(), *parts[i].begin());
        if (path.empty()) {
            ms.define_dependency(*parts.front().begin(), *parts[i].begin());
            continue;
        }
        Scope extra;
        for (const auto& wp : path) {
            if (!scope.contains(wp)) extra.insert(wp);
        }
        ms.add_coverage(extra);
    }
}

Scope with_ancestors(const Scope& scope, const WpGraph& graph) {
    Scope out = scope;
    std::deque<std::string> queue(scope.begin(), scope.end());
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (const auto& u : graph.direct_upstream(v)) {
            if (out.insert(u).second) queue.push_back(u);
        }
    }
    return out;
}

void raise_to(TrlLevel trl, const Scope& scope, const DemoContext& ctx, MitigationSet& ms) {
    Scope low_estimate;
    for (const auto& wp : with_ancestors(scope, ctx.graph)) {
        const auto* entry = ctx.adjusted.find(wp);
        if (entry && entry->own_estimate < trl) low_estimate.insert(wp);
    }
    ms.raise_trl(low_estimate, trl);

    for (const auto& wp_id : with_ancestors(scope, ctx.graph)) {
        const auto* entry = ctx.adjusted.find(wp_id);
        if (!entry || !entry->quality_cap || *entry->quality_cap >= trl) continue;
        const auto* wp = ctx.model.find_wp(wp_id);
        if (!wp) continue;
        std::optional<std::string> best;
        std::optional<ReadinessGrade> best_grade;
        for (const auto& uc_id : wp->use_cases) {
            const auto* uc = ctx.model.find_use_case(uc_id);
            if (uc && uc->readiness && (!best_grade || *uc->readiness > *best_grade)) {
                best = uc_id;
                best_grade = uc->readiness;
            }
        }
        if (best) ms.raise_grade(*best, {wp_id}, thresholds_for(trl, ctx.config.grade_caps).required_grade);
    }
}

void availability_mitigations(const DemonstratorTarget& demo, const DemoContext& ctx, MitigationSet& ms) {
    Scope unavailable;
    for (const auto& row : ctx.compliance.rows) {
        if (row.failure == ComplianceFailure::Availability) unavailable.insert(row.wp_id);
    }
    if (unavailable.empty()) return;
    if (!demo.use_cases.empty()) {
        ms.associate(best_use_case(demo.covered_wps, demo.use_cases, ctx.model, ctx.graph), unavailable);
        return;
    }
    const auto uc = best_use_case(demo.covered_wps, {}, ctx.model, ctx.graph);
    if (uc && !associated_with(demo.covered_wps, *uc, ctx.model).empty()) {
        ms.reference(*uc, associated_with(demo.covered_wps, *uc, ctx.model));
    } else {
        ms.associate(std::nullopt, unavailable);
    }
}

void grade_mitigations(const DemoContext& ctx, MitigationSet& ms) {
    std::map<std::string, Scope> per_use_case;
    for (const auto& row : ctx.compliance.rows) {
        if (row.use_case_id && !row.compliant) per_use_case[*row.use_case_id].insert(row.wp_id);
    }
    const auto required = thresholds_for(ctx.compliance.target_trl, ctx.config.grade_caps).required_grade;
    for (const auto& [uc, wps] : per_use_case) ms.raise_grade(uc, wps, required);
}

void unify_mitigations(const DemonstratorTarget& demo, const Scope& scope, const DemoContext& ctx,
                       MitigationSet& ms) {
    const auto uc = best_use_case(scope, demo.use_cases, ctx.model, ctx.graph);
    if (!uc) {
        ms.associate(std::nullopt, scope);
        return;
    }
    Scope missing;
    const auto have = associated_with(scope, *uc, ctx.model);
    std::set_difference(scope.begin(), scope.end(), have.begin(), have.end(),
                        std::inserter(missing, missing.end()));
    ms.associate(*uc, missing);
}

void constraint_mitigations(const Constraint& c, const DemonstratorTarget& demo, const Scope& scope,
                            const Scope& grand, const DemoContext& ctx, MitigationSet& ms) {
    const auto before = ms.adds();
    switch (c.code) {
    case ConstraintCode::TargetTrlShortfall:
        availability_mitigations(demo, ctx, ms);
        grade_mitigations(ctx, ms);
        if (demo.target_trl) raise_to(*demo.target_trl, demo.covered_wps, ctx, ms);
        if (demo.covered_wps.size() >= 2 && !weakly_connected(ctx.graph, demo.covered_wps) &&
            demo.target_trl && *demo.target_trl > ctx.config.standalone_cap) {
            connect_mitigations(demo.covered_wps, ctx, ms);
        }
        break;
    case ConstraintCode::NoUseCase: {
        const auto uc = best_use_case(demo.covered_wps, {}, ctx.model, ctx.graph);
        if (uc && !associated_with(demo.covered_wps, *uc, ctx.model).empty()) {
            ms.reference(*uc, associated_with(demo.covered_wps, *uc, ctx.model));
        }
        break;
    }
    case ConstraintCode::UseCaseAvailability:
        availability_mitigations(demo, ctx, ms);
        break;
    case ConstraintCode::NoUnifiedUseCase:
    case ConstraintCode::UseCaseTypeInfeasible:
    case ConstraintCode::ReducedScope:
        unify_mitigations(demo, demo.covered_wps, ctx, ms);
        break;
    case ConstraintCode::CoverageIncomplete:
        if (c.level && is_grand(*c.level)) {
            Scope missing;
            for (const auto& wp : grand) {
                if (!scope.contains(wp) && !demo.covered_wps.contains(wp)) missing.insert(wp);
            }
            if (!missing.empty()) ms.add_coverage(missing);
        } else {
            Scope neighbours;
            for (const auto& wp : scope) {
                for (const auto& n : ctx.graph.direct_downstream(wp)) {
                    if (!scope.contains(n) && !demo.covered_wps.contains(n)) neighbours.insert(n);
                }
                for (const auto& n : ctx.graph.direct_upstream(wp)) {
                    if (!scope.contains(n) && !demo.covered_wps.contains(n)) neighbours.insert(n);
                }
            }
            if (!neighbours.empty()) ms.add_coverage({*neighbours.begin()});
        }
        break;
    case ConstraintCode::NotConnected:
        connect_mitigations(scope, ctx, ms);
        break;
    case ConstraintCode::TrlBandShortfall:
        if (c.level) raise_to(ctx.config.bands.band(*c.level), scope, ctx, ms);
        break;
    case ConstraintCode::ExtraFunctionalConditional:
    case ConstraintCode::GradeInsufficient: {
        std::map<std::string, Scope> per_use_case;
        Scope orphan;
        for (const auto& wp_id : scope) {
            const auto* wp = ctx.model.find_wp(wp_id);
            if (!wp) continue;
            std::optional<std::string> best;
            std::optional<ReadinessGrade> best_grade;
            for (const auto& uc_id : demo.use_cases) {
                if (!wp->use_cases.contains(uc_id)) continue;
                const auto* uc = ctx.model.find_use_case(uc_id);
                const auto grade = uc ? uc->readiness : std::nullopt;
                if (!best || (grade && (!best_grade || *grade > *best_grade))) {
                    best = uc_id;
                    best_grade = grade;
                }
            }
            if (!best) {
                orphan.insert(wp_id);
            } else if (!best_grade || *best_grade < ctx.config.extra_functional_grade) {
                per_use_case[*best].insert(wp_id);
            }
        }
        for (const auto& [uc, wps] : per_use_case) ms.raise_grade(uc, wps, ctx.config.extra_functional_grade);
        if (!orphan.empty()) unify_mitigations(demo, orphan, ctx, ms);
        break;
    }
    }
    if (ms.adds() == before && c.level) raise_to(ctx.config.bands.band(*c.level), scope, ctx, ms);
    if (ms.adds() == before) ms.associate(std::nullopt, scope);
}

} // namespace

std::vector<DemonstrationLevel> feasible_levels(UseCaseType type) {
    switch (type) {
    case UseCaseType::Unified: return {kAllLevels.begin(), kAllLevels.end()};
    case UseCaseType::CoordinatedMulti:
        return {DemonstrationLevel::ProofOfConcept, DemonstrationLevel::ProofOfIntegration,
                DemonstrationLevel::OptimisedProofOfIntegration};
    case UseCaseType::Disparate: return {DemonstrationLevel::ProofOfConcept};
    }
    return {};
}

bool is_feasible(DemonstrationLevel level, UseCaseType type) {
    const auto levels = feasible_levels(type);
    return std::find(levels.begin(), levels.end(), level) != levels.end();
}

RiskLevel risk_of(DemonstrationLevel level, UseCaseType type) {
    using R = RiskLevel;
    static constexpr R table[5][3] = {
        {R::Normal, R::Normal, R::Normal},
        {R::Moderate, R::Moderate, R::Impractical},
        {R::High, R::High, R::Impractical},
        {R::Moderate, R::Impractical, R::Impractical},
        {R::High, R::Impractical, R::Impractical},
    };
    return table[level_number(level) - 1][static_cast<int>(type)];
}

bool LevelBands::monotone() const { return std::is_sorted(min_trl.begin(), min_trl.end()); }

TrlLevel achievable_scope_trl(const std::set<std::string>& scope, const AdjustedTrlMap& adjusted,
                              const WpGraph& graph, TrlLevel standalone_cap) {
    std::optional<TrlLevel> result;
    for (const auto& id : scope) {
        const auto* entry = adjusted.find(id);
        if (!entry) throw UnknownWp(id);
        if (!result || entry->adjusted < *result) result = entry->adjusted;
    }
    if (!result) return TrlLevel{1};
    if (scope.size() >= 2 && !weakly_connected(graph, scope)) result = std::min(*result, standalone_cap);
    return *result;
}

TrlLevel achievable_demo_trl(const DemonstratorTarget& demo, const AdjustedTrlMap& adjusted,
                             const WpGraph& graph, TrlLevel standalone_cap) {
    return achievable_scope_trl(demo.covered_wps, adjusted, graph, standalone_cap);
}

UseCaseType classify_scope(const std::set<std::string>& scope, const std::set<std::string>& use_cases,
                           const ProjectModel& model) {
    if (use_cases.empty() || scope.empty()) return UseCaseType::Disparate;
    for (const auto& uc : use_cases) {
        if (associated_with(scope, uc, model).size() == scope.size()) return UseCaseType::Unified;
    }
    for (const auto& wp_id : scope) {
        const auto* wp = model.find_wp(wp_id);
        const bool covered = wp && std::any_of(use_cases.begin(), use_cases.end(),
                                               [&](const std::string& uc) { return wp->use_cases.contains(uc); });
        if (!covered) return UseCaseType::Disparate;
    }
    std::optional<std::string> group;
    for (const auto& uc_id : use_cases) {
        const auto* uc = model.find_use_case(uc_id);
        if (!uc || !uc->framework_group) return UseCaseType::Disparate;
        if (group && *group != *uc->framework_group) return UseCaseType::Disparate;
        group = uc->framework_group;
    }
    return UseCaseType::CoordinatedMulti;
}

UseCaseType classify_use_case_type(const DemonstratorTarget& demo, const ProjectModel& model) {
    if (demo.use_cases.empty()) throw NoUseCase(demo.id);
    return classify_scope(demo.covered_wps, demo.use_cases, model);
}

ShortfallResult shortfall_analysis(const DemonstratorTarget& demo, TrlLevel achievable, const DemoContext& ctx) {
    ShortfallResult result;
    if (!demo.target_trl) return result;
    result.shortfall = std::max(0, demo.target_trl->value() - achievable.value());
    if (result.shortfall == 0) return result;
    MitigationSet ms;
    constraint_mitigations({ConstraintCode::TargetTrlShortfall, std::nullopt, {}}, demo, demo.covered_wps,
                           grand_scope(ctx.model, ctx.structure), ctx, ms);
    result.mitigations = ms.take();
    return result;
}

std::set<std::string> grand_scope(const ProjectModel& model, const StructureReport& structure) {
    const std::set<std::string> islands(structure.islands.begin(), structure.islands.end());
    std::set<std::string> out;
    for (const auto& wp : model.work_packages) {
        if (wp.kind == WpKind::Technical && is_analyzed(wp) && !islands.contains(wp.id)) out.insert(wp.id);
    }
    return out;
}

DemonstrationLevel described_level(const DemonstratorTarget& demo, const std::set<std::string>& grand) {
    const bool extra = demo.qualities == Qualities::FunctionalAndExtraFunctional;
    if (demo.covered_wps.size() <= 1) return DemonstrationLevel::ProofOfConcept;
    const bool all = !grand.empty() && std::includes(demo.covered_wps.begin(), demo.covered_wps.end(),
                                                     grand.begin(), grand.end());
    if (all) {
        return extra ? DemonstrationLevel::OptimisedGrandProofOfIntegration
                     : DemonstrationLevel::GrandProofOfIntegration;
    }
    return extra ? DemonstrationLevel::OptimisedProofOfIntegration : DemonstrationLevel::ProofOfIntegration;
}

std::optional<DemonstrationLevel> target_level(const DemonstratorTarget& demo, const std::set<std::string>& grand,
                                               const LevelBands& bands) {
    if (!demo.target_trl) return std::nullopt;
    const bool extra = demo.qualities == Qualities::FunctionalAndExtraFunctional;
    for (int n = level_number(described_level(demo, grand)); n >= 1; --n) {
        const auto level = level_from_number(n);
        if (is_extra_functional(level) && !extra) continue;
        if (bands.band(level) <= *demo.target_trl) return level;
    }
    return DemonstrationLevel::ProofOfConcept;
}

DemonstratorAssessment recommend_level(const DemonstratorTarget& demo, TrlLevel achievable,
                                       std::optional<UseCaseType> declared_type, const DemoContext& ctx) {
    DemonstratorAssessment a;
    a.demo_id = demo.id;
    a.achievable_trl = achievable;
    a.target_trl = demo.target_trl;
    a.shortfall = demo.target_trl ? std::max(0, demo.target_trl->value() - achievable.value()) : 0;
    a.declared_type = declared_type.value_or(UseCaseType::Disparate);

    const auto grand = grand_scope(ctx.model, ctx.structure);
    a.target_level = target_level(demo, grand, ctx.config.bands);
    const auto cap = a.target_level.value_or(described_level(demo, grand));

    const LevelEvaluator evaluator(demo, ctx, grand, declared_type.has_value());
    Candidate chosen{demo.covered_wps, a.declared_type, achievable,
                     evaluator.evaluate(demo.covered_wps, a.declared_type, achievable, cap)};
    const auto declared_failures = chosen.eval.failures;

    if (chosen.eval.level < cap && declared_type) {
        std::vector<Scope> pools;
        for (const auto& uc : demo.use_cases) pools.push_back(associated_with(demo.covered_wps, uc, ctx.model));
        Scope any;
        for (const auto& p : pools) any.insert(p.begin(), p.end());
        pools.push_back(any);
        std::optional<Candidate> best;
        for (const auto& pool : pools) {
            for (auto& scope : components(ctx.graph, pool)) {
                if (scope.size() < 2 || scope == demo.covered_wps) continue;
                const auto trl = scope_trl(scope, ctx.adjusted, ctx.graph, ctx.config.standalone_cap);
                if (!trl) continue;
                const auto type = classify_scope(scope, demo.use_cases, ctx.model);
                Candidate c{scope, type, *trl, evaluator.evaluate(scope, type, *trl, cap)};
                if (!best || better(c, *best)) best = std::move(c);
            }
        }
        if (best && best->eval.level > chosen.eval.level) chosen = std::move(*best);
    }

    a.recommended_level = chosen.eval.level;
    a.recommended_scope.assign(chosen.scope.begin(), chosen.scope.end());
    a.use_case_type = chosen.type;
    a.risk = risk_of(a.recommended_level, a.use_case_type);
    a.impractical_target = a.target_level && risk_of(*a.target_level, a.declared_type) == RiskLevel::Impractical;

    auto& cs = a.constraints;
    for (const auto& f : chosen.eval.failures) {
        if (f.level && *f.level > a.recommended_level) cs.push_back(f);
    }
    if (chosen.scope != demo.covered_wps) {
        for (const auto& f : declared_failures) {
            if (f.level && *f.level > a.recommended_level) cs.push_back(f);
        }
        cs.push_back({ConstraintCode::ReducedScope, a.recommended_level,
                      lname(a.recommended_level) + " only on " + list(chosen.scope) + " of " +
                          list(demo.covered_wps)});
    }
    if (!declared_type) {
        cs.erase(std::remove_if(cs.begin(), cs.end(),
                                [](const Constraint& c) { return c.code == ConstraintCode::NoUseCase; }),
                 cs.end());
        cs.push_back({ConstraintCode::NoUseCase, std::nullopt, "demonstrator references no use-case"});
    }
    Scope unavailable;
    for (const auto& row : ctx.compliance.rows) {
        if (row.failure == ComplianceFailure::Availability) unavailable.insert(row.wp_id);
    }
    if (!unavailable.empty() && declared_type) {
        cs.push_back({ConstraintCode::UseCaseAvailability, std::nullopt,
                      list(demo.use_cases) + " not associated with " + list(unavailable)});
    }
    if (a.shortfall > 0) {
        cs.push_back({ConstraintCode::TargetTrlShortfall, std::nullopt,
                      "target TRL " + std::to_string(demo.target_trl->value()) + " out of reach (achievable " +
                          std::to_string(achievable.value()) + ")"});
    }
    sort_constraints(cs);

    MitigationSet ms;
    for (const auto& c : cs) {
        const auto& scope = c.code == ConstraintCode::ReducedScope ? demo.covered_wps : chosen.scope;
        constraint_mitigations(c, demo, scope, grand, ctx, ms);
    }
    a.mitigations = ms.take();
    return a;
}

} // namespace demoreq
