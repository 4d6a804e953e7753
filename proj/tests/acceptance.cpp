// Acceptance criteria 1-8, one PASS/FAIL line each.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "demoreq/engine.hpp"
#include "demoreq/errors.hpp"
#include "demoreq/render.hpp"
#include "demoreq/trl.hpp"
#include "dot_parse.hpp"
#include "generators.hpp"

namespace demoreq {
namespace {

class Check {
public:
    void require(bool ok, const std::string& what) {
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        if (!ok) ++count_;
    }
    bool ok() const { return count_ == 0; }
    std::string summary() const {
        std::string s;
        for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
        if (count_ > static_cast<int>(failures_.size())) s += "; ...";
        return s;
    }

private:
    std::vector<std::string> failures_;
    int count_ = 0;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool has_constraint(const DemonstratorAssessment& a, ConstraintCode code, std::optional<DemonstrationLevel> level) {
    return std::any_of(a.constraints.begin(), a.constraints.end(),
                       [&](const Constraint& c) { return c.code == code && c.level == level; });
}

void zorro_regression(Check& c) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = run(test::load_corpus("zorro.json"));
    c.require(seconds_since(start) < 1.0, "runtime >= 1 s");

    const auto gap = [&](const std::string& id) {
        for (const auto& g : r.demo_gaps) {
            if (g.demo_id == id) return std::optional(g.category);
        }
        return std::optional<GapCategory>{};
    };
    c.require(gap("industrial") == GapCategory::MajorGap, "industrial gap not MajorGap");
    c.require(gap("dissemination") == GapCategory::MinorGap, "dissemination gap not MinorGap");

    const auto* ind = r.assessment("industrial");
    const auto* dis = r.assessment("dissemination");
    c.require(ind && dis, "missing assessments");
    if (!ind || !dis) return;
    c.require(ind->achievable_trl < TrlLevel(5), "industrial achievable not < 5");
    c.require(ind->shortfall > 0 && dis->shortfall > 0, "targets 5 and 6 not both flagged unreachable");

    std::vector<std::string> unavailable;
    if (const auto* comp = r.compliance_for("industrial")) {
        for (const auto& row : comp->rows) {
            if (row.failure == ComplianceFailure::Availability) unavailable.push_back(row.wp_id);
        }
    }
    c.require(unavailable == std::vector<std::string>{"WP1", "WP4"}, "availability failures not exactly WP1, WP4");
    c.require(has_constraint(*ind, ConstraintCode::UseCaseAvailability, std::nullopt),
              "no CPP availability constraint");
    c.require(ind->recommended_level == DemonstrationLevel::ProofOfIntegration, "industrial not L2");
    c.require(has_constraint(*ind, ConstraintCode::ExtraFunctionalConditional,
                             DemonstrationLevel::OptimisedProofOfIntegration),
              "no L3-conditional constraint");
}

void zorro_what_if(Check& c) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<Override> overrides{parse_override("wp.WP1.use_cases+=CPP"),
                                          parse_override("wp.WP4.use_cases+=CPP"),
                                          parse_override("use_case.CPP.readiness=G3")};
    const auto r = run(test::load_corpus("zorro.json"), {}, overrides);
    c.require(seconds_since(start) < 1.0, "runtime >= 1 s");
    const auto* ind = r.assessment("industrial");
    c.require(ind && ind->recommended_level == DemonstrationLevel::GrandProofOfIntegration, "industrial not L4");
}

void primavera_regression(Check& c) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = run(test::load_corpus("primavera.json"));
    c.require(seconds_since(start) < 1.0, "runtime >= 1 s");
    const auto level = [&](const char* id) {
        const auto* a = r.assessment(id);
        return a ? a->target_level : std::nullopt;
    };
    c.require(level("demo1") == DemonstrationLevel::OptimisedProofOfIntegration, "demo1 target not L3");
    c.require(level("demo2") == DemonstrationLevel::OptimisedProofOfIntegration, "demo2 target not L3");
    c.require(level("demo3") == DemonstrationLevel::OptimisedGrandProofOfIntegration, "demo3 target not L5");
    const auto* d3 = r.assessment("demo3");
    if (!d3) return;
    c.require(has_constraint(*d3, ConstraintCode::NoUnifiedUseCase,
                             DemonstrationLevel::OptimisedGrandProofOfIntegration),
              "demo3 lacks naval coverage constraint");
    c.require(level_number(d3->recommended_level) < 5, "demo3 recommendation not below L5");
}

std::vector<std::vector<std::string>> read_tsv(const std::string& name) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(test::read_text(test::golden_path(name)));
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, '\t')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

void risk_table(Check& c) {
    const auto rows = read_tsv("risk_table.tsv");
    c.require(rows.size() == 6, "golden table shape");
    if (rows.size() != 6) return;
    const std::array types{UseCaseType::Unified, UseCaseType::CoordinatedMulti, UseCaseType::Disparate};
    int cells = 0;
    std::array<std::vector<DemonstrationLevel>, 3> feasible;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto level = level_from_number(static_cast<int>(i));
        for (std::size_t t = 0; t < types.size(); ++t) {
            const auto& expected = rows[i][t + 1];
            c.require(to_string(risk_of(level, types[t])) == expected,
                      std::string(to_string(level)) + "/" + std::string(to_string(types[t])));
            if (expected != "Impractical") feasible[t].push_back(level);
            ++cells;
        }
    }
    c.require(cells == 15, "not 15 cells");
    for (std::size_t t = 0; t < types.size(); ++t) {
        c.require(feasible_levels(types[t]) == feasible[t], "feasible set " + std::string(to_string(types[t])));
    }
    c.require(feasible[0].size() == 5 && feasible[1].size() == 3 && feasible[2].size() == 1, "row-set sizes");
}

void trl_table(Check& c) {
    const auto rows = read_tsv("trl_table.tsv");
    c.require(rows.size() == 9, "golden table shape");
    for (const auto& row : rows) {
        if (row.size() != 3) continue;
        const auto def = trl_definition(TrlLevel(std::stoi(row[0])));
        c.require(def.original_text == row[1], "original TRL " + row[0]);
        c.require(def.adapted_text == row[2], "adapted TRL " + row[0]);
    }
}

TrlLevel own_bound(const test::RandomDag& d, const std::string& id) {
    auto v = d.estimates.at(id);
    if (auto it = d.caps.find(id); it != d.caps.end()) v = std::min(v, it->second);
    return v;
}

void properties(Check& c, int& engine_runs, std::vector<FeedbackEvent>& events, bool& terminated) {
    constexpr int kCases = 1000;
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> trl(1, 9);
    for (int i = 0; i < kCases; ++i) {
        auto d = test::random_dag(rng, 50);
        const auto r = propagate(d.graph, d.estimates, d.caps);
        const auto s = detect_structure(d.graph);
        for (const auto& id : d.graph.nodes) {
            const auto adjusted = r.find(id)->adjusted;
            auto expected = own_bound(d, id);
            for (const auto& u : d.graph.direct_upstream(id)) expected = std::min(expected, r.find(u)->adjusted);
            c.require(adjusted == expected, "fixed point");
            c.require(adjusted <= d.estimates.at(id), "adjusted > estimate");
        }
        for (const auto& id : s.islands) c.require(r.find(id)->adjusted == own_bound(d, id), "island dependence");

        auto nodes = d.graph.nodes;
        auto edges = d.graph.edges;
        std::shuffle(nodes.begin(), nodes.end(), rng);
        std::shuffle(edges.begin(), edges.end(), rng);
        c.require(propagate(make_graph(nodes, edges), d.estimates, d.caps) == r, "permutation changes result");

        auto raised = d;
        const auto& bump = d.graph.nodes[i % d.graph.nodes.size()];
        raised.estimates.at(bump) = TrlLevel::clamped(raised.estimates.at(bump).value() + 2);
        const auto r2 = propagate(raised.graph, raised.estimates, raised.caps);
        for (const auto& id : d.graph.nodes) c.require(r2.find(id)->adjusted >= r.find(id)->adjusted, "monotonicity");
    }

    for (int i = 0; i < kCases; ++i) {
        const auto d = test::random_dag(rng, 8, 0.2);
        const auto r = propagate(d.graph, d.estimates, d.caps);
        std::map<std::string, std::vector<std::string>> upstream;
        for (const auto& e : d.graph.edges) {
            if (e.certainty == Certainty::Direct) upstream[e.to].push_back(e.from);
        }
        for (const auto& id : d.graph.nodes) {
            TrlLevel best = own_bound(d, id);
            std::function<void(const std::string&, TrlLevel)> walk = [&](const std::string& n, TrlLevel folded) {
                best = std::min(best, folded);
                for (const auto& u : upstream[n]) walk(u, std::min(folded, own_bound(d, u)));
            };
            walk(id, own_bound(d, id));
            c.require(r.find(id)->adjusted == best, "brute-force oracle");
        }
    }

    std::uniform_int_distribution<int> iterations(1, 4);
    for (int i = 0; i < kCases; ++i) {
        const auto model = test::random_project(rng, i % 10 == 0 ? 50 : 12);
        EngineConfig config;
        config.max_feedback_iterations = iterations(rng);
        try {
            const auto report = run(model, config);
            ++engine_runs;
            terminated = terminated && report.passes <= config.max_feedback_iterations;
            events.insert(events.end(), report.feedback.begin(), report.feedback.end());
            for (const auto& a : report.assessments) {
                const auto feasible = feasible_levels(a.use_case_type);
                c.require(std::find(feasible.begin(), feasible.end(), a.recommended_level) != feasible.end(),
                          "matrix enforcement");
                if (a.use_case_type == UseCaseType::Disparate) {
                    c.require(a.recommended_level == DemonstrationLevel::ProofOfConcept, "Disparate above L1");
                }
            }
        } catch (const IterationLimitExceeded& e) {
            terminated = terminated && e.limit() == config.max_feedback_iterations;
        }
    }
}

void round_trips(Check& c) {
    for (const auto* name : {"zorro.json", "primavera.json"}) {
        const auto model = test::load_corpus(name);
        c.require(parse_model(serialize_model(model)) == model, std::string("model ") + name);
        const auto report = run(model);
        c.require(parse_machine_report(render_machine(report)) == report, std::string("report ") + name);
        const auto graph = build_graph(consolidate(model));
        try {
            const auto g = test::parse_dot(render_dot(graph, model, detect_structure(graph)));
            c.require(boost::num_vertices(g) == graph.nodes.size(), std::string("dot nodes ") + name);
            c.require(boost::num_edges(g) == graph.edges.size(), std::string("dot edges ") + name);
        } catch (const std::exception& e) {
            c.require(false, std::string("dot rejected: ") + e.what());
        }
    }
}

} // namespace
} // namespace demoreq

int main() {
    using namespace demoreq;
    int failed = 0;
    auto report = [&](int n, const char* title, const std::function<void(Check&)>& body) {
        Check c;
        try {
            body(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        std::cout << (c.ok() ? "PASS" : "FAIL") << " " << n << " " << title;
        if (!c.ok()) std::cout << " (" << c.summary() << ")";
        std::cout << "\n";
        if (!c.ok()) ++failed;
    };

    int engine_runs = 0;
    std::vector<FeedbackEvent> events;
    bool terminated = true;

    report(1, "ZORRO corpus regression", zorro_regression);
    report(2, "ZORRO what-if raises industrial demo to L4", zorro_what_if);
    report(3, "PrimaVera corpus regression", primavera_regression);
    report(4, "risk matrix golden table", risk_table);
    report(5, "TRL scale golden table", trl_table);
    report(6, "property suite", [&](Check& c) {
        properties(c, engine_runs, events, terminated);
        c.require(engine_runs > 500, "too few completed engine runs");
    });
    report(7, "round trips (model, machine report, DOT)", round_trips);
    report(8, "feedback discipline", [&](Check& c) {
        c.require(engine_runs > 0, "property suite did not run");
        for (const auto& e : events) c.require(is_allowed_route(e.from_block, e.to_block), "route outside allowed set");
        c.require(terminated, "run exceeded configured iterations");
        for (const auto* name : {"zorro.json", "primavera.json"}) {
            for (const auto& e : run(test::load_corpus(name)).feedback) {
                c.require(is_allowed_route(e.from_block, e.to_block), "corpus route outside allowed set");
            }
        }
    });
    return failed == 0 ? 0 : 1;
}
