#include <sstream>

#include <gtest/gtest.h>

#include "demoreq/errors.hpp"
#include "demoreq/feasibility.hpp"
#include "support.hpp"

namespace demoreq {
namespace {

using test::dep;
using test::demo;
using test::use_case;
using test::wp;

std::map<std::string, std::map<std::string, std::string>> golden_risks() {
    std::map<std::string, std::map<std::string, std::string>> out;
    std::istringstream in(test::read_text(test::golden_path("risk_table.tsv")));
    std::string line;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, '\t')) cells.push_back(cell);
        if (header.empty()) {
            header = cells;
            continue;
        }
        for (std::size_t i = 1; i < cells.size(); ++i) out[cells[0]][header[i]] = cells[i];
    }
    return out;
}

TEST(RiskMatrix, MatchesGoldenTable) {
    const auto golden = golden_risks();
    ASSERT_EQ(golden.size(), 5u);
    int cells = 0;
    for (const auto level : kAllLevels) {
        for (const auto type : {UseCaseType::Unified, UseCaseType::CoordinatedMulti, UseCaseType::Disparate}) {
            const auto& expected = golden.at(std::string(to_string(level))).at(std::string(to_string(type)));
            EXPECT_EQ(to_string(risk_of(level, type)), expected) << to_string(level) << " " << to_string(type);
            ++cells;
        }
    }
    EXPECT_EQ(cells, 15);
}

TEST(RiskMatrix, FeasibleLevelsAreTheNonImpracticalCells) {
    const auto golden = golden_risks();
    for (const auto type : {UseCaseType::Unified, UseCaseType::CoordinatedMulti, UseCaseType::Disparate}) {
        std::vector<DemonstrationLevel> expected;
        for (const auto level : kAllLevels) {
            if (golden.at(std::string(to_string(level))).at(std::string(to_string(type))) != "Impractical") {
                expected.push_back(level);
            }
        }
        EXPECT_EQ(feasible_levels(type), expected) << to_string(type);
    }
    EXPECT_EQ(feasible_levels(UseCaseType::Unified).size(), 5u);
    EXPECT_EQ(feasible_levels(UseCaseType::CoordinatedMulti).size(), 3u);
    EXPECT_EQ(feasible_levels(UseCaseType::Disparate),
              (std::vector<DemonstrationLevel>{DemonstrationLevel::ProofOfConcept}));
}

TEST(Achievable, MinimumWithConnectivityCap) {
    const auto g = make_graph({"A", "B", "C"}, {{"A", "B"}});
    AdjustedTrlMap adj;
    for (const auto* id : {"A", "B", "C"}) adj.entries[id] = {TrlLevel(6), std::nullopt, TrlLevel(6), std::nullopt};
    adj.entries["B"].adjusted = TrlLevel(5);
    EXPECT_EQ(achievable_scope_trl({"A", "B"}, adj, g, TrlLevel(4)), TrlLevel(5));
    EXPECT_EQ(achievable_scope_trl({"A", "C"}, adj, g, TrlLevel(4)), TrlLevel(4));
    EXPECT_EQ(achievable_scope_trl({"C"}, adj, g, TrlLevel(4)), TrlLevel(6));
    EXPECT_THROW(achievable_scope_trl({"A", "Q"}, adj, g, TrlLevel(4)), UnknownWp);
    EXPECT_EQ(achievable_demo_trl(demo("D", {"A", "B"}, {}), adj, g), TrlLevel(5));
}

TEST(Classify, UseCaseTypes) {
    ProjectModel m;
    m.work_packages = {wp("A", 4, 4, {"U", "V"}), wp("B", 4, 4, {"U"}), wp("C", 4, 4, {"W"})};
    m.use_cases = {use_case("U"), use_case("V", std::nullopt, "g"), use_case("W", std::nullopt, "g")};
    EXPECT_EQ(classify_use_case_type(demo("D", {"A", "B"}, {"U"}), m), UseCaseType::Unified);
    EXPECT_EQ(classify_use_case_type(demo("D", {"A", "C"}, {"V", "W"}), m), UseCaseType::CoordinatedMulti);
    EXPECT_EQ(classify_use_case_type(demo("D", {"A", "C"}, {"U", "W"}), m), UseCaseType::Disparate);
    EXPECT_EQ(classify_use_case_type(demo("D", {"A", "B", "C"}, {"V"}), m), UseCaseType::Disparate);
    EXPECT_THROW(classify_use_case_type(demo("D", {"A"}, {}), m), NoUseCase);
}

TEST(Classify, Corpus) {
    const auto z = test::load_corpus("zorro.json");
    EXPECT_EQ(classify_use_case_type(*z.find_demonstrator("industrial"), z), UseCaseType::Disparate);
    const auto p = test::load_corpus("primavera.json");
    EXPECT_EQ(classify_use_case_type(*p.find_demonstrator("demo1"), p), UseCaseType::Unified);
    EXPECT_EQ(classify_use_case_type(*p.find_demonstrator("demo2"), p), UseCaseType::Unified);
    EXPECT_EQ(classify_use_case_type(*p.find_demonstrator("demo3"), p), UseCaseType::CoordinatedMulti);
}

TEST(TargetLevel, DescribedAndLowered) {
    const std::set<std::string> grand{"A", "B", "C"};
    const LevelBands bands;
    auto d = demo("D", {"A", "B", "C"}, {}, 7, Qualities::FunctionalAndExtraFunctional);
    EXPECT_EQ(described_level(d, grand), DemonstrationLevel::OptimisedGrandProofOfIntegration);
    EXPECT_EQ(target_level(d, grand, bands), DemonstrationLevel::OptimisedGrandProofOfIntegration);
    d.target_trl = TrlLevel(6);
    EXPECT_EQ(target_level(d, grand, bands), DemonstrationLevel::GrandProofOfIntegration);
    d.covered_wps = {"A", "B"};
    EXPECT_EQ(target_level(d, grand, bands), DemonstrationLevel::OptimisedProofOfIntegration);
    d.qualities = Qualities::FunctionalOnly;
    EXPECT_EQ(target_level(d, grand, bands), DemonstrationLevel::ProofOfIntegration);
    d.target_trl = TrlLevel(4);
    EXPECT_EQ(target_level(d, grand, bands), DemonstrationLevel::ProofOfConcept);
    d.covered_wps = {"A"};
    EXPECT_EQ(described_level(d, grand), DemonstrationLevel::ProofOfConcept);
    d.target_trl.reset();
    EXPECT_FALSE(target_level(d, grand, bands));
    EXPECT_TRUE(bands.monotone());
}

struct Fixture {
    ConsolidatedInput input;
    WpGraph graph;
    StructureReport structure;
    AdjustedTrlMap adjusted;
    ComplianceReport compliance;

    Fixture(const ProjectModel& m, const std::string& demo_id) : input(consolidate(m)) {
        graph = build_graph(input);
        structure = detect_structure(graph);
        std::map<std::string, TrlLevel> est;
        for (const auto& w : input.model.work_packages) {
            if (w.estimated_trl) est.emplace(w.id, *w.estimated_trl);
        }
        std::set<std::string> keep;
        for (const auto& [id, _] : est) keep.insert(id);
        adjusted = propagate(induced_subgraph(graph, keep), est, {});
        const auto& d = *input.model.find_demonstrator(demo_id);
        compliance = assess_compliance(input, d, d.target_trl.value_or(TrlLevel(5)));
    }

    DemoContext ctx() const { return {input.model, graph, adjusted, compliance, structure, {}}; }
};

TEST(Recommend, UnifiedChainReachesTarget) {
    ProjectModel m;
    m.name = "chain";
    m.work_packages = {wp("A", 6, 6, {"U"}), wp("B", 6, 6, {"U"}), wp("C", 6, 6, {"U"})};
    m.dependencies = {dep("A", "B"), dep("B", "C")};
    m.use_cases = {use_case("U", ReadinessGrade::IndustrialBaselines)};
    m.demonstrators = {demo("D", {"A", "B", "C"}, {"U"}, 6)};
    const Fixture f(m, "D");
    const auto a = recommend_level(m.demonstrators[0], TrlLevel(6), UseCaseType::Unified, f.ctx());
    EXPECT_EQ(a.target_level, DemonstrationLevel::GrandProofOfIntegration);
    EXPECT_EQ(a.recommended_level, DemonstrationLevel::GrandProofOfIntegration);
    EXPECT_EQ(a.risk, RiskLevel::Moderate);
    EXPECT_EQ(a.recommended_scope, (std::vector<std::string>{"A", "B", "C"}));
    EXPECT_TRUE(a.constraints.empty());
    EXPECT_TRUE(a.mitigations.empty());
}

TEST(Recommend, DisparateStaysAtProofOfConcept) {
    ProjectModel m;
    m.name = "disparate";
    m.work_packages = {wp("A", 6, 6, {"U"}), wp("B", 6, 6, {"V"})};
    m.dependencies = {dep("A", "B")};
    m.use_cases = {use_case("U", ReadinessGrade::IndustrialBaselines),
                   use_case("V", ReadinessGrade::IndustrialBaselines)};
    m.demonstrators = {demo("D", {"A", "B"}, {"U", "V"}, 5)};
    const Fixture f(m, "D");
    const auto a = recommend_level(m.demonstrators[0], TrlLevel(6), UseCaseType::Disparate, f.ctx());
    EXPECT_EQ(a.declared_type, UseCaseType::Disparate);
    EXPECT_EQ(a.target_level, DemonstrationLevel::ProofOfIntegration);
    // A one-WP sub-scope is never adopted (no integration), so L1 remains.
    EXPECT_EQ(a.recommended_level, DemonstrationLevel::ProofOfConcept);
    EXPECT_TRUE(a.impractical_target);
    EXPECT_FALSE(a.mitigations.empty());
}

TEST(Recommend, NoUseCaseConstraint) {
    ProjectModel m;
    m.name = "bare";
    m.work_packages = {wp("A", 6, 6), wp("B", 6, 6)};
    m.dependencies = {dep("A", "B")};
    m.demonstrators = {demo("D", {"A", "B"}, {}, 5)};
    const Fixture f(m, "D");
    const auto a = recommend_level(m.demonstrators[0], TrlLevel(6), std::nullopt, f.ctx());
    EXPECT_EQ(a.recommended_level, DemonstrationLevel::ProofOfConcept);
    bool found = false;
    for (const auto& c : a.constraints) found = found || (c.code == ConstraintCode::NoUseCase && !c.level);
    EXPECT_TRUE(found);
}

TEST(Recommend, NotConnectedBlocksIntegration) {
    ProjectModel m;
    m.name = "split";
    m.work_packages = {wp("A", 6, 6, {"U"}), wp("B", 6, 6, {"U"})};
    m.use_cases = {use_case("U", ReadinessGrade::IndustrialBaselines)};
    m.demonstrators = {demo("D", {"A", "B"}, {"U"}, 5)};
    const Fixture f(m, "D");
    const auto a = recommend_level(m.demonstrators[0], TrlLevel(4), UseCaseType::Unified, f.ctx());
    EXPECT_EQ(a.recommended_level, DemonstrationLevel::ProofOfConcept);
    bool not_connected = false;
    bool define_edge = false;
    for (const auto& c : a.constraints) not_connected = not_connected || c.code == ConstraintCode::NotConnected;
    for (const auto& mit : a.mitigations) define_edge = define_edge || mit.kind == MitigationKind::DefineDependency;
    EXPECT_TRUE(not_connected);
    EXPECT_TRUE(define_edge);
}

TEST(Shortfall, ZorroIndustrialMitigations) {
    const auto m = test::load_corpus("zorro.json");
    const Fixture f(m, "industrial");
    const auto r = shortfall_analysis(*f.input.model.find_demonstrator("industrial"), TrlLevel(4), f.ctx());
    EXPECT_EQ(r.shortfall, 2);
    bool associate = false;
    for (const auto& mit : r.mitigations) {
        associate = associate || mit.text == "associate CPP use-case with WP1, WP4";
    }
    EXPECT_TRUE(associate);
    EXPECT_EQ(shortfall_analysis(*f.input.model.find_demonstrator("industrial"), TrlLevel(6), f.ctx()).shortfall,
              0);
}

} // namespace
} // namespace demoreq
