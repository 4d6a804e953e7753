#include <cstdlib>
#include <fstream>

#include <gtest/gtest.h>

#include "demoreq/engine.hpp"
#include "demoreq/errors.hpp"
#include "demoreq/render.hpp"
#include "dot_parse.hpp"
#include "support.hpp"

namespace demoreq {
namespace {

void expect_golden(const std::string& name, const std::string& actual) {
    const auto path = test::golden_path(name);
    if (std::getenv("DEMOREQ_UPDATE_GOLDEN")) {
        std::ofstream(path, std::ios::binary) << actual;
        return;
    }
    EXPECT_EQ(actual, test::read_text(path)) << "golden mismatch: " << name;
}

TEST(MachineReport, RoundTrips) {
    const std::vector<Override> overrides{parse_override("use_case.CPP.readiness=G2"),
                                          parse_override("wp.WP1.use_cases+=CPP")};
    for (const auto& report : {run(test::load_corpus("zorro.json")), run(test::load_corpus("primavera.json")),
                               run(test::load_corpus("zorro.json"), {}, overrides)}) {
        const auto text = render_machine(report);
        EXPECT_NE(text.find("\"report_version\": 1"), std::string::npos);
        const auto back = parse_machine_report(text);
        EXPECT_EQ(back, report);
        EXPECT_EQ(render_machine(back), text);
    }
}

TEST(MachineReport, RejectsBadDocuments) {
    EXPECT_THROW(parse_machine_report("[1,"), SyntaxError);
    EXPECT_THROW(parse_machine_report(R"({"report_version": 2})"), SchemaError);
    EXPECT_THROW(parse_machine_report(R"({"report_version": 1})"), SchemaError);
}

TEST(TextReport, ZorroGolden) {
    const auto model = test::load_corpus("zorro.json");
    const auto text = render_text(run(model), model);
    EXPECT_EQ(text, render_text(run(model), model));
    EXPECT_NE(text.find("recommended: L2 Proof of integration"), std::string::npos);
    for (int block = 1; block <= 7; ++block) {
        EXPECT_NE(text.find("\n[" + std::to_string(block) + "] "), std::string::npos) << block;
    }
    expect_golden("zorro_report.txt", text);
}

TEST(TextReport, PrimaveraGolden) {
    const auto model = test::load_corpus("primavera.json");
    expect_golden("primavera_report.txt", render_text(run(model), model));
}

TEST(Dot, PrimaveraChainAndDashedInputs) {
    const auto model = test::load_corpus("primavera.json");
    const auto graph = build_graph(consolidate(model));
    const auto dot = render_dot(graph, model, detect_structure(graph));
    const auto g = test::parse_dot(dot);
    EXPECT_EQ(boost::num_vertices(g), 6u);
    int solid = 0;
    int dashed_into_wp6 = 0;
    for (auto [it, end] = boost::edges(g); it != end; ++it) {
        const auto& e = g[*it];
        if (e.style == "solid") ++solid;
        if (e.style == "dashed" && g[boost::target(*it, g)].name == "WP6") ++dashed_into_wp6;
    }
    EXPECT_EQ(solid, 4);
    EXPECT_EQ(dashed_into_wp6, 5);
    for (auto [it, end] = boost::vertices(g); it != end; ++it) {
        const auto& v = g[*it];
        EXPECT_EQ(v.label.rfind(v.name + ": ", 0), 0u) << v.label;
        EXPECT_TRUE(v.xlabel.empty());
    }
}

TEST(Dot, ZorroHasDashedEdgesIntoWp5) {
    const auto model = test::load_corpus("zorro.json");
    const auto graph = build_graph(consolidate(model));
    const auto g = test::parse_dot(render_dot(graph, model, detect_structure(graph)));
    int dashed = 0;
    for (auto [it, end] = boost::edges(g); it != end; ++it) {
        if (g[*it].style == "dashed" && g[boost::target(*it, g)].name == "WP5") ++dashed;
    }
    EXPECT_EQ(dashed, 4);
}

TEST(Dot, EdgelessModel) {
    ProjectModel m;
    m.name = "Edge \"less\"";
    m.work_packages = {test::wp("WP1", 3), test::wp("WP2", 3)};
    const auto graph = build_graph(consolidate(m));
    const auto dot = render_dot(graph, m, detect_structure(graph));
    EXPECT_EQ(dot.find("->"), std::string::npos);
    const auto g = test::parse_dot(dot);
    EXPECT_EQ(boost::num_vertices(g), 2u);
    EXPECT_EQ(boost::num_edges(g), 0u);
    for (auto [it, end] = boost::vertices(g); it != end; ++it) EXPECT_EQ(g[*it].xlabel, "island");
}

TEST(Diff, RendersChanges) {
    const auto model = test::load_corpus("zorro.json");
    const std::vector<Override> overrides{parse_override("wp.WP1.use_cases+=CPP"),
                                          parse_override("wp.WP4.use_cases+=CPP"),
                                          parse_override("use_case.CPP.readiness=G3")};
    const auto text = render_diff(diff_reports(run(model), run(model, {}, overrides)));
    EXPECT_NE(text.find("level industrial: L2 Proof of integration -> L4 Grand proof of integration"),
              std::string::npos);
    EXPECT_EQ(render_diff({}), "no changes\n");
}

} // namespace
} // namespace demoreq
