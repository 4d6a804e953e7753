#include <algorithm>

#include <gtest/gtest.h>

#include "demoreq/engine.hpp"
#include "demoreq/errors.hpp"
#include "support.hpp"

namespace demoreq {
namespace {

std::vector<Override> zorro_cpp_overrides() {
    return {parse_override("wp.WP1.use_cases+=CPP"), parse_override("wp.WP4.use_cases+=CPP"),
            parse_override("use_case.CPP.readiness=G3")};
}

bool has_constraint(const DemonstratorAssessment& a, ConstraintCode code, std::optional<DemonstrationLevel> level) {
    return std::any_of(a.constraints.begin(), a.constraints.end(),
                       [&](const Constraint& c) { return c.code == code && c.level == level; });
}

const Mitigation* find_mitigation(const DemonstratorAssessment& a, const std::string& text) {
    for (const auto& m : a.mitigations) {
        if (m.text == text) return &m;
    }
    return nullptr;
}

TEST(Engine, ZorroBaseline) {
    const auto r = run(test::load_corpus("zorro.json"));
    EXPECT_EQ(r.project, "ZORRO");

    ASSERT_EQ(r.demo_gaps.size(), 2u);
    EXPECT_EQ(r.demo_gaps[0].category, GapCategory::MinorGap);
    EXPECT_EQ(r.demo_gaps[1].category, GapCategory::MajorGap);

    const auto* ind = r.assessment("industrial");
    const auto* dis = r.assessment("dissemination");
    ASSERT_TRUE(ind && dis);
    EXPECT_LT(ind->achievable_trl, TrlLevel(5));
    EXPECT_GT(ind->shortfall, 0);
    EXPECT_GT(dis->shortfall, 0);

    EXPECT_EQ(ind->declared_type, UseCaseType::Disparate);
    EXPECT_EQ(ind->use_case_type, UseCaseType::Unified);
    EXPECT_EQ(ind->target_level, DemonstrationLevel::GrandProofOfIntegration);
    EXPECT_EQ(ind->recommended_level, DemonstrationLevel::ProofOfIntegration);
    EXPECT_EQ(ind->recommended_scope, (std::vector<std::string>{"WP2", "WP3"}));
    EXPECT_TRUE(has_constraint(*ind, ConstraintCode::ExtraFunctionalConditional,
                               DemonstrationLevel::OptimisedProofOfIntegration));
    EXPECT_TRUE(has_constraint(*ind, ConstraintCode::UseCaseAvailability, std::nullopt));

    const auto* assoc = find_mitigation(*ind, "associate CPP use-case with WP1, WP4");
    ASSERT_NE(assoc, nullptr);
    EXPECT_EQ(assoc->unlocks, DemonstrationLevel::GrandProofOfIntegration);
    const auto* grade = find_mitigation(*ind, "raise CPP artifact readiness to G3 for WP2, WP3");
    ASSERT_NE(grade, nullptr);
    EXPECT_EQ(grade->unlocks, DemonstrationLevel::OptimisedProofOfIntegration);

    const auto* comp = r.compliance_for("industrial");
    ASSERT_NE(comp, nullptr);
    std::vector<std::string> unavailable;
    for (const auto& row : comp->rows) {
        if (row.failure == ComplianceFailure::Availability) unavailable.push_back(row.wp_id);
    }
    EXPECT_EQ(unavailable, (std::vector<std::string>{"WP1", "WP4"}));

    EXPECT_EQ(r.passes, 2);
    const auto rerun = std::find_if(r.feedback.begin(), r.feedback.end(), [](const FeedbackEvent& e) {
        return e.from_block == 5 && e.to_block == 3 && e.rerun && e.demo_id == "industrial";
    });
    EXPECT_NE(rerun, r.feedback.end());
    EXPECT_TRUE(targets_unmet(r));
}

TEST(Engine, ZorroWhatIfReachesGrandIntegration) {
    const auto model = test::load_corpus("zorro.json");
    const auto overrides = zorro_cpp_overrides();
    const auto r = run(model, {}, overrides);
    const auto* ind = r.assessment("industrial");
    ASSERT_NE(ind, nullptr);
    EXPECT_EQ(ind->recommended_level, DemonstrationLevel::GrandProofOfIntegration);
    EXPECT_EQ(ind->declared_type, UseCaseType::Unified);
    EXPECT_EQ(ind->achievable_trl, TrlLevel(5));
    EXPECT_EQ(r.overrides, overrides);

    const auto diff = diff_reports(run(model), r);
    ASSERT_FALSE(diff.recommendations.empty());
    const auto it = std::find_if(diff.recommendations.begin(), diff.recommendations.end(),
                                 [](const LevelChange& c) { return c.demo_id == "industrial"; });
    ASSERT_NE(it, diff.recommendations.end());
    EXPECT_EQ(it->before, DemonstrationLevel::ProofOfIntegration);
    EXPECT_EQ(it->after, DemonstrationLevel::GrandProofOfIntegration);
}

TEST(Engine, OverridesCommuteWithEditing) {
    const auto model = test::load_corpus("zorro.json");
    const auto overrides = zorro_cpp_overrides();
    auto via_overrides = run(model, {}, overrides);
    auto via_edit = run(apply_overrides(model, overrides));
    via_overrides.overrides.clear();
    EXPECT_EQ(via_overrides, via_edit);
}

TEST(Engine, PrimaveraTargetsAndDemo3) {
    const auto r = run(test::load_corpus("primavera.json"));
    ASSERT_EQ(r.assessments.size(), 3u);
    EXPECT_EQ(r.assessment("demo1")->target_level, DemonstrationLevel::OptimisedProofOfIntegration);
    EXPECT_EQ(r.assessment("demo2")->target_level, DemonstrationLevel::OptimisedProofOfIntegration);
    const auto* d3 = r.assessment("demo3");
    EXPECT_EQ(d3->target_level, DemonstrationLevel::OptimisedGrandProofOfIntegration);
    EXPECT_EQ(d3->declared_type, UseCaseType::CoordinatedMulti);
    EXPECT_LT(level_number(d3->recommended_level), 5);
    EXPECT_TRUE(has_constraint(*d3, ConstraintCode::NoUnifiedUseCase,
                               DemonstrationLevel::OptimisedGrandProofOfIntegration));
    EXPECT_NE(find_mitigation(*d3, "associate Damen use-case with WP4, WP5"), nullptr);
    EXPECT_EQ(r.incomplete_wps.size(), 5u);
    EXPECT_TRUE(r.gaps.empty());
}

TEST(Engine, RejectsInvalidModel) {
    auto m = test::load_corpus("zorro.json");
    m.dependencies.push_back({"WP3", "WP2", DependencyKind::Data, Certainty::Direct});
    EXPECT_THROW(run(m), ValidationFailed);
}

TEST(Engine, IterationLimit) {
    EngineConfig config;
    config.max_feedback_iterations = 1;
    EXPECT_THROW(run(test::load_corpus("zorro.json"), config), IterationLimitExceeded);
    config.max_feedback_iterations = 2;
    EXPECT_NO_THROW(run(test::load_corpus("zorro.json"), config));
}

TEST(Engine, TrivialModelMeetsTargets) {
    ProjectModel m;
    m.name = "one";
    m.work_packages = {test::wp("WP1", 4, 4)};
    const auto r = run(m);
    EXPECT_FALSE(targets_unmet(r));
    EXPECT_EQ(r.passes, 1);
    EXPECT_TRUE(r.feedback.empty());
}

TEST(Engine, Deterministic) {
    const auto m = test::load_corpus("primavera.json");
    EXPECT_EQ(run(m), run(m));
}

TEST(Engine, FeedbackRoutes) {
    EXPECT_TRUE(is_allowed_route(4, 1));
    EXPECT_TRUE(is_allowed_route(4, 2));
    EXPECT_TRUE(is_allowed_route(5, 3));
    EXPECT_TRUE(is_allowed_route(6, 3));
    EXPECT_FALSE(is_allowed_route(6, 1));
    EXPECT_FALSE(is_allowed_route(3, 5));
    for (const auto* name : {"zorro.json", "primavera.json"}) {
        const auto r = run(test::load_corpus(name));
        for (const auto& e : r.feedback) EXPECT_TRUE(is_allowed_route(e.from_block, e.to_block));
        EXPECT_TRUE(std::is_sorted(r.feedback.begin(), r.feedback.end(), [](const auto& a, const auto& b) {
            return std::tie(a.iteration, a.from_block, a.to_block, a.demo_id) <
                   std::tie(b.iteration, b.from_block, b.to_block, b.demo_id);
        }));
    }
}

TEST(Diff, IdenticalAndMismatched) {
    const auto z = run(test::load_corpus("zorro.json"));
    EXPECT_TRUE(diff_reports(z, z).empty());
    EXPECT_THROW(diff_reports(z, run(test::load_corpus("primavera.json"))), ProjectMismatch);
}

TEST(Overrides, Parse) {
    const auto o = parse_override("demo.industrial.covered_wps-=WP1,WP4");
    EXPECT_EQ(o.target, "demo");
    EXPECT_EQ(o.id, "industrial");
    EXPECT_EQ(o.field, "covered_wps");
    EXPECT_EQ(o.op, OverrideOp::Remove);
    EXPECT_EQ(o.value, "WP1,WP4");
    EXPECT_EQ(parse_override(o.text()), o);
    EXPECT_THROW(parse_override("wp.WP1"), OverrideError);
    EXPECT_THROW(parse_override("wp.WP1=3"), OverrideError);
    EXPECT_THROW(parse_override("node.WP1.estimated_trl=3"), OverrideError);
}

TEST(Overrides, Apply) {
    const auto m = test::load_corpus("zorro.json");
    const std::vector<Override> ok{parse_override("wp.WP2.estimated_trl=3"), parse_override("wp.WP1.target_trl="),
                                   parse_override("demo.industrial.use_cases+=TFS"),
                                   parse_override("use_case.TFS.framework_group=g")};
    const auto edited = apply_overrides(m, ok);
    EXPECT_EQ(edited.find_wp("WP2")->estimated_trl, TrlLevel(3));
    EXPECT_FALSE(edited.find_wp("WP1")->target_trl);
    EXPECT_TRUE(edited.find_demonstrator("industrial")->use_cases.contains("TFS"));
    EXPECT_EQ(edited.find_use_case("TFS")->framework_group, "g");

    for (const auto* bad : {"wp.WP9.estimated_trl=3", "wp.WP1.estimated_trl=10", "wp.WP1.colour=red",
                            "wp.WP1.use_cases+=Nobody", "use_case.CPP.readiness=G7", "wp.WP1.estimated_trl+=3",
                            "demo.industrial.covered_wps+=WP42"}) {
        const std::vector<Override> one{parse_override(bad)};
        EXPECT_THROW(apply_overrides(m, one), OverrideError) << bad;
    }
}

TEST(Config, ParseSerializeValidate) {
    EngineConfig defaults;
    EXPECT_EQ(parse_config(serialize_config(defaults)), defaults);
    EXPECT_EQ(parse_config("{}"), defaults);

    const auto c = parse_config(R"({"gap_thresholds":{"minor":2,"major":3},"max_feedback_iterations":5,
                                    "level_bands":{"L4":7},"extra_functional_attributes":["latency"]})");
    EXPECT_EQ(c.gap_thresholds.minor, 2);
    EXPECT_EQ(c.max_feedback_iterations, 5);
    EXPECT_EQ(c.level_bands.band(DemonstrationLevel::GrandProofOfIntegration), TrlLevel(7));
    EXPECT_EQ(c.extra_functional_attributes, (std::vector<std::string>{"latency"}));
    EXPECT_EQ(parse_config(serialize_config(c)), c);

    EXPECT_THROW(parse_config(R"({"colour":1})"), SchemaError);
    EXPECT_THROW(parse_config(R"({"max_feedback_iterations":0})"), SchemaError);
    EXPECT_THROW(parse_config(R"({"gap_thresholds":{"minor":3,"major":2}})"), SchemaError);
    EXPECT_THROW(parse_config(R"({"grade_caps":{"G2":2}})"), SchemaError);
    EXPECT_THROW(parse_config("{"), SyntaxError);
}

} // namespace
} // namespace demoreq
