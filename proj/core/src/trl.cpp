#include "demoreq/trl.hpp"

#include <algorithm>
#include <array>

#include "demoreq/errors.hpp"

namespace demoreq {

namespace {

struct Texts {
    std::string_view original;
    std::string_view adapted;
};

constexpr std::array<Texts, 9> kTable{{
    {"Basic principles observed and reported",
     "Basic principles or algorithms identified and described"},
    {"Technology concept and/or application formulated",
     "Software concept and intended application formulated"},
    {"Analytical and experimental critical function and/or characteristic proof-of-concept",
     "Proof-of-concept algorithms developed and demonstrated in analytical or simulation environments"},
    {"Component and/or breadboard validation in laboratory environment",
     "Individual software components prototyped and tested in controlled lab conditions"},
    {"Component and/or breadboard validation in relevant environment",
     "Software modules integrated and tested with representative data and interfaces in a simulated or "
     "partially relevant environment"},
    {"System/subsystem model or prototype demonstration in a relevant environment (ground or space)",
     "Prototype software integrated with relevant subsystems and tested in a relevant environment, e.g., "
     "hardware-in-the-loop"},
    {"System prototype demonstration in a space environment",
     "Integrated software prototype demonstrated in an operational or high-fidelity simulated environment"},
    {"Actual system completed and \"flight qualified\" through test and demonstration (ground or space)",
     "Fully developed software system qualified through rigorous testing under expected operational "
     "conditions"},
    {"Actual system \"flight proven\" through successful mission operations",
     "Software system validated through successful operational use in the target environment"},
}};

bool gap_tracked(const WorkPackage& wp) { return is_analyzed(wp) && is_trl_tracked(wp); }

} // namespace

TrlDefinition trl_definition(TrlLevel level) {
    const auto& row = kTable[static_cast<std::size_t>(level.value() - 1)];
    return {level, row.original, row.adapted};
}

GapCategory categorize(int gap, const GapThresholds& thresholds) {
    if (gap < thresholds.minor) return GapCategory::OnTrack;
    if (gap < thresholds.major) return GapCategory::MinorGap;
    return GapCategory::MajorGap;
}

std::vector<WpGap> partial_gap_table(const ConsolidatedInput& input, const GapThresholds& thresholds,
                                     std::vector<std::string>& incomplete) {
    std::vector<WpGap> rows;
    incomplete.clear();
    for (const auto& wp : input.model.work_packages) {
        if (!gap_tracked(wp)) continue;
        if (!wp.target_trl || !wp.estimated_trl) {
            incomplete.push_back(wp.id);
            continue;
        }
        const int gap = wp.target_trl->value() - wp.estimated_trl->value();
        rows.push_back({wp.id, *wp.target_trl, *wp.estimated_trl, gap, categorize(gap, thresholds)});
    }
    std::sort(rows.begin(), rows.end(), [](const WpGap& a, const WpGap& b) { return a.wp_id < b.wp_id; });
    std::sort(incomplete.begin(), incomplete.end());
    return rows;
}

std::vector<WpGap> gap_table(const ConsolidatedInput& input, const GapThresholds& thresholds) {
    std::vector<std::string> incomplete;
    auto rows = partial_gap_table(input, thresholds, incomplete);
    if (!incomplete.empty()) throw IncompleteInput(std::move(incomplete));
    return rows;
}

std::vector<DemoGap> demo_gap_table(const ConsolidatedInput& input, const GapThresholds& thresholds) {
    std::vector<DemoGap> rows;
    for (const auto& demo : input.model.demonstrators) {
        if (!demo.target_trl) continue;
        std::optional<TrlLevel> level;
        for (const auto& id : demo.covered_wps) {
            const auto* wp = input.model.find_wp(id);
            if (!wp || !gap_tracked(*wp)) continue;
            const auto own = wp->target_trl ? wp->target_trl : wp->estimated_trl;
            if (own && (!level || *own < *level)) level = own;
        }
        if (!level) continue;
        const int gap = demo.target_trl->value() - level->value();
        rows.push_back({demo.id, *demo.target_trl, *level, gap, categorize(gap, thresholds)});
    }
    std::sort(rows.begin(), rows.end(), [](const DemoGap& a, const DemoGap& b) { return a.demo_id < b.demo_id; });
    return rows;
}

} // namespace demoreq
