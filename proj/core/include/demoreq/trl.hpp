#pragma once

// TRL scale definitions (original and software-adapted) and per-WP gap analysis.

#include <string_view>
#include <vector>

#include "demoreq/model.hpp"

namespace demoreq {

struct TrlDefinition {
    TrlLevel level{1};
    std::string_view original_text;
    std::string_view adapted_text;
};

TrlDefinition trl_definition(TrlLevel level);

enum class GapCategory { OnTrack, MinorGap, MajorGap };

/// gap < minor -> OnTrack; minor <= gap < major -> MinorGap; gap >= major -> MajorGap.
struct GapThresholds {
    int minor = 1;
    int major = 2;

    bool operator==(const GapThresholds&) const = default;
};

GapCategory categorize(int gap, const GapThresholds& thresholds = {});

struct WpGap {
    std::string wp_id;
    TrlLevel target{1};
    TrlLevel estimated{1};
    int gap = 0;
    GapCategory category = GapCategory::OnTrack;

    bool operator==(const WpGap&) const = default;
};

/// One row per gap-tracked, analyzed WP, sorted by id. Throws IncompleteInput
/// naming every such WP that lacks a target or an estimate.
std::vector<WpGap> gap_table(const ConsolidatedInput& input, const GapThresholds& thresholds = {});

/// Non-throwing variant used by the engine: rows for complete WPs, ids of the
/// incomplete ones in `incomplete`.
std::vector<WpGap> partial_gap_table(const ConsolidatedInput& input, const GapThresholds& thresholds,
                                     std::vector<std::string>& incomplete);

/// Demonstrator target compared with the per-WP level of its coverage
/// (lowest per-WP target; the estimate stands in where a target is absent).
struct DemoGap {
    std::string demo_id;
    TrlLevel target{1};
    TrlLevel per_wp_level{1};
    int gap = 0;
    GapCategory category = GapCategory::OnTrack;

    bool operator==(const DemoGap&) const = default;
};

std::vector<DemoGap> demo_gap_table(const ConsolidatedInput& input, const GapThresholds& thresholds = {});

std::string_view to_string(GapCategory);

} // namespace demoreq
