#pragma once

// WP dependency graph: structure analysis and dependency-adjusted TRL propagation.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "demoreq/model.hpp"

namespace demoreq {

struct GraphEdge {
    std::string from;
    std::string to;
    DependencyKind kind = DependencyKind::Data;
    Certainty certainty = Certainty::Direct;

    bool operator==(const GraphEdge&) const = default;
    auto operator<=>(const GraphEdge&) const = default;
};

/// Analyzed WPs and their Data/Temporal edges. Nodes and edges are sorted.
struct WpGraph {
    std::vector<std::string> nodes;
    std::vector<GraphEdge> edges;

    bool has_node(std::string_view id) const;
    /// Direct-edge predecessors / successors, sorted.
    std::vector<std::string> direct_upstream(std::string_view id) const;
    std::vector<std::string> direct_downstream(std::string_view id) const;

    bool operator==(const WpGraph&) const = default;
};

WpGraph build_graph(const ConsolidatedInput& input);

/// Graph from explicit parts; edges of other kinds or with unknown endpoints
/// are dropped. Used by tests and generators.
WpGraph make_graph(std::vector<std::string> nodes, std::vector<GraphEdge> edges);

/// Subgraph induced by `keep`.
WpGraph induced_subgraph(const WpGraph& graph, const std::set<std::string>& keep);

struct Bottleneck {
    std::string wp_id;
    int blocked_downstream = 0;

    bool operator==(const Bottleneck&) const = default;
};

struct StructureReport {
    std::vector<std::string> islands;
    std::vector<Bottleneck> bottlenecks;
    std::vector<std::vector<std::string>> cycles;

    bool operator==(const StructureReport&) const = default;
};

/// Islands and Direct-edge cycles (one representative cycle per strongly
/// connected component, rotated to start at its smallest id).
StructureReport detect_structure(const WpGraph& graph);

/// Whether `subset` is weakly connected using Direct edges with both ends in it.
/// Empty and singleton sets count as connected.
bool weakly_connected(const WpGraph& graph, const std::set<std::string>& subset);

/// Shortest undirected path over Direct edges, endpoints included; empty if none.
std::vector<std::string> undirected_path(const WpGraph& graph, const std::string& from,
                                         const std::string& to);

/// Highest TRL each readiness grade can support.
struct GradeCapTable {
    std::array<TrlLevel, kGradeCount> caps{TrlLevel{3}, TrlLevel{4}, TrlLevel{5}, TrlLevel{6},
                                           TrlLevel{7}};

    TrlLevel cap(ReadinessGrade grade) const { return caps[static_cast<std::size_t>(grade)]; }
    bool monotone() const;
    bool operator==(const GradeCapTable&) const = default;
};

/// Cap from the best graded use-case associated with the WP; nullopt when
/// none of them carries a grade.
std::optional<TrlLevel> quality_cap(const WorkPackage& wp, std::span<const UseCase> use_cases,
                                    const GradeCapTable& table = {});

struct AdjustedTrl {
    TrlLevel own_estimate{1};
    std::optional<TrlLevel> quality_cap;
    TrlLevel adjusted{1};
    /// Direct upstream WP whose adjusted value is strictly binding.
    std::optional<std::string> limiting_upstream;

    bool operator==(const AdjustedTrl&) const = default;
};

struct AdjustedTrlMap {
    std::map<std::string, AdjustedTrl> entries;
    /// Uncertain edges that were recorded but not propagated.
    std::vector<std::string> advisories;

    const AdjustedTrl* find(const std::string& id) const;
    bool operator==(const AdjustedTrlMap&) const = default;
};

/// Min-composition along Direct edges in topological order:
/// adjusted = min(own estimate, cap, adjusted of every Direct upstream).
/// Throws CyclicDependency or MissingEstimate.
AdjustedTrlMap propagate(const WpGraph& graph, const std::map<std::string, TrlLevel>& estimates,
                         const std::map<std::string, TrlLevel>& caps);

/// WPs whose own value is the origin of a strictly lower adjusted TRL
/// downstream, with the number of downstream WPs so limited. Sorted by count
/// descending, then id.
std::vector<Bottleneck> bottlenecks(const WpGraph& graph, const AdjustedTrlMap& adjusted);

/// Follows limiting_upstream to the WP whose own estimate or cap sets `id`'s value.
std::string limiting_origin(const AdjustedTrlMap& adjusted, const std::string& id);

} // namespace demoreq
