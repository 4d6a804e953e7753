#include "demoreq/depgraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "demoreq/errors.hpp"

namespace demoreq {

namespace {

bool propagated_kind(DependencyKind kind) {
    return kind == DependencyKind::Data || kind == DependencyKind::Temporal;
}

std::string edge_subject(const GraphEdge& e) { return e.from + "->" + e.to; }

using Adjacency = std::map<std::string, std::vector<std::string>>;

Adjacency direct_successors(const WpGraph& graph) {
    Adjacency adj;
    for (const auto& n : graph.nodes) adj[n];
    for (const auto& e : graph.edges) {
        if (e.certainty == Certainty::Direct) adj[e.from].push_back(e.to);
    }
    for (auto& [n, succ] : adj) {
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    }
    return adj;
}

// Tarjan's algorithm; components come out in reverse topological order.
std::vector<std::vector<std::string>> strongly_connected(const Adjacency& adj) {
    std::map<std::string, int> index;
    std::map<std::string, int> low;
    std::set<std::string> on_stack;
    std::vector<std::string> stack;
    std::vector<std::vector<std::string>> components;
    int counter = 0;

    std::function<void(const std::string&)> visit = [&](const std::string& v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack.insert(v);
        for (const auto& w : adj.at(v)) {
            if (!index.contains(w)) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack.contains(w)) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<std::string> component;
            std::string w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack.erase(w);
                component.push_back(w);
            } while (w != v);
            std::sort(component.begin(), component.end());
            components.push_back(std::move(component));
        }
    };
    for (const auto& [v, succ] : adj) {
        if (!index.contains(v)) visit(v);
    }
    return components;
}

// Shortest cycle through the smallest member, found by BFS inside the component.
std::vector<std::string> representative_cycle(const Adjacency& adj, const std::vector<std::string>& component) {
    const std::set<std::string> members(component.begin(), component.end());
    const auto& start = component.front();
    std::map<std::string, std::string> parent;
    std::deque<std::string> queue{start};
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (const auto& w : adj.at(v)) {
            if (!members.contains(w)) continue;
            if (w == start) {
                std::vector<std::string> cycle{v};
                while (cycle.back() != start) cycle.push_back(parent.at(cycle.back()));
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
            if (!parent.contains(w)) {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    return component;
}

std::vector<std::vector<std::string>> direct_cycles(const WpGraph& graph) {
    const auto adj = direct_successors(graph);
    std::vector<std::vector<std::string>> cycles;
    for (const auto& component : strongly_connected(adj)) {
        if (component.size() >= 2) cycles.push_back(representative_cycle(adj, component));
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

} // namespace

bool WpGraph::has_node(std::string_view id) const {
    return std::binary_search(nodes.begin(), nodes.end(), id, std::less<>{});
}

std::vector<std::string> WpGraph::direct_upstream(std::string_view id) const {
    std::vector<std::string> out;
    for (const auto& e : edges) {
        if (e.certainty == Certainty::Direct && e.to == id) out.push_back(e.from);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::string> WpGraph::direct_downstream(std::string_view id) const {
    std::vector<std::string> out;
    for (const auto& e : edges) {
        if (e.certainty == Certainty::Direct && e.from == id) out.push_back(e.to);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

WpGraph make_graph(std::vector<std::string> nodes, std::vector<GraphEdge> edges) {
    WpGraph g;
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    g.nodes = std::move(nodes);
    for (auto& e : edges) {
        if (!propagated_kind(e.kind) || e.from == e.to) continue;
        if (!g.has_node(e.from) || !g.has_node(e.to)) continue;
        g.edges.push_back(std::move(e));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

WpGraph build_graph(const ConsolidatedInput& input) {
    std::vector<std::string> nodes;
    for (const auto& wp : input.model.work_packages) {
        if (is_analyzed(wp)) nodes.push_back(wp.id);
    }
    std::vector<GraphEdge> edges;
    for (const auto& dep : input.model.dependencies) {
        edges.push_back({dep.from, dep.to, dep.kind, dep.certainty});
    }
    return make_graph(std::move(nodes), std::move(edges));
}

WpGraph induced_subgraph(const WpGraph& graph, const std::set<std::string>& keep) {
    std::vector<std::string> nodes;
    for (const auto& n : graph.nodes) {
        if (keep.contains(n)) nodes.push_back(n);
    }
    return make_graph(std::move(nodes), graph.edges);
}

StructureReport detect_structure(const WpGraph& graph) {
    StructureReport report;
    std::set<std::string> touched;
    for (const auto& e : graph.edges) {
        touched.insert(e.from);
        touched.insert(e.to);
    }
    for (const auto& n : graph.nodes) {
        if (!touched.contains(n)) report.islands.push_back(n);
    }
    report.cycles = direct_cycles(graph);
    return report;
}

bool weakly_connected(const WpGraph& graph, const std::set<std::string>& subset) {
    if (subset.size() <= 1) return true;
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& e : graph.edges) {
        if (e.certainty != Certainty::Direct) continue;
        if (!subset.contains(e.from) || !subset.contains(e.to)) continue;
        adj[e.from].push_back(e.to);
        adj[e.to].push_back(e.from);
    }
    std::set<std::string> seen{*subset.begin()};
    std::deque<std::string> queue{*subset.begin()};
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (const auto& w : adj[v]) {
            if (seen.insert(w).second) queue.push_back(w);
        }
    }
    return seen.size() == subset.size();
}

std::vector<std::string> undirected_path(const WpGraph& graph, const std::string& from, const std::string& to) {
    if (!graph.has_node(from) || !graph.has_node(to)) return {};
    if (from == to) return {from};
    std::map<std::string, std::set<std::string>> adj;
    for (const auto& e : graph.edges) {
        if (e.certainty != Certainty::Direct) continue;
        adj[e.from].insert(e.to);
        adj[e.to].insert(e.from);
    }
    std::map<std::string, std::string> parent;
    std::set<std::string> seen{from};
    std::deque<std::string> queue{from};
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (const auto& w : adj[v]) {
            if (!seen.insert(w).second) continue;
            parent[w] = v;
            if (w == to) {
                std::vector<std::string> path{to};
                while (path.back() != from) path.push_back(parent.at(path.back()));
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(w);
        }
    }
    return {};
}

bool GradeCapTable::monotone() const { return std::is_sorted(caps.begin(), caps.end()); }

std::optional<TrlLevel> quality_cap(const WorkPackage& wp, std::span<const UseCase> use_cases,
                                    const GradeCapTable& table) {
    std::optional<ReadinessGrade> best;
    for (const auto& uc : use_cases) {
        if (!wp.use_cases.contains(uc.id) || !uc.readiness) continue;
        if (!best || *uc.readiness > *best) best = uc.readiness;
    }
    if (!best) return std::nullopt;
    return table.cap(*best);
}

const AdjustedTrl* AdjustedTrlMap::find(const std::string& id) const {
    auto it = entries.find(id);
    return it == entries.end() ? nullptr : &it->second;
}

AdjustedTrlMap propagate(const WpGraph& graph, const std::map<std::string, TrlLevel>& estimates,
                         const std::map<std::string, TrlLevel>& caps) {
    for (const auto& n : graph.nodes) {
        if (!estimates.contains(n)) throw MissingEstimate(n);
    }

    const auto succ = direct_successors(graph);
    std::map<std::string, int> indegree;
    for (const auto& n : graph.nodes) indegree[n];
    for (const auto& [v, ws] : succ) {
        for (const auto& w : ws) ++indegree[w];
    }
    std::set<std::string> ready;
    for (const auto& [n, d] : indegree) {
        if (d == 0) ready.insert(n);
    }
    std::vector<std::string> order;
    while (!ready.empty()) {
        const auto v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (const auto& w : succ.at(v)) {
            if (--indegree[w] == 0) ready.insert(w);
        }
    }
    if (order.size() != graph.nodes.size()) {
        const auto cycles = direct_cycles(graph);
        throw CyclicDependency(cycles.empty() ? std::vector<std::string>{} : cycles.front());
    }

    std::map<std::string, std::vector<std::string>> pred;
    for (const auto& e : graph.edges) {
        if (e.certainty == Certainty::Direct) pred[e.to].push_back(e.from);
    }

    AdjustedTrlMap result;
    for (const auto& v : order) {
        AdjustedTrl entry;
        entry.own_estimate = estimates.at(v);
        if (auto it = caps.find(v); it != caps.end()) entry.quality_cap = it->second;
        const TrlLevel local = entry.quality_cap ? std::min(entry.own_estimate, *entry.quality_cap)
                                                 : entry.own_estimate;
        entry.adjusted = local;
        std::optional<std::string> argmin;
        std::optional<TrlLevel> upstream_min;
        for (const auto& u : pred[v]) {
            const auto value = result.entries.at(u).adjusted;
            if (!upstream_min || value < *upstream_min) {
                upstream_min = value;
                argmin = u;
            }
        }
        if (upstream_min && *upstream_min < local) {
            entry.adjusted = *upstream_min;
            entry.limiting_upstream = argmin;
        }
        result.entries.emplace(v, std::move(entry));
    }
    for (const auto& e : graph.edges) {
        if (e.certainty == Certainty::Uncertain) result.advisories.push_back(edge_subject(e));
    }
    return result;
}

std::string limiting_origin(const AdjustedTrlMap& adjusted, const std::string& id) {
    std::string current = id;
    for (std::size_t steps = 0; steps <= adjusted.entries.size(); ++steps) {
        const auto* entry = adjusted.find(current);
        if (!entry) throw UnknownWp(current);
        if (!entry->limiting_upstream) return current;
        current = *entry->limiting_upstream;
    }
    return current;
}

std::vector<Bottleneck> bottlenecks(const WpGraph& graph, const AdjustedTrlMap& adjusted) {
    std::map<std::string, int> counts;
    for (const auto& n : graph.nodes) {
        const auto* entry = adjusted.find(n);
        if (!entry || !entry->limiting_upstream) continue;
        ++counts[limiting_origin(adjusted, n)];
    }
    std::vector<Bottleneck> out;
    for (const auto& [id, n] : counts) out.push_back({id, n});
    std::sort(out.begin(), out.end(), [](const Bottleneck& a, const Bottleneck& b) {
        if (a.blocked_downstream != b.blocked_downstream) return a.blocked_downstream > b.blocked_downstream;
        return a.wp_id < b.wp_id;
    });
    return out;
}

} // namespace demoreq
