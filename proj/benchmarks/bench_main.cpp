#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "demoreq/engine.hpp"
#include "demoreq/render.hpp"

namespace {

using namespace demoreq;

std::string read_corpus(const std::string& name) {
    std::ifstream in(std::string(DEMOREQ_CORPUS_DIR) + "/" + name, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Dag {
    WpGraph graph;
    std::map<std::string, TrlLevel> estimates;
    std::map<std::string, TrlLevel> caps;
};

// Layered-ish DAG with about three outgoing edges per node.
Dag make_dag(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> trl(1, 9);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Dag d;
    std::vector<std::string> nodes;
    std::vector<GraphEdge> edges;
    for (int i = 0; i < n; ++i) {
        const auto id = "WP" + std::to_string(i + 1);
        nodes.push_back(id);
        d.estimates.emplace(id, TrlLevel(trl(rng)));
        if (unit(rng) < 0.3) d.caps.emplace(id, TrlLevel(trl(rng)));
    }
    for (int a = 0; a < n; ++a) {
        std::uniform_int_distribution<int> later(a + 1, std::max(a + 1, n - 1));
        for (int k = 0; k < 3 && a + 1 < n; ++k) {
            const auto certainty = unit(rng) < 0.15 ? Certainty::Uncertain : Certainty::Direct;
            edges.push_back({nodes[a], nodes[later(rng)], DependencyKind::Data, certainty});
        }
    }
    d.graph = make_graph(std::move(nodes), std::move(edges));
    return d;
}

void BM_Propagate(benchmark::State& state) {
    const auto d = make_dag(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(propagate(d.graph, d.estimates, d.caps));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Propagate)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_DetectStructure(benchmark::State& state) {
    const auto d = make_dag(static_cast<int>(state.range(0)), 43);
    for (auto _ : state) benchmark::DoNotOptimize(detect_structure(d.graph));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DetectStructure)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_ParseModel(benchmark::State& state, const char* file) {
    const auto text = read_corpus(file);
    for (auto _ : state) benchmark::DoNotOptimize(parse_model(text));
}
BENCHMARK_CAPTURE(BM_ParseModel, zorro, "zorro.json");
BENCHMARK_CAPTURE(BM_ParseModel, primavera, "primavera.json");

void BM_Run(benchmark::State& state, const char* file) {
    const auto model = parse_model(read_corpus(file));
    for (auto _ : state) benchmark::DoNotOptimize(run(model));
}
BENCHMARK_CAPTURE(BM_Run, zorro, "zorro.json");
BENCHMARK_CAPTURE(BM_Run, primavera, "primavera.json");

void BM_RenderText(benchmark::State& state) {
    const auto model = parse_model(read_corpus("primavera.json"));
    const auto report = run(model);
    for (auto _ : state) benchmark::DoNotOptimize(render_text(report, model));
}
BENCHMARK(BM_RenderText);

} // namespace

BENCHMARK_MAIN();
