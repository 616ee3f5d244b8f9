#include "flowgauge/consistency.hpp"
#include "flowgauge/profiles.hpp"

#include <random>

#include <benchmark/benchmark.h>

using namespace flowgauge;

namespace {

ProcessDiagram random_edges(int edges) {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> coord(0.0, 1000.0);
    ProcessDiagram diagram;
    for (int i = 0; i < edges; ++i) {
        const std::string s = "n" + std::to_string(2 * i);
        const std::string t = "n" + std::to_string(2 * i + 1);
        double sx = coord(rng), sy = coord(rng), ex = coord(rng), ey = coord(rng);
        diagram.nodes.push_back({s, NodeKind::Activity, {sx, sy}, std::nullopt});
        diagram.nodes.push_back({t, NodeKind::Activity, {ex, ey}, std::nullopt});
        diagram.edges.push_back({"e" + std::to_string(i), s, t, {sx, sy}, {ex, ey}});
    }
    return diagram;
}

// Sequence of small xor/parallel blocks: state space linear in `units`.
ProcessDiagram block_sequence(int units) {
    ProcessDiagram diagram;
    int next_edge = 0;
    auto connect = [&](const std::string& s, const std::string& t) {
        diagram.edges.push_back({"e" + std::to_string(next_edge++), s, t, {0, 0}, {1, 1}});
    };
    auto add = [&](const std::string& id, NodeKind kind) {
        diagram.nodes.push_back({id, kind, {double(next_edge), 0.0}, std::nullopt});
    };
    add("start", NodeKind::StartEvent);
    std::string prev = "start";
    for (int u = 0; u < units; ++u) {
        const std::string p = "u" + std::to_string(u) + "_";
        add(p + "a", NodeKind::Activity);
        connect(prev, p + "a");
        add(p + "ps", NodeKind::GatewayAnd);
        connect(p + "a", p + "ps");
        add(p + "b1", NodeKind::Activity);
        add(p + "b2", NodeKind::Activity);
        connect(p + "ps", p + "b1");
        connect(p + "ps", p + "b2");
        add(p + "pj", NodeKind::GatewayAnd);
        connect(p + "b1", p + "pj");
        connect(p + "b2", p + "pj");
        prev = p + "pj";
    }
    add("end", NodeKind::EndEvent);
    connect(prev, "end");
    return diagram;
}

void bench_cons_one(benchmark::State& state) {
    auto diagram = random_edges(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cons(diagram, DirectionMode::OneDirection).score);
    }
}
BENCHMARK(bench_cons_one)->Arg(100)->Arg(1000)->Arg(10000);

void bench_cons_two(benchmark::State& state) {
    auto diagram = random_edges(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cons(diagram, DirectionMode::TwoDirections).score);
    }
}
BENCHMARK(bench_cons_two)->Arg(100)->Arg(1000)->Arg(10000);

void bench_behavioral_profiles(benchmark::State& state) {
    auto diagram = block_sequence(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(behavioral_profiles(diagram).size());
    }
}
BENCHMARK(bench_behavioral_profiles)->Arg(4)->Arg(16)->Arg(64);

void bench_mbp(benchmark::State& state) {
    auto diagram = block_sequence(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(score_model(diagram, MetricId::MBP).score);
    }
}
BENCHMARK(bench_mbp)->Arg(4)->Arg(16);

} // namespace
