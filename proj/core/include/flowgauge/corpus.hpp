#pragma once

#include "flowgauge/consistency.hpp"
#include "flowgauge/error.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flowgauge {

struct ScoreCell {
    std::optional<double> score; // empty means the metric errored
    std::string error;
};

/// Per-model, per-metric score table for corpus analytics.
struct ScoreTable {
    std::map<std::string, std::map<MetricId, ScoreCell>> rows; // model id -> metric -> cell
};

struct RankDispersion {
    std::string model;
    std::map<MetricId, int> ranks;
    double mean_rank = 0.0;
    double stddev_rank = 0.0; // population
};

using Ranking = std::map<std::string, int>; // model id -> rank, 1 = best

struct PartialRankingError : Error {
    PartialRankingError(const std::string& what, std::vector<std::string> bad)
        : Error(what), models(std::move(bad)) {}
    std::vector<std::string> models;
};

/// Rank 1 = highest score; ties broken by ascending model id (ordinal).
Ranking rank_models(const ScoreTable& table, MetricId metric);

/// Mean and population standard deviation of each model's ranks across
/// metrics. All rankings must cover the same model set.
std::vector<RankDispersion> rank_dispersion(const std::map<MetricId, Ranking>& rankings);

/// Fixed 0.1-wide buckets over [0,1]; the last bucket is closed at 1.0.
std::array<int, 10> histogram(const std::vector<double>& scores);

/// Tumbling (non-overlapping) window averages; the final partial window is
/// averaged over its actual length.
std::vector<double> windowed_average(const std::vector<double>& series, int window);

} // namespace flowgauge
