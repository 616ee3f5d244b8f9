#include "flowgauge/corpus.hpp"

#include <algorithm>
#include <cmath>

namespace flowgauge {

Ranking rank_models(const ScoreTable& table, MetricId metric) {
    std::vector<std::string> bad;
    std::vector<std::pair<double, std::string>> scored;
    for (const auto& [model, cells] : table.rows) {
        auto cell = cells.find(metric);
        if (cell == cells.end() || !cell->second.score) {
            bad.push_back(model);
        } else {
            scored.emplace_back(*cell->second.score, model);
        }
    }
    if (!bad.empty()) {
        throw PartialRankingError("cannot rank: " + std::to_string(bad.size()) +
                                      " model(s) have no score for " + to_string(metric),
                                  std::move(bad));
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    Ranking ranking;
    for (std::size_t i = 0; i < scored.size(); ++i) {
        ranking[scored[i].second] = static_cast<int>(i) + 1;
    }
    return ranking;
}

std::vector<RankDispersion> rank_dispersion(const std::map<MetricId, Ranking>& rankings) {
    if (rankings.empty()) throw DomainError("rank_dispersion: no rankings");

    const Ranking& first = rankings.begin()->second;
    for (const auto& [metric, ranking] : rankings) {
        if (ranking.size() != first.size()) {
            throw DomainError("rank_dispersion: rankings cover different model sets");
        }
        for (const auto& [model, rank] : ranking) {
            if (!first.contains(model)) {
                throw DomainError("rank_dispersion: model '" + model +
                                  "' missing from some rankings");
            }
        }
    }

    std::vector<RankDispersion> result;
    for (const auto& [model, unused] : first) {
        RankDispersion row;
        row.model = model;
        double sum = 0.0;
        for (const auto& [metric, ranking] : rankings) {
            int rank = ranking.at(model);
            row.ranks[metric] = rank;
            sum += rank;
        }
        const double n = static_cast<double>(rankings.size());
        row.mean_rank = sum / n;
        double ss = 0.0;
        for (const auto& [metric, rank] : row.ranks) {
            ss += (rank - row.mean_rank) * (rank - row.mean_rank);
        }
        row.stddev_rank = std::sqrt(ss / n);
        result.push_back(std::move(row));
    }
    return result;
}

std::array<int, 10> histogram(const std::vector<double>& scores) {
    std::array<int, 10> buckets{};
    for (double s : scores) {
        if (!(s >= 0.0 && s <= 1.0)) {
            throw DomainError("histogram: score " + std::to_string(s) + " outside [0,1]");
        }
        int bucket = std::min(static_cast<int>(s * 10.0), 9);
        ++buckets[bucket];
    }
    return buckets;
}

std::vector<double> windowed_average(const std::vector<double>& series, int window) {
    if (window < 1) throw DomainError("windowed_average: window must be >= 1");
    std::vector<double> averages;
    for (std::size_t begin = 0; begin < series.size(); begin += window) {
        const std::size_t end = std::min(series.size(), begin + window);
        double sum = 0.0;
        for (std::size_t i = begin; i < end; ++i) sum += series[i];
        averages.push_back(sum / static_cast<double>(end - begin));
    }
    return averages;
}

} // namespace flowgauge
