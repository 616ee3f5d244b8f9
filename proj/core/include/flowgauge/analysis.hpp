#pragma once

#include "flowgauge/consistency.hpp"
#include "flowgauge/statistics.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace flowgauge {

struct HumanEvaluation {
    std::string model;
    double mean_score = 0.0;
    double stddev = 0.0;
};

struct MetricCorrelation {
    MetricId metric;
    CorrelationResult correlation;
    double mean_shift = 0.0; // metric minus human, averaged
};

struct StatReport {
    std::vector<MetricCorrelation> metrics;
    NormalityResult human_normality;
    int models = 0;
};

/// scores.csv rows: model,metric,score  (metric in {ME1, ME2, MBP})
std::map<std::string, std::map<MetricId, double>> read_scores_csv(std::string_view text);

/// human.csv rows: model,mean,stddev
std::vector<HumanEvaluation> read_human_csv(std::string_view text);

/// Joins metric scores with human evaluations on model id and runs the
/// correlation pipeline: per-metric Pearson correlation and mean shift, plus
/// a normality check of the human column. Unmatched model ids are an error.
StatReport correlate(const std::map<std::string, std::map<MetricId, double>>& scores,
                     const std::vector<HumanEvaluation>& human);

} // namespace flowgauge
