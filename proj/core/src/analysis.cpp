#include "flowgauge/analysis.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace flowgauge {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) {
        while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) field.pop_back();
        while (!field.empty() && field.front() == ' ') field.erase(field.begin());
        fields.push_back(field);
    }
    return fields;
}

bool parse_double(const std::string& text, double& out) {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

MetricId metric_from_name(const std::string& name, int line_no) {
    std::string upper;
    for (char c : name) upper.push_back(static_cast<char>(std::toupper(c)));
    if (upper == "ME1" || upper == "M-E1") return MetricId::ME1;
    if (upper == "ME2" || upper == "M-E2") return MetricId::ME2;
    if (upper == "MBP" || upper == "M-BP") return MetricId::MBP;
    throw ParseError("scores csv line " + std::to_string(line_no) + ": unknown metric '" +
                     name + "'");
}

template <typename RowFn>
void for_each_csv_row(std::string_view text, std::size_t expected_fields, const char* what,
                      RowFn&& fn) {
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        if (fields.size() != expected_fields) {
            throw ParseError(std::string(what) + " line " + std::to_string(line_no) +
                             ": expected " + std::to_string(expected_fields) + " fields");
        }
        double ignored;
        if (line_no == 1 && !parse_double(fields.back(), ignored)) continue; // header
        fn(fields, line_no);
    }
}

} // namespace

std::map<std::string, std::map<MetricId, double>> read_scores_csv(std::string_view text) {
    std::map<std::string, std::map<MetricId, double>> scores;
    for_each_csv_row(text, 3, "scores csv", [&](const auto& fields, int line_no) {
        double score;
        if (!parse_double(fields[2], score)) {
            throw ParseError("scores csv line " + std::to_string(line_no) +
                             ": non-numeric score");
        }
        scores[fields[0]][metric_from_name(fields[1], line_no)] = score;
    });
    return scores;
}

std::vector<HumanEvaluation> read_human_csv(std::string_view text) {
    std::vector<HumanEvaluation> rows;
    for_each_csv_row(text, 3, "human csv", [&](const auto& fields, int line_no) {
        HumanEvaluation row;
        row.model = fields[0];
        if (!parse_double(fields[1], row.mean_score) || !parse_double(fields[2], row.stddev)) {
            throw ParseError("human csv line " + std::to_string(line_no) +
                             ": non-numeric mean/stddev");
        }
        rows.push_back(std::move(row));
    });
    return rows;
}

StatReport correlate(const std::map<std::string, std::map<MetricId, double>>& scores,
                     const std::vector<HumanEvaluation>& human) {
    std::vector<std::string> unmatched;
    for (const auto& eval : human) {
        if (!scores.contains(eval.model)) unmatched.push_back(eval.model);
    }
    for (const auto& [model, cells] : scores) {
        bool found = false;
        for (const auto& eval : human) found = found || eval.model == model;
        if (!found) unmatched.push_back(model);
    }
    if (!unmatched.empty()) {
        std::string ids;
        for (const auto& id : unmatched) ids += (ids.empty() ? "" : ", ") + id;
        throw DomainError("correlate: model ids do not join: " + ids);
    }

    std::vector<double> human_means;
    human_means.reserve(human.size());
    for (const auto& eval : human) human_means.push_back(eval.mean_score);

    StatReport report;
    report.models = static_cast<int>(human.size());
    report.human_normality = ks_normality(human_means);

    for (MetricId metric : {MetricId::ME1, MetricId::ME2, MetricId::MBP}) {
        std::vector<double> metric_scores;
        bool complete = true;
        for (const auto& eval : human) {
            const auto& cells = scores.at(eval.model);
            auto it = cells.find(metric);
            if (it == cells.end()) {
                complete = false;
                break;
            }
            metric_scores.push_back(it->second);
        }
        if (!complete) continue;
        MetricCorrelation entry;
        entry.metric = metric;
        entry.correlation = pearson(metric_scores, human_means);
        entry.mean_shift = mean_shift(metric_scores, human_means);
        report.metrics.push_back(entry);
    }
    return report;
}

} // namespace flowgauge
