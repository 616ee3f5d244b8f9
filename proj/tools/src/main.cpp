#include "flowgauge/analysis.hpp"
#include "flowgauge/bpmn.hpp"
#include "flowgauge/canonical.hpp"
#include "flowgauge/consistency.hpp"
#include "flowgauge/corpus.hpp"
#include "flowgauge/profiles.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace flowgauge;

namespace {

struct RunConfig {
    std::vector<MetricId> metrics = {MetricId::ME1, MetricId::ME2, MetricId::MBP};
    std::string format = "table";
    ProfileConfig profile;
    int parallelism = 1;
    bool timing = false;
};

struct LoadedModel {
    std::string id;
    ProcessDiagram diagram;
    std::vector<std::string> warnings;
};

struct ScoreRow {
    std::string model;
    MetricId metric;
    std::optional<ConsistencyResult> result;
    std::string error;
    double ms = 0.0;
};

std::string read_file(const fs::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot read file: " + path.string());
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

bool is_bpmn_path(const fs::path& path) {
    auto ext = path.extension().string();
    return ext == ".bpmn" || ext == ".xml";
}

std::vector<LoadedModel> load_models(const fs::path& path) {
    std::vector<LoadedModel> models;
    const std::string stem = path.stem().string();
    if (is_bpmn_path(path)) {
        auto processes = parse_bpmn(read_file(path));
        if (processes.empty()) throw ParseError(path.string() + ": no process found");
        for (auto& process : processes) {
            std::string id = processes.size() == 1 ? stem : stem + "#" + process.id;
            models.push_back({std::move(id), std::move(process.diagram),
                              std::move(process.warnings)});
        }
    } else {
        models.push_back({stem, parse_canonical(read_file(path)), {}});
    }
    return models;
}

std::vector<fs::path> corpus_files(const fs::path& dir) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        auto ext = entry.path().extension().string();
        if (ext == ".bpmn" || ext == ".xml" || ext == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    return files;
}

json counts_json(const ConsistencyResult& r) {
    json counts;
    for (Direction d : kAllDirections) counts[to_string(d)] = r.count(d);
    return counts;
}

std::string format_score(double score) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6f", score);
    return buffer;
}

std::vector<ScoreRow> score_models(const std::vector<LoadedModel>& models,
                                   const RunConfig& config) {
    std::vector<ScoreRow> rows(models.size() * config.metrics.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < models.size(); i = next.fetch_add(1)) {
            for (std::size_t m = 0; m < config.metrics.size(); ++m) {
                ScoreRow& row = rows[i * config.metrics.size() + m];
                row.model = models[i].id;
                row.metric = config.metrics[m];
                auto t0 = std::chrono::steady_clock::now();
                try {
                    row.result = score_model(models[i].diagram, row.metric, config.profile);
                } catch (const Error& e) {
                    row.error = e.what();
                }
                row.ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
            }
        }
    };
    int threads = std::max(1, config.parallelism);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::sort(rows.begin(), rows.end(), [](const ScoreRow& a, const ScoreRow& b) {
        if (a.model != b.model) return a.model < b.model;
        return static_cast<int>(a.metric) < static_cast<int>(b.metric);
    });
    return rows;
}

void emit_score_rows(const std::vector<ScoreRow>& rows, const RunConfig& config,
                     std::ostream& out) {
    if (config.format == "json") {
        json doc = json::array();
        for (const auto& row : rows) {
            json entry;
            entry["model"] = row.model;
            entry["metric"] = to_string(row.metric);
            if (row.result) {
                entry["score"] = row.result->score;
                entry["predominant"] = to_string(row.result->predominant);
                entry["counts"] = counts_json(*row.result);
                entry["denominator"] = row.result->denominator;
            } else {
                entry["error"] = row.error;
            }
            if (config.timing) entry["ms"] = row.ms;
            doc.push_back(std::move(entry));
        }
        out << doc.dump(2) << "\n";
    } else if (config.format == "csv") {
        out << "model,metric,score\n";
        for (const auto& row : rows) {
            if (!row.result) continue;
            out << row.model << "," << to_string(row.metric) << ","
                << format_score(row.result->score) << "\n";
        }
        for (const auto& row : rows) {
            if (!row.result) {
                std::cerr << "error: " << row.model << " " << to_string(row.metric) << ": "
                          << row.error << "\n";
            }
        }
    } else {
        for (const auto& row : rows) {
            out << row.model << "  " << to_string(row.metric) << "  ";
            if (row.result) {
                out << format_score(row.result->score) << "  predominant="
                    << to_string(row.result->predominant);
            } else {
                out << "error: " << row.error;
            }
            if (config.timing) out << "  (" << format_score(row.ms) << " ms)";
            out << "\n";
        }
    }
}

int cmd_score(const std::vector<std::string>& paths, const RunConfig& config) {
    std::vector<ScoreRow> rows;
    std::vector<std::pair<std::string, std::string>> file_errors;
    std::vector<LoadedModel> models;
    for (const auto& path : paths) {
        try {
            auto loaded = load_models(path);
            for (auto& model : loaded) models.push_back(std::move(model));
        } catch (const Error& e) {
            file_errors.emplace_back(path, e.what());
        }
    }
    rows = score_models(models, config);
    emit_score_rows(rows, config, std::cout);
    for (const auto& [path, error] : file_errors) {
        std::cerr << "error: " << path << ": " << error << "\n";
    }
    bool any_error = !file_errors.empty() ||
                     std::any_of(rows.begin(), rows.end(),
                                 [](const ScoreRow& r) { return !r.result; });
    return any_error ? 1 : 0;
}

int cmd_rank(const std::string& dir, const RunConfig& config) {
    auto files = corpus_files(dir);
    std::vector<LoadedModel> models;
    std::vector<std::pair<std::string, std::string>> file_errors;
    for (const auto& file : files) {
        try {
            auto loaded = load_models(file);
            for (auto& model : loaded) models.push_back(std::move(model));
        } catch (const Error& e) {
            file_errors.emplace_back(file.string(), e.what());
        }
    }
    if (models.size() < 2) {
        std::cerr << "error: need at least 2 scoreable models, found " << models.size() << "\n";
        return 1;
    }

    auto rows = score_models(models, config);
    ScoreTable table;
    for (const auto& row : rows) {
        ScoreCell cell;
        if (row.result) {
            cell.score = row.result->score;
        } else {
            cell.error = row.error;
        }
        table.rows[row.model][row.metric] = std::move(cell);
    }

    // Rankings and dispersion cover only models every metric could score.
    ScoreTable complete;
    std::vector<std::pair<std::string, std::string>> model_errors;
    for (const auto& [model, cells] : table.rows) {
        bool ok = true;
        for (const auto& [metric, cell] : cells) {
            if (!cell.score) {
                ok = false;
                model_errors.emplace_back(model, cell.error);
            }
        }
        if (ok) complete.rows[model] = cells;
    }

    std::map<MetricId, Ranking> rankings;
    for (MetricId metric : config.metrics) rankings[metric] = rank_models(complete, metric);
    auto dispersion = rank_dispersion(rankings);
    std::sort(dispersion.begin(), dispersion.end(),
              [](const RankDispersion& a, const RankDispersion& b) {
                  if (a.mean_rank != b.mean_rank) return a.mean_rank < b.mean_rank;
                  return a.model < b.model;
              });

    std::map<MetricId, std::array<int, 10>> histograms;
    for (MetricId metric : config.metrics) {
        std::vector<double> scores;
        for (const auto& [model, cells] : complete.rows) {
            scores.push_back(*cells.at(metric).score);
        }
        histograms[metric] = histogram(scores);
    }

    auto& out = std::cout;
    if (config.format == "json") {
        json doc;
        doc["scores"] = json::array();
        for (const auto& row : rows) {
            json entry;
            entry["model"] = row.model;
            entry["metric"] = to_string(row.metric);
            if (row.result) {
                entry["score"] = row.result->score;
            } else {
                entry["error"] = row.error;
            }
            doc["scores"].push_back(std::move(entry));
        }
        doc["dispersion"] = json::array();
        for (const auto& row : dispersion) {
            json entry;
            entry["model"] = row.model;
            for (const auto& [metric, rank] : row.ranks) entry[to_string(metric)] = rank;
            entry["mean_rank"] = row.mean_rank;
            entry["stddev_rank"] = row.stddev_rank;
            doc["dispersion"].push_back(std::move(entry));
        }
        doc["histograms"] = json::object();
        for (const auto& [metric, buckets] : histograms) {
            doc["histograms"][to_string(metric)] = buckets;
        }
        out << doc.dump(2) << "\n";
    } else {
        out << "model,metric,score\n";
        for (const auto& row : rows) {
            if (!row.result) continue;
            out << row.model << "," << to_string(row.metric) << ","
                << format_score(row.result->score) << "\n";
        }
        out << "\nmodel";
        for (MetricId metric : config.metrics) out << ",rank_" << to_string(metric);
        out << ",mean_rank,stddev_rank\n";
        for (const auto& row : dispersion) {
            out << row.model;
            for (MetricId metric : config.metrics) out << "," << row.ranks.at(metric);
            out << "," << format_score(row.mean_rank) << "," << format_score(row.stddev_rank)
                << "\n";
        }
        out << "\nmetric";
        for (int b = 0; b < 10; ++b) out << ",bucket" << b;
        out << "\n";
        for (const auto& [metric, buckets] : histograms) {
            out << to_string(metric);
            for (int count : buckets) out << "," << count;
            out << "\n";
        }
    }

    for (const auto& [path, error] : file_errors) {
        std::cerr << "error: " << path << ": " << error << "\n";
    }
    for (const auto& [model, error] : model_errors) {
        std::cerr << "error: " << model << ": " << error << "\n";
    }
    return 0;
}

int cmd_correlate(const std::string& scores_path, const std::string& human_path) {
    auto scores = read_scores_csv(read_file(scores_path));
    auto human = read_human_csv(read_file(human_path));
    StatReport report = correlate(scores, human);

    json doc;
    doc["models"] = report.models;
    doc["human_normality"] = {
        {"mean", report.human_normality.mean},
        {"stddev", report.human_normality.stddev},
        {"D", report.human_normality.d},
        {"p", report.human_normality.p},
    };
    doc["metrics"] = json::array();
    for (const auto& entry : report.metrics) {
        doc["metrics"].push_back({
            {"metric", to_string(entry.metric)},
            {"r", entry.correlation.r},
            {"p", entry.correlation.p},
            {"n", entry.correlation.n},
            {"mean_shift", entry.mean_shift},
        });
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
}

const char* relation_cell(const std::vector<BehavioralRelation>& relations,
                          const std::string& row, const std::string& col) {
    for (const auto& rel : relations) {
        switch (rel.relation) {
        case RelationKind::StrictOrder:
            if (rel.source == row && rel.target == col) return "→";
            if (rel.source == col && rel.target == row) return "←";
            break;
        case RelationKind::Exclusive:
            if ((rel.source == row && rel.target == col) ||
                (rel.source == col && rel.target == row)) {
                return "+";
            }
            break;
        case RelationKind::Interleaving:
            if ((rel.source == row && rel.target == col) ||
                (rel.source == col && rel.target == row)) {
                return "||";
            }
            break;
        }
    }
    return "-";
}

int cmd_profiles(const std::string& path, const RunConfig& config) {
    auto models = load_models(path);
    for (const auto& model : models) {
        if (models.size() > 1) std::cout << "# " << model.id << "\n";
        auto relations = behavioral_profiles(model.diagram, config.profile);
        std::vector<std::string> activities;
        for (const auto& node : model.diagram.nodes) {
            if (node.kind == NodeKind::Activity) activities.push_back(node.id);
        }
        std::sort(activities.begin(), activities.end());

        std::cout << "activity";
        for (const auto& col : activities) std::cout << "," << col;
        std::cout << "\n";
        for (const auto& row : activities) {
            std::cout << row;
            for (const auto& col : activities) {
                std::cout << "," << (row == col ? "-" : relation_cell(relations, row, col));
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_convert(const std::string& path) {
    auto models = load_models(path);
    if (models.size() != 1) {
        std::cerr << "error: " << path << " contains " << models.size()
                  << " processes; convert expects exactly one\n";
        return 1;
    }
    std::cout << write_canonical(models.front().diagram);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flow-direction consistency metrics for laid-out process models"};
    app.require_subcommand(1);

    RunConfig config;
    std::string metric_choice = "all";
    if (const char* env = std::getenv("FLOWGAUGE_MAX_STATES")) {
        config.profile.max_states = std::strtoull(env, nullptr, 10);
    }

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--metric", metric_choice, "me1|me2|mbp|all")
            ->check(CLI::IsMember({"me1", "me2", "mbp", "all"}));
        cmd->add_option("--format", config.format, "json|csv|table")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        cmd->add_option("--lookahead", config.profile.lookahead)->check(CLI::PositiveNumber);
        cmd->add_option("--max-states", config.profile.max_states)->check(CLI::PositiveNumber);
        cmd->add_option("--parallelism", config.parallelism)->check(CLI::PositiveNumber);
        cmd->add_flag("--timing", config.timing, "report per-model wall clock per metric");
    };

    std::vector<std::string> score_paths;
    auto* score = app.add_subcommand("score", "score .bpmn / canonical .json models");
    score->add_option("paths", score_paths, "model files")->expected(-1);
    add_common(score);

    std::string rank_dir;
    auto* rank = app.add_subcommand("rank", "corpus ranking, dispersion and histograms");
    rank->add_option("dir", rank_dir, "corpus directory")->required();
    add_common(rank);

    std::string scores_csv, human_csv;
    auto* correlate_cmd =
        app.add_subcommand("correlate", "correlate metric scores with human ratings");
    correlate_cmd->add_option("scores", scores_csv, "scores.csv (model,metric,score)")
        ->required();
    correlate_cmd->add_option("human", human_csv, "human.csv (model,mean,stddev)")->required();

    std::string profiles_path;
    auto* profiles_cmd =
        app.add_subcommand("profiles", "dump the behavioral relation matrix as CSV");
    profiles_cmd->add_option("path", profiles_path, "model file")->required();
    add_common(profiles_cmd);

    std::string convert_path;
    auto* convert = app.add_subcommand("convert", "emit the canonical JSON form of a model");
    convert->add_option("path", convert_path, "model file")->required();

    CLI11_PARSE(app, argc, argv);

    if (metric_choice == "me1") config.metrics = {MetricId::ME1};
    if (metric_choice == "me2") config.metrics = {MetricId::ME2};
    if (metric_choice == "mbp") config.metrics = {MetricId::MBP};

    try {
        if (score->parsed()) return cmd_score(score_paths, config);
        if (rank->parsed()) return cmd_rank(rank_dir, config);
        if (correlate_cmd->parsed()) return cmd_correlate(scores_csv, human_csv);
        if (profiles_cmd->parsed()) return cmd_profiles(profiles_path, config);
        if (convert->parsed()) return cmd_convert(convert_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
