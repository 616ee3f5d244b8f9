#include "flowgauge/consistency.hpp"

#include <unordered_map>

namespace flowgauge {

const char* to_string(MetricId metric) {
    switch (metric) {
    case MetricId::ME1: return "ME1";
    case MetricId::ME2: return "ME2";
    case MetricId::MBP: return "MBP";
    }
    return "?";
}

namespace {

// Reported label for tied predominant counters. The score itself is
// tie-independent.
constexpr std::array<Direction, 4> kTieOrder = {
    Direction::East, Direction::South, Direction::West, Direction::North};

Direction pick_predominant(const std::array<std::int64_t, 4>& counts) {
    Direction best = Direction::East;
    std::int64_t best_count = -1;
    for (Direction d : kTieOrder) {
        std::int64_t c = counts[static_cast<std::size_t>(d)];
        if (c > best_count) {
            best = d;
            best_count = c;
        }
    }
    return best;
}

} // namespace

ConsistencyResult cons(const ProcessDiagram& diagram, DirectionMode mode) {
    ConsistencyResult result;
    for (const auto& edge : diagram.edges) {
        auto [dx, dy] = edge_vector(edge);
        if (dx == 0.0 && dy == 0.0) {
            ++result.degenerate_edges_skipped;
            continue;
        }
        DirectionSet dirs = classify(edge_angle(edge), mode);
        for (Direction d : kAllDirections) {
            if (dirs.contains(d)) ++result.counts[static_cast<std::size_t>(d)];
        }
        ++result.denominator;
    }
    if (result.denominator == 0) {
        throw NoEdgesError("diagram has no countable edges");
    }
    result.predominant = pick_predominant(result.counts);
    result.score = static_cast<double>(result.count(result.predominant)) /
                   static_cast<double>(result.denominator);
    return result;
}

ConsistencyResult mbp(const ProcessDiagram& diagram,
                      const std::vector<BehavioralRelation>& relations) {
    std::unordered_map<std::string, Point> activity_centers;
    for (const auto& n : diagram.nodes) {
        if (n.kind == NodeKind::Activity) activity_centers[n.id] = n.center;
    }

    ConsistencyResult result;
    for (const auto& rel : relations) {
        if (rel.relation != RelationKind::StrictOrder) continue;
        auto s = activity_centers.find(rel.source);
        auto t = activity_centers.find(rel.target);
        if (s == activity_centers.end() || t == activity_centers.end()) {
            throw DomainError("strict relation endpoint '" +
                              (s == activity_centers.end() ? rel.source : rel.target) +
                              "' is not an activity of the diagram");
        }
        // Strict inequalities: aligned coordinates count for neither axis.
        if (s->second.x < t->second.x) ++result.counts[static_cast<std::size_t>(Direction::East)];
        if (s->second.y < t->second.y) ++result.counts[static_cast<std::size_t>(Direction::South)];
        ++result.denominator;
    }
    if (result.denominator == 0) {
        throw NoStrictRelationsError("no strict-order relations to evaluate");
    }
    std::int64_t east = result.count(Direction::East);
    std::int64_t south = result.count(Direction::South);
    result.predominant = east >= south ? Direction::East : Direction::South;
    result.score = static_cast<double>(std::max(east, south)) /
                   static_cast<double>(result.denominator);
    return result;
}

ConsistencyResult score_model(const ProcessDiagram& diagram, MetricId metric,
                              const ProfileConfig& config) {
    switch (metric) {
    case MetricId::ME1:
        return cons(diagram, DirectionMode::OneDirection);
    case MetricId::ME2:
        return cons(diagram, DirectionMode::TwoDirections);
    case MetricId::MBP:
        return mbp(diagram, behavioral_profiles(diagram, config));
    }
    throw DomainError("unknown metric");
}

} // namespace flowgauge
