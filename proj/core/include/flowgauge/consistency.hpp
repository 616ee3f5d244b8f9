#pragma once

#include "flowgauge/diagram.hpp"
#include "flowgauge/direction.hpp"
#include "flowgauge/profiles.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace flowgauge {

enum class MetricId { ME1, ME2, MBP };

const char* to_string(MetricId metric);

struct NoEdgesError : Error {
    using Error::Error;
};

struct NoStrictRelationsError : Error {
    using Error::Error;
};

struct ConsistencyResult {
    double score = 0.0;
    Direction predominant = Direction::East;
    /// Per-direction tallies, indexed by Direction. For the edge metrics these
    /// are the direction counters; for the profile metric only East and South
    /// are populated (correct-East / correct-South).
    std::array<std::int64_t, 4> counts{};
    /// Number of counted edges (edge metrics, degenerate edges excluded) or
    /// of strict-order relations (profile metric).
    std::int64_t denominator = 0;
    std::int64_t degenerate_edges_skipped = 0;

    std::int64_t count(Direction d) const {
        return counts[static_cast<std::size_t>(d)];
    }
};

/// Majority-vote edge-direction consistency: each edge contributes one tally
/// per classified direction; the score is the predominant tally over the
/// number of counted edges. Degenerate edges are excluded from both sides of
/// the ratio.
ConsistencyResult cons(const ProcessDiagram& diagram, DirectionMode mode);

/// Strict-order placement consistency: for each strict relation, the target
/// is checked to lie strictly east and strictly south of the source; the
/// score is max(correct-East, correct-South) over the strict-relation count.
ConsistencyResult mbp(const ProcessDiagram& diagram,
                      const std::vector<BehavioralRelation>& relations);

ConsistencyResult score_model(const ProcessDiagram& diagram, MetricId metric,
                              const ProfileConfig& config = {});

} // namespace flowgauge
