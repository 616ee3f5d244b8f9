#pragma once

#include "flowgauge/diagram.hpp"
#include "flowgauge/error.hpp"

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace flowgauge {

enum class RelationKind { StrictOrder, Exclusive, Interleaving };

const char* to_string(RelationKind kind);

/// Relation over a pair of activity nodes. Exclusive and Interleaving are
/// symmetric and stored once with source < target (id order); StrictOrder
/// is directed.
struct BehavioralRelation {
    RelationKind relation;
    std::string source;
    std::string target;

    friend auto operator<=>(const BehavioralRelation&, const BehavioralRelation&) = default;
};

struct ProfileConfig {
    int lookahead = 1;
    std::size_t max_states = 100000;
    std::size_t max_trace_activity_length = 64;
};

struct UnplayableModelError : Error {
    using Error::Error;
};

struct ExplorationBoundError : Error {
    ExplorationBoundError(const std::string& what, std::size_t visited)
        : Error(what), states_visited(visited) {}
    std::size_t states_visited;
};

/// Marking-transition system derived from a diagram. Markings are 1-safe
/// token assignments to edges; the initial marking places one token on each
/// outgoing edge of each start event.
struct TokenGame {
    struct NodeInfo {
        NodeKind kind;
        std::string id;
        std::vector<std::size_t> incoming; // edge indices
        std::vector<std::size_t> outgoing;
    };

    std::vector<NodeInfo> nodes;
    std::size_t edge_count = 0;
    std::vector<std::uint64_t> initial_marking; // bitset over edges
    std::vector<std::size_t> activity_nodes;    // node indices with kind Activity
};

TokenGame build_token_game(const ProcessDiagram& diagram);

struct PlayoutResult {
    /// Ordered activity pairs (a, b): b fired within `lookahead` activity
    /// firings after a on some reachable path.
    std::set<std::pair<std::string, std::string>> pairs;
    std::set<std::string> fired_activities;
    std::size_t states_visited = 0;
    bool unsafe_marking_seen = false;
};

PlayoutResult directly_follows(const TokenGame& game, const ProfileConfig& config);

/// Per unordered activity pair: StrictOrder if only one order was observed,
/// Interleaving if both, Exclusive if neither (and both activities fired).
std::vector<BehavioralRelation> classify(
    const std::set<std::pair<std::string, std::string>>& pairs,
    const std::set<std::string>& activities);

std::vector<BehavioralRelation> behavioral_profiles(const ProcessDiagram& diagram,
                                                    const ProfileConfig& config = {});

} // namespace flowgauge
