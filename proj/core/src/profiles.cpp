#include "flowgauge/profiles.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <optional>
#include <unordered_map>
#include <unordered_set>

namespace flowgauge {

const char* to_string(RelationKind kind) {
    switch (kind) {
    case RelationKind::StrictOrder: return "StrictOrder";
    case RelationKind::Exclusive: return "Exclusive";
    case RelationKind::Interleaving: return "Interleaving";
    }
    return "?";
}

namespace {

using Marking = std::vector<std::uint64_t>;

bool has_token(const Marking& m, std::size_t edge) {
    return (m[edge / 64] >> (edge % 64)) & 1u;
}

void set_token(Marking& m, std::size_t edge) {
    m[edge / 64] |= std::uint64_t{1} << (edge % 64);
}

void clear_token(Marking& m, std::size_t edge) {
    m[edge / 64] &= ~(std::uint64_t{1} << (edge % 64));
}

struct State {
    Marking marking;
    std::vector<std::uint32_t> window; // last <=lookahead activity node indices
};

std::string state_key(const State& s) {
    std::string key;
    key.reserve(s.marking.size() * 8 + s.window.size() * 4 + 1);
    key.append(reinterpret_cast<const char*>(s.marking.data()), s.marking.size() * 8);
    key.push_back('\x01');
    key.append(reinterpret_cast<const char*>(s.window.data()), s.window.size() * 4);
    return key;
}

struct Firing {
    Marking marking;
    bool is_activity = false;
    std::uint32_t activity = 0;
};

// Firing rules per node kind. XOR gateways consume from one incoming edge
// and produce on exactly one outgoing edge (one successor per branch); AND
// gateways synchronize on all incoming edges and produce on all outgoing
// ones; every other kind consumes from any single incoming edge and produces
// on all outgoing edges. A firing that would place a second token on an edge
// violates 1-safety and is rejected.
void enumerate_firings(const TokenGame& game, std::size_t node_idx, const Marking& marking,
                       std::vector<Firing>& out, bool& unsafe_seen) {
    const auto& node = game.nodes[node_idx];
    const bool is_activity = node.kind == NodeKind::Activity;

    auto produce_all = [&](Marking m) -> std::optional<Marking> {
        for (std::size_t o : node.outgoing) {
            if (has_token(m, o)) {
                unsafe_seen = true;
                return std::nullopt;
            }
            set_token(m, o);
        }
        return m;
    };

    if (node.kind == NodeKind::GatewayAnd) {
        if (node.incoming.empty()) return;
        for (std::size_t i : node.incoming) {
            if (!has_token(marking, i)) return;
        }
        Marking m = marking;
        for (std::size_t i : node.incoming) clear_token(m, i);
        if (auto produced = produce_all(std::move(m))) {
            out.push_back({std::move(*produced), false, 0});
        }
        return;
    }

    for (std::size_t i : node.incoming) {
        if (!has_token(marking, i)) continue;
        Marking consumed = marking;
        clear_token(consumed, i);
        if (node.kind == NodeKind::GatewayXor) {
            if (node.outgoing.empty()) {
                out.push_back({consumed, false, 0});
                continue;
            }
            for (std::size_t o : node.outgoing) {
                if (has_token(consumed, o)) {
                    unsafe_seen = true;
                    continue;
                }
                Marking m = consumed;
                set_token(m, o);
                out.push_back({std::move(m), false, 0});
            }
        } else {
            if (auto produced = produce_all(consumed)) {
                out.push_back({std::move(*produced), is_activity,
                               static_cast<std::uint32_t>(node_idx)});
            }
        }
    }
}

} // namespace

TokenGame build_token_game(const ProcessDiagram& diagram) {
    TokenGame game;
    std::unordered_map<std::string, std::size_t> index;
    game.nodes.reserve(diagram.nodes.size());
    for (const auto& n : diagram.nodes) {
        index.emplace(n.id, game.nodes.size());
        game.nodes.push_back({n.kind, n.id, {}, {}});
        if (n.kind == NodeKind::Activity) {
            game.activity_nodes.push_back(game.nodes.size() - 1);
        }
    }

    game.edge_count = diagram.edges.size();
    for (std::size_t e = 0; e < diagram.edges.size(); ++e) {
        const auto& edge = diagram.edges[e];
        auto src = index.find(edge.source);
        auto tgt = index.find(edge.target);
        if (src == index.end() || tgt == index.end()) {
            throw DomainError("edge '" + edge.id + "' references a missing node");
        }
        game.nodes[src->second].outgoing.push_back(e);
        game.nodes[tgt->second].incoming.push_back(e);
    }

    game.initial_marking.assign((game.edge_count + 63) / 64, 0);
    bool has_start = false;
    for (const auto& node : game.nodes) {
        if (node.kind != NodeKind::StartEvent) continue;
        has_start = true;
        for (std::size_t o : node.outgoing) set_token(game.initial_marking, o);
    }
    if (!has_start) {
        throw UnplayableModelError("diagram has no start event, token game is unplayable");
    }
    return game;
}

PlayoutResult directly_follows(const TokenGame& game, const ProfileConfig& config) {
    if (config.lookahead < 1) throw DomainError("lookahead must be positive");
    if (config.max_states == 0) throw DomainError("max_states must be positive");

    const std::size_t window_len = static_cast<std::size_t>(config.lookahead);

    PlayoutResult result;
    std::set<std::pair<std::uint32_t, std::uint32_t>> index_pairs;
    std::set<std::uint32_t> fired;

    std::deque<State> queue;
    std::unordered_set<std::string> visited;
    State initial{game.initial_marking, {}};
    visited.insert(state_key(initial));
    queue.push_back(std::move(initial));

    std::vector<Firing> firings;
    while (!queue.empty()) {
        State state = std::move(queue.front());
        queue.pop_front();

        for (std::size_t n = 0; n < game.nodes.size(); ++n) {
            firings.clear();
            enumerate_firings(game, n, state.marking, firings, result.unsafe_marking_seen);
            for (auto& firing : firings) {
                State next{std::move(firing.marking), state.window};
                if (firing.is_activity) {
                    for (std::uint32_t prev : next.window) {
                        index_pairs.emplace(prev, firing.activity);
                    }
                    fired.insert(firing.activity);
                    next.window.push_back(firing.activity);
                    if (next.window.size() > window_len) {
                        next.window.erase(next.window.begin());
                    }
                }
                std::string key = state_key(next);
                if (visited.contains(key)) continue;
                if (visited.size() >= config.max_states) {
                    throw ExplorationBoundError(
                        "state-space bound exceeded after " +
                            std::to_string(visited.size()) + " states",
                        visited.size());
                }
                visited.insert(std::move(key));
                queue.push_back(std::move(next));
            }
        }
    }

    result.states_visited = visited.size();
    for (auto [a, b] : index_pairs) {
        result.pairs.emplace(game.nodes[a].id, game.nodes[b].id);
    }
    for (std::uint32_t a : fired) {
        result.fired_activities.insert(game.nodes[a].id);
    }
    return result;
}

std::vector<BehavioralRelation> classify(
    const std::set<std::pair<std::string, std::string>>& pairs,
    const std::set<std::string>& activities) {
    std::vector<BehavioralRelation> relations;
    for (auto a = activities.begin(); a != activities.end(); ++a) {
        for (auto b = std::next(a); b != activities.end(); ++b) {
            const bool ab = pairs.contains({*a, *b});
            const bool ba = pairs.contains({*b, *a});
            if (ab && ba) {
                relations.push_back({RelationKind::Interleaving, *a, *b});
            } else if (ab) {
                relations.push_back({RelationKind::StrictOrder, *a, *b});
            } else if (ba) {
                relations.push_back({RelationKind::StrictOrder, *b, *a});
            } else {
                relations.push_back({RelationKind::Exclusive, *a, *b});
            }
        }
    }
    std::sort(relations.begin(), relations.end());
    return relations;
}

std::vector<BehavioralRelation> behavioral_profiles(const ProcessDiagram& diagram,
                                                    const ProfileConfig& config) {
    TokenGame game = build_token_game(diagram);
    PlayoutResult playout = directly_follows(game, config);
    // Activities that never fire participate in no relation.
    return classify(playout.pairs, playout.fired_activities);
}

} // namespace flowgauge
