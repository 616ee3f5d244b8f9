#include "flowgauge/diagram.hpp"

#include <cmath>
#include <unordered_set>

namespace flowgauge {

const char* to_string(NodeKind kind) {
    switch (kind) {
    case NodeKind::Activity: return "Activity";
    case NodeKind::StartEvent: return "StartEvent";
    case NodeKind::EndEvent: return "EndEvent";
    case NodeKind::GatewayXor: return "GatewayXor";
    case NodeKind::GatewayAnd: return "GatewayAnd";
    case NodeKind::Other: return "Other";
    }
    return "Other";
}

std::optional<NodeKind> node_kind_from_string(const std::string& name) {
    if (name == "Activity") return NodeKind::Activity;
    if (name == "StartEvent") return NodeKind::StartEvent;
    if (name == "EndEvent") return NodeKind::EndEvent;
    if (name == "GatewayXor") return NodeKind::GatewayXor;
    if (name == "GatewayAnd") return NodeKind::GatewayAnd;
    if (name == "Other") return NodeKind::Other;
    return std::nullopt;
}

const Node* ProcessDiagram::find_node(const std::string& id) const {
    for (const auto& n : nodes) {
        if (n.id == id) return &n;
    }
    return nullptr;
}

ValidationReport validate(const ProcessDiagram& diagram) {
    ValidationReport report;

    std::unordered_set<std::string> node_ids;
    for (const auto& n : diagram.nodes) {
        if (!node_ids.insert(n.id).second) {
            report.push_back({n.id, "duplicate node id"});
        }
        if (!std::isfinite(n.center.x) || !std::isfinite(n.center.y)) {
            report.push_back({n.id, "non-finite node center"});
        }
    }

    std::unordered_set<std::string> edge_ids;
    for (const auto& e : diagram.edges) {
        if (!edge_ids.insert(e.id).second) {
            report.push_back({e.id, "duplicate edge id"});
        }
        if (!node_ids.contains(e.source)) {
            report.push_back({e.id, "edge source '" + e.source + "' does not resolve to a node"});
        }
        if (!node_ids.contains(e.target)) {
            report.push_back({e.id, "edge target '" + e.target + "' does not resolve to a node"});
        }
        if (!std::isfinite(e.start.x) || !std::isfinite(e.start.y) ||
            !std::isfinite(e.end.x) || !std::isfinite(e.end.y)) {
            report.push_back({e.id, "non-finite edge attachment point"});
        }
    }
    return report;
}

std::pair<double, double> edge_vector(const Edge& edge) {
    return {edge.end.x - edge.start.x, edge.end.y - edge.start.y};
}

} // namespace flowgauge
