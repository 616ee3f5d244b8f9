#pragma once

#include <optional>
#include <string>
#include <vector>

namespace flowgauge {

/// Canvas point. Screen convention throughout: x grows rightward, y grows
/// DOWNWARD. All angle and "south of" reasoning in the library depends on
/// this orientation.
struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

enum class NodeKind {
    Activity,
    StartEvent,
    EndEvent,
    GatewayXor,
    GatewayAnd,
    Other,
};

const char* to_string(NodeKind kind);
std::optional<NodeKind> node_kind_from_string(const std::string& name);

struct Node {
    std::string id;
    NodeKind kind = NodeKind::Other;
    Point center;
    std::optional<std::string> label;
};

/// Directed edge with its logical attachment points. Only the start and end
/// matter; any bend points of the drawn path are discarded at ingestion.
struct Edge {
    std::string id;
    std::string source;
    std::string target;
    Point start;
    Point end;
};

struct ProcessDiagram {
    std::vector<Node> nodes;
    std::vector<Edge> edges;

    const Node* find_node(const std::string& id) const;
};

struct Violation {
    std::string element_id;
    std::string rule;
};

using ValidationReport = std::vector<Violation>;

/// Checks id uniqueness, referential integrity of edge endpoints and
/// coordinate finiteness. Violations are data, not failures.
ValidationReport validate(const ProcessDiagram& diagram);

/// Displacement from edge start to edge end: (end - start).
std::pair<double, double> edge_vector(const Edge& edge);

} // namespace flowgauge
