#include "flowgauge/canonical.hpp"

#include <algorithm>

#include <json.hpp>

namespace flowgauge {

namespace {

using json = nlohmann::ordered_json;

double require_number(const json& obj, const char* key, const std::string& path) {
    if (!obj.contains(key) || !obj[key].is_number()) {
        throw ParseError("canonical diagram: expected number at " + path + "." + key);
    }
    return obj[key].get<double>();
}

std::string require_string(const json& obj, const char* key, const std::string& path) {
    if (!obj.contains(key) || !obj[key].is_string()) {
        throw ParseError("canonical diagram: expected string at " + path + "." + key);
    }
    return obj[key].get<std::string>();
}

} // namespace

std::string write_canonical(const ProcessDiagram& diagram) {
    ProcessDiagram sorted = diagram;
    std::sort(sorted.nodes.begin(), sorted.nodes.end(),
              [](const Node& a, const Node& b) { return a.id < b.id; });
    std::sort(sorted.edges.begin(), sorted.edges.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });

    json doc;
    doc["version"] = 1;
    doc["nodes"] = json::array();
    for (const auto& n : sorted.nodes) {
        json node;
        node["id"] = n.id;
        node["kind"] = to_string(n.kind);
        node["x"] = n.center.x;
        node["y"] = n.center.y;
        if (n.label) node["label"] = *n.label;
        doc["nodes"].push_back(std::move(node));
    }
    doc["edges"] = json::array();
    for (const auto& e : sorted.edges) {
        json edge;
        edge["id"] = e.id;
        edge["source"] = e.source;
        edge["target"] = e.target;
        edge["sx"] = e.start.x;
        edge["sy"] = e.start.y;
        edge["ex"] = e.end.x;
        edge["ey"] = e.end.y;
        doc["edges"].push_back(std::move(edge));
    }
    return doc.dump(2) + "\n";
}

ProcessDiagram parse_canonical(std::string_view document) {
    json doc = json::parse(document, nullptr, false);
    if (doc.is_discarded()) {
        throw ParseError("canonical diagram: invalid JSON");
    }
    if (!doc.is_object()) {
        throw ParseError("canonical diagram: expected object at $");
    }
    if (!doc.contains("version") || !doc["version"].is_number_integer() ||
        doc["version"].get<int>() != 1) {
        throw ParseError("canonical diagram: unsupported or missing version at $.version");
    }
    if (!doc.contains("nodes") || !doc["nodes"].is_array()) {
        throw ParseError("canonical diagram: expected array at $.nodes");
    }
    if (!doc.contains("edges") || !doc["edges"].is_array()) {
        throw ParseError("canonical diagram: expected array at $.edges");
    }

    ProcessDiagram diagram;
    std::size_t i = 0;
    for (const auto& n : doc["nodes"]) {
        const std::string path = "$.nodes[" + std::to_string(i++) + "]";
        if (!n.is_object()) throw ParseError("canonical diagram: expected object at " + path);
        Node node;
        node.id = require_string(n, "id", path);
        auto kind = node_kind_from_string(require_string(n, "kind", path));
        if (!kind) {
            throw ParseError("canonical diagram: unknown node kind at " + path + ".kind");
        }
        node.kind = *kind;
        node.center = {require_number(n, "x", path), require_number(n, "y", path)};
        if (n.contains("label")) node.label = require_string(n, "label", path);
        diagram.nodes.push_back(std::move(node));
    }
    i = 0;
    for (const auto& e : doc["edges"]) {
        const std::string path = "$.edges[" + std::to_string(i++) + "]";
        if (!e.is_object()) throw ParseError("canonical diagram: expected object at " + path);
        Edge edge;
        edge.id = require_string(e, "id", path);
        edge.source = require_string(e, "source", path);
        edge.target = require_string(e, "target", path);
        edge.start = {require_number(e, "sx", path), require_number(e, "sy", path)};
        edge.end = {require_number(e, "ex", path), require_number(e, "ey", path)};
        diagram.edges.push_back(std::move(edge));
    }

    auto report = validate(diagram);
    if (!report.empty()) {
        throw ParseError("canonical diagram: " + report.front().rule + " (element '" +
                         report.front().element_id + "')");
    }
    return diagram;
}

} // namespace flowgauge
