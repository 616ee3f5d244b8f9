#include "flowgauge/bpmn.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

namespace flowgauge {

namespace {

namespace pt = boost::property_tree;

constexpr const char* kBpmnNs = "http://www.omg.org/spec/BPMN/20100524/MODEL";
constexpr const char* kBpmnDiNs = "http://www.omg.org/spec/BPMN/20100524/DI";

using NsMap = std::map<std::string, std::string>; // prefix (or "") -> uri

std::string local_name(const std::string& tag) {
    auto pos = tag.find(':');
    return pos == std::string::npos ? tag : tag.substr(pos + 1);
}

NsMap with_declarations(const pt::ptree& element, NsMap env) {
    if (auto attrs = element.get_child_optional("<xmlattr>")) {
        for (const auto& [name, value] : *attrs) {
            if (name == "xmlns") {
                env[""] = value.data();
            } else if (name.starts_with("xmlns:")) {
                env[name.substr(6)] = value.data();
            }
        }
    }
    return env;
}

// Tolerant match: the resolved namespace must be the expected one, but
// elements with no resolvable namespace are accepted by local name alone.
bool is_element(const std::string& tag, const NsMap& env, const char* uri,
                const std::string& local) {
    if (tag == "<xmlattr>" || tag == "<xmlcomment>") return false;
    if (local_name(tag) != local) return false;
    auto pos = tag.find(':');
    auto it = env.find(pos == std::string::npos ? "" : tag.substr(0, pos));
    return it == env.end() || it->second.empty() || it->second == uri;
}

std::optional<std::string> attr(const pt::ptree& element, const char* name) {
    if (auto value = element.get_optional<std::string>(std::string("<xmlattr>.") + name)) {
        return *value;
    }
    return std::nullopt;
}

double numeric_attr(const pt::ptree& element, const char* name, const std::string& context) {
    auto value = element.get_optional<double>(std::string("<xmlattr>.") + name);
    if (!value) {
        throw ParseError("BPMN: missing or non-numeric attribute '" + std::string(name) +
                         "' on " + context);
    }
    return *value;
}

struct DiagramInterchange {
    std::unordered_map<std::string, Point> shape_centers;     // bpmnElement -> center
    std::unordered_map<std::string, std::pair<Point, Point>> edge_endpoints;
};

void collect_di(const pt::ptree& element, const NsMap& parent_env, DiagramInterchange& di) {
    for (const auto& [tag, child] : element) {
        if (tag == "<xmlattr>" || tag == "<xmlcomment>") continue;
        NsMap env = with_declarations(child, parent_env);
        if (is_element(tag, env, kBpmnDiNs, "BPMNShape")) {
            auto ref = attr(child, "bpmnElement");
            if (!ref) continue;
            for (const auto& [btag, bounds] : child) {
                if (local_name(btag) != "Bounds") continue;
                double x = numeric_attr(bounds, "x", "Bounds of shape '" + *ref + "'");
                double y = numeric_attr(bounds, "y", "Bounds of shape '" + *ref + "'");
                double w = numeric_attr(bounds, "width", "Bounds of shape '" + *ref + "'");
                double h = numeric_attr(bounds, "height", "Bounds of shape '" + *ref + "'");
                di.shape_centers[*ref] = {x + w / 2.0, y + h / 2.0};
                break;
            }
        } else if (is_element(tag, env, kBpmnDiNs, "BPMNEdge")) {
            auto ref = attr(child, "bpmnElement");
            if (!ref) continue;
            std::vector<Point> waypoints;
            for (const auto& [wtag, wp] : child) {
                if (local_name(wtag) != "waypoint") continue;
                waypoints.push_back({numeric_attr(wp, "x", "waypoint of edge '" + *ref + "'"),
                                     numeric_attr(wp, "y", "waypoint of edge '" + *ref + "'")});
            }
            if (waypoints.size() >= 2) {
                di.edge_endpoints[*ref] = {waypoints.front(), waypoints.back()};
            }
        } else {
            collect_di(child, env, di);
        }
    }
}

std::optional<NodeKind> flow_node_kind(const std::string& local) {
    if (local == "task" || local == "userTask" || local == "serviceTask" ||
        local == "scriptTask" || local == "manualTask" || local == "businessRuleTask" ||
        local == "sendTask" || local == "receiveTask" || local == "callActivity") {
        return NodeKind::Activity;
    }
    if (local == "startEvent") return NodeKind::StartEvent;
    if (local == "endEvent") return NodeKind::EndEvent;
    if (local == "exclusiveGateway") return NodeKind::GatewayXor;
    if (local == "parallelGateway") return NodeKind::GatewayAnd;
    if (local == "intermediateCatchEvent" || local == "intermediateThrowEvent" ||
        local == "boundaryEvent" || local == "inclusiveGateway" ||
        local == "eventBasedGateway" || local == "complexGateway" ||
        local == "subProcess") {
        return NodeKind::Other;
    }
    return std::nullopt; // not a supported flow node (lanes, data objects, ...)
}

ParsedProcess parse_process(const pt::ptree& process, const NsMap& env,
                            const DiagramInterchange& di) {
    ParsedProcess parsed;
    parsed.id = attr(process, "id").value_or("process");

    struct Flow {
        std::string id;
        std::string source;
        std::string target;
    };
    std::vector<Flow> flows;

    for (const auto& [tag, child] : process) {
        if (tag == "<xmlattr>" || tag == "<xmlcomment>") continue;
        NsMap child_env = with_declarations(child, env);
        const std::string local = local_name(tag);
        if (is_element(tag, child_env, kBpmnNs, "sequenceFlow")) {
            auto id = attr(child, "id");
            auto source = attr(child, "sourceRef");
            auto target = attr(child, "targetRef");
            if (!id || !source || !target) {
                throw ParseError("BPMN: sequenceFlow is missing id/sourceRef/targetRef in process '" +
                                 parsed.id + "'");
            }
            flows.push_back({*id, *source, *target});
            continue;
        }
        auto kind = flow_node_kind(local);
        if (!kind || !is_element(tag, child_env, kBpmnNs, local)) continue;

        auto id = attr(child, "id");
        if (!id) {
            throw ParseError("BPMN: " + local + " without id in process '" + parsed.id + "'");
        }
        auto center = di.shape_centers.find(*id);
        if (center == di.shape_centers.end()) {
            throw MissingLayoutError("BPMN: flow node '" + *id + "' has no BPMNShape");
        }
        Node node{*id, *kind, center->second, attr(child, "name")};
        parsed.diagram.nodes.push_back(std::move(node));
    }

    for (const auto& flow : flows) {
        Edge edge{flow.id, flow.source, flow.target, {}, {}};
        auto endpoints = di.edge_endpoints.find(flow.id);
        if (endpoints != di.edge_endpoints.end()) {
            edge.start = endpoints->second.first;
            edge.end = endpoints->second.second;
        } else {
            const Node* src = parsed.diagram.find_node(flow.source);
            const Node* tgt = parsed.diagram.find_node(flow.target);
            if (!src || !tgt) {
                throw ParseError("BPMN: sequenceFlow '" + flow.id +
                                 "' references an unknown flow node");
            }
            edge.start = src->center;
            edge.end = tgt->center;
            parsed.warnings.push_back("sequenceFlow '" + flow.id +
                                      "' has no BPMNEdge, using node centers");
        }
        parsed.diagram.edges.push_back(std::move(edge));
    }

    auto report = validate(parsed.diagram);
    if (!report.empty()) {
        throw ParseError("BPMN: process '" + parsed.id + "': " + report.front().rule +
                         " (element '" + report.front().element_id + "')");
    }
    return parsed;
}

void collect_processes(const pt::ptree& element, const NsMap& parent_env,
                       const DiagramInterchange& di, std::vector<ParsedProcess>& out) {
    for (const auto& [tag, child] : element) {
        if (tag == "<xmlattr>" || tag == "<xmlcomment>") continue;
        NsMap env = with_declarations(child, parent_env);
        if (is_element(tag, env, kBpmnNs, "process")) {
            out.push_back(parse_process(child, env, di));
        } else {
            collect_processes(child, env, di, out);
        }
    }
}

} // namespace

std::vector<ParsedProcess> parse_bpmn(std::string_view xml) {
    pt::ptree tree;
    std::istringstream stream{std::string(xml)};
    try {
        pt::read_xml(stream, tree, pt::xml_parser::trim_whitespace);
    } catch (const pt::xml_parser_error& e) {
        throw ParseError(std::string("BPMN: malformed XML: ") + e.what());
    }

    DiagramInterchange di;
    collect_di(tree, {}, di);

    std::vector<ParsedProcess> processes;
    collect_processes(tree, {}, di, processes);
    return processes;
}

} // namespace flowgauge
