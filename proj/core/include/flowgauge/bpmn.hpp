#pragma once

#include "flowgauge/diagram.hpp"
#include "flowgauge/error.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace flowgauge {

struct MissingLayoutError : ParseError {
    using ParseError::ParseError;
};

struct ParsedProcess {
    std::string id;
    ProcessDiagram diagram;
    std::vector<std::string> warnings;
};

/// Parses BPMN 2.0 XML with Diagram Interchange. Each process element yields
/// one diagram. Node centers come from BPMNShape bounds; edge attachment
/// points are the first and last BPMNEdge waypoints (intermediate waypoints
/// are discarded). A sequence flow without a BPMNEdge falls back to the
/// endpoint node centers and produces a warning; a flow node without a
/// BPMNShape is an error. Any namespace prefix bound to the BPMN 2.0 /
/// BPMNDI namespaces is accepted.
std::vector<ParsedProcess> parse_bpmn(std::string_view xml);

} // namespace flowgauge
