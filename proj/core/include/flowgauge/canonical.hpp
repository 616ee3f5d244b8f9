#pragma once

#include "flowgauge/diagram.hpp"
#include "flowgauge/error.hpp"

#include <string>
#include <string_view>

namespace flowgauge {

/// Canonical JSON diagram format, version 1:
///   {"version": 1,
///    "nodes": [{"id", "kind", "x", "y", "label"?}, ...],
///    "edges": [{"id", "source", "target", "sx", "sy", "ex", "ey"}, ...]}
/// Output is deterministic: stable key order, nodes and edges sorted by id.
std::string write_canonical(const ProcessDiagram& diagram);

ProcessDiagram parse_canonical(std::string_view document);

} // namespace flowgauge
