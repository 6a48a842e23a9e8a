#pragma once

#include <string>
#include <vector>

#include "f2j/primitives.hpp"

namespace f2j {

enum class FlowNodeKind { Trigger, Fragment, Initial, Final };

const char* flow_node_color(FlowNodeKind k);  // pink / green / blue / purple

struct FlowNode {
  std::string id;  // n1, n2, ... in creation order
  FlowNodeKind kind = FlowNodeKind::Fragment;
  std::string label;
};

struct FlowEdge {
  std::string from;
  std::string to;
};

struct FlowGraph {
  std::string name;  // trigger/unit name
  std::vector<FlowNode> nodes;
  std::vector<FlowEdge> edges;
};

// Execution-flow graph over the flattened primitives of one Code: TRIGGER ->
// INITIAL -> fragments -> FINAL. SelectionFlow fragments fan out per case and
// re-join at the successor; a missing else-case adds a fall-through edge.
FlowGraph build_flow(const Code& code);

enum class FlowFormat { Cypher, Dot };

std::string emit_flow(const FlowGraph& graph, FlowFormat format);

}  // namespace f2j
