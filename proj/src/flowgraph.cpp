#include "f2j/flowgraph.hpp"

#include <algorithm>
#include <set>

namespace f2j {

const char* flow_node_color(FlowNodeKind k) {
  switch (k) {
    case FlowNodeKind::Trigger: return "pink";
    case FlowNodeKind::Fragment: return "green";
    case FlowNodeKind::Initial: return "blue";
    case FlowNodeKind::Final: return "purple";
  }
  return "green";
}

namespace {

class FlowBuilder {
 public:
  explicit FlowBuilder(FlowGraph& g) : g_(g) {}

  std::string add_node(FlowNodeKind kind, const std::string& label) {
    FlowNode n;
    n.id = "n" + std::to_string(g_.nodes.size() + 1);
    n.kind = kind;
    n.label = label;
    g_.nodes.push_back(n);
    return g_.nodes.back().id;
  }

  void add_edge(const std::string& from, const std::string& to) {
    if (!seen_.insert(from + ">" + to).second) return;
    g_.edges.push_back({from, to});
  }

  void connect_all(const std::vector<std::string>& pending, const std::string& to) {
    for (const auto& p : pending) add_edge(p, to);
  }

  // Chains a primitive sequence after the given entry nodes; returns the exits.
  std::vector<std::string> chain(const std::vector<PrimPtr>& stmts,
                                 std::vector<std::string> pending) {
    for (const auto& p : stmts) pending = chain_one(*p, std::move(pending));
    return pending;
  }

 private:
  FlowGraph& g_;
  std::set<std::string> seen_;

  static void push_unique(std::vector<std::string>& v, const std::vector<std::string>& add) {
    for (const auto& id : add)
      if (std::find(v.begin(), v.end(), id) == v.end()) v.push_back(id);
  }

  std::vector<std::string> chain_one(const Primitive& p, std::vector<std::string> pending) {
    std::string node = add_node(FlowNodeKind::Fragment, p.label);
    connect_all(pending, node);

    switch (p.kind) {
      case PrimKind::SelectionFlow: {
        std::vector<std::string> exits;
        bool has_default = false;
        for (const auto& c : p.cases) {
          if (!c.condition && !c.match) has_default = true;
          push_unique(exits, chain(c.body, {node}));
        }
        // A selection that can be skipped falls through to the successor.
        if (!has_default) push_unique(exits, {node});
        return exits;
      }
      case PrimKind::Loop: {
        std::vector<std::string> body_exits = chain(p.body, {node});
        connect_all(body_exits, node);  // back-edge
        return {node};
      }
      case PrimKind::Try: {
        std::vector<std::string> exits = chain(p.body, {node});
        for (const auto& c : p.catches) push_unique(exits, chain(c.body, {node}));
        return exits;
      }
      default:
        return {node};
    }
  }
};

std::string escape_quotes(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\\' || c == '"') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

const char* category_name(FlowNodeKind k) {
  switch (k) {
    case FlowNodeKind::Trigger: return "Trigger";
    case FlowNodeKind::Fragment: return "Fragment";
    case FlowNodeKind::Initial: return "Initial";
    case FlowNodeKind::Final: return "Final";
  }
  return "Fragment";
}

}  // namespace

FlowGraph build_flow(const Code& code) {
  FlowGraph g;
  g.name = code.name;
  FlowBuilder b(g);
  std::string trigger = b.add_node(FlowNodeKind::Trigger, code.name);
  std::string initial = b.add_node(FlowNodeKind::Initial, "initial");
  b.add_edge(trigger, initial);
  std::vector<std::string> pending = b.chain(code.primitives, {initial});
  std::string final_node = b.add_node(FlowNodeKind::Final, "final");
  b.connect_all(pending, final_node);
  return g;
}

std::string emit_flow(const FlowGraph& graph, FlowFormat format) {
  std::string out;
  if (format == FlowFormat::Cypher) {
    for (const auto& n : graph.nodes)
      out += "CREATE (" + n.id + ":" + category_name(n.kind) + " {label: \"" +
             escape_quotes(n.label) + "\", color: \"" + flow_node_color(n.kind) + "\"})\n";
    for (const auto& e : graph.edges)
      out += "CREATE (" + e.from + ")-[:FLOWS_TO]->(" + e.to + ")\n";
    return out;
  }
  out += "digraph \"" + escape_quotes(graph.name) + "\" {\n";
  out += "  node [style=filled];\n";
  for (const auto& n : graph.nodes)
    out += "  " + n.id + " [label=\"" + escape_quotes(n.label) + "\", fillcolor=" +
           flow_node_color(n.kind) + "];\n";
  for (const auto& e : graph.edges) out += "  " + e.from + " -> " + e.to + ";\n";
  out += "}\n";
  return out;
}

}  // namespace f2j
