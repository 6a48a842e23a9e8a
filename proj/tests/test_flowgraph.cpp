#include "doctest.h"

#include <set>
#include <utility>

#include "corpus.hpp"
#include "f2j/flowgraph.hpp"
#include "f2j/pipeline.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace f2j;
using testutil::contains;

namespace {

int node_index(const std::string& id) {
  REQUIRE(id.size() >= 2);
  REQUIRE(id[0] == 'n');
  return std::stoi(id.substr(1)) - 1;
}

std::set<std::pair<int, int>> edge_set(const FlowGraph& g) {
  std::set<std::pair<int, int>> edges;
  for (const auto& e : g.edges) edges.insert({node_index(e.from), node_index(e.to)});
  return edges;
}

std::string kind_tag(FlowNodeKind k) {
  switch (k) {
    case FlowNodeKind::Trigger: return "trigger";
    case FlowNodeKind::Initial: return "initial";
    case FlowNodeKind::Final: return "final";
    case FlowNodeKind::Fragment: return "fragment";
  }
  return "?";
}

void check_against_oracle(const FlowGraph& graph, const Code& code, const std::string& what) {
  oracle::Flow want = oracle::cfg(code);
  REQUIRE_MESSAGE(graph.nodes.size() == want.kinds.size(), what);
  for (std::size_t i = 0; i < want.kinds.size(); ++i) {
    std::string expected = want.kinds[i].substr(0, want.kinds[i].find(':'));
    CHECK_MESSAGE(kind_tag(graph.nodes[i].kind) == expected,
                  what + " node " + std::to_string(i));
  }
  CHECK_MESSAGE(edge_set(graph) == want.edges, what + " edge sets differ");
  // Node-count law: statement-level fragments + trigger + initial + final.
  CHECK(static_cast<int>(graph.nodes.size()) == oracle::flow_fragment_count(code) + 3);
}

const FlowGraph& renew_flow() {
  const auto& art = testutil::renew_artifacts();
  REQUIRE(art.flows.size() == 1);
  return art.flows[0].second;
}

}  // namespace

TEST_CASE("fixture flow graph shape") {
  const FlowGraph& g = renew_flow();
  CHECK(g.name == "RENEW_GRANTS.NEW_GRANT_BUTTON.WHEN-BUTTON-PRESSED");
  REQUIRE(g.nodes.size() == 20);
  CHECK(g.nodes[0].kind == FlowNodeKind::Trigger);
  CHECK(g.nodes[0].id == "n1");
  CHECK(g.nodes[0].label == "RENEW_GRANTS.NEW_GRANT_BUTTON.WHEN-BUTTON-PRESSED");
  CHECK(g.nodes[1].kind == FlowNodeKind::Initial);
  CHECK(g.nodes[1].label == "initial");
  CHECK(g.nodes[19].kind == FlowNodeKind::Final);
  CHECK(g.nodes[19].label == "final");
  for (int i = 2; i <= 18; ++i)
    CHECK(g.nodes[static_cast<std::size_t>(i)].kind == FlowNodeKind::Fragment);

  CHECK(g.nodes[2].label == "BEGIN");  // the try block
  CHECK(g.nodes[3].label == "company_name := normalize_company_name(:COMPANY);");
  // Long labels truncate at 58 characters plus an ellipsis.
  CHECK(g.nodes[4].label == "SELECT sum(PAYMENT) INTO money_paid FROM GRANTS.GRANTS_PA...");
  CHECK(g.nodes[4].label.size() == 61);
  CHECK(g.nodes[7].label == "IF money_paid >= threshold THEN");
  CHECK(g.nodes[10].label == "message('Database unaccesible');");
  CHECK(g.nodes[11].label == "RAISE FORM_TRIGGER_FAILURE;");
  CHECK(g.nodes[16].label == "IF diference > 0 THEN");
  CHECK(g.nodes[18].label == ":RENEW_GRANTS.TOTAL_AMOUNT := 2 * endowment - money_paid;");
}

TEST_CASE("fixture flow edges: try fan-out, branch re-joins, finals") {
  std::set<std::pair<int, int>> expected = {
      {0, 1},   {1, 2},   {2, 3},   {3, 4},   {4, 5},   {5, 6},  {6, 7},  {7, 8},
      {8, 9},   {2, 10},  {10, 11}, {9, 12},  {7, 12},  {11, 12}, {12, 13}, {12, 14},
      {13, 15}, {14, 15}, {15, 16}, {16, 17}, {16, 18}, {17, 19}, {18, 19},
  };
  CHECK(edge_set(renew_flow()) == expected);
  CHECK(renew_flow().edges.size() == 23);
}

TEST_CASE("fixture flow graph agrees with the recursive oracle") {
  const auto& art = testutil::renew_artifacts();
  REQUIRE(art.primitives.has_value());
  check_against_oracle(renew_flow(), art.primitives->codes[0], "renew fixture");
}

TEST_CASE("fixture Cypher output is byte-exact") {
  const std::string expected = R"(CREATE (n1:Trigger {label: "RENEW_GRANTS.NEW_GRANT_BUTTON.WHEN-BUTTON-PRESSED", color: "pink"})
CREATE (n2:Initial {label: "initial", color: "blue"})
CREATE (n3:Fragment {label: "BEGIN", color: "green"})
CREATE (n4:Fragment {label: "company_name := normalize_company_name(:COMPANY);", color: "green"})
CREATE (n5:Fragment {label: "SELECT sum(PAYMENT) INTO money_paid FROM GRANTS.GRANTS_PA...", color: "green"})
CREATE (n6:Fragment {label: "SELECT threshold, endowment INTO threshold, endowment FRO...", color: "green"})
CREATE (n7:Fragment {label: "total := 2 * endowment - money_paid;", color: "green"})
CREATE (n8:Fragment {label: "IF money_paid >= threshold THEN", color: "green"})
CREATE (n9:Fragment {label: "UPDATE GRANTS.COMPANY_GRANTS_GRANTED SET state = 'SUSPEND...", color: "green"})
CREATE (n10:Fragment {label: "INSERT INTO GRANTS.COMPANY_GRANTS_GRANTED (grant_code, co...", color: "green"})
CREATE (n11:Fragment {label: "message('Database unaccesible');", color: "green"})
CREATE (n12:Fragment {label: "RAISE FORM_TRIGGER_FAILURE;", color: "green"})
CREATE (n13:Fragment {label: "IF money_paid >= threshold THEN", color: "green"})
CREATE (n14:Fragment {label: "SET_ITEM_PROPERTY('RENEW_COMPANY_GRANTS.GRANT_RENEWED', v...", color: "green"})
CREATE (n15:Fragment {label: "SET_ITEM_PROPERTY('RENEW_COMPANY_GRANTS.THRESHOLD_NOT_EXC...", color: "green"})
CREATE (n16:Fragment {label: "diference := threshold - money_paid;", color: "green"})
CREATE (n17:Fragment {label: "IF diference > 0 THEN", color: "green"})
CREATE (n18:Fragment {label: ":RENEW_GRANTS.THRESHOLD_DIFERENCE := diference;", color: "green"})
CREATE (n19:Fragment {label: ":RENEW_GRANTS.TOTAL_AMOUNT := 2 * endowment - money_paid;", color: "green"})
CREATE (n20:Final {label: "final", color: "purple"})
CREATE (n1)-[:FLOWS_TO]->(n2)
CREATE (n2)-[:FLOWS_TO]->(n3)
CREATE (n3)-[:FLOWS_TO]->(n4)
CREATE (n4)-[:FLOWS_TO]->(n5)
CREATE (n5)-[:FLOWS_TO]->(n6)
CREATE (n6)-[:FLOWS_TO]->(n7)
CREATE (n7)-[:FLOWS_TO]->(n8)
CREATE (n8)-[:FLOWS_TO]->(n9)
CREATE (n9)-[:FLOWS_TO]->(n10)
CREATE (n3)-[:FLOWS_TO]->(n11)
CREATE (n11)-[:FLOWS_TO]->(n12)
CREATE (n10)-[:FLOWS_TO]->(n13)
CREATE (n8)-[:FLOWS_TO]->(n13)
CREATE (n12)-[:FLOWS_TO]->(n13)
CREATE (n13)-[:FLOWS_TO]->(n14)
CREATE (n13)-[:FLOWS_TO]->(n15)
CREATE (n14)-[:FLOWS_TO]->(n16)
CREATE (n15)-[:FLOWS_TO]->(n16)
CREATE (n16)-[:FLOWS_TO]->(n17)
CREATE (n17)-[:FLOWS_TO]->(n18)
CREATE (n17)-[:FLOWS_TO]->(n19)
CREATE (n18)-[:FLOWS_TO]->(n20)
CREATE (n19)-[:FLOWS_TO]->(n20)
)";
  CHECK(emit_flow(renew_flow(), FlowFormat::Cypher) == expected);
}

TEST_CASE("payroll DOT output is byte-exact") {
  const auto& art = testutil::payroll_artifacts();
  REQUIRE(art.flows.size() == 1);
  CHECK(art.flows[0].first == "PAYROLL_PAYROLL_CALC_BUTTON_WHEN_BUTTON_PRESSED");

  const std::string expected = R"(digraph "PAYROLL.CALC_BUTTON.WHEN-BUTTON-PRESSED" {
  node [style=filled];
  n1 [label="PAYROLL.CALC_BUTTON.WHEN-BUTTON-PRESSED", fillcolor=pink];
  n2 [label="initial", fillcolor=blue];
  n3 [label="threshold := 1000;", fillcolor=green];
  n4 [label="IF salary > threshold THEN", fillcolor=green];
  n5 [label="bonus := salary - threshold;", fillcolor=green];
  n6 [label="bonus := 100 + threshold - salary;", fillcolor=green];
  n7 [label="salary := salary + bonus;", fillcolor=green];
  n8 [label="final", fillcolor=purple];
  n1 -> n2;
  n2 -> n3;
  n3 -> n4;
  n4 -> n5;
  n4 -> n6;
  n5 -> n7;
  n6 -> n7;
  n7 -> n8;
}
)";
  CHECK(emit_flow(art.flows[0].second, FlowFormat::Dot) == expected);

  REQUIRE(art.primitives.has_value());
  check_against_oracle(art.flows[0].second, art.primitives->codes[0], "payroll fixture");
}

TEST_CASE("Cypher and DOT encode the same topology") {
  const FlowGraph& g = renew_flow();
  std::string cypher = emit_flow(g, FlowFormat::Cypher);
  std::string dot = emit_flow(g, FlowFormat::Dot);

  auto count_of = [](const std::string& text, const std::string& token) {
    std::size_t n = 0, pos = 0;
    while ((pos = text.find(token, pos)) != std::string::npos) {
      ++n;
      pos += token.size();
    }
    return n;
  };
  CHECK(count_of(cypher, "-[:FLOWS_TO]->") == g.edges.size());
  CHECK(count_of(dot, " -> ") == g.edges.size());
  CHECK(count_of(cypher, "CREATE (n") == g.nodes.size() + g.edges.size());
  CHECK(count_of(dot, "fillcolor=") == g.nodes.size());
}

TEST_CASE("node colors") {
  CHECK(std::string(flow_node_color(FlowNodeKind::Trigger)) == "pink");
  CHECK(std::string(flow_node_color(FlowNodeKind::Initial)) == "blue");
  CHECK(std::string(flow_node_color(FlowNodeKind::Fragment)) == "green");
  CHECK(std::string(flow_node_color(FlowNodeKind::Final)) == "purple");
}

TEST_CASE("labels escape embedded quotes") {
  PipelineArtifacts art = run_pipeline(
      "FORM F\nWINDOW W\nITEM A : BUTTON\nTRIGGER A.WHEN-BUTTON-PRESSED\n"
      "BEGIN\nmessage('a \"b\" c');\nEND;\nEND TRIGGER\nEND FORM\n",
      "quotes.form");
  REQUIRE(art.flows.size() == 1);
  const FlowGraph& g = art.flows[0].second;
  REQUIRE(g.nodes.size() == 4);
  CHECK(g.nodes[2].label == "message('a \"b\" c');");
  std::string cypher = emit_flow(g, FlowFormat::Cypher);
  CHECK(contains(cypher, "message('a \\\"b\\\" c');"));
  std::string dot = emit_flow(g, FlowFormat::Dot);
  CHECK(contains(dot, "label=\"message('a \\\"b\\\" c');\""));
}

TEST_CASE("empty trigger still produces the three skeleton nodes") {
  PipelineArtifacts art = run_pipeline(
      "FORM F\nWINDOW W\nITEM A : BUTTON\nTRIGGER A.WHEN-BUTTON-PRESSED\n"
      "BEGIN\nEND;\nEND TRIGGER\nEND FORM\n",
      "empty.form");
  REQUIRE(art.flows.size() == 1);
  const FlowGraph& g = art.flows[0].second;
  REQUIRE(g.nodes.size() == 3);
  CHECK(g.nodes[0].kind == FlowNodeKind::Trigger);
  CHECK(g.nodes[1].kind == FlowNodeKind::Initial);
  CHECK(g.nodes[2].kind == FlowNodeKind::Final);
  std::set<std::pair<int, int>> expected = {{0, 1}, {1, 2}};
  CHECK(edge_set(g) == expected);
}

TEST_CASE("loops carry a back edge and an exit") {
  PipelineArtifacts art = run_pipeline(
      "FORM F\nWINDOW W\nITEM A : BUTTON\nTRIGGER A.WHEN-BUTTON-PRESSED\n"
      "DECLARE\ni NUMBER;\nBEGIN\ni := 0;\nWHILE i < 3 LOOP\ni := i + 1;\nEND LOOP;\n"
      "i := 9;\nEND;\nEND TRIGGER\nEND FORM\n",
      "loop.form");
  REQUIRE(art.flows.size() == 1);
  const FlowGraph& g = art.flows[0].second;
  // trigger, initial, i:=0, WHILE, i:=i+1, i:=9, final
  REQUIRE(g.nodes.size() == 7);
  std::set<std::pair<int, int>> expected = {
      {0, 1}, {1, 2}, {2, 3},
      {3, 4},  // into the body
      {4, 3},  // back edge
      {3, 5},  // loop exit
      {5, 6},
  };
  CHECK(edge_set(g) == expected);
  REQUIRE(art.primitives.has_value());
  check_against_oracle(g, art.primitives->codes[0], "while loop");
}

TEST_CASE("generated corpus graphs match the oracle") {
  for (std::uint32_t seed : {3u, 17u, 29u, 44u}) {
    std::string text = corpus::generate_form(seed);
    PipelineArtifacts art = run_pipeline(text, "corpus_flow.form");
    REQUIRE(!art.diags.has_errors());
    REQUIRE(art.primitives.has_value());

    std::vector<const Code*> trigger_codes;
    for (const auto& code : art.primitives->codes)
      if (code.origin == CallableOrigin::Trigger) trigger_codes.push_back(&code);
    REQUIRE(art.flows.size() == trigger_codes.size());
    for (std::size_t i = 0; i < trigger_codes.size(); ++i)
      check_against_oracle(art.flows[i].second, *trigger_codes[i],
                           "seed " + std::to_string(seed) + " flow " + std::to_string(i));
  }
}
