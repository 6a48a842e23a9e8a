#include "oracles.hpp"

#include <algorithm>
#include <map>

namespace oracle {

using namespace f2j;

// ---------------------------------------------------------------------------
// Declaration placement
// ---------------------------------------------------------------------------

f2j::PlacementResult lca_placement(const std::vector<int>& parent_of,
                                   const std::vector<f2j::VarAccess>& accesses) {
  PlacementResult out;
  if (accesses.empty()) return out;

  auto chain = [&](int block) {
    std::vector<int> path;
    for (int cur = block; cur != -1; cur = parent_of[static_cast<std::size_t>(cur)])
      path.push_back(cur);
    return path;
  };
  auto depth = [&](int block) { return static_cast<int>(chain(block).size()); };

  std::vector<int> first = chain(accesses[0].block);
  std::set<int> common(first.begin(), first.end());
  for (std::size_t i = 1; i < accesses.size(); ++i) {
    std::vector<int> c = chain(accesses[i].block);
    std::set<int> here(c.begin(), c.end());
    std::set<int> keep;
    for (int b : common)
      if (here.count(b)) keep.insert(b);
    common = std::move(keep);
  }

  int best = 0;
  int best_depth = -1;
  for (int b : common) {
    int d = depth(b);
    if (d > best_depth) {
      best_depth = d;
      best = b;
    }
  }
  out.block = best;
  out.warn = !accesses[0].is_write;
  return out;
}

// ---------------------------------------------------------------------------
// Execution-flow reference graph
// ---------------------------------------------------------------------------

namespace {

struct FlowBuild {
  Flow flow;

  int add(const std::string& kind) {
    flow.kinds.push_back(kind);
    return static_cast<int>(flow.kinds.size()) - 1;
  }
  void edge(int a, int b) { flow.edges.insert({a, b}); }
  void edges_from(const std::set<int>& sources, int to) {
    for (int s : sources) edge(s, to);
  }

  // Returns the exit set of the sequence entered from `entries`.
  std::set<int> sequence(const std::vector<PrimPtr>& prims, std::set<int> entries);

  std::set<int> one(const Primitive& p, const std::set<int>& entries) {
    int node = add(std::string("fragment:") + prim_kind_name(p.kind));
    edges_from(entries, node);
    switch (p.kind) {
      case PrimKind::SelectionFlow: {
        std::set<int> exits;
        bool has_default = false;
        for (const auto& c : p.cases) {
          if (!c.condition && !c.match) has_default = true;
          std::set<int> body_exits = sequence(c.body, {node});
          exits.insert(body_exits.begin(), body_exits.end());
        }
        if (!has_default) exits.insert(node);
        return exits;
      }
      case PrimKind::Loop: {
        std::set<int> body_exits = sequence(p.body, {node});
        edges_from(body_exits, node);
        return {node};
      }
      case PrimKind::Try: {
        std::set<int> exits = sequence(p.body, {node});
        for (const auto& c : p.catches) {
          std::set<int> catch_exits = sequence(c.body, {node});
          exits.insert(catch_exits.begin(), catch_exits.end());
        }
        return exits;
      }
      default:
        return {node};
    }
  }
};

std::set<int> FlowBuild::sequence(const std::vector<PrimPtr>& prims, std::set<int> entries) {
  for (const auto& p : prims) entries = one(*p, entries);
  return entries;
}

}  // namespace

Flow cfg(const f2j::Code& code) {
  FlowBuild b;
  int trigger = b.add("trigger");
  int initial = b.add("initial");
  b.edge(trigger, initial);
  std::set<int> exits = b.sequence(code.primitives, {initial});
  int final_node = b.add("final");
  b.edges_from(exits, final_node);
  return std::move(b.flow);
}

namespace {

int count_tree(const std::vector<PrimPtr>& prims);

int count_one(const Primitive& p) {
  int n = 1;
  for (const auto& c : p.cases) n += count_tree(c.body);
  for (const auto& c : p.catches) n += count_tree(c.body);
  n += count_tree(p.body);
  return n;
}

int count_tree(const std::vector<PrimPtr>& prims) {
  int n = 0;
  for (const auto& p : prims) n += count_one(*p);
  return n;
}

}  // namespace

int flow_fragment_count(const f2j::Code& code) { return count_tree(code.primitives); }

// ---------------------------------------------------------------------------
// AST counts
// ---------------------------------------------------------------------------

namespace {

void walk_stmts(const std::vector<StmtPtr>& stmts, FormAstCounts& out);
void walk_block(const PlSqlBlock& block, FormAstCounts& out) {
  walk_stmts(block.statements, out);
  for (const auto& h : block.exception_handlers) walk_stmts(h.statements, out);
}

void walk_stmts(const std::vector<StmtPtr>& stmts, FormAstCounts& out) {
  for (const auto& sp : stmts) {
    const PlSqlStatement& s = *sp;
    switch (s.kind) {
      case StmtKind::SelectInto:
        ++out.sql_statements;
        out.select_into_extra_targets += static_cast<int>(s.into_targets.size()) - 1;
        break;
      case StmtKind::Dml:
        ++out.sql_statements;
        break;
      case StmtKind::If:
        for (const auto& br : s.branches) walk_stmts(br.statements, out);
        walk_stmts(s.else_statements, out);
        break;
      case StmtKind::Case:
        for (const auto& w : s.whens) walk_stmts(w.statements, out);
        walk_stmts(s.else_statements, out);
        break;
      case StmtKind::While:
      case StmtKind::For:
      case StmtKind::BasicLoop:
        walk_stmts(s.body, out);
        break;
      case StmtKind::InnerBlock:
        if (s.inner) walk_block(*s.inner, out);
        break;
      default:
        break;
    }
  }
}

}  // namespace

FormAstCounts form_counts(const f2j::FormBundle& bundle) {
  FormAstCounts out;
  for (const auto& w : bundle.windows) {
    for (const auto& t : w.triggers) {
      ++out.triggers;
      if (t.body.statements.empty() && t.body.exception_handlers.empty()) ++out.empty_triggers;
      walk_block(t.body, out);
    }
  }
  for (const auto& u : bundle.program_units) {
    ++out.program_units;
    walk_block(u.body, out);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Deep DB-primitive counts
// ---------------------------------------------------------------------------

namespace {

void deep_prim(const Primitive& p, PrimSqlCounts& out);

void deep_readable(const Readable& r, PrimSqlCounts& out) {
  for (const auto& a : r.args) deep_readable(a, out);
  if (r.prim) deep_prim(*r.prim, out);
}

void deep_pexpr(const PExpr& e, PrimSqlCounts& out) {
  for (const auto& op : e.operands) deep_pexpr(op, out);
  if (e.leaf) deep_readable(*e.leaf, out);
}

void deep_prim(const Primitive& p, PrimSqlCounts& out) {
  if (p.kind == PrimKind::ReadFromDB) ++out.read_db;
  if (p.kind == PrimKind::WriteToDB) ++out.write_db;
  for (const auto& r : p.inputs) deep_readable(r, out);
  for (const auto& t : p.into_targets) deep_prim(t, out);
  for (const auto& r : p.binds) deep_readable(r, out);
  for (const auto& r : p.args) deep_readable(r, out);
  if (p.subject) deep_readable(*p.subject, out);
  if (p.condition) deep_pexpr(*p.condition, out);
  if (p.loop_from) deep_readable(*p.loop_from, out);
  if (p.loop_to) deep_readable(*p.loop_to, out);
  if (p.value) deep_readable(*p.value, out);
  for (const auto& c : p.cases) {
    if (c.condition) deep_pexpr(*c.condition, out);
    if (c.match) deep_readable(*c.match, out);
    for (const auto& b : c.body) deep_prim(*b, out);
  }
  for (const auto& c : p.catches)
    for (const auto& b : c.body) deep_prim(*b, out);
  for (const auto& b : p.body) deep_prim(*b, out);
}

}  // namespace

PrimSqlCounts prim_sql(const f2j::Code& code) {
  PrimSqlCounts out;
  for (const auto& p : code.primitives) deep_prim(*p, out);
  return out;
}

PrimSqlCounts prim_sql(const f2j::PrimitivesRoot& root) {
  PrimSqlCounts out;
  for (const auto& c : root.codes) {
    PrimSqlCounts one = prim_sql(c);
    out.read_db += one.read_db;
    out.write_db += one.write_db;
  }
  return out;
}

}  // namespace oracle
