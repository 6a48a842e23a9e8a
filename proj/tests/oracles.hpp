#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "f2j/ast.hpp"
#include "f2j/oo_model.hpp"
#include "f2j/primitives.hpp"

// Independent reference implementations ("oracles") used by property tests.
// Each one recomputes a result the library also produces, through a different
// algorithm, so agreement is meaningful.

namespace oracle {

// Declaration placement: brute-force ancestor-set intersection picking the
// deepest common block, instead of the library's pairwise-LCA fold.
f2j::PlacementResult lca_placement(const std::vector<int>& parent_of,
                                   const std::vector<f2j::VarAccess>& accesses);

// Execution-flow reference graph. Nodes are listed in the same pre-order the
// library allocates ids in (trigger, initial, statement-level primitives,
// final); edges are derived by a recursive entry/exit computation rather than
// the library's worklist chaining.
struct Flow {
  std::vector<std::string> kinds;           // "trigger" | "initial" | "final" | "fragment:<Kind>"
  std::set<std::pair<int, int>> edges;      // indices into kinds
};
Flow cfg(const f2j::Code& code);

// Statement-level fragment count (bodies, cases, catch arms; excludes
// primitives nested inside readables).
int flow_fragment_count(const f2j::Code& code);

// Descriptor-level counts straight off the AST.
struct FormAstCounts {
  int triggers = 0;
  int empty_triggers = 0;
  int program_units = 0;
  int sql_statements = 0;              // SELECT INTO + INSERT/UPDATE/DELETE, any nesting
  int select_into_extra_targets = 0;   // sum over SELECT INTO of (targets - 1)
};
FormAstCounts form_counts(const f2j::FormBundle& bundle);

// Deep DB-primitive counts via an independent traversal (readable-nested
// primitives included, matching the library's deep counting convention).
struct PrimSqlCounts {
  int read_db = 0;
  int write_db = 0;
};
PrimSqlCounts prim_sql(const f2j::Code& code);
PrimSqlCounts prim_sql(const f2j::PrimitivesRoot& root);

}  // namespace oracle
