#include "f2j/metrics.hpp"

#include <functional>
#include <iomanip>
#include <sstream>

namespace f2j {

namespace {

// ---------------------------------------------------------------------------
// Forms stage: AST walkers
// ---------------------------------------------------------------------------

void walk_block(const PlSqlBlock& block, const std::function<void(const PlSqlStatement&)>& fn);

void walk_stmts(const std::vector<StmtPtr>& stmts,
                const std::function<void(const PlSqlStatement&)>& fn) {
  for (const auto& s : stmts) {
    fn(*s);
    switch (s->kind) {
      case StmtKind::If:
        for (const auto& b : s->branches) walk_stmts(b.statements, fn);
        walk_stmts(s->else_statements, fn);
        break;
      case StmtKind::Case:
        for (const auto& w : s->whens) walk_stmts(w.statements, fn);
        break;
      case StmtKind::While:
      case StmtKind::For:
      case StmtKind::BasicLoop:
        walk_stmts(s->body, fn);
        break;
      case StmtKind::InnerBlock:
        if (s->inner) walk_block(*s->inner, fn);
        break;
      default:
        break;
    }
  }
}

void walk_block(const PlSqlBlock& block, const std::function<void(const PlSqlStatement&)>& fn) {
  walk_stmts(block.statements, fn);
  for (const auto& h : block.exception_handlers) walk_stmts(h.statements, fn);
}

// ---------------------------------------------------------------------------
// OO stage: statement/expression walkers
// ---------------------------------------------------------------------------

void walk_ostmts(const std::vector<OStmt>& stmts, const std::function<void(const OStmt&)>& fn) {
  for (const auto& s : stmts) {
    fn(s);
    walk_ostmts(s.then_body, fn);
    walk_ostmts(s.else_body, fn);
    walk_ostmts(s.body, fn);
    for (const auto& c : s.cases) walk_ostmts(c.body, fn);
    for (const auto& c : s.catches) walk_ostmts(c.body, fn);
  }
}

void walk_oexpr(const OExpr& e, const std::function<void(const OExpr&)>& fn) {
  fn(e);
  for (const auto& a : e.args) walk_oexpr(a, fn);
}

void walk_stmt_exprs(const OStmt& s, const std::function<void(const OExpr&)>& fn) {
  if (s.value) walk_oexpr(*s.value, fn);
  if (s.expr) walk_oexpr(*s.expr, fn);
  if (s.cond) walk_oexpr(*s.cond, fn);
  if (s.subject) walk_oexpr(*s.subject, fn);
  if (s.loop_from) walk_oexpr(*s.loop_from, fn);
  if (s.loop_to) walk_oexpr(*s.loop_to, fn);
  for (const auto& c : s.cases)
    if (c.label) walk_oexpr(*c.label, fn);
}

int count_occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  std::size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++n;
    pos += needle.size();
  }
  return n;
}

}  // namespace

// ---------------------------------------------------------------------------
// measure
// ---------------------------------------------------------------------------

MetricsReport measure(const FormBundle& bundle, const CodeModel& model,
                      const PrimitivesRoot& root, const TargetPlatformModel& platform,
                      const OOModel& oo, const SourceFileSet& files) {
  MetricsReport report;
  report.form_name = bundle.name.empty() ? model.form_name : bundle.name;

  // Forms: raw descriptor counts.
  report.forms.program_units_or_methods = static_cast<int>(bundle.program_units.size());
  auto count_sql = [&](const PlSqlBlock& block) {
    walk_block(block, [&](const PlSqlStatement& s) {
      if (s.kind == StmtKind::SelectInto) {
        ++report.forms.sql_statements;
        report.select_into_extra_targets += static_cast<int>(s.into_targets.size()) - 1;
      } else if (s.kind == StmtKind::Dml) {
        ++report.forms.sql_statements;
      }
    });
  };
  for (const auto& w : bundle.windows)
    for (const auto& t : w.triggers) {
      ++report.forms.triggers_or_methods;
      if (block_is_empty(t.body)) ++report.forms.empty_triggers;
      count_sql(t.body);
    }
  for (const auto& u : bundle.program_units) count_sql(u.body);

  // KDM: callable + stereotype counts.
  for (const auto& id : model.callables) {
    const CodeElement* e = model.find(id);
    if (!e) continue;
    if (e->origin == CallableOrigin::Trigger)
      ++report.kdm.triggers_or_methods;
    else
      ++report.kdm.program_units_or_methods;
  }
  for (const auto& id : model.order) {
    const CodeElement* e = model.find(id);
    if (!e || e->kind != ElementKind::ActionElement) continue;
    if (e->name == "SELECT" || e->name == "INSERT" || e->name == "UPDATE" ||
        e->name == "DELETE")
      ++report.kdm.sql_statements;
  }

  // Primitives.
  for (const auto& c : root.codes) {
    if (c.origin == CallableOrigin::Trigger)
      ++report.primitives.triggers_or_methods;
    else
      ++report.primitives.program_units_or_methods;
  }
  report.primitives.sql_statements =
      static_cast<int>(count_primitives(root, "ReadFromDB") +
                       count_primitives(root, "WriteToDB"));

  // Platform: surviving handlers/helpers; SQL counted post-split.
  for (const auto& b : platform.beans)
    report.platform.triggers_or_methods += static_cast<int>(b.event_handlers.size());
  for (const auto& s : platform.services)
    report.platform.program_units_or_methods += static_cast<int>(s.helper_methods.size());
  for (const auto& c : root.codes)
    for_each_primitive(c, [&](const Primitive& p) {
      if (p.kind == PrimKind::ReadFromDB)
        report.platform.sql_statements +=
            std::max<int>(1, static_cast<int>(p.into_targets.size()));
      else if (p.kind == PrimKind::WriteToDB)
        ++report.platform.sql_statements;
    });
  report.platform.skipped_data_block_triggers = platform.skipped_data_block_triggers;
  report.platform.empty_triggers = platform.skipped_empty_triggers;

  // OO: method inventory + call-site counts.
  for (const auto& cls : oo.classes) {
    for (const auto& m : cls.methods) {
      if (m.role == MethodRole::EventHandler) ++report.oo.triggers_or_methods;
      if (m.role == MethodRole::Helper && cls.role == ClassRole::AppService)
        ++report.oo.program_units_or_methods;
      walk_ostmts(m.body, [&](const OStmt& s) {
        walk_stmt_exprs(s, [&](const OExpr& e) {
          if (e.kind == OExprKind::Call && e.receiver.empty() &&
              (e.callee == "readFromDB" || e.callee == "writeToDB"))
            ++report.oo.sql_statements;
        });
      });
    }
  }

  // Java: emitted text scan.
  for (const auto& cls : oo.classes) {
    const SourceFile* f = files.find_class(cls.name);
    if (!f) continue;
    for (const auto& m : cls.methods) {
      if (m.role == MethodRole::EventHandler &&
          f->content.find("void " + m.name + "(") != std::string::npos)
        ++report.java.triggers_or_methods;
      if (m.role == MethodRole::Helper && cls.role == ClassRole::AppService &&
          f->content.find(" " + m.name + "(Map<String, Object> map)") != std::string::npos)
        ++report.java.program_units_or_methods;
    }
  }
  for (const auto& f : files.files)
    report.java.sql_statements += count_occurrences(f.content, "readFromDB(\"") +
                                  count_occurrences(f.content, "writeToDB(\"");

  return report;
}

// ---------------------------------------------------------------------------
// coverage_check
// ---------------------------------------------------------------------------

DiagnosticList coverage_check(const MetricsReport& r) {
  DiagnosticList diags;
  auto mismatch = [&](const std::string& code, const std::string& msg) {
    diags.error(code, msg);
  };

  if (r.kdm.triggers_or_methods != r.forms.triggers_or_methods)
    mismatch("M001", "trigger count regression at stage kdm (forms " +
                         std::to_string(r.forms.triggers_or_methods) + ", kdm " +
                         std::to_string(r.kdm.triggers_or_methods) + ")");
  if (r.primitives.triggers_or_methods != r.forms.triggers_or_methods)
    mismatch("M001", "trigger count regression at stage primitives (forms " +
                         std::to_string(r.forms.triggers_or_methods) + ", primitives " +
                         std::to_string(r.primitives.triggers_or_methods) + ")");

  const int expected_methods = r.forms.triggers_or_methods -
                               r.platform.skipped_data_block_triggers -
                               r.platform.empty_triggers;
  if (r.platform.triggers_or_methods != expected_methods)
    mismatch("M002", "handler count mismatch at stage platform (expected " +
                         std::to_string(expected_methods) + ", actual " +
                         std::to_string(r.platform.triggers_or_methods) + ")");
  if (r.oo.triggers_or_methods != r.platform.triggers_or_methods)
    mismatch("M002", "handler count mismatch at stage oo (expected " +
                         std::to_string(r.platform.triggers_or_methods) + ", actual " +
                         std::to_string(r.oo.triggers_or_methods) + ")");
  if (r.java.triggers_or_methods != r.platform.triggers_or_methods)
    mismatch("M002", "handler count mismatch at stage java (expected " +
                         std::to_string(r.platform.triggers_or_methods) + ", actual " +
                         std::to_string(r.java.triggers_or_methods) + ")");

  struct StageRef {
    const char* name;
    const StageCounts* counts;
  };
  const StageRef stages[] = {{"kdm", &r.kdm},
                             {"primitives", &r.primitives},
                             {"platform", &r.platform},
                             {"oo", &r.oo},
                             {"java", &r.java}};
  for (const auto& s : stages)
    if (s.counts->program_units_or_methods != r.forms.program_units_or_methods)
      mismatch("M003", std::string("unit count regression at stage ") + s.name + " (forms " +
                           std::to_string(r.forms.program_units_or_methods) + ", " + s.name +
                           " " + std::to_string(s.counts->program_units_or_methods) + ")");

  if (r.kdm.sql_statements != r.forms.sql_statements)
    mismatch("M004", "sql count regression at stage kdm (forms " +
                         std::to_string(r.forms.sql_statements) + ", kdm " +
                         std::to_string(r.kdm.sql_statements) + ")");
  if (r.primitives.sql_statements != r.forms.sql_statements)
    mismatch("M004", "sql count regression at stage primitives (forms " +
                         std::to_string(r.forms.sql_statements) + ", primitives " +
                         std::to_string(r.primitives.sql_statements) + ")");

  const int expected_sql = r.forms.sql_statements + r.select_into_extra_targets;
  if (r.oo.sql_statements != expected_sql)
    mismatch("M005", "sql growth law violated at stage oo (expected " +
                         std::to_string(expected_sql) + ", actual " +
                         std::to_string(r.oo.sql_statements) + ")");
  if (r.platform.sql_statements != r.oo.sql_statements)
    mismatch("M006", "sql count mismatch between platform and oo (platform " +
                         std::to_string(r.platform.sql_statements) + ", oo " +
                         std::to_string(r.oo.sql_statements) + ")");
  if (r.java.sql_statements != r.oo.sql_statements)
    mismatch("M006", "sql count mismatch between java and oo (java " +
                         std::to_string(r.java.sql_statements) + ", oo " +
                         std::to_string(r.oo.sql_statements) + ")");

  return diags;
}

// ---------------------------------------------------------------------------
// render_table
// ---------------------------------------------------------------------------

std::string MetricsReport::render_table() const {
  std::ostringstream os;
  os << "Form: " << form_name << "\n";
  os << std::left << std::setw(16) << "Metric" << std::right << std::setw(7) << "Forms"
     << std::setw(16) << "KDM/Primitives" << std::setw(13) << "Platform/OO" << std::setw(6)
     << "Java" << "\n";
  auto row = [&](const char* label, int a, int b, int c, int d) {
    os << std::left << std::setw(16) << label << std::right << std::setw(7) << a
       << std::setw(16) << b << std::setw(13) << c << std::setw(6) << d << "\n";
  };
  row("Triggers", forms.triggers_or_methods, kdm.triggers_or_methods,
      platform.triggers_or_methods, java.triggers_or_methods);
  row("Program units", forms.program_units_or_methods, kdm.program_units_or_methods,
      platform.program_units_or_methods, java.program_units_or_methods);
  row("SQL statements", forms.sql_statements, kdm.sql_statements, platform.sql_statements,
      java.sql_statements);
  os << "Skipped: " << platform.empty_triggers << " empty, "
     << platform.skipped_data_block_triggers
     << " data-block | SELECT INTO extra targets: " << select_into_extra_targets << "\n";
  return os.str();
}

}  // namespace f2j
