#include "f2j/java_emitter.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "f2j/names.hpp"

namespace f2j {

namespace {

constexpr const char* kTodoComment = "/* TODO: PL/SQL Library Call */";

bool is_arith_op(const std::string& op) {
  return op == "+" || op == "-" || op == "*" || op == "/";
}

int binop_prec(const std::string& op) {
  if (op == "*" || op == "/") return 12;
  if (op == "+" || op == "-") return 11;
  if (op == "<" || op == "<=" || op == ">" || op == ">=") return 9;
  if (op == "==" || op == "!=") return 8;
  if (op == "&&") return 4;
  return 3;  // ||
}

int expr_prec(const OExpr& e) {
  switch (e.kind) {
    case OExprKind::Cast:
    case OExprKind::Unary:
      return 14;
    case OExprKind::Binary:
      // Arithmetic renders self-parenthesized, making it atomic.
      return is_arith_op(e.op) ? 100 : binop_prec(e.op);
    default:
      return 100;
  }
}

std::string render_expr_prec(const OExpr& e, int min_prec) {
  std::string t;
  switch (e.kind) {
    case OExprKind::Literal:
    case OExprKind::Name:
    case OExprKind::VarUse:
      t = e.text;
      break;
    case OExprKind::Call: {
      if (!e.receiver.empty()) t = e.receiver + ".";
      t += e.callee + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) t += ", ";
        t += render_expr_prec(e.args[i], 0);
      }
      t += ")";
      if (e.todo) t += kTodoComment;
      break;
    }
    case OExprKind::New: {
      t = "new " + e.text + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) t += ", ";
        t += render_expr_prec(e.args[i], 0);
      }
      t += ")";
      break;
    }
    case OExprKind::Cast:
      t = "(" + e.text + ")" + render_expr_prec(e.args[0], 14);
      break;
    case OExprKind::Unary: {
      std::string inner = render_expr_prec(e.args[0], 14);
      if (e.op == "-" && !inner.empty() && inner[0] == '-') inner = "(" + inner + ")";
      t = e.op + inner;
      break;
    }
    case OExprKind::Binary: {
      int p = binop_prec(e.op);
      if (is_arith_op(e.op)) {
        t = "(" + render_expr_prec(e.args[0], 0) + " " + e.op + " " +
            render_expr_prec(e.args[1], 0) + ")";
        return t;  // already parenthesized
      }
      t = render_expr_prec(e.args[0], p) + " " + e.op + " " +
          render_expr_prec(e.args[1], p + 1);
      break;
    }
  }
  if (expr_prec(e) < min_prec) t = "(" + t + ")";
  return t;
}

std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent) * 2, ' '); }

bool ends_control_flow(const std::vector<OStmt>& body) {
  if (body.empty()) return false;
  OStmtKind k = body.back().kind;
  return k == OStmtKind::Return || k == OStmtKind::Throw || k == OStmtKind::Break;
}

void render_stmts(const std::vector<OStmt>& stmts, int indent, std::string& out);

void render_stmt(const OStmt& s, int indent, std::string& out) {
  const std::string p = pad(indent);
  switch (s.kind) {
    case OStmtKind::VarDecl: {
      out += p + s.java_type + " " + s.name;
      if (s.value) out += " = " + render_expr_prec(*s.value, 0);
      out += ";";
      if (!s.comment.empty()) out += " // " + s.comment;
      out += "\n";
      break;
    }
    case OStmtKind::Assign:
      out += p + s.name + " = " + render_expr_prec(*s.value, 0) + ";\n";
      break;
    case OStmtKind::ExprStmt:
      out += p + render_expr_prec(*s.expr, 0) + ";\n";
      break;
    case OStmtKind::If: {
      out += p + "if (" + render_expr_prec(*s.cond, 0) + ") {\n";
      render_stmts(s.then_body, indent + 1, out);
      const OStmt* cur = &s;
      for (;;) {
        if (cur->else_body.empty()) break;
        if (cur->else_body.size() == 1 && cur->else_body[0].kind == OStmtKind::If) {
          const OStmt& e = cur->else_body[0];
          out += p + "} else if (" + render_expr_prec(*e.cond, 0) + ") {\n";
          render_stmts(e.then_body, indent + 1, out);
          cur = &e;
          continue;
        }
        out += p + "} else {\n";
        render_stmts(cur->else_body, indent + 1, out);
        break;
      }
      out += p + "}\n";
      break;
    }
    case OStmtKind::Switch: {
      out += p + "switch (" + render_expr_prec(*s.subject, 0) + ") {\n";
      for (const auto& c : s.cases) {
        if (c.label)
          out += pad(indent + 1) + "case " + render_expr_prec(*c.label, 0) + ":\n";
        else
          out += pad(indent + 1) + "default:\n";
        render_stmts(c.body, indent + 2, out);
        if (!ends_control_flow(c.body)) out += pad(indent + 2) + "break;\n";
      }
      out += p + "}\n";
      break;
    }
    case OStmtKind::While:
      out += p + "while (" + render_expr_prec(*s.cond, 0) + ") {\n";
      render_stmts(s.body, indent + 1, out);
      out += p + "}\n";
      break;
    case OStmtKind::For:
      out += p + "for (int " + s.loop_var + " = " + render_expr_prec(*s.loop_from, 0) + "; " +
             s.loop_var + " <= " + render_expr_prec(*s.loop_to, 0) + "; " + s.loop_var +
             "++) {\n";
      render_stmts(s.body, indent + 1, out);
      out += p + "}\n";
      break;
    case OStmtKind::ForEach:
      out += p + "for (Object " + s.loop_var + " : " + render_expr_prec(*s.subject, 0) +
             ") {\n";
      render_stmts(s.body, indent + 1, out);
      out += p + "}\n";
      break;
    case OStmtKind::Try: {
      if (s.catches.empty()) {
        out += p + "{\n";
        render_stmts(s.body, indent + 1, out);
        out += p + "}\n";
        break;
      }
      out += p + "try {\n";
      render_stmts(s.body, indent + 1, out);
      for (const auto& c : s.catches) {
        out += p + "} catch (" + c.exception_type + " " + c.var + ") {\n";
        render_stmts(c.body, indent + 1, out);
      }
      out += p + "}\n";
      break;
    }
    case OStmtKind::Return:
      if (s.value)
        out += p + "return " + render_expr_prec(*s.value, 0) + ";\n";
      else
        out += p + "return;\n";
      break;
    case OStmtKind::Throw:
      out += p + "throw new " + s.exception_type + "();\n";
      break;
    case OStmtKind::Break:
      out += p + "break;\n";
      break;
    case OStmtKind::Comment:
      out += p + "// " + s.comment + "\n";
      break;
  }
}

void render_stmts(const std::vector<OStmt>& stmts, int indent, std::string& out) {
  for (const auto& s : stmts) render_stmt(s, indent, out);
}

std::string render_params(const std::vector<OParam>& params) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ", ";
    out += params[i].java_type + " " + params[i].name;
  }
  return out;
}

void render_method(const OMethod& m, std::string& out) {
  out += "  " + m.visibility + " " + m.return_type + " " + m.name + "(" +
         render_params(m.params) + ") {\n";
  render_stmts(m.body, 2, out);
  out += "  }\n";
}

void render_attribute(const OAttribute& a, std::string& out) {
  out += "  ";
  for (const auto& ann : a.annotations) out += ann + " ";
  out += a.visibility + " " + a.java_type + " " + a.name;
  if (a.init) out += " = " + render_expr_prec(*a.init, 0);
  out += ";\n";
}

std::string header_comment(const std::string& source) {
  if (source.empty()) return "// Generated by forms2java. Do not edit.\n";
  return "// Generated by forms2java from " + source + ". Do not edit.\n";
}

std::string imports_for(const std::string& body, const OClass& cls) {
  bool autowired = false;
  for (const auto& a : cls.attributes)
    for (const auto& ann : a.annotations)
      if (ann == "@Autowired") autowired = true;
  bool managed_bean = false, service = false;
  for (const auto& ann : cls.annotations) {
    if (ann == "@ManagedBean") managed_bean = true;
    if (ann == "@Service") service = true;
  }
  std::string out;
  if (body.find("new HashMap<") != std::string::npos) out += "import java.util.HashMap;\n";
  if (body.find("Map<String, Object>") != std::string::npos) out += "import java.util.Map;\n";
  if (managed_bean) out += "import javax.faces.bean.ManagedBean;\n";
  if (autowired) out += "import org.springframework.beans.factory.annotation.Autowired;\n";
  if (service) out += "import org.springframework.stereotype.Service;\n";
  return out;
}

// ---------------------------------------------------------------------------
// Support-file discovery
// ---------------------------------------------------------------------------

void walk_stmt_exprs(const OStmt& s, const std::function<void(const OExpr&)>& fn);

void walk_expr(const OExpr& e, const std::function<void(const OExpr&)>& fn) {
  fn(e);
  for (const auto& a : e.args) walk_expr(a, fn);
}

void walk_stmt_exprs(const OStmt& s, const std::function<void(const OExpr&)>& fn) {
  if (s.value) walk_expr(*s.value, fn);
  if (s.expr) walk_expr(*s.expr, fn);
  if (s.cond) walk_expr(*s.cond, fn);
  if (s.subject) walk_expr(*s.subject, fn);
  if (s.loop_from) walk_expr(*s.loop_from, fn);
  if (s.loop_to) walk_expr(*s.loop_to, fn);
  for (const auto& c : s.cases) {
    if (c.label) walk_expr(*c.label, fn);
    for (const auto& b : c.body) walk_stmt_exprs(b, fn);
  }
  for (const auto& b : s.then_body) walk_stmt_exprs(b, fn);
  for (const auto& b : s.else_body) walk_stmt_exprs(b, fn);
  for (const auto& b : s.body) walk_stmt_exprs(b, fn);
  for (const auto& c : s.catches)
    for (const auto& b : c.body) walk_stmt_exprs(b, fn);
}

void walk_stmts_rec(const std::vector<OStmt>& stmts,
                    const std::function<void(const OStmt&)>& fn) {
  for (const auto& s : stmts) {
    fn(s);
    walk_stmts_rec(s.then_body, fn);
    walk_stmts_rec(s.else_body, fn);
    walk_stmts_rec(s.body, fn);
    for (const auto& c : s.cases) walk_stmts_rec(c.body, fn);
    for (const auto& c : s.catches) walk_stmts_rec(c.body, fn);
  }
}

std::string simple_class_file(const std::string& source, const std::string& decl) {
  return header_comment(source) + "\n" + decl + "\n}\n";
}

}  // namespace

// ---------------------------------------------------------------------------
// Public rendering API
// ---------------------------------------------------------------------------

std::string render_expr(const OExpr& e) { return render_expr_prec(e, 0); }

std::string render_class(const OClass& cls, const std::string& form_original) {
  std::string members;
  for (const auto& a : cls.attributes) render_attribute(a, members);
  bool first = cls.attributes.empty();
  for (const auto& m : cls.methods) {
    if (!first) members += "\n";
    first = false;
    render_method(m, members);
  }

  std::string out = header_comment(cls.source_file.empty() ? form_original : cls.source_file);
  std::string imports = imports_for(members, cls);
  if (!imports.empty()) out += "\n" + imports;
  out += "\n";
  for (const auto& ann : cls.annotations) out += ann + "\n";
  out += "public class " + cls.name + " {\n\n" + members + "}\n";
  return out;
}

const SourceFile* SourceFileSet::find_class(const std::string& class_name) const {
  const std::string needle = "/" + class_name + ".java";
  for (const auto& f : files) {
    if (f.path.size() >= needle.size() &&
        f.path.compare(f.path.size() - needle.size(), needle.size(), needle) == 0)
      return &f;
    if (f.path == class_name + ".java") return &f;
  }
  return nullptr;
}

CodegenResult generate(const OOModel& oo, const TargetPlatformModel& platform,
                       const CodegenOptions& options) {
  CodegenResult out;
  if (oo.classes.empty()) return out;

  const std::string form_dir = oo.form_original.empty() ? oo.form_name : oo.form_original;
  const std::string dir = "src/" + form_dir + "/";
  const std::string source = oo.file.empty() ? oo.form_original : oo.file;

  // Shared support content discovered while walking the classes.
  std::set<std::string> exception_types;
  std::set<std::string> library_methods;
  bool uses_emf = false;

  for (const OClass& model_cls : oo.classes) {
    OClass cls = model_cls;  // local copy; self-contained mode appends members

    if (!options.self_contained) {
      cls.methods.erase(std::remove_if(cls.methods.begin(), cls.methods.end(),
                                       [](const OMethod& m) {
                                         return m.role == MethodRole::UISetterStub;
                                       }),
                        cls.methods.end());
    } else if (cls.role == ClassRole::ManagedBean) {
      // Accessors for the bean fields (view + injected services).
      std::vector<OMethod> accessors;
      for (const auto& a : cls.attributes) {
        if (a.java_type == "EntityManagerFactory") continue;
        OMethod getter;
        getter.id = cls.name + ".get" + upper_first(a.name);
        getter.name = "get" + upper_first(a.name);
        getter.role = MethodRole::Accessor;
        getter.return_type = a.java_type;
        OStmt ret;
        ret.kind = OStmtKind::Return;
        OExpr nm;
        nm.kind = OExprKind::Name;
        nm.text = a.name;
        ret.value = nm;
        getter.body.push_back(std::move(ret));
        accessors.push_back(std::move(getter));

        OMethod setter;
        setter.id = cls.name + ".set" + upper_first(a.name);
        setter.name = "set" + upper_first(a.name);
        setter.role = MethodRole::Accessor;
        setter.params = {{a.name, a.java_type}};
        OStmt assign;
        assign.kind = OStmtKind::Assign;
        assign.name = "this." + a.name;
        assign.value = nm;
        setter.body.push_back(std::move(assign));
        accessors.push_back(std::move(setter));
      }
      for (auto& m : accessors) cls.methods.push_back(std::move(m));
    }

    for (const auto& a : cls.attributes)
      if (a.java_type == "EntityManagerFactory") uses_emf = true;
    for (const auto& m : cls.methods) {
      walk_stmts_rec(m.body, [&](const OStmt& s) {
        if (s.kind == OStmtKind::Throw && s.exception_type != "Exception")
          exception_types.insert(s.exception_type);
        for (const auto& c : s.catches)
          if (c.exception_type != "Exception") exception_types.insert(c.exception_type);
      });
      for (const auto& s : m.body)
        walk_stmt_exprs(s, [&](const OExpr& e) {
          if (e.kind == OExprKind::Call && e.receiver == "PlSqlLibrary")
            library_methods.insert(e.callee);
        });
    }

    out.files.files.push_back({dir + cls.name + ".java", render_class(cls, oo.form_original)});
  }

  if (options.self_contained) {
    // One view class per triggered window, fields from the bean attributes.
    for (const auto& view : platform.views) {
      const ManagedBean* bean = nullptr;
      for (const auto& b : platform.beans)
        if (b.window == view.id) bean = &b;
      if (!bean) continue;
      std::string name = to_pascal(view.window);
      std::string body = header_comment(source) + "\npublic class " + name + " {\n\n";
      for (const auto& a : bean->attributes)
        body += "  private " + a.java_type + " " + a.name + ";\n";
      for (const auto& a : bean->attributes) {
        body += "\n  public " + a.java_type + " get" + upper_first(a.name) + "() {\n" +
                "    return " + a.name + ";\n  }\n";
        body += "\n  public void set" + upper_first(a.name) + "(" + a.java_type + " " + a.name +
                ") {\n    this." + a.name + " = " + a.name + ";\n  }\n";
      }
      body += "}\n";
      out.files.files.push_back({dir + name + ".java", body});
    }
  }

  exception_types.insert("FormTriggerFailure");
  for (const auto& exc : exception_types)
    out.files.files.push_back(
        {dir + exc + ".java",
         simple_class_file(source, "public class " + exc + " extends RuntimeException {")});

  {
    std::string body = header_comment(source) + "\n";
    body +=
        "// PL/SQL built-ins without a direct Java equivalent. Complete these\n"
        "// during manual migration or map them via the built-in configuration.\n";
    body += "public final class PlSqlLibrary {\n";
    for (const auto& name : library_methods) {
      body += "\n  public static Object " + name + "(Object... args) {\n";
      body += "    // TODO: PL/SQL Library Call\n";
      body += "    return null;\n  }\n";
    }
    body += "}\n";
    out.files.files.push_back({dir + "PlSqlLibrary.java", body});
  }

  if (uses_emf)
    out.files.files.push_back({dir + "EntityManagerFactory.java",
                               simple_class_file(source, "public class EntityManagerFactory {")});

  return out;
}

// ---------------------------------------------------------------------------
// Skeleton merging
// ---------------------------------------------------------------------------

namespace {

std::string file_stem(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.rfind(".java");
  return dot == std::string::npos ? base : base.substr(0, dot);
}

}  // namespace

CodegenResult merge_into_skeleton(const SourceFileSet& generated,
                                  const std::vector<Skeleton>& skeletons, const OOModel& oo) {
  CodegenResult out;
  std::set<std::string> seen_skeletons;

  for (const auto& file : generated.files) {
    const std::string stem = file_stem(file.path);
    const Skeleton* skel = nullptr;
    for (const auto& s : skeletons)
      if (s.class_name == stem) skel = &s;
    const OClass* cls = nullptr;
    for (const auto& c : oo.classes)
      if (c.name == stem) cls = &c;

    if (!skel || !cls || cls->role != ClassRole::ManagedBean) {
      out.files.files.push_back(file);
      continue;
    }
    seen_skeletons.insert(stem);

    std::vector<std::string> lines;
    {
      std::size_t start = 0;
      while (start <= skel->content.size()) {
        std::size_t eol = skel->content.find('\n', start);
        if (eol == std::string::npos) {
          if (start < skel->content.size()) lines.push_back(skel->content.substr(start));
          break;
        }
        lines.push_back(skel->content.substr(start, eol - start));
        start = eol + 1;
      }
    }

    std::string merged;
    std::set<std::string> spliced;
    for (const auto& line : lines) {
      std::size_t first = line.find_first_not_of(" \t");
      std::string trimmed = first == std::string::npos ? "" : line.substr(first);
      if (trimmed.rfind("// BODY:", 0) != 0) {
        merged += line + "\n";
        continue;
      }
      std::string method_name = trimmed.substr(8);
      while (!method_name.empty() && (method_name.back() == ' ' || method_name.back() == '\r'))
        method_name.pop_back();
      const OMethod* method = nullptr;
      for (const auto& m : cls->methods)
        if (m.name == method_name) method = &m;
      if (!method) {
        out.diags.warning("G102", "skeleton " + stem + " marks method " + method_name +
                                      " which was not generated");
        merged += line + "\n";
        continue;
      }
      spliced.insert(method_name);
      std::string body;
      render_stmts(method->body, 0, body);
      std::string indent = line.substr(0, first == std::string::npos ? 0 : first);
      std::size_t b = 0;
      while (b < body.size()) {
        std::size_t e = body.find('\n', b);
        merged += indent + body.substr(b, e - b) + "\n";
        b = e + 1;
      }
    }

    for (const auto& m : cls->methods)
      if (m.role == MethodRole::EventHandler && !spliced.count(m.name))
        out.diags.warning("G101", "bean method " + cls->name + "." + m.name +
                                      " has no marker in its skeleton");

    out.files.files.push_back({file.path, merged});
  }

  for (const auto& s : skeletons)
    if (!seen_skeletons.count(s.class_name)) {
      bool has_file = false;
      for (const auto& f : generated.files) has_file = has_file || file_stem(f.path) == s.class_name;
      if (!has_file)
        out.diags.warning("G103", "skeleton " + s.class_name + " matches no generated class");
    }

  return out;
}

}  // namespace f2j
