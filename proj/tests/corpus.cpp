#include "corpus.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

namespace corpus {
namespace {

// Variable/value categories: 'n' numeric, 't' text, 'b' boolean.
struct Var {
  std::string name;
  char type = 'n';
};

struct ItemDef {
  std::string name;
  const char* widget;  // TEXT | BUTTON | CHECKBOX | DISPLAY
  char type = 't';     // value category when read/written through a bind
};

struct WindowDef {
  std::string name;
  std::vector<ItemDef> items;
};

struct UnitDef {
  bool is_function = false;
  std::string name;
  std::vector<Var> params;
  char return_type = 'n';
};

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : seed_(seed), rng_(seed) {}

  std::string run();

 private:
  std::uint32_t seed_;
  std::mt19937 rng_;
  std::ostringstream out_;
  int indent_ = 0;

  std::vector<WindowDef> windows_;
  std::vector<UnitDef> units_;
  int name_counter_ = 0;

  // Body-generation state (reset per trigger/unit body).
  std::vector<Var> scope_;       // visible locals + loop variables, innermost last
  const WindowDef* window_ = nullptr;  // owning window (null inside units)
  bool in_function_ = false;
  char fn_return_ = 'n';
  int stmt_budget_ = 0;

  int pick(int n) { return static_cast<int>(rng_() % static_cast<std::uint32_t>(n)); }
  bool chance(int percent) { return pick(100) < percent; }

  void line(const std::string& s) {
    for (int i = 0; i < indent_; ++i) out_ << "  ";
    out_ << s << "\n";
  }

  std::string fresh(const char* base) { return std::string(base) + std::to_string(++name_counter_); }

  // ---- structure -------------------------------------------------------

  void plan_windows();
  void plan_units();
  void emit_trigger(const WindowDef& w, const ItemDef& item, const std::string& event);
  void emit_unit(const UnitDef& u);

  // ---- statements ----------------------------------------------------

  void emit_body(int depth, bool allow_raise);
  void emit_stmt(int depth, bool allow_raise, bool& terminated);
  void emit_if(int depth);
  void emit_case(int depth);
  void emit_while(int depth);
  void emit_for(int depth);
  void emit_basic_loop(int depth);
  void emit_inner_block(int depth);
  void emit_select_into();
  void emit_dml();
  void emit_builtin_call();
  void emit_unit_call();

  // ---- expressions ---------------------------------------------------

  std::string expr_of(char type, int depth);
  std::string num_expr(int depth);
  std::string txt_expr(int depth);
  std::string bool_expr(int depth);
  std::string condition(int depth);

  std::vector<const Var*> vars_of(char type) const {
    std::vector<const Var*> out;
    for (const auto& v : scope_)
      if (v.type == type) out.push_back(&v);
    return out;
  }
  std::vector<const ItemDef*> items_of(char type) const {
    std::vector<const ItemDef*> out;
    if (!window_) return out;
    for (const auto& it : window_->items)
      if (it.type == type && std::string(it.widget) != "BUTTON") out.push_back(&it);
    return out;
  }
  std::string bind_ref(const ItemDef& item) {
    // Unqualified binds resolve against the owning window; mix both spellings.
    return ":" + (chance(60) ? window_->name + "." + item.name : item.name);
  }
};

const char* kEvents[] = {"WHEN-BUTTON-PRESSED", "WHEN-VALIDATE-ITEM", "WHEN-NEW-ITEM-INSTANCE",
                         "WHEN-CHECKBOX-CHANGED", "POST-CHANGE"};
const char* kTables[] = {"ORDERS", "APP.CUSTOMERS", "PAYMENTS", "APP.ACCOUNT_LINES"};
const char* kColumns[] = {"AMOUNT", "STATUS", "TOTAL_DUE", "YEAR_NO", "BALANCE"};
const char* kProps[] = {"visible", "enabled", "required"};

void append_upper(std::string& dst, const std::string& s) {
  for (char c : s) dst.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
}

// ---------------------------------------------------------------------------
// Structure
// ---------------------------------------------------------------------------

void Gen::plan_windows() {
  int n_windows = 1 + (chance(30) ? 1 : 0);
  static const char* kWindowNames[] = {"MAIN", "DETAIL_PANEL"};
  static const char* kWidgets[] = {"TEXT", "BUTTON", "CHECKBOX", "DISPLAY"};
  for (int w = 0; w < n_windows; ++w) {
    WindowDef win;
    win.name = kWindowNames[w];
    int n_items = 3 + pick(3);
    int shift = pick(4);
    for (int i = 0; i < n_items; ++i) {
      const char* widget = kWidgets[(i + shift) % 4];
      ItemDef item;
      item.widget = widget;
      std::string base;
      if (std::string(widget) == "TEXT") {
        item.type = 't';
        base = "NAME_FIELD";
      } else if (std::string(widget) == "BUTTON") {
        item.type = 'x';
        base = "ACTION_BTN";
      } else if (std::string(widget) == "CHECKBOX") {
        item.type = 'b';
        base = "FLAG_BOX";
      } else {
        item.type = 'n';
        base = "AMOUNT_DISP";
      }
      item.name = base + "_" + std::to_string(w) + std::to_string(i);
      win.items.push_back(std::move(item));
    }
    windows_.push_back(std::move(win));
  }
}

void Gen::plan_units() {
  int n_units = pick(3);  // 0..2
  for (int i = 0; i < n_units; ++i) {
    UnitDef u;
    u.is_function = chance(60);
    u.name = (u.is_function ? "calc_value_" : "apply_change_") + std::to_string(i + 1);
    int n_params = u.is_function ? 1 + pick(2) : pick(3);
    for (int p = 0; p < n_params; ++p) {
      Var v;
      v.type = chance(70) ? 'n' : 't';
      v.name = (v.type == 'n' ? "in_num_" : "in_txt_") + std::to_string(p + 1);
      u.params.push_back(std::move(v));
    }
    u.return_type = chance(75) ? 'n' : 't';
    units_.push_back(std::move(u));
  }
}

std::string Gen::run() {
  plan_windows();
  plan_units();

  std::string form_name = "CORPUS_FORM_" + std::to_string(seed_);
  line("# generated descriptor, seed " + std::to_string(seed_));
  line("FORM " + form_name);
  line("");

  for (const auto& w : windows_) {
    line("WINDOW " + w.name);
    indent_++;
    for (const auto& item : w.items)
      line("ITEM " + item.name + " : " + item.widget);
    line("");

    // Distinct (item, event) pairs so handler ids never collide.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < static_cast<int>(w.items.size()); ++i)
      for (int e = 0; e < 5; ++e) pairs.push_back({i, e});
    for (int i = static_cast<int>(pairs.size()) - 1; i > 0; --i)
      std::swap(pairs[static_cast<std::size_t>(i)], pairs[static_cast<std::size_t>(pick(i + 1))]);
    int n_triggers = pick(4);  // 0..3
    for (int t = 0; t < n_triggers && t < static_cast<int>(pairs.size()); ++t) {
      const auto& [item_idx, event_idx] = pairs[static_cast<std::size_t>(t)];
      emit_trigger(w, w.items[static_cast<std::size_t>(item_idx)], kEvents[event_idx]);
    }
    indent_--;
  }

  for (const auto& u : units_) emit_unit(u);

  line("END FORM");
  return out_.str();
}

void Gen::emit_trigger(const WindowDef& w, const ItemDef& item, const std::string& event) {
  line("TRIGGER " + item.name + "." + event);
  indent_++;
  if (chance(15)) {  // intentionally empty trigger
    line("BEGIN");
    line("END;");
    indent_--;
    line("END TRIGGER");
    line("");
    return;
  }

  scope_.clear();
  window_ = &w;
  in_function_ = false;

  int n_locals = 1 + pick(4);
  for (int i = 0; i < n_locals; ++i) {
    Var v;
    int t = pick(10);
    v.type = t < 5 ? 'n' : (t < 8 ? 't' : 'b');
    v.name = fresh(v.type == 'n' ? "num_val_" : (v.type == 't' ? "txt_val_" : "flag_val_"));
    scope_.push_back(std::move(v));
  }

  line("DECLARE");
  indent_++;
  for (const auto& v : scope_) {
    if (v.type == 'n')
      line(v.name + (chance(50) ? " NUMBER;" : " INTEGER;"));
    else if (v.type == 't')
      line(v.name + " VARCHAR2(200);");
    else
      line(v.name + " BOOLEAN;");
  }
  indent_--;
  line("BEGIN");
  indent_++;
  stmt_budget_ = 20;
  emit_body(0, true);
  indent_--;
  if (chance(25)) {
    line("EXCEPTION WHEN OTHERS THEN");
    indent_++;
    line("message('operation failed');");
    if (chance(50)) line("RAISE FORM_TRIGGER_FAILURE;");
    indent_--;
  }
  line("END;");
  indent_--;
  line("END TRIGGER");
  line("");
}

void Gen::emit_unit(const UnitDef& u) {
  line("PROGRAM UNIT");
  indent_++;

  scope_.clear();
  window_ = nullptr;  // no UI access from units
  in_function_ = u.is_function;
  fn_return_ = u.return_type;
  for (const auto& p : u.params) scope_.push_back(p);

  std::string header = (u.is_function ? "FUNCTION " : "PROCEDURE ") + u.name;
  if (!u.params.empty()) {
    header += " (";
    for (std::size_t i = 0; i < u.params.size(); ++i) {
      if (i) header += ", ";
      header += u.params[i].name;
      header += " IN ";
      header += u.params[i].type == 'n' ? "NUMBER" : "VARCHAR2";
    }
    header += ")";
  }
  if (u.is_function) header += std::string(" RETURN ") + (u.return_type == 'n' ? "NUMBER" : "VARCHAR2");
  header += " IS";
  line(header);

  std::vector<Var> locals;
  int n_locals = pick(3);
  for (int i = 0; i < n_locals; ++i) {
    Var v;
    v.type = chance(70) ? 'n' : 't';
    v.name = fresh(v.type == 'n' ? "unit_num_" : "unit_txt_");
    locals.push_back(v);
    scope_.push_back(v);
  }
  if (!locals.empty()) {
    indent_++;
    for (const auto& v : locals)
      line(v.name + (v.type == 'n' ? " NUMBER;" : " VARCHAR2(100);"));
    indent_--;
  }

  line("BEGIN");
  indent_++;
  stmt_budget_ = 10;
  emit_body(0, false);
  if (u.is_function) line("RETURN " + expr_of(u.return_type, 0) + ";");
  indent_--;
  line("END;");
  indent_--;
  line("END UNIT");
  line("");
}

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

void Gen::emit_body(int depth, bool allow_raise) {
  int n = depth == 0 ? 2 + pick(5) : 1 + pick(3);
  bool terminated = false;
  // Always emit at least one statement: the grammar has no empty branches.
  for (int i = 0; i < n && (i == 0 || stmt_budget_ > 0) && !terminated; ++i) {
    --stmt_budget_;
    emit_stmt(depth, allow_raise, terminated);
  }
}

void Gen::emit_stmt(int depth, bool allow_raise, bool& terminated) {
  const bool deep = depth >= 2;
  for (;;) {
    int k = pick(16);
    if (deep && k >= 8 && k <= 12) continue;        // no further nesting
    if ((k == 6 || k == 7) && !window_) continue;  // UI statements need a window
    if (k == 13 && units_.empty()) continue;
    if (k == 14 && !allow_raise) continue;
    switch (k) {
      case 0:
      case 1: {  // local assignment
        auto numeric = vars_of('n');
        auto textual = vars_of('t');
        auto flags = vars_of('b');
        int which = pick(3);
        if (which == 0 && !numeric.empty())
          line(numeric[static_cast<std::size_t>(pick(static_cast<int>(numeric.size())))]->name +
               " := " + num_expr(0) + ";");
        else if (which == 1 && !textual.empty())
          line(textual[static_cast<std::size_t>(pick(static_cast<int>(textual.size())))]->name +
               " := " + txt_expr(0) + ";");
        else if (!flags.empty())
          line(flags[static_cast<std::size_t>(pick(static_cast<int>(flags.size())))]->name +
               " := " + bool_expr(0) + ";");
        else
          line("message('no local to assign');");
        return;
      }
      case 2:
      case 3:
        emit_select_into();
        return;
      case 4:
      case 5:
        emit_dml();
        return;
      case 6: {  // UI assignment
        char t = "ntb"[pick(3)];
        auto targets = items_of(t);
        if (targets.empty()) continue;
        const ItemDef& it = *targets[static_cast<std::size_t>(pick(static_cast<int>(targets.size())))];
        line(bind_ref(it) + " := " + expr_of(t, 0) + ";");
        return;
      }
      case 7:
        emit_builtin_call();
        return;
      case 8:
        emit_if(depth);
        return;
      case 9:
        emit_case(depth);
        return;
      case 10:
        if (chance(50))
          emit_while(depth);
        else
          emit_basic_loop(depth);
        return;
      case 11:
        emit_for(depth);
        return;
      case 12:
        emit_inner_block(depth);
        return;
      case 13:
        emit_unit_call();
        return;
      case 14:  // raise ends the current sequence
        line(chance(70) ? "RAISE FORM_TRIGGER_FAILURE;" : "RAISE VALUE_ERROR;");
        terminated = true;
        return;
      case 15:
        if (in_function_) {
          line("RETURN " + expr_of(fn_return_, 0) + ";");
          terminated = true;
          return;
        }
        line("-- audit note " + std::to_string(pick(100)));
        line("message('checkpoint " + std::to_string(pick(50)) + "');");
        return;
      default:
        continue;
    }
  }
}

void Gen::emit_if(int depth) {
  line("IF " + condition(0) + " THEN");
  indent_++;
  emit_body(depth + 1, false);
  indent_--;
  int elsifs = pick(3) == 0 ? 1 : 0;
  for (int i = 0; i < elsifs; ++i) {
    line("ELSIF " + condition(0) + " THEN");
    indent_++;
    emit_body(depth + 1, false);
    indent_--;
  }
  if (chance(50)) {
    line("ELSE");
    indent_++;
    emit_body(depth + 1, false);
    indent_--;
  }
  line("END IF;");
}

void Gen::emit_case(int depth) {
  auto numeric = vars_of('n');
  bool simple = !numeric.empty() && chance(50);
  if (simple) {
    const Var& subj = *numeric[static_cast<std::size_t>(pick(static_cast<int>(numeric.size())))];
    line("CASE " + subj.name);
    indent_++;
    int arms = 1 + pick(2);
    for (int i = 0; i < arms; ++i) {
      line("WHEN " + std::to_string(pick(9)) + " THEN");
      indent_++;
      emit_body(depth + 1, false);
      indent_--;
    }
    if (chance(60)) {
      line("ELSE");
      indent_++;
      emit_body(depth + 1, false);
      indent_--;
    }
    indent_--;
    line("END CASE;");
  } else {
    line("CASE");
    indent_++;
    int arms = 1 + pick(2);
    for (int i = 0; i < arms; ++i) {
      line("WHEN " + condition(0) + " THEN");
      indent_++;
      emit_body(depth + 1, false);
      indent_--;
    }
    if (chance(60)) {
      line("ELSE");
      indent_++;
      emit_body(depth + 1, false);
      indent_--;
    }
    indent_--;
    line("END CASE;");
  }
}

void Gen::emit_while(int depth) {
  line("WHILE " + condition(0) + " LOOP");
  indent_++;
  emit_body(depth + 1, false);
  indent_--;
  line("END LOOP;");
}

void Gen::emit_for(int depth) {
  Var loop_var;
  loop_var.name = fresh("loop_idx_");
  loop_var.type = 'n';
  int lo = 1 + pick(3);
  int hi = lo + 1 + pick(8);
  line("FOR " + loop_var.name + " IN " + std::to_string(lo) + " .. " + std::to_string(hi) +
       " LOOP");
  scope_.push_back(loop_var);
  indent_++;
  emit_body(depth + 1, false);
  indent_--;
  scope_.pop_back();
  line("END LOOP;");
}

void Gen::emit_basic_loop(int depth) {
  line("LOOP");
  indent_++;
  emit_body(depth + 1, false);
  line("EXIT WHEN " + condition(0) + ";");
  indent_--;
  line("END LOOP;");
}

void Gen::emit_inner_block(int depth) {
  std::size_t outer_size = scope_.size();
  std::vector<Var> extra;
  int n_extra = pick(2);
  for (int i = 0; i < n_extra; ++i) {
    Var v;
    v.type = chance(60) ? 'n' : 't';
    v.name = fresh("tmp_val_");
    extra.push_back(v);
    scope_.push_back(v);
  }
  if (!extra.empty()) {
    line("DECLARE");
    indent_++;
    for (const auto& v : extra)
      line(v.name + (v.type == 'n' ? " NUMBER;" : " VARCHAR2(64);"));
    indent_--;
  }
  line("BEGIN");
  indent_++;
  emit_body(depth + 1, false);
  indent_--;
  if (chance(50)) {
    line("EXCEPTION WHEN " + std::string(chance(70) ? "OTHERS" : "VALUE_ERROR") + " THEN");
    indent_++;
    line("message('recovered');");
    indent_--;
  }
  line("END;");
  scope_.resize(outer_size);
}

void Gen::emit_select_into() {
  auto numeric = vars_of('n');
  auto displays = items_of('n');

  struct Target {
    std::string dest;
    bool is_bind;
  };
  std::vector<Target> targets;
  int want = 1 + pick(3);
  for (int i = 0; i < want; ++i) {
    bool use_bind = window_ && !displays.empty() && chance(25);
    if (use_bind) {
      targets.push_back(
          {bind_ref(*displays[static_cast<std::size_t>(pick(static_cast<int>(displays.size())))]),
           true});
    } else if (!numeric.empty()) {
      targets.push_back(
          {numeric[static_cast<std::size_t>(pick(static_cast<int>(numeric.size())))]->name, false});
    }
  }
  if (targets.empty()) {
    line("message('nothing to select');");
    return;
  }

  std::string projection, into;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (i) {
      projection += ", ";
      into += ", ";
    }
    std::string col = kColumns[pick(5)];
    projection += (i == 0 && chance(35)) ? "sum(" + col + ")" : col;
    into += targets[i].dest;
  }

  std::string where;
  int conds = pick(3);
  for (int i = 0; i < conds; ++i) {
    where += i == 0 ? " WHERE " : " AND ";
    std::string rhs = std::to_string(pick(100));
    if (window_ && chance(50)) {
      auto texts = items_of('t');
      if (!texts.empty())
        rhs = bind_ref(*texts[static_cast<std::size_t>(pick(static_cast<int>(texts.size())))]);
    }
    where += std::string(kColumns[pick(5)]) + " = " + rhs;
  }
  line("SELECT " + projection + " INTO " + into + " FROM " + kTables[pick(4)] + where + ";");
}

void Gen::emit_dml() {
  int kind = pick(3);
  std::string table = kTables[pick(4)];
  auto bind_or_literal = [&]() -> std::string {
    if (window_ && chance(40)) {
      auto texts = items_of('t');
      auto nums = items_of('n');
      if (!texts.empty() && chance(50))
        return bind_ref(*texts[static_cast<std::size_t>(pick(static_cast<int>(texts.size())))]);
      if (!nums.empty())
        return bind_ref(*nums[static_cast<std::size_t>(pick(static_cast<int>(nums.size())))]);
    }
    return chance(50) ? std::to_string(pick(1000)) : "'STATE_" + std::to_string(pick(9)) + "'";
  };
  if (kind == 0) {
    std::string c1 = kColumns[pick(5)], c2 = kColumns[pick(5)];
    line("INSERT INTO " + table + " (" + c1 + ", " + c2 + ") VALUES (" + bind_or_literal() +
         ", " + bind_or_literal() + ");");
  } else if (kind == 1) {
    line("UPDATE " + table + " SET " + kColumns[pick(5)] + " = " + bind_or_literal() + " WHERE " +
         kColumns[pick(5)] + " = " + bind_or_literal() + ";");
  } else {
    line("DELETE FROM " + table + " WHERE " + kColumns[pick(5)] + " = " + bind_or_literal() + ";");
  }
}

void Gen::emit_builtin_call() {
  int k = pick(4);
  if (k == 0 && window_ && !window_->items.empty()) {
    const ItemDef& it =
        window_->items[static_cast<std::size_t>(pick(static_cast<int>(window_->items.size())))];
    std::string spec;
    append_upper(spec, window_->name + "." + it.name);
    line("SET_ITEM_PROPERTY('" + spec + "', " + kProps[pick(3)] + ", " +
         (chance(70) ? "property_true" : "property_false") + ");");
  } else if (k == 1 && window_) {
    auto texts = items_of('t');
    if (!texts.empty()) {
      const ItemDef& it = *texts[static_cast<std::size_t>(pick(static_cast<int>(texts.size())))];
      std::string spec;
      append_upper(spec, window_->name + "." + it.name);
      line("CLEAR_ITEM('" + spec + "');");
    } else {
      line("message('status " + std::to_string(pick(20)) + "');");
    }
  } else if (k == 2) {
    line(chance(50) ? "SHOW_ALERT('confirm_alert');"
                    : "OPEN_FORM('REPORT_VIEW_" + std::to_string(pick(4)) + "');");
  } else {
    line("message('step " + std::to_string(pick(99)) + "');");
  }
}

void Gen::emit_unit_call() {
  const UnitDef& u = units_[static_cast<std::size_t>(pick(static_cast<int>(units_.size())))];
  std::string args;
  if (!u.params.empty()) {
    args += "(";
    for (std::size_t i = 0; i < u.params.size(); ++i) {
      if (i) args += ", ";
      args += expr_of(u.params[i].type, 1);
    }
    args += ")";
  }
  if (u.is_function) {
    auto dests = vars_of(u.return_type);
    if (!dests.empty()) {
      line(dests[static_cast<std::size_t>(pick(static_cast<int>(dests.size())))]->name + " := " +
           u.name + args + ";");
      return;
    }
  }
  line(u.name + args + ";");
}

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

std::string Gen::expr_of(char type, int depth) {
  if (type == 'n') return num_expr(depth);
  if (type == 't') return txt_expr(depth);
  return bool_expr(depth);
}

std::string Gen::num_expr(int depth) {
  if (depth >= 2 || chance(40)) {
    auto numeric = vars_of('n');
    int k = pick(3);
    if (k == 0 && !numeric.empty())
      return numeric[static_cast<std::size_t>(pick(static_cast<int>(numeric.size())))]->name;
    if (k == 1 && window_) {
      auto displays = items_of('n');
      if (!displays.empty())
        return bind_ref(*displays[static_cast<std::size_t>(pick(static_cast<int>(displays.size())))]);
    }
    return chance(25) ? std::to_string(pick(90)) + "." + std::to_string(pick(9)) + "5"
                      : std::to_string(pick(500));
  }
  int k = pick(5);
  if (k == 0) return "(" + num_expr(depth + 1) + " + " + num_expr(depth + 1) + ")";
  if (k == 1) return num_expr(depth + 1) + " - " + num_expr(depth + 1);
  if (k == 2) return std::to_string(1 + pick(9)) + " * " + num_expr(depth + 1);
  if (k == 3) return "length(" + txt_expr(depth + 1) + ")";
  // function-style unit call in expression position when one fits
  for (const auto& u : units_) {
    if (u.is_function && u.return_type == 'n' && !in_function_) {
      std::string args;
      if (!u.params.empty()) {
        args += "(";
        for (std::size_t i = 0; i < u.params.size(); ++i) {
          if (i) args += ", ";
          args += expr_of(u.params[i].type, depth + 1);
        }
        args += ")";
      }
      return u.name + args;
    }
  }
  return num_expr(depth + 1) + " + " + std::to_string(pick(50));
}

std::string Gen::txt_expr(int depth) {
  if (depth >= 2 || chance(50)) {
    auto textual = vars_of('t');
    int k = pick(3);
    if (k == 0 && !textual.empty())
      return textual[static_cast<std::size_t>(pick(static_cast<int>(textual.size())))]->name;
    if (k == 1 && window_) {
      auto texts = items_of('t');
      if (!texts.empty())
        return bind_ref(*texts[static_cast<std::size_t>(pick(static_cast<int>(texts.size())))]);
    }
    static const char* kWords[] = {"'alpha'", "'beta state'", "'it''s fine'", "'GAMMA-9'"};
    return kWords[pick(4)];
  }
  int k = pick(3);
  if (k == 0) return txt_expr(depth + 1) + " || " + txt_expr(depth + 1);
  if (k == 1) return "substr(" + txt_expr(depth + 1) + ", 1, " + std::to_string(1 + pick(20)) + ")";
  return "upper(" + txt_expr(depth + 1) + ")";
}

std::string Gen::bool_expr(int depth) {
  if (depth >= 2) return chance(50) ? "TRUE" : "FALSE";
  int k = pick(5);
  if (k == 0) return chance(50) ? "TRUE" : "FALSE";
  if (k == 1) {
    auto flags = vars_of('b');
    if (!flags.empty())
      return flags[static_cast<std::size_t>(pick(static_cast<int>(flags.size())))]->name;
    return "TRUE";
  }
  if (k == 2 && window_) {
    auto boxes = items_of('b');
    if (!boxes.empty())
      return bind_ref(*boxes[static_cast<std::size_t>(pick(static_cast<int>(boxes.size())))]);
  }
  return condition(depth + 1);
}

std::string Gen::condition(int depth) {
  if (depth < 1 && chance(25)) {
    static const char* kJoins[] = {" AND ", " OR "};
    std::string lhs = condition(depth + 1);
    std::string rhs = condition(depth + 1);
    if (chance(20)) rhs = "NOT (" + rhs + ")";
    return lhs + kJoins[pick(2)] + rhs;
  }
  static const char* kCmps[] = {" > ", " >= ", " < ", " <= ", " = ", " <> "};
  return num_expr(depth + 1) + kCmps[pick(6)] + num_expr(depth + 1);
}

}  // namespace

std::string generate_form(std::uint32_t seed) { return Gen(seed).run(); }

}  // namespace corpus
