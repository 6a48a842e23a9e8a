#include "f2j/ast.hpp"

namespace f2j {

ExprPtr Expr::clone() const {
  auto out = std::make_unique<Expr>();
  out->kind = kind;
  out->span = span;
  out->literal_kind = literal_kind;
  out->literal_text = literal_text;
  out->name = name;
  out->original = original;
  out->block = block;
  out->bin_op = bin_op;
  out->un_op = un_op;
  if (lhs) out->lhs = lhs->clone();
  if (rhs) out->rhs = rhs->clone();
  if (operand) out->operand = operand->clone();
  out->args.reserve(args.size());
  for (const auto& a : args) out->args.push_back(a->clone());
  return out;
}

ExprPtr make_literal(LiteralKind k, std::string text, SourceSpan span) {
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::Literal;
  e->literal_kind = k;
  e->literal_text = std::move(text);
  e->span = span;
  return e;
}

ExprPtr make_var_ref(std::string name, std::string original, SourceSpan span) {
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::VarRef;
  e->name = std::move(name);
  e->original = std::move(original);
  e->span = span;
  return e;
}

ExprPtr make_bind_ref(std::string block, std::string item, SourceSpan span) {
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::BindRef;
  e->block = std::move(block);
  e->name = std::move(item);
  e->span = span;
  return e;
}

ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs, SourceSpan span) {
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::Binary;
  e->bin_op = op;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  e->span = span;
  return e;
}

ExprPtr make_unary(UnOp op, ExprPtr operand, SourceSpan span) {
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::Unary;
  e->un_op = op;
  e->operand = std::move(operand);
  e->span = span;
  return e;
}

ExprPtr make_call(std::string callee, std::vector<ExprPtr> args, SourceSpan span) {
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::Call;
  e->name = std::move(callee);
  e->args = std::move(args);
  e->span = span;
  return e;
}

bool block_is_empty(const PlSqlBlock& b) {
  return b.statements.empty() && b.exception_handlers.empty();
}

}  // namespace f2j
