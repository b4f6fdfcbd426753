#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "charlab/group.hpp"

namespace charlab {

/// Abstract syntax of the group-construction language.
///
///   expr     := prod
///   prod     := wrexpr ('x' wrexpr)*
///   wrexpr   := unit ('wr' unit)*
///   unit     := selector 'of' unit | primary
///   primary  := atom | 'sd' '(' expr ',' expr ',' name ')' | '(' expr ')'
///   atom     := C(n) | D(2n) | Q(8) | S(n) | A(n) | SL(2,3) | F(21)
///   selector := center | derived | socle | sylow(p) | genlist([i, ...])
///
/// Selectors bind tightest, then sd/wr, then x.
struct GroupExpr {
  enum class Node { Atom, Product, Wreath, Semidirect, Selector };
  using Ptr = std::shared_ptr<const GroupExpr>;

  Node node;
  // Atom
  std::string atom;         // C, D, Q, S, A, SL, F
  std::vector<int> args;
  // Product / Wreath
  Ptr left, right;
  // Semidirect
  Ptr sd_k, sd_q;
  std::string action;       // swap, inversion
  // Selector
  std::string selector;     // center, derived, socle, sylow, genlist
  std::vector<int> sel_args;
  Ptr operand;

  friend bool operator==(const GroupExpr& a, const GroupExpr& b);
};

GroupExpr::Ptr parse(const std::string& text);
std::string render(const GroupExpr& expr);

/// Evaluation result: either a group or a subgroup of one.
struct DslValue {
  GroupPtr group;
  std::optional<Subgroup> sub;
  bool is_subgroup() const { return sub.has_value(); }
};

DslValue evaluate(const GroupExpr& expr);

/// Evaluates text that must denote a plain group.
GroupPtr evaluate_group(const std::string& text);

/// Parses a bare selector ("genlist([0,3])", "center", "sylow(2)", ...)
/// and applies it to the given group.
Subgroup apply_selector_text(const std::string& text, const GroupPtr& group);

/// Renders a subgroup as a genlist selector over its parent.
std::string subgroup_to_selector(const Subgroup& s);

} // namespace charlab
