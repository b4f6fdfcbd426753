#include "charlab/dsl.hpp"

#include <cctype>
#include <sstream>

#include "charlab/constructions.hpp"

namespace charlab {

bool operator==(const GroupExpr& a, const GroupExpr& b) {
  if (a.node != b.node) return false;
  auto ptr_eq = [](const GroupExpr::Ptr& x, const GroupExpr::Ptr& y) {
    if (!x || !y) return !x && !y;
    return *x == *y;
  };
  switch (a.node) {
    case GroupExpr::Node::Atom:
      return a.atom == b.atom && a.args == b.args;
    case GroupExpr::Node::Product:
    case GroupExpr::Node::Wreath:
      return ptr_eq(a.left, b.left) && ptr_eq(a.right, b.right);
    case GroupExpr::Node::Semidirect:
      return ptr_eq(a.sd_k, b.sd_k) && ptr_eq(a.sd_q, b.sd_q) &&
             a.action == b.action;
    case GroupExpr::Node::Selector:
      return a.selector == b.selector && a.sel_args == b.sel_args &&
             ptr_eq(a.operand, b.operand);
  }
  return false;
}

namespace {

struct Token {
  enum class Kind { Ident, Number, LParen, RParen, LBracket, RBracket, Comma, End };
  Kind kind;
  std::string text;
  long number = 0;
  int line = 1;
  int column = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }
  const Token& peek() const { return current_; }
  Token next() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::Kind::End;
      current_.text = "<end>";
      return;
    }
    char c = text_[pos_];
    auto single = [&](Token::Kind k) {
      current_.kind = k;
      current_.text = std::string(1, c);
      ++pos_;
      ++column_;
    };
    switch (c) {
      case '(': return single(Token::Kind::LParen);
      case ')': return single(Token::Kind::RParen);
      case '[': return single(Token::Kind::LBracket);
      case ']': return single(Token::Kind::RBracket);
      case ',': return single(Token::Kind::Comma);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++column_;
      }
      current_.kind = Token::Kind::Number;
      current_.text = text_.substr(start, pos_ - start);
      current_.number = std::stol(current_.text);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
        ++column_;
      }
      current_.kind = Token::Kind::Ident;
      current_.text = text_.substr(start, pos_ - start);
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     column_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

class Parser {
public:
  explicit Parser(const std::string& text) : lex_(text) {}

  GroupExpr::Ptr parse_all() {
    auto e = parse_expr();
    expect(Token::Kind::End, "end of input");
    return e;
  }

  GroupExpr::Ptr parse_selector_only() {
    auto sel = try_parse_selector();
    if (!sel)
      throw ParseError("expected a selector", lex_.peek().line,
                       lex_.peek().column);
    expect(Token::Kind::End, "end of input");
    return sel;
  }

private:
  [[noreturn]] void fail(const std::string& msg, const Token& at) {
    throw ParseError(msg + " but found '" + at.text + "'", at.line, at.column);
  }

  Token expect(Token::Kind kind, const std::string& what) {
    if (lex_.peek().kind != kind) fail("expected " + what, lex_.peek());
    return lex_.next();
  }

  long expect_number() {
    return expect(Token::Kind::Number, "a number").number;
  }

  GroupExpr::Ptr parse_expr() {
    auto left = parse_wrexpr();
    while (lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == "x") {
      lex_.next();
      auto right = parse_wrexpr();
      auto node = std::make_shared<GroupExpr>();
      node->node = GroupExpr::Node::Product;
      node->left = std::move(left);
      node->right = std::move(right);
      left = std::move(node);
    }
    return left;
  }

  GroupExpr::Ptr parse_wrexpr() {
    auto left = parse_unit();
    while (lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == "wr") {
      lex_.next();
      auto right = parse_unit();
      auto node = std::make_shared<GroupExpr>();
      node->node = GroupExpr::Node::Wreath;
      node->left = std::move(left);
      node->right = std::move(right);
      left = std::move(node);
    }
    return left;
  }

  GroupExpr::Ptr parse_unit() {
    if (auto node = try_parse_selector()) {
      Token of = expect(Token::Kind::Ident, "'of'");
      if (of.text != "of") fail("expected 'of'", of);
      node->operand = parse_unit();
      return node;
    }
    return parse_primary();
  }

  std::shared_ptr<GroupExpr> try_parse_selector() {
    if (lex_.peek().kind != Token::Kind::Ident) return nullptr;
    const std::string& name = lex_.peek().text;
    if (name != "center" && name != "derived" && name != "socle" &&
        name != "sylow" && name != "genlist")
      return nullptr;
    Token t = lex_.next();
    auto node = std::make_shared<GroupExpr>();
    node->node = GroupExpr::Node::Selector;
    node->selector = t.text;
    if (node->selector == "sylow") {
      expect(Token::Kind::LParen, "'('");
      node->sel_args.push_back(static_cast<int>(expect_number()));
      expect(Token::Kind::RParen, "')'");
    } else if (node->selector == "genlist") {
      expect(Token::Kind::LParen, "'('");
      expect(Token::Kind::LBracket, "'['");
      if (lex_.peek().kind != Token::Kind::RBracket) {
        node->sel_args.push_back(static_cast<int>(expect_number()));
        while (lex_.peek().kind == Token::Kind::Comma) {
          lex_.next();
          node->sel_args.push_back(static_cast<int>(expect_number()));
        }
      }
      expect(Token::Kind::RBracket, "']'");
      expect(Token::Kind::RParen, "')'");
    }
    return node;
  }

  GroupExpr::Ptr parse_primary() {
    Token t = lex_.peek();
    if (t.kind == Token::Kind::LParen) {
      lex_.next();
      auto inner = parse_expr();
      expect(Token::Kind::RParen, "')'");
      return inner;
    }
    if (t.kind != Token::Kind::Ident) fail("expected a group expression", t);
    lex_.next();
    if (t.text == "sd") {
      auto node = std::make_shared<GroupExpr>();
      node->node = GroupExpr::Node::Semidirect;
      expect(Token::Kind::LParen, "'('");
      node->sd_k = parse_expr();
      expect(Token::Kind::Comma, "','");
      node->sd_q = parse_expr();
      expect(Token::Kind::Comma, "','");
      Token action = expect(Token::Kind::Ident, "an action name");
      node->action = action.text;
      expect(Token::Kind::RParen, "')'");
      return node;
    }
    if (t.text == "C" || t.text == "D" || t.text == "Q" || t.text == "S" ||
        t.text == "A" || t.text == "SL" || t.text == "F") {
      auto node = std::make_shared<GroupExpr>();
      node->node = GroupExpr::Node::Atom;
      node->atom = t.text;
      expect(Token::Kind::LParen, "'('");
      node->args.push_back(static_cast<int>(expect_number()));
      while (lex_.peek().kind == Token::Kind::Comma) {
        lex_.next();
        node->args.push_back(static_cast<int>(expect_number()));
      }
      expect(Token::Kind::RParen, "')'");
      validate_atom(*node, t);
      return node;
    }
    fail("unknown atom '" + t.text + "'", t);
  }

  void validate_atom(const GroupExpr& node, const Token& at) {
    const auto& a = node.args;
    if (node.atom == "C" && (a.size() != 1 || a[0] < 1))
      fail("C(n) takes one positive parameter", at);
    if (node.atom == "D" && (a.size() != 1 || a[0] < 4 || a[0] % 2 != 0))
      fail("dihedral atoms take the group order, which must be even and >= 4",
           at);
    if (node.atom == "Q" && (a.size() != 1 || a[0] != 8))
      fail("the quaternion atom is Q(8)", at);
    if ((node.atom == "S" || node.atom == "A") && (a.size() != 1 || a[0] < 1))
      fail(node.atom + "(n) takes one positive parameter", at);
    if (node.atom == "SL" && (a.size() != 2 || a[0] != 2 || a[1] != 3))
      fail("only SL(2,3) is available", at);
    if (node.atom == "F" && (a.size() != 1 || a[0] != 21))
      fail("only F(21) is available", at);
  }

  Lexer lex_;
};

// precedence levels: product 1, wreath 2, unit (selector) 3, primary 4
int node_level(const GroupExpr& e) {
  switch (e.node) {
    case GroupExpr::Node::Product: return 1;
    case GroupExpr::Node::Wreath: return 2;
    case GroupExpr::Node::Selector: return 3;
    default: return 4;
  }
}

void render_into(const GroupExpr& e, int min_level, std::ostringstream& out) {
  bool parens = node_level(e) < min_level;
  if (parens) out << "(";
  switch (e.node) {
    case GroupExpr::Node::Atom: {
      out << e.atom << "(";
      for (std::size_t i = 0; i < e.args.size(); ++i)
        out << (i ? "," : "") << e.args[i];
      out << ")";
      break;
    }
    case GroupExpr::Node::Product:
      render_into(*e.left, 1, out);
      out << " x ";
      render_into(*e.right, 2, out);
      break;
    case GroupExpr::Node::Wreath:
      render_into(*e.left, 2, out);
      out << " wr ";
      render_into(*e.right, 3, out);
      break;
    case GroupExpr::Node::Semidirect:
      out << "sd(";
      render_into(*e.sd_k, 1, out);
      out << ", ";
      render_into(*e.sd_q, 1, out);
      out << ", " << e.action << ")";
      break;
    case GroupExpr::Node::Selector:
      out << e.selector;
      if (e.selector == "sylow") {
        out << "(" << e.sel_args[0] << ")";
      } else if (e.selector == "genlist") {
        out << "([";
        for (std::size_t i = 0; i < e.sel_args.size(); ++i)
          out << (i ? "," : "") << e.sel_args[i];
        out << "])";
      }
      out << " of ";
      render_into(*e.operand, 3, out);
      break;
  }
  if (parens) out << ")";
}

GroupPtr require_group(const DslValue& v, const char* what) {
  if (v.is_subgroup())
    throw Error(std::string(what) + " requires a group operand, not a subgroup");
  return v.group;
}

Subgroup apply_selector(const GroupExpr& e, const GroupPtr& g) {
  if (e.selector == "center") {
    return centralizer(Subgroup::whole(g), Subgroup::whole(g));
  }
  if (e.selector == "derived") {
    std::vector<int> gens;
    for (int a = 0; a < g->order(); ++a)
      for (int b = a + 1; b < g->order(); ++b) {
        int c = g->commutator(a, b);
        if (c != 0) gens.push_back(c);
      }
    return Subgroup::generated(g, gens);
  }
  if (e.selector == "socle") {
    std::vector<int> gens;
    for (const auto& m : minimal_normal_subgroups(g, Subgroup::trivial(g)))
      for (int x : m.elements()) gens.push_back(x);
    return Subgroup::generated(g, gens);
  }
  if (e.selector == "sylow") {
    long p = e.sel_args.at(0);
    if (!is_prime(p))
      throw Error("sylow selector needs a prime, got " + std::to_string(p));
    return sylow_subgroup(g, p);
  }
  if (e.selector == "genlist") {
    return Subgroup::generated(g, e.sel_args);
  }
  throw Error("unknown selector '" + e.selector + "'");
}

} // namespace

GroupExpr::Ptr parse(const std::string& text) {
  return Parser(text).parse_all();
}

std::string render(const GroupExpr& expr) {
  std::ostringstream out;
  render_into(expr, 1, out);
  return out.str();
}

DslValue evaluate(const GroupExpr& e) {
  switch (e.node) {
    case GroupExpr::Node::Atom: {
      const auto& a = e.args;
      if (e.atom == "C") {
        if (a.size() != 1 || a[0] < 1)
          throw Error("C(n) takes one positive parameter");
        return {cyclic_group(a[0]), std::nullopt};
      }
      if (e.atom == "D") {
        if (a.size() != 1 || a[0] < 4 || a[0] % 2 != 0)
          throw Error("D takes the group order, which must be even and >= 4");
        return {dihedral_group(a[0]), std::nullopt};
      }
      if (e.atom == "Q") {
        if (a.size() != 1 || a[0] != 8)
          throw Error("the quaternion atom is Q(8)");
        return {quaternion_group(), std::nullopt};
      }
      if (e.atom == "S") {
        if (a.size() != 1 || a[0] < 1)
          throw Error("S(n) takes one positive parameter");
        return {symmetric_group(a[0]), std::nullopt};
      }
      if (e.atom == "A") {
        if (a.size() != 1 || a[0] < 1)
          throw Error("A(n) takes one positive parameter");
        return {alternating_group(a[0]), std::nullopt};
      }
      if (e.atom == "SL") {
        if (a.size() != 2 || a[0] != 2 || a[1] != 3)
          throw Error("only SL(2,3) is available");
        return {sl_2_3(), std::nullopt};
      }
      if (e.atom == "F") {
        if (a.size() != 1 || a[0] != 21)
          throw Error("only F(21) is available");
        return {frobenius_21(), std::nullopt};
      }
      throw Error("unknown atom '" + e.atom + "'");
    }
    case GroupExpr::Node::Product: {
      GroupPtr l = require_group(evaluate(*e.left), "direct product");
      GroupPtr r = require_group(evaluate(*e.right), "direct product");
      return {direct_product(l, r), std::nullopt};
    }
    case GroupExpr::Node::Wreath: {
      GroupPtr l = require_group(evaluate(*e.left), "wreath product");
      GroupPtr r = require_group(evaluate(*e.right), "wreath product");
      if (r->order() != 2)
        throw Error("wr is the wreath product by C2; the right operand must "
                    "have order 2");
      return {wreath_c2(l), std::nullopt};
    }
    case GroupExpr::Node::Semidirect: {
      GroupPtr k = require_group(evaluate(*e.sd_k), "semidirect product");
      GroupPtr q = require_group(evaluate(*e.sd_q), "semidirect product");
      if (e.action == "swap") {
        if (q->order() != 2)
          throw Error("the swap action requires Q of order 2");
        int mm = k->order();
        int m = 1;
        while (m * m < mm) ++m;
        if (m * m != mm)
          throw Error("the swap action requires |K| to be a perfect square "
                      "built as H x H");
        std::vector<std::vector<int>> action(2, std::vector<int>(mm));
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b) {
            action[0][a * m + b] = a * m + b;
            action[1][a * m + b] = b * m + a;
          }
        return {semidirect_product(k, q, action), std::nullopt};
      }
      if (e.action == "inversion") {
        if (q->order() != 2)
          throw Error("the inversion action requires Q of order 2");
        std::vector<std::vector<int>> action(2, std::vector<int>(k->order()));
        for (int a = 0; a < k->order(); ++a) {
          action[0][a] = a;
          action[1][a] = k->inv(a);
        }
        return {semidirect_product(k, q, action), std::nullopt};
      }
      throw Error("unknown semidirect action '" + e.action +
                  "' (available: swap, inversion)");
    }
    case GroupExpr::Node::Selector: {
      DslValue v = evaluate(*e.operand);
      if (v.is_subgroup())
        throw Error("selector '" + e.selector + "' applied to a non-group "
                    "(subgroup values cannot be refined further)");
      return {v.group, apply_selector(e, v.group)};
    }
  }
  throw Error("unreachable expression node");
}

GroupPtr evaluate_group(const std::string& text) {
  DslValue v = evaluate(*parse(text));
  if (v.is_subgroup())
    throw Error("expression '" + text + "' denotes a subgroup, not a group");
  return v.group;
}

Subgroup apply_selector_text(const std::string& text, const GroupPtr& group) {
  auto sel = Parser(text).parse_selector_only();
  return apply_selector(*sel, group);
}

std::string subgroup_to_selector(const Subgroup& s) {
  std::ostringstream out;
  out << "genlist([";
  auto gens = s.generating_set();
  for (std::size_t i = 0; i < gens.size(); ++i) out << (i ? "," : "") << gens[i];
  out << "])";
  return out.str();
}

} // namespace charlab
