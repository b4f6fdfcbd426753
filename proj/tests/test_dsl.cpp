#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "charlab/dsl.hpp"

using namespace charlab;

namespace {

std::map<int, int> order_statistics(const GroupPtr& g) {
  std::map<int, int> stats;
  for (int x = 0; x < g->order(); ++x) ++stats[g->element_order(x)];
  return stats;
}

GroupExpr::Ptr random_expr(std::mt19937& rng, int depth) {
  auto node = std::make_shared<GroupExpr>();
  int pick = depth <= 0 ? 0 : static_cast<int>(rng() % 5);
  switch (pick) {
    case 1: {
      node->node = GroupExpr::Node::Product;
      node->left = random_expr(rng, depth - 1);
      node->right = random_expr(rng, depth - 1);
      return node;
    }
    case 2: {
      node->node = GroupExpr::Node::Wreath;
      node->left = random_expr(rng, depth - 1);
      node->right = random_expr(rng, depth - 1);
      return node;
    }
    case 3: {
      node->node = GroupExpr::Node::Semidirect;
      node->sd_k = random_expr(rng, depth - 1);
      node->sd_q = random_expr(rng, depth - 1);
      node->action = rng() % 2 ? "swap" : "inversion";
      return node;
    }
    case 4: {
      node->node = GroupExpr::Node::Selector;
      const char* selectors[] = {"center", "derived", "socle", "sylow",
                                 "genlist"};
      node->selector = selectors[rng() % 5];
      if (node->selector == "sylow") {
        const int primes[] = {2, 3, 5};
        node->sel_args.push_back(primes[rng() % 3]);
      } else if (node->selector == "genlist") {
        int count = static_cast<int>(rng() % 3);
        for (int i = 0; i < count; ++i)
          node->sel_args.push_back(static_cast<int>(rng() % 6));
      }
      node->operand = random_expr(rng, depth - 1);
      return node;
    }
    default: {
      node->node = GroupExpr::Node::Atom;
      switch (rng() % 7) {
        case 0:
          node->atom = "C";
          node->args = {1 + static_cast<int>(rng() % 8)};
          break;
        case 1:
          node->atom = "D";
          node->args = {4 + 2 * static_cast<int>(rng() % 4)};
          break;
        case 2:
          node->atom = "Q";
          node->args = {8};
          break;
        case 3:
          node->atom = "S";
          node->args = {1 + static_cast<int>(rng() % 4)};
          break;
        case 4:
          node->atom = "A";
          node->args = {1 + static_cast<int>(rng() % 4)};
          break;
        case 5:
          node->atom = "SL";
          node->args = {2, 3};
          break;
        default:
          node->atom = "F";
          node->args = {21};
          break;
      }
      return node;
    }
  }
}

} // namespace

TEST_CASE("atoms and products evaluate") {
  CHECK(evaluate_group("C(1)")->order() == 1);
  CHECK(evaluate_group("C(12)")->order() == 12);
  CHECK(evaluate_group("D(8) x C(2)")->order() == 16);
  CHECK(evaluate_group("Q(8)")->order() == 8);
  CHECK(evaluate_group("SL(2,3)")->order() == 24);
  CHECK(evaluate_group("F(21)")->order() == 21);
  CHECK(evaluate_group("S(4) x C(2)")->order() == 48);
}

TEST_CASE("parse shapes and precedence") {
  auto product = parse("D(8) x C(2)");
  CHECK(product->node == GroupExpr::Node::Product);

  // selector binds tighter than product
  auto mixed = parse("center of D(8) x C(2)");
  REQUIRE(mixed->node == GroupExpr::Node::Product);
  CHECK(mixed->left->node == GroupExpr::Node::Selector);

  // x is left-associative
  auto triple = parse("C(2) x C(3) x C(5)");
  REQUIRE(triple->node == GroupExpr::Node::Product);
  CHECK(triple->left->node == GroupExpr::Node::Product);

  // parentheses override
  auto grouped = parse("C(2) x (C(3) x C(5))");
  REQUIRE(grouped->node == GroupExpr::Node::Product);
  CHECK(grouped->right->node == GroupExpr::Node::Product);
}

TEST_CASE("wreath and semidirect") {
  auto w = evaluate_group("C(3) wr C(2)");
  CHECK(w->order() == 18);
  auto sd = evaluate_group("sd(C(3) x C(3), C(2), swap)");
  CHECK(sd->order() == 18);
  CHECK(order_statistics(w) == order_statistics(sd));
  auto s3_like = evaluate_group("sd(C(3), C(2), inversion)");
  CHECK(order_statistics(s3_like) ==
        std::map<int, int>{{1, 1}, {2, 3}, {3, 2}});
  CHECK_THROWS_AS(evaluate_group("sd(C(3), C(2), frobnicate)"), Error);
  CHECK_THROWS_AS(evaluate_group("sd(C(5), C(2), swap)"), Error);
  CHECK_THROWS_AS(evaluate_group("C(3) wr C(3)"), Error);
}

TEST_CASE("selectors") {
  auto sylow = evaluate(*parse("sylow(2) of S(4)"));
  REQUIRE(sylow.is_subgroup());
  CHECK(sylow.sub->size() == 8);

  auto center = evaluate(*parse("center of Q(8)"));
  REQUIRE(center.is_subgroup());
  CHECK(center.sub->size() == 2);

  auto derived = evaluate(*parse("derived of S(4)"));
  CHECK(derived.sub->size() == 12);

  auto socle = evaluate(*parse("socle of S(4)"));
  CHECK(socle.sub->size() == 4);

  auto gen = evaluate(*parse("genlist([1]) of S(3)"));
  CHECK(gen.sub->size() == 2);

  // selectors refine groups, not subgroup values
  CHECK_THROWS_AS(evaluate(*parse("center of center of Q(8)")), Error);
  // products need group operands
  CHECK_THROWS_AS(evaluate(*parse("center of Q(8) x C(2)")), Error);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse("C(2) x\n  D(7)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("even") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("D(7)"), ParseError);
  CHECK_THROWS_AS(parse("C("), ParseError);
  CHECK_THROWS_AS(parse("X(3)"), ParseError);
  CHECK_THROWS_AS(parse("Q(16)"), ParseError);
  CHECK_THROWS_AS(parse("SL(2,5)"), ParseError);
  CHECK_THROWS_AS(parse("C(2) C(3)"), ParseError);
  CHECK_THROWS_AS(parse("sylow(2) of"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("parse of render is the identity on 100 random expressions") {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 100; ++trial) {
    auto expr = random_expr(rng, 3);
    std::string text = render(*expr);
    auto back = parse(text);
    CHECK(*back == *expr);
    CHECK(render(*back) == text);
  }
}

TEST_CASE("selector application helper") {
  auto s3 = evaluate_group("S(3)");
  CHECK(apply_selector_text("genlist([3])", s3).size() == 3);
  CHECK(apply_selector_text("center", s3).size() == 1);
  CHECK(apply_selector_text("sylow(3)", s3).size() == 3);
  CHECK_THROWS_AS(apply_selector_text("C(3)", s3), ParseError);
  CHECK_THROWS_AS(apply_selector_text("genlist([99])", s3), Error);
}

TEST_CASE("subgroup selector round trip") {
  auto s4 = evaluate_group("S(4)");
  auto p = sylow_subgroup(s4, 2);
  std::string selector = subgroup_to_selector(p);
  Subgroup back = apply_selector_text(selector, s4);
  CHECK(back == p);
}

TEST_CASE("order cap at evaluation") {
  CHECK_THROWS_AS(evaluate_group("C(500) x C(500)"), Error);
}
