#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charlab/clifford.hpp"
#include "charlab/constructions.hpp"
#include "charlab/dsl.hpp"
#include "charlab/glauberman.hpp"

using namespace charlab;

TEST_CASE("trivial Q gives the identity correspondence") {
  auto s3 = symmetric_group(3);
  auto a3 = Subgroup::generated(s3, {3});
  auto action = make_coprime_action(s3, a3, Subgroup::trivial(s3), 2);
  CHECK(action.C == a3);
  auto invariants = invariant_characters(action);
  CHECK(invariants.size() == 3);
  for (int row : invariants)
    CHECK(glauberman_correspondent(action, row) == row);
  auto audit = correspondence_audit(action);
  CHECK(audit.bijective);
  CHECK(audit.equivariant);
  CHECK(audit.stabilizers_match);
}

TEST_CASE("C2 inverting C3: only the trivial character is invariant") {
  auto s3 = symmetric_group(3);
  auto a3 = Subgroup::generated(s3, {3});
  auto q = Subgroup::generated(s3, {1});
  auto action = make_coprime_action(s3, a3, q, 2);
  CHECK(action.C.size() == 1);
  auto invariants = invariant_characters(action);
  REQUIRE(invariants.size() == 1);
  CHECK(character_table(action.K_emb.sub).rows[invariants[0]].degree() == 1);
  CHECK(glauberman_correspondent(action, invariants[0]) == 0);
  CHECK_NOTHROW(correspondence_audit(action));
}

TEST_CASE("coordinate swap on C3 x C3 inside the wreath product") {
  auto w = evaluate_group("C(3) wr C(2)");
  // base indices: (k, q) -> 2k + q over k = 3a + b
  auto k = Subgroup::generated(w, {6, 2});
  REQUIRE(k.size() == 9);
  auto q = sylow_subgroup(w, 2);
  REQUIRE(q.size() == 2);
  auto action = make_coprime_action(w, k, q, 2);
  CHECK(action.C.size() == 3);  // the diagonal C3

  auto invariants = invariant_characters(action);
  REQUIRE(invariants.size() == 3);  // alpha x alpha for alpha in Irr(C3)
  auto audit = correspondence_audit(action);
  CHECK(audit.bijective);
  CHECK(audit.equivariant);
  CHECK(audit.stabilizers_match);

  // theta = alpha x alpha restricts to alpha^2 on the diagonal with
  // multiplicity one, so theta* is the full restriction
  const auto& kt = character_table(action.K_emb.sub);
  const auto& ct = character_table(action.C_emb.sub);
  Embedding c_local = as_group(action.C_in_K);
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    ClassFunction restricted = restrict_to(kt.rows[invariants[i]], c_local);
    CHECK(transport(restricted, action.C_emb.sub) ==
          ct.rows[audit.correspondents[i]]);
  }
}

TEST_CASE("C2 inverting only the C3 factor of C3 x C5") {
  auto a = evaluate_group("sd(C(3), C(2), inversion) x C(5)");
  REQUIRE(a->order() == 30);
  // K = C3 x C5 generated by the C3 part (10) and the C5 part (1)
  auto k = Subgroup::generated(a, {10, 1});
  REQUIRE(k.size() == 15);
  auto q = Subgroup::generated(a, {5});  // the inverting involution
  REQUIRE(q.size() == 2);
  auto action = make_coprime_action(a, k, q, 2);
  CHECK(action.C.size() == 5);  // C = C5

  auto invariants = invariant_characters(action);
  REQUIRE(invariants.size() == 5);  // 1 x beta for beta in Irr(C5)
  auto audit = correspondence_audit(action);
  CHECK(audit.bijective);

  // each correspondent is the restriction itself (theta = 1 x beta)
  const auto& kt = character_table(action.K_emb.sub);
  const auto& ct = character_table(action.C_emb.sub);
  Embedding c_local = as_group(action.C_in_K);
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    ClassFunction restricted = restrict_to(kt.rows[invariants[i]], c_local);
    CHECK(transport(restricted, action.C_emb.sub) ==
          ct.rows[audit.correspondents[i]]);
  }
}

TEST_CASE("multiplicity pattern: coprime constituent unique, others divisible by p") {
  // Q8 acted on by the C3 of SL(2,3); p = 3
  auto g = sl_2_3();
  auto k = sylow_subgroup(g, 2);
  REQUIRE(k.size() == 8);
  auto q = sylow_subgroup(g, 3);
  auto action = make_coprime_action(g, k, q, 3);
  CHECK(action.C.size() == 2);  // the center of Q8

  auto invariants = invariant_characters(action);
  REQUIRE(invariants.size() == 2);  // trivial and the 2-dimensional
  auto audit = correspondence_audit(action);
  CHECK(audit.bijective);
  CHECK(audit.stabilizers_match);

  const auto& kt = character_table(action.K_emb.sub);
  const auto& ct = character_table(action.C_emb.sub);
  Embedding c_local = as_group(action.C_in_K);
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    ClassFunction restricted = restrict_to(kt.rows[invariants[i]], c_local);
    long coprime_constituents = 0;
    for (int row = 0; row < ct.num_rows(); ++row) {
      long mult = inner_product_int(
          restricted, transport(ct.rows[row], c_local.sub));
      if (mult % 3 != 0) {
        ++coprime_constituents;
        CHECK(row == audit.correspondents[i]);
      }
    }
    CHECK(coprime_constituents == 1);
  }
}

TEST_CASE("hypothesis validation") {
  auto s3 = symmetric_group(3);
  auto a3 = Subgroup::generated(s3, {3});
  // p divides |K|
  CHECK_THROWS_AS(make_coprime_action(s3, a3, Subgroup::trivial(s3), 3),
                  HypothesisError);
  // Q not a p-group
  CHECK_THROWS_AS(make_coprime_action(s3, a3, a3, 2), HypothesisError);
  // K not normal
  auto c2 = Subgroup::generated(s3, {1});
  CHECK_THROWS_AS(make_coprime_action(s3, c2, Subgroup::trivial(s3), 3),
                  HypothesisError);
  // non-invariant theta rejected by the correspondent
  auto q = Subgroup::generated(s3, {1});
  auto action = make_coprime_action(s3, a3, q, 2);
  const auto& kt = character_table(action.K_emb.sub);
  for (int row = 0; row < kt.num_rows(); ++row) {
    bool invariant = !invariant_rows(action.K_emb, {row}, q).empty();
    if (!invariant)
      CHECK_THROWS_AS(glauberman_correspondent(action, row), HypothesisError);
  }
}
