#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>

#include "charlab/constructions.hpp"
#include "charlab/group.hpp"

using namespace charlab;

namespace {

std::map<int, int> order_statistics(const GroupPtr& g) {
  std::map<int, int> stats;
  for (int x = 0; x < g->order(); ++x) ++stats[g->element_order(x)];
  return stats;
}

std::vector<std::size_t> class_sizes(const GroupPtr& g) {
  std::vector<std::size_t> sizes;
  for (const auto& c : g->classes().members) sizes.push_back(c.size());
  return sizes;
}

} // namespace

TEST_CASE("cyclic group basics") {
  auto c4 = cyclic_group(4);
  CHECK(c4->order() == 4);
  CHECK(c4->exponent() == 4);
  CHECK(c4->is_abelian());
  CHECK(class_sizes(c4) == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("subgroup_generated") {
  auto c4 = cyclic_group(4);
  CHECK(Subgroup::generated(c4, {}).size() == 1); // empty generating set

  auto s3 = symmetric_group(3);
  // lexicographic permutation 3 = [1,2,0], a 3-cycle
  CHECK(s3->element_order(3) == 3);
  CHECK(Subgroup::generated(s3, {3}).size() == 3);

  auto d8 = dihedral_group(8);
  // rotation r = 1, reflection s = 4
  CHECK(Subgroup::generated(d8, {1, 4}).size() == 8);

  CHECK_THROWS_AS(Subgroup::generated(c4, {7}), Error);
}

TEST_CASE("subgroup validation") {
  auto c4 = cyclic_group(4);
  CHECK_THROWS_AS(Subgroup(c4, {0, 1}), Error);     // not closed
  CHECK_THROWS_AS(Subgroup(c4, {1, 2, 3}), Error);  // missing identity
  CHECK(Subgroup(c4, {0, 2}).size() == 2);
}

TEST_CASE("conjugacy classes") {
  CHECK(class_sizes(cyclic_group(4)) == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(class_sizes(symmetric_group(3)) == std::vector<std::size_t>{1, 3, 2});
  CHECK(class_sizes(quaternion_group()) ==
        std::vector<std::size_t>{1, 1, 2, 2, 2});
  // classes partition the group and are closed under conjugation
  auto s4 = symmetric_group(4);
  const auto& cls = s4->classes();
  std::size_t total = 0;
  for (int k = 0; k < cls.count(); ++k) {
    total += cls.members[k].size();
    CHECK(s4->order() % cls.members[k].size() == 0);
    for (int x : cls.members[k])
      for (int a = 0; a < s4->order(); ++a)
        CHECK(cls.of[s4->conj(x, a)] == k);
  }
  CHECK(total == static_cast<std::size_t>(s4->order()));
}

TEST_CASE("canonical class order is deterministic") {
  auto q8 = quaternion_group();
  const auto& cls = q8->classes();
  // identity first, then by (element order, size, min element)
  CHECK(cls.rep[0] == 0);
  for (int k = 1; k < cls.count(); ++k) {
    int o1 = q8->element_order(cls.rep[k - 1]);
    int o2 = q8->element_order(cls.rep[k]);
    CHECK(o1 <= o2);
  }
}

TEST_CASE("centralizer and normalizer") {
  auto s4 = symmetric_group(4);
  auto v4_like = sylow_subgroup(s4, 2);
  CHECK(v4_like.size() == 8);
  // Sylow 2-subgroups of S4 are self-normalizing
  CHECK(normalizer(s4, v4_like) == v4_like);

  auto d8 = dihedral_group(8);
  auto center = centralizer(Subgroup::whole(d8), Subgroup::whole(d8));
  CHECK(center.size() == 2);
  CHECK(centralizer(Subgroup::whole(d8), center) == Subgroup::whole(d8));

  // normalizer of a normal subgroup is everything
  auto a4_elems = []() {
    auto s4 = symmetric_group(4);
    std::vector<int> elems;
    for (int x = 0; x < 24; ++x) elems.push_back(x);
    return elems;
  };
  (void)a4_elems;
  auto q8 = quaternion_group();
  Subgroup z(q8, {0, 2});
  CHECK(z.is_normal_in_parent());
  CHECK(normalizer(q8, z) == Subgroup::whole(q8));
}

TEST_CASE("sylow subgroups") {
  auto c6 = cyclic_group(6);
  CHECK(sylow_subgroup(c6, 3).size() == 3);
  CHECK(sylow_subgroup(symmetric_group(3), 5).size() == 1); // p does not divide

  auto s4 = symmetric_group(4);
  auto p = sylow_subgroup(s4, 2);
  CHECK(p.size() == 8);
  // isomorphic to D8 by order statistics
  auto emb = as_group(p);
  CHECK(order_statistics(emb.sub) == order_statistics(dihedral_group(8)));

  // p-part exact for several groups and primes
  for (const auto& g : {symmetric_group(4), quaternion_group(), sl_2_3(),
                        frobenius_21(), alternating_group(5)}) {
    for (long prime : {2L, 3L, 5L, 7L}) {
      if (g->order() % prime != 0) {
        CHECK(sylow_subgroup(g, prime).size() == 1);
      } else {
        CHECK(sylow_subgroup(g, prime).size() == p_part(g->order(), prime));
      }
    }
  }
  CHECK_THROWS_AS(sylow_subgroup(c6, 4), HypothesisError);
}

TEST_CASE("sylow is deterministic") {
  auto s4a = symmetric_group(4);
  auto s4b = symmetric_group(4);
  CHECK(sylow_subgroup(s4a, 2).elements() == sylow_subgroup(s4b, 2).elements());
}

TEST_CASE("quotients") {
  auto q8 = quaternion_group();
  Subgroup z(q8, {0, 2});
  auto q = quotient(q8, z);
  CHECK(q.group->order() == 4);
  // Q8 / Z(Q8) is the Klein group: every nonidentity element has order 2
  for (int x = 1; x < 4; ++x) CHECK(q.group->element_order(x) == 2);
  // section is a right inverse of the projection
  for (int x = 0; x < q.group->order(); ++x)
    CHECK(q.project[q.section[x]] == x);

  auto g = symmetric_group(3);
  auto full = quotient(g, Subgroup::whole(g));
  CHECK(full.group->order() == 1);
  auto triv = quotient(g, Subgroup::trivial(g));
  CHECK(triv.group->order() == 6);
  CHECK(FiniteGroup::same_structure(*triv.group, *g));

  Subgroup not_normal = Subgroup::generated(g, {1}); // a transposition
  CHECK_THROWS_AS(quotient(g, not_normal), HypothesisError);
}

TEST_CASE("minimal normal subgroups") {
  auto c6 = cyclic_group(6);
  auto mins = minimal_normal_subgroups(c6, Subgroup::trivial(c6));
  REQUIRE(mins.size() == 2);
  CHECK(mins[0].size() == 2);
  CHECK(mins[1].size() == 3);

  auto s4 = symmetric_group(4);
  auto s4_mins = minimal_normal_subgroups(s4, Subgroup::trivial(s4));
  REQUIRE(s4_mins.size() == 1);
  CHECK(s4_mins[0].size() == 4); // V4

  auto c2 = cyclic_group(2);
  auto c2_mins = minimal_normal_subgroups(c2, Subgroup::trivial(c2));
  REQUIRE(c2_mins.size() == 1);
  CHECK(c2_mins[0].size() == 2);

  // nothing lies strictly between `above` and a minimal subgroup
  for (const auto& m : s4_mins) {
    for (const auto& n : normal_subgroups(s4)) {
      if (n.size() > 1 && n.size() < m.size()) CHECK(!m.contains_subgroup(n));
    }
  }

  // above a nontrivial normal subgroup: V4 < A4 is the next chief step in S4
  auto above_v4 = minimal_normal_subgroups(s4, s4_mins[0]);
  REQUIRE(above_v4.size() == 1);
  CHECK(above_v4[0].size() == 12);
  CHECK_THROWS_AS(
      minimal_normal_subgroups(s4, Subgroup::generated(s4, {1})),
      HypothesisError);
}

TEST_CASE("normal subgroup enumeration") {
  auto s4 = symmetric_group(4);
  auto all = normal_subgroups(s4);
  std::vector<int> sizes;
  for (const auto& s : all) sizes.push_back(s.size());
  CHECK(sizes == std::vector<int>{1, 4, 12, 24});
  for (const auto& s : all) CHECK(s.is_normal_in_parent());
}

TEST_CASE("p-solvability") {
  CHECK(is_p_solvable(quaternion_group(), 2));      // p-group
  CHECK(is_p_solvable(dihedral_group(16), 2));      // p-group
  CHECK(is_p_solvable(symmetric_group(4), 2));      // chief series V4, A4/V4, S4/A4
  CHECK(is_p_solvable(symmetric_group(4), 3));
  CHECK(!is_p_solvable(alternating_group(5), 2));   // simple of mixed order
  CHECK(!is_p_solvable(alternating_group(5), 3));
  CHECK(is_p_solvable(sl_2_3(), 3));
  CHECK(is_p_solvable(frobenius_21(), 7));
}

TEST_CASE("direct products") {
  auto klein = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(klein->order() == 4);
  for (int x = 1; x < 4; ++x) CHECK(klein->element_order(x) == 2);
  CHECK(order_statistics(direct_product(dihedral_group(8), cyclic_group(2))) ==
        std::map<int, int>{{1, 1}, {2, 11}, {4, 4}});
}

TEST_CASE("semidirect products") {
  auto c3 = cyclic_group(3);
  auto c2 = cyclic_group(2);
  std::vector<std::vector<int>> inversion{{0, 1, 2}, {0, 2, 1}};
  auto s3_like = semidirect_product(c3, c2, inversion);
  CHECK(order_statistics(s3_like) == order_statistics(symmetric_group(3)));

  // coordinate swap on C3 x C3 gives the wreath product of order 18
  auto w = wreath_c2(cyclic_group(3));
  CHECK(w->order() == 18);
  CHECK(order_statistics(w) == std::map<int, int>{{1, 1}, {2, 3}, {3, 8}, {6, 6}});

  // not an automorphism: constant map
  std::vector<std::vector<int>> broken{{0, 1, 2}, {0, 0, 0}};
  CHECK_THROWS_AS(semidirect_product(c3, c2, broken), Error);
  // automorphisms but not a homomorphism from Q: inversion indexed wrong
  std::vector<std::vector<int>> not_hom{{0, 2, 1}, {0, 1, 2}};
  CHECK_THROWS_AS(semidirect_product(c3, c2, not_hom), Error);
}

TEST_CASE("named constructions") {
  CHECK(sl_2_3()->order() == 24);
  CHECK(order_statistics(sl_2_3()) ==
        std::map<int, int>{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}});
  CHECK(frobenius_21()->order() == 21);
  CHECK(order_statistics(frobenius_21()) == std::map<int, int>{{1, 1}, {3, 14}, {7, 6}});
  CHECK(alternating_group(4)->order() == 12);
  CHECK(dihedral_group(12)->order() == 12);
  CHECK_THROWS_AS(dihedral_group(7), Error);
}

TEST_CASE("as_group and pull_back round trip") {
  auto s4 = symmetric_group(4);
  auto p = sylow_subgroup(s4, 2);
  auto emb = as_group(p);
  CHECK(emb.sub->order() == p.size());
  for (int i = 0; i < emb.sub->order(); ++i) {
    CHECK(emb.from_parent[emb.to_parent[i]] == i);
    for (int j = 0; j < emb.sub->order(); ++j)
      CHECK(emb.to_parent[emb.sub->mul(i, j)] ==
            s4->mul(emb.to_parent[i], emb.to_parent[j]));
  }
  auto z = centralizer(p, p);
  auto z_local = pull_back(emb, z);
  CHECK(z_local.size() == z.size());
  CHECK(push_forward(emb, z_local) == z);
}

TEST_CASE("order cap is enforced") {
  CHECK_THROWS_AS(symmetric_group(8), Error);
  CHECK_THROWS_AS(cyclic_group(5000), Error);
}

TEST_CASE("construction above the exhaustive-associativity threshold") {
  // orders past 256 use sampled associativity; everything else is exact
  auto g = cyclic_group(500);
  CHECK(g->order() == 500);
  CHECK(g->exponent() == 500);
  CHECK(g->classes().count() == 500);
  auto h = dihedral_group(520);
  CHECK(h->element_order(1) == 260);
  CHECK(h->classes().count() == 133);  // (260 - 2)/2 + 2 + 2 rotation/reflection classes
}
