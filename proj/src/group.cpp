#include "charlab/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>

namespace charlab {

int order_cap() {
  static int cap = [] {
    if (const char* env = std::getenv("CHARLAB_ORDER_CAP")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 2000;
  }();
  return cap;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long p_part(long n, long p) {
  long part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

GroupPtr FiniteGroup::from_table(std::string name, int order,
                                 std::vector<int> mul) {
  if (order < 1) throw Error("group order must be positive");
  if (order > order_cap())
    throw Error("group order " + std::to_string(order) + " exceeds cap " +
                std::to_string(order_cap()));
  if (mul.size() != static_cast<std::size_t>(order) * order)
    throw Error("multiplication table has wrong size");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->name_ = std::move(name);
  g->n_ = order;
  g->mul_ = std::move(mul);
  const int n = order;
  auto at = [&](int a, int b) { return g->mul_[static_cast<std::size_t>(a) * n + b]; };

  for (int v : g->mul_)
    if (v < 0 || v >= n) throw Error("multiplication table entry out of range");
  for (int a = 0; a < n; ++a)
    if (at(0, a) != a || at(a, 0) != a)
      throw Error("element 0 is not a two-sided identity");

  g->inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (at(a, b) == 0 && at(b, a) == 0) {
        g->inv_[a] = b;
        break;
      }
    }
    if (g->inv_[a] < 0)
      throw Error("element " + std::to_string(a) + " has no inverse");
  }

  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            throw Error("multiplication table is not associative");
  } else {
    std::mt19937 rng(0x1a2b3c4dU);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 100000; ++t) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (at(at(a, b), c) != at(a, at(b, c)))
        throw Error("multiplication table is not associative");
    }
  }

  g->elem_order_.assign(n, 0);
  long expo = 1;
  for (int a = 0; a < n; ++a) {
    int x = a, ord = 1;
    while (x != 0) {
      x = at(x, a);
      ++ord;
    }
    g->elem_order_[a] = ord;
    expo = std::lcm(expo, static_cast<long>(ord));
  }
  g->exponent_ = static_cast<int>(expo);

  g->abelian_ = true;
  for (int a = 0; a < n && g->abelian_; ++a)
    for (int b = a + 1; b < n; ++b)
      if (at(a, b) != at(b, a)) {
        g->abelian_ = false;
        break;
      }

  // Raw classes by increasing minimal element, then canonical reorder.
  std::vector<int> raw_of(n, -1);
  std::vector<std::vector<int>> raw;
  for (int a = 0; a < n; ++a) {
    if (raw_of[a] >= 0) continue;
    std::vector<char> seen(n, 0);
    std::vector<int> cls;
    for (int x = 0; x < n; ++x) {
      int c = at(at(x, a), g->inv_[x]);
      if (!seen[c]) {
        seen[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    int id = static_cast<int>(raw.size());
    for (int c : cls) raw_of[c] = id;
    raw.push_back(std::move(cls));
  }
  std::vector<int> order_key(raw.size());
  std::iota(order_key.begin(), order_key.end(), 0);
  std::sort(order_key.begin(), order_key.end(), [&](int i, int j) {
    int oi = g->elem_order_[raw[i][0]], oj = g->elem_order_[raw[j][0]];
    if (oi != oj) return oi < oj;
    if (raw[i].size() != raw[j].size()) return raw[i].size() < raw[j].size();
    return raw[i][0] < raw[j][0];
  });
  g->classes_.members.resize(raw.size());
  g->classes_.rep.resize(raw.size());
  g->classes_.of.assign(n, -1);
  for (std::size_t k = 0; k < order_key.size(); ++k) {
    g->classes_.members[k] = std::move(raw[order_key[k]]);
    g->classes_.rep[k] = g->classes_.members[k][0];
    for (int c : g->classes_.members[k]) g->classes_.of[c] = static_cast<int>(k);
  }

  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(n));
  for (int v : g->mul_) mix(static_cast<std::uint64_t>(v));
  g->fingerprint_ = h;

  return g;
}

int FiniteGroup::power(int g, long k) const {
  int ord = elem_order_[g];
  k %= ord;
  if (k < 0) k += ord;
  int result = 0;
  int base = g;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements)
    : parent_(std::move(parent)), elems_(std::move(elements)) {
  const int n = parent_->order();
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  mask_.assign(n, 0);
  for (int e : elems_) {
    if (e < 0 || e >= n) throw Error("subgroup element index out of range");
    mask_[e] = 1;
  }
  if (elems_.empty() || elems_[0] != 0)
    throw Error("subgroup must contain the identity");
  for (int a : elems_) {
    if (!mask_[parent_->inv(a)]) throw Error("subgroup not closed under inverses");
    for (int b : elems_)
      if (!mask_[parent_->mul(a, b)])
        throw Error("subgroup not closed under multiplication");
  }
  if (parent_->order() % size() != 0)
    throw Error("subgroup order does not divide group order"); // unreachable
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  return Subgroup(std::move(parent), {0});
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<int> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::generated(GroupPtr parent, const std::vector<int>& gens) {
  const int n = parent->order();
  for (int g : gens)
    if (g < 0 || g >= n)
      throw Error("generator index " + std::to_string(g) + " out of range");
  std::vector<char> mask(n, 0);
  std::vector<int> frontier{0};
  mask[0] = 1;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    int x = frontier[i];
    for (int g : gens) {
      int y = parent->mul(x, g);
      if (!mask[y]) {
        mask[y] = 1;
        frontier.push_back(y);
      }
      y = parent->mul(x, parent->inv(g));
      if (!mask[y]) {
        mask[y] = 1;
        frontier.push_back(y);
      }
    }
  }
  std::vector<int> elems;
  for (int x = 0; x < n; ++x)
    if (mask[x]) elems.push_back(x);
  return Subgroup(std::move(parent), std::move(elems));
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
  for (int e : other.elems_)
    if (!mask_[e]) return false;
  return true;
}

std::vector<int> Subgroup::generating_set() const {
  std::vector<int> gens;
  std::vector<char> have(parent_->order(), 0);
  have[0] = 1;
  int covered = 1;
  for (int e : elems_) {
    if (have[e]) continue;
    gens.push_back(e);
    // re-close
    Subgroup s = generated(parent_, gens);
    for (int x : s.elements()) have[x] = 1;
    covered = s.size();
    if (covered == size()) break;
  }
  return gens;
}

bool Subgroup::is_normal_in(const Subgroup& overgroup) const {
  for (int a : overgroup.elements())
    for (int x : elems_)
      if (!mask_[parent_->conj(x, a)]) return false;
  return true;
}

bool Subgroup::is_normal_in_parent() const {
  for (int a = 0; a < parent_->order(); ++a)
    for (int x : elems_)
      if (!mask_[parent_->conj(x, a)]) return false;
  return true;
}

Embedding as_group(const Subgroup& s) {
  const auto& parent = s.parent();
  const auto& elems = s.elements();
  const int m = s.size();
  std::vector<int> from(parent->order(), -1);
  for (int i = 0; i < m; ++i) from[elems[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i) * m + j] =
          from[parent->mul(elems[i], elems[j])];
  Embedding e;
  e.parent = parent;
  e.to_parent = elems;
  e.from_parent = std::move(from);
  e.sub = FiniteGroup::from_table(parent->name() + "<" + std::to_string(m) + ">",
                                  m, std::move(table));
  return e;
}

Embedding identity_embedding(GroupPtr g) {
  Embedding e;
  e.sub = g;
  e.parent = g;
  e.to_parent.resize(g->order());
  std::iota(e.to_parent.begin(), e.to_parent.end(), 0);
  e.from_parent = e.to_parent;
  return e;
}

Subgroup pull_back(const Embedding& e, const Subgroup& s) {
  if (s.parent().get() != e.parent.get())
    throw Error("pull_back: subgroup has a different parent");
  std::vector<int> local;
  for (int x : s.elements()) {
    int l = e.from_parent[x];
    if (l < 0) throw Error("pull_back: subgroup not contained in image");
    local.push_back(l);
  }
  return Subgroup(e.sub, std::move(local));
}

Subgroup push_forward(const Embedding& e, const Subgroup& s) {
  if (s.parent().get() != e.sub.get())
    throw Error("push_forward: subgroup lives on a different group");
  std::vector<int> up;
  for (int x : s.elements()) up.push_back(e.to_parent[x]);
  return Subgroup(e.parent, std::move(up));
}

Quotient quotient(GroupPtr g, const Subgroup& normal) {
  if (normal.parent().get() != g.get())
    throw Error("quotient: subgroup of a different group");
  if (!normal.is_normal_in_parent())
    throw HypothesisError("quotient: subgroup is not normal");
  const int n = g->order();
  std::vector<int> coset(n, -1);
  std::vector<int> section;
  for (int x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    int id = static_cast<int>(section.size());
    section.push_back(x);
    for (int m : normal.elements()) coset[g->mul(x, m)] = id;
  }
  const int q = static_cast<int>(section.size());
  std::vector<int> table(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[static_cast<std::size_t>(i) * q + j] =
          coset[g->mul(section[i], section[j])];
  Quotient result;
  result.parent = g;
  result.group = FiniteGroup::from_table(
      g->name() + "/" + std::to_string(normal.size()), q, std::move(table));
  result.project = std::move(coset);
  result.section = std::move(section);
  // projection is a homomorphism with the right kernel
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (result.project[g->mul(x, y)] !=
          result.group->mul(result.project[x], result.project[y]))
        throw Error("quotient projection is not a homomorphism");
  for (int x = 0; x < n; ++x)
    if ((result.project[x] == 0) != normal.contains(x))
      throw Error("quotient kernel mismatch");
  return result;
}

Subgroup subgroup_generated(GroupPtr g, const std::vector<int>& gens) {
  return Subgroup::generated(std::move(g), gens);
}

Subgroup centralizer(const Subgroup& within, const Subgroup& of) {
  if (!within.same_parent(of)) throw Error("centralizer: parent mismatch");
  const auto& g = within.parent();
  std::vector<int> elems;
  for (int x : within.elements()) {
    bool ok = true;
    for (int y : of.elements())
      if (g->mul(x, y) != g->mul(y, x)) {
        ok = false;
        break;
      }
    if (ok) elems.push_back(x);
  }
  return Subgroup(g, std::move(elems));
}

Subgroup centralizer(const Subgroup& within, int element) {
  const auto& g = within.parent();
  std::vector<int> elems;
  for (int x : within.elements())
    if (g->mul(x, element) == g->mul(element, x)) elems.push_back(x);
  return Subgroup(g, std::move(elems));
}

Subgroup centralizer(GroupPtr g, int element) {
  return centralizer(Subgroup::whole(std::move(g)), element);
}

Subgroup normalizer(const Subgroup& within, const Subgroup& of) {
  if (!within.same_parent(of)) throw Error("normalizer: parent mismatch");
  const auto& g = within.parent();
  std::vector<int> elems;
  for (int x : within.elements()) {
    bool ok = true;
    for (int y : of.elements())
      if (!of.contains(g->conj(y, x))) {
        ok = false;
        break;
      }
    if (ok) elems.push_back(x);
  }
  return Subgroup(g, std::move(elems));
}

Subgroup normalizer(GroupPtr g, const Subgroup& of) {
  return normalizer(Subgroup::whole(std::move(g)), of);
}

Subgroup sylow_in(const Subgroup& within, long p) {
  if (!is_prime(p)) throw HypothesisError("sylow: " + std::to_string(p) + " is not prime");
  const auto& g = within.parent();
  long target = p_part(within.size(), p);
  if (target == 1) return Subgroup::trivial(g);

  auto is_p_element = [&](int x) {
    int o = g->element_order(x);
    while (o % p == 0) o = static_cast<int>(o / p);
    return o == 1 && x != 0;
  };

  int seed = -1;
  for (int x : within.elements())
    if (is_p_element(x)) {
      seed = x;
      break;
    }
  if (seed < 0) throw Error("sylow: no p-element found"); // unreachable (Cauchy)

  std::vector<int> gens{seed};
  Subgroup current = Subgroup::generated(g, gens);
  while (current.size() < target) {
    Subgroup norm = normalizer(within, current);
    int next = -1;
    for (int x : norm.elements()) {
      if (current.contains(x) || !is_p_element(x)) continue;
      next = x;
      break;
    }
    if (next < 0) throw Error("sylow: growth stalled"); // unreachable
    gens.push_back(next);
    current = Subgroup::generated(g, gens);
  }
  if (current.size() != target) throw Error("sylow: overgrew the p-part");
  return current;
}

Subgroup sylow_subgroup(GroupPtr g, long p) {
  return sylow_in(Subgroup::whole(std::move(g)), p);
}

Subgroup product_subgroup(const Subgroup& s, const Subgroup& t) {
  if (!s.same_parent(t)) throw Error("product_subgroup: parent mismatch");
  const auto& g = s.parent();
  std::vector<char> mask(g->order(), 0);
  std::vector<int> elems;
  for (int a : s.elements())
    for (int b : t.elements()) {
      int x = g->mul(a, b);
      if (!mask[x]) {
        mask[x] = 1;
        elems.push_back(x);
      }
    }
  return Subgroup(g, std::move(elems)); // constructor verifies closure
}

Subgroup intersect_subgroups(const Subgroup& s, const Subgroup& t) {
  if (!s.same_parent(t)) throw Error("intersect_subgroups: parent mismatch");
  std::vector<int> elems;
  for (int a : s.elements())
    if (t.contains(a)) elems.push_back(a);
  return Subgroup(s.parent(), std::move(elems));
}

Subgroup conjugate_subgroup(const Subgroup& s, int a) {
  const auto& g = s.parent();
  std::vector<int> elems;
  for (int x : s.elements()) elems.push_back(g->conj(x, a));
  return Subgroup(g, std::move(elems));
}

std::vector<Subgroup> normal_subgroups(GroupPtr g) {
  const auto& cls = g->classes();
  std::set<std::vector<char>> seen;
  std::vector<Subgroup> found;
  std::vector<Subgroup> frontier{Subgroup::trivial(g)};
  seen.insert(frontier[0].mask());
  found.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& base : frontier) {
      for (int k = 0; k < cls.count(); ++k) {
        if (base.contains(cls.rep[k])) continue;
        std::vector<int> gens = base.generating_set();
        gens.push_back(cls.rep[k]);
        for (int extra : cls.members[k]) gens.push_back(extra);
        Subgroup closure = Subgroup::generated(g, gens);
        if (seen.insert(closure.mask()).second) {
          found.push_back(closure);
          next.push_back(closure);
        }
      }
    }
    frontier = std::move(next);
    if (found.size() > 5000) throw Error("normal subgroup lattice too large");
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  });
  return found;
}

std::vector<Subgroup> minimal_normal_subgroups(GroupPtr g, const Subgroup& above) {
  if (above.parent().get() != g.get())
    throw Error("minimal_normal_subgroups: subgroup of a different group");
  if (!above.is_normal_in_parent())
    throw HypothesisError("minimal_normal_subgroups: base subgroup not normal");
  const auto& cls = g->classes();
  std::set<std::vector<char>> seen;
  std::vector<Subgroup> candidates;
  for (int k = 0; k < cls.count(); ++k) {
    if (above.contains(cls.rep[k])) continue;
    std::vector<int> gens = above.generating_set();
    for (int x : cls.members[k]) gens.push_back(x);
    Subgroup closure = Subgroup::generated(g, gens);
    if (seen.insert(closure.mask()).second) candidates.push_back(closure);
  }
  std::vector<Subgroup> minimal;
  for (const auto& m : candidates) {
    bool is_min = true;
    for (const auto& other : candidates)
      if (other.size() < m.size() && m.contains_subgroup(other)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(m);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const Subgroup& a, const Subgroup& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a.elements() < b.elements();
            });
  return minimal;
}

bool is_p_solvable(GroupPtr g, long p) {
  if (!is_prime(p)) throw HypothesisError("is_p_solvable: p must be prime");
  GroupPtr current = std::move(g);
  while (current->order() > 1) {
    auto mins = minimal_normal_subgroups(current, Subgroup::trivial(current));
    const Subgroup& m = mins.front();
    long size = m.size();
    bool p_group = p_part(size, p) == size;
    bool p_prime_group = size % p != 0;
    if (!p_group && !p_prime_group) return false;
    current = quotient(current, m).group;
  }
  return true;
}

GroupPtr direct_product(GroupPtr g1, GroupPtr g2) {
  const int n1 = g1->order(), n2 = g2->order();
  if (static_cast<long>(n1) * n2 > order_cap())
    throw Error("direct product order exceeds cap");
  const int n = n1 * n2;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2) {
          int a = a1 * n2 + a2, b = b1 * n2 + b2;
          table[static_cast<std::size_t>(a) * n + b] =
              g1->mul(a1, b1) * n2 + g2->mul(a2, b2);
        }
  return FiniteGroup::from_table(g1->name() + " x " + g2->name(), n,
                                 std::move(table));
}

GroupPtr semidirect_product(GroupPtr k, GroupPtr q,
                            const std::vector<std::vector<int>>& action) {
  const int nk = k->order(), nq = q->order();
  if (static_cast<long>(nk) * nq > order_cap())
    throw Error("semidirect product order exceeds cap");
  if (static_cast<int>(action.size()) != nq)
    throw Error("semidirect action must have one permutation per Q element");
  for (const auto& perm : action) {
    if (static_cast<int>(perm.size()) != nk)
      throw Error("semidirect action permutation has wrong length");
    std::vector<char> hit(nk, 0);
    for (int v : perm) {
      if (v < 0 || v >= nk || hit[v])
        throw Error("semidirect action entry is not a permutation of K");
      hit[v] = 1;
    }
    for (int a = 0; a < nk; ++a)
      for (int b = 0; b < nk; ++b)
        if (perm[k->mul(a, b)] != k->mul(perm[a], perm[b]))
          throw Error("semidirect action is not an automorphism of K");
  }
  for (int a = 0; a < nk; ++a)
    if (action[0][a] != a)
      throw Error("semidirect action of the identity is not trivial");
  for (int q1 = 0; q1 < nq; ++q1)
    for (int q2 = 0; q2 < nq; ++q2)
      for (int a = 0; a < nk; ++a)
        if (action[q->mul(q1, q2)][a] != action[q1][action[q2][a]])
          throw Error("semidirect action is not a homomorphism");

  const int n = nk * nq;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int k1 = 0; k1 < nk; ++k1)
    for (int q1 = 0; q1 < nq; ++q1)
      for (int k2 = 0; k2 < nk; ++k2)
        for (int q2 = 0; q2 < nq; ++q2) {
          int a = k1 * nq + q1, b = k2 * nq + q2;
          table[static_cast<std::size_t>(a) * n + b] =
              k->mul(k1, action[q1][k2]) * nq + q->mul(q1, q2);
        }
  return FiniteGroup::from_table(
      "sd(" + k->name() + ", " + q->name() + ")", n, std::move(table));
}

GroupPtr wreath_c2(GroupPtr g) {
  GroupPtr base = direct_product(g, g);
  const int m = g->order();
  std::vector<int> c2_table{0, 1, 1, 0};
  GroupPtr c2 = FiniteGroup::from_table("C2", 2, std::move(c2_table));
  std::vector<std::vector<int>> action(2, std::vector<int>(m * m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      action[0][a * m + b] = a * m + b;
      action[1][a * m + b] = b * m + a;
    }
  auto result = semidirect_product(base, c2, action);
  return result;
}

} // namespace charlab
