#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "charlab/errors.hpp"

namespace charlab {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Conjugacy-class partition in canonical order: classes sorted by
/// (element order of representative, class size, minimal element index).
/// The representative of a class is its minimal element.
struct Classes {
  std::vector<std::vector<int>> members;
  std::vector<int> of;   // element -> class index
  std::vector<int> rep;  // class -> minimal element
  int count() const { return static_cast<int>(members.size()); }
};

/// Effective construction-time order cap: CHARLAB_ORDER_CAP env override,
/// default 2000.
int order_cap();

/// A finite group as an explicit multiplication table.  Element 0 is the
/// identity.  Immutable after construction and safe to share across threads.
class FiniteGroup {
public:
  /// Validates and builds: entries in range, identity at 0, two-sided
  /// inverses, associativity (exhaustive up to order 256, sampled above),
  /// then caches element orders, the exponent and the class partition.
  static GroupPtr from_table(std::string name, int order, std::vector<int> mul);

  int order() const { return n_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  /// a g a^{-1}
  int conj(int g, int a) const { return mul(mul(a, g), inv_[a]); }
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inv_[a], inv_[b])); }
  int power(int g, long k) const;
  int element_order(int g) const { return elem_order_[g]; }
  int exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }
  const Classes& classes() const { return classes_; }
  const std::string& name() const { return name_; }
  /// FNV-1a over (order, mul table); used as a structural cache key.
  std::uint64_t fingerprint() const { return fingerprint_; }
  const std::vector<int>& table() const { return mul_; }

  /// True iff the two groups have identical multiplication tables (and hence
  /// identical cached class data).
  static bool same_structure(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && a.fingerprint_ == b.fingerprint_ && a.mul_ == b.mul_;
  }

private:
  FiniteGroup() = default;

  std::string name_;
  int n_ = 1;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> elem_order_;
  int exponent_ = 1;
  bool abelian_ = true;
  Classes classes_;
  std::uint64_t fingerprint_ = 0;
};

/// A subgroup of a fixed parent group, stored as a sorted element list plus
/// a membership bitmap.  Immutable.
class Subgroup {
public:
  /// Empty placeholder so that aggregates holding subgroups can be built
  /// before their fields are assigned; not a valid subgroup.
  Subgroup() = default;

  /// Validates closure under multiplication and inverses and membership of
  /// the identity.
  Subgroup(GroupPtr parent, std::vector<int> elements);

  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);
  /// Smallest subgroup containing the generators (orbit closure);
  /// deterministic element ordering.  Indices are range-checked.
  static Subgroup generated(GroupPtr parent, const std::vector<int>& gens);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elems_; }
  const std::vector<char>& mask() const { return mask_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool contains(int g) const { return mask_[g] != 0; }
  bool contains_subgroup(const Subgroup& other) const;
  bool same_parent(const Subgroup& other) const {
    return parent_.get() == other.parent_.get();
  }
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.same_parent(b) && a.mask_ == b.mask_;
  }
  /// Small deterministic generating set (greedy by element index).
  std::vector<int> generating_set() const;
  bool is_normal_in(const Subgroup& overgroup) const;
  bool is_normal_in_parent() const;

private:
  GroupPtr parent_;
  std::vector<int> elems_;
  std::vector<char> mask_;
};

/// A subgroup realized as a standalone group together with the index maps
/// into its parent.  Element i of `sub` is the i-th smallest parent element
/// of the subgroup, so identical element sets always produce structurally
/// identical groups.
struct Embedding {
  GroupPtr sub;
  GroupPtr parent;
  std::vector<int> to_parent;    // |sub|
  std::vector<int> from_parent;  // |parent|, -1 outside the subgroup
};

/// Quotient by a normal subgroup.  Coset 0 is the kernel; cosets are indexed
/// in increasing order of their minimal parent element, which `section`
/// returns.
struct Quotient {
  GroupPtr group;
  GroupPtr parent;
  std::vector<int> project;  // |parent| -> |group|
  std::vector<int> section;  // |group| -> minimal coset representative
};

Embedding as_group(const Subgroup& s);
Embedding identity_embedding(GroupPtr g);

/// Transports a subgroup of E.parent whose elements all lie in the image of
/// E into a subgroup of E.sub.
Subgroup pull_back(const Embedding& e, const Subgroup& s);
/// The reverse direction.
Subgroup push_forward(const Embedding& e, const Subgroup& s);

Quotient quotient(GroupPtr g, const Subgroup& normal);

Subgroup subgroup_generated(GroupPtr g, const std::vector<int>& gens);

/// Elements of `within` commuting with every element of `of`.
Subgroup centralizer(const Subgroup& within, const Subgroup& of);
Subgroup centralizer(const Subgroup& within, int element);
Subgroup centralizer(GroupPtr g, int element);
/// Elements of `within` normalizing `of`; contains `of` whenever
/// `of` <= `within`.
Subgroup normalizer(const Subgroup& within, const Subgroup& of);
Subgroup normalizer(GroupPtr g, const Subgroup& of);

/// A Sylow p-subgroup of `within`, grown greedily from the smallest
/// p-element and extended through normalizers; deterministic.
Subgroup sylow_in(const Subgroup& within, long p);
Subgroup sylow_subgroup(GroupPtr g, long p);

/// Product set S*T as a subgroup; throws if the product is not closed
/// (it always is when T normalizes S or S normalizes T).
Subgroup product_subgroup(const Subgroup& s, const Subgroup& t);
Subgroup intersect_subgroups(const Subgroup& s, const Subgroup& t);
Subgroup conjugate_subgroup(const Subgroup& s, int a);

/// All normal subgroups of g (unions of conjugacy classes closed under
/// multiplication), enumerated by closure BFS; deterministic order by
/// (size, elements).
std::vector<Subgroup> normal_subgroups(GroupPtr g);

/// Normal subgroups M minimal with above < M <= G, found via normal
/// closures of conjugacy classes outside `above`.
std::vector<Subgroup> minimal_normal_subgroups(GroupPtr g, const Subgroup& above);

/// Chief factors are each p-groups or p'-groups.
bool is_p_solvable(GroupPtr g, long p);

GroupPtr direct_product(GroupPtr g1, GroupPtr g2);

/// K x| Q for an action of Q on K given as one automorphism permutation per
/// Q element; the action map is verified to be a homomorphism into Aut(K).
/// Element (k, q) has index k*|Q| + q.
GroupPtr semidirect_product(GroupPtr k, GroupPtr q,
                            const std::vector<std::vector<int>>& action);

/// (G x G) x| C2 with coordinate swap.
GroupPtr wreath_c2(GroupPtr g);

bool is_prime(long p);
long p_part(long n, long p);

} // namespace charlab
