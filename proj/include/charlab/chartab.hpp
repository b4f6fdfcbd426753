#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "charlab/cyclo.hpp"
#include "charlab/group.hpp"

namespace charlab {

/// A class function: one exact value per conjugacy class, in the group's
/// canonical class order.
struct ClassFunction {
  GroupPtr group;
  std::vector<Cyclotomic> values;

  const Cyclotomic& at_class(int c) const { return values[c]; }
  const Cyclotomic& at_element(int g) const {
    return values[group->classes().of[g]];
  }
  /// For characters: the degree as a machine integer.
  long degree() const;
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);
};

/// The full exact character table.  Rows are the irreducible characters in
/// canonical order: sorted by (degree, total-order key sequence of values).
struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> rows;
  std::vector<int> class_reps;
  std::vector<long> centralizer_orders;

  int num_rows() const { return static_cast<int>(rows.size()); }
  long degree(int row) const { return rows[row].degree(); }
  /// Index of the row equal to cf, or -1.
  int find_row(const ClassFunction& cf) const;
};

/// Seed for the randomized eigenspace splitting inside the table
/// computation.  The resulting table is canonical and does not depend on it.
void set_chartab_seed(std::uint64_t seed);
std::uint64_t chartab_seed();

/// Computes the table without consulting the cache.
CharacterTable compute_character_table(const GroupPtr& g);

/// Cached table lookup keyed by the group's structural fingerprint.
/// Thread-safe; concurrent requests for one group compute it once.
const CharacterTable& character_table(const GroupPtr& g);
void clear_character_table_cache();

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);
/// inner_product as an exact machine integer (errors if not an integer).
long inner_product_int(const ClassFunction& a, const ClassFunction& b);

bool is_irreducible_character(const ClassFunction& chi);

/// chi lives on e.parent; result lives on e.sub.
ClassFunction restrict_to(const ClassFunction& chi, const Embedding& e);
/// theta lives on e.sub; result is the induced class function on e.parent.
ClassFunction induce_from(const ClassFunction& theta, const Embedding& e);

ClassFunction product(const ClassFunction& a, const ClassFunction& b);

/// The permutation of the classes of e.sub given by conjugation with parent
/// element a (which must normalize the image): class k maps to the class of
/// a rep_k a^{-1}.
std::vector<int> class_action(const Embedding& e, int a);
/// chi^a with chi^a(g) = chi(a g a^{-1}).
ClassFunction conjugate_by(const ClassFunction& chi, const Embedding& e, int a);
/// Stabilizer {a in `acting` : chi^a = chi}; `acting` must normalize the
/// image of e.
Subgroup stabilizer_of(const ClassFunction& chi, const Embedding& e,
                       const Subgroup& acting);

/// beta lives on q.group; result is the lift through the projection.
ClassFunction lift_through(const Quotient& q, const ClassFunction& beta);

/// Order of det(chi) as a linear character, recovered exactly from the
/// eigenvalue multiplicities m_j = (1/n) sum_k chi(g^k) zeta_n^{-jk}.
long determinantal_order(const ClassFunction& chi);

/// Moves a class function onto a structurally identical group object.
ClassFunction transport(const ClassFunction& cf, const GroupPtr& target);

/// Deterministic JSON rendering (class data, centralizer orders, rows as
/// rendered cyclotomics).
std::string table_to_json(const CharacterTable& t, int indent = 2);
std::string table_to_markdown(const CharacterTable& t);

} // namespace charlab
