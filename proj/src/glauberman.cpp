#include "charlab/glauberman.hpp"

#include <algorithm>

#include "charlab/clifford.hpp"

namespace charlab {

CoprimeAction make_coprime_action(GroupPtr ambient, const Subgroup& K,
                                  const Subgroup& Q, long p) {
  if (K.parent().get() != ambient.get() || Q.parent().get() != ambient.get())
    throw Error("coprime action: subgroups of a different ambient group");
  if (!is_prime(p)) throw HypothesisError("coprime action: p must be prime");
  if (!K.is_normal_in_parent())
    throw HypothesisError("coprime action: K is not normal");
  if (K.size() % p == 0)
    throw HypothesisError("coprime action: p divides |K|");
  if (p_part(Q.size(), p) != Q.size())
    throw HypothesisError("coprime action: Q is not a p-group");

  CoprimeAction action;
  action.ambient = std::move(ambient);
  action.K = K;
  action.Q = Q;
  action.p = p;
  action.C = centralizer(K, Q);
  action.K_emb = as_group(K);
  action.C_emb = as_group(action.C);
  action.C_in_K = pull_back(action.K_emb, action.C);
  return action;
}

std::vector<int> invariant_characters(const CoprimeAction& action) {
  const auto& table = character_table(action.K_emb.sub);
  std::vector<int> all(table.num_rows());
  for (int i = 0; i < table.num_rows(); ++i) all[i] = i;
  return invariant_rows(action.K_emb, all, action.Q);
}

int glauberman_correspondent(const CoprimeAction& action, int theta_row) {
  const auto& k_table = character_table(action.K_emb.sub);
  if (theta_row < 0 || theta_row >= k_table.num_rows())
    throw Error("glauberman_correspondent: row out of range");
  const ClassFunction& theta = k_table.rows[theta_row];
  {
    auto inv = invariant_rows(action.K_emb, {theta_row}, action.Q);
    if (inv.empty())
      throw HypothesisError("glauberman_correspondent: theta is not Q-invariant");
  }
  Embedding c_local = as_group(action.C_in_K);
  ClassFunction restricted = restrict_to(theta, c_local);
  const auto& c_table = character_table(action.C_emb.sub);

  int correspondent = -1;
  for (int row = 0; row < c_table.num_rows(); ++row) {
    ClassFunction phi = transport(c_table.rows[row], c_local.sub);
    long mult = inner_product_int(restricted, phi);
    if (mult < 0)
      throw Error("glauberman_correspondent: negative multiplicity");
    if (mult % action.p != 0) {
      if (correspondent >= 0)
        throw CheckFailure(
            "glauberman_correspondent: several constituents with multiplicity "
            "coprime to p");
      correspondent = row;
    }
  }
  if (correspondent < 0)
    throw CheckFailure(
        "glauberman_correspondent: no constituent with multiplicity coprime "
        "to p");
  return correspondent;
}

GlaubermanAudit correspondence_audit(const CoprimeAction& action) {
  GlaubermanAudit audit;
  audit.invariants = invariant_characters(action);
  for (int row : audit.invariants)
    audit.correspondents.push_back(glauberman_correspondent(action, row));

  const auto& c_table = character_table(action.C_emb.sub);
  std::vector<int> sorted = audit.correspondents;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw CheckFailure("glauberman audit: correspondence is not injective");
  if (static_cast<int>(sorted.size()) != c_table.num_rows())
    throw CheckFailure("glauberman audit: |Irr_Q(K)| != |Irr(C)|");
  audit.bijective = true;

  // equivariance under B = N_ambient(Q); B normalizes K and C
  const auto& k_table = character_table(action.K_emb.sub);
  Subgroup b = normalizer(action.ambient, action.Q);
  for (int bb : b.elements()) {
    for (std::size_t i = 0; i < audit.invariants.size(); ++i) {
      ClassFunction theta_conj =
          conjugate_by(k_table.rows[audit.invariants[i]], action.K_emb, bb);
      int conj_row = k_table.find_row(theta_conj);
      if (conj_row < 0)
        throw CheckFailure("glauberman audit: conjugate left the table");
      auto it = std::find(audit.invariants.begin(), audit.invariants.end(),
                          conj_row);
      if (it == audit.invariants.end())
        throw CheckFailure(
            "glauberman audit: conjugate of an invariant character is not "
            "invariant");
      int conj_correspondent =
          audit.correspondents[it - audit.invariants.begin()];
      ClassFunction star_conj = conjugate_by(
          c_table.rows[audit.correspondents[i]], action.C_emb, bb);
      int star_conj_row = c_table.find_row(star_conj);
      if (star_conj_row != conj_correspondent)
        throw CheckFailure("glauberman audit: (theta^b)* != (theta*)^b");
    }
  }
  audit.equivariant = true;

  // stabilizers agree element for element
  for (std::size_t i = 0; i < audit.invariants.size(); ++i) {
    Subgroup b_theta = stabilizer_of(k_table.rows[audit.invariants[i]],
                                     action.K_emb, b);
    Subgroup b_star = stabilizer_of(c_table.rows[audit.correspondents[i]],
                                    action.C_emb, b);
    if (!(b_theta == b_star))
      throw CheckFailure("glauberman audit: B_theta != B_theta*");
  }
  audit.stabilizers_match = true;
  return audit;
}

} // namespace charlab
