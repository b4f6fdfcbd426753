#pragma once

#include <vector>

#include "charlab/chartab.hpp"
#include "charlab/group.hpp"

namespace charlab {

/// A p-group Q acting coprimely on K inside an ambient group, with the
/// fixed-point subgroup C = C_K(Q).  Validated: K normal in the ambient
/// group, p prime not dividing |K|, Q a p-group, so gcd(|K|,|Q|) = 1,
/// K intersect Q = 1 and KQ is a subgroup.
struct CoprimeAction {
  GroupPtr ambient;
  Subgroup K, Q, C;
  long p = 0;
  Embedding K_emb;
  Embedding C_emb;
  Subgroup C_in_K;  // inside K_emb.sub
};

CoprimeAction make_coprime_action(GroupPtr ambient, const Subgroup& K,
                                  const Subgroup& Q, long p);

/// Rows of Irr(K) fixed by conjugation with every element of Q.
std::vector<int> invariant_characters(const CoprimeAction& action);

/// The Glauberman correspondent theta* of a Q-invariant theta: the unique
/// irreducible constituent of theta|_C with multiplicity coprime to p.
/// Returns a row index into Irr(C); hard error if zero or several qualify
/// or if another constituent has multiplicity not divisible by p.
int glauberman_correspondent(const CoprimeAction& action, int theta_row);

struct GlaubermanAudit {
  std::vector<int> invariants;        // rows of Irr(K)
  std::vector<int> correspondents;    // parallel rows of Irr(C)
  bool bijective = false;
  bool equivariant = false;           // under N_ambient(Q)
  bool stabilizers_match = false;     // B_theta = B_theta* elementwise
};

/// Verifies bijectivity Irr_Q(K) -> Irr(C), the multiplicity pattern, and
/// equivariance (theta^b)* = (theta*)^b for every b in N_ambient(Q).
/// Throws CheckFailure on any violation.
GlaubermanAudit correspondence_audit(const CoprimeAction& action);

} // namespace charlab
