#pragma once

#include <map>
#include <optional>
#include <vector>

#include "charlab/chartab.hpp"
#include "charlab/group.hpp"

namespace charlab {

/// The set Irr(G|theta) of irreducible characters of G lying over theta,
/// together with the inertia groups of theta, inside an ambient group A with
/// N <= G and both normal in A.
struct OverTheta {
  GroupPtr ambient;
  Subgroup G, N;
  Embedding G_emb;           // G as a standalone group
  Embedding N_emb;           // N as a standalone group
  ClassFunction theta;       // on N_emb.sub
  std::vector<int> members;  // row indices into character_table(G_emb.sub)
  Subgroup inertia_in_A;     // A_theta
  Subgroup inertia_in_G;     // G_theta = G intersect A_theta
};

OverTheta irr_over(GroupPtr ambient, const Subgroup& G, const Subgroup& N,
                   const ClassFunction& theta);

/// Row indices in `rows` whose character is fixed by conjugation with every
/// element of `acting` (which must normalize the image of emb).
std::vector<int> invariant_rows(const Embedding& emb,
                                const std::vector<int>& rows,
                                const Subgroup& acting);
/// Rows whose degree is coprime to p.
std::vector<int> p_prime_rows(const Embedding& emb, const std::vector<int>& rows,
                              long p);

/// |Irr_acting(G|theta)| with an optional p'-degree filter (p = 0 disables).
long count_invariant_over(const OverTheta& ot, const Subgroup& acting, long p = 0);

/// Number of orbits of `acting` on the given character rows.
long orbit_count(const Embedding& emb, const std::vector<int>& rows,
                 const Subgroup& acting);

/// All extensions of theta to U (characters of U restricting to theta).
struct ExtensionSet {
  Embedding U_emb;
  Subgroup N_in_U;           // inside U_emb.sub
  std::vector<int> rows;     // rows of character_table(U_emb.sub)
  std::vector<ClassFunction> list;
};
ExtensionSet extensions(GroupPtr ambient, const Subgroup& N, const Subgroup& U,
                        const ClassFunction& theta);

/// The unique extension with the same determinantal order as theta; requires
/// theta U-invariant and gcd(|U:N|, |N|) = 1.
ClassFunction canonical_extension(GroupPtr ambient, const Subgroup& N,
                                  const Subgroup& U, const ClassFunction& theta);

/// Verifies that beta -> eta * lift(beta) is a bijection
/// Irr(U/N) -> Irr(U|theta) and returns it as (quotient row, U row) pairs.
std::vector<std::pair<int, int>> gallagher_check(GroupPtr ambient,
                                                 const Subgroup& N,
                                                 const Subgroup& U,
                                                 const ClassFunction& theta,
                                                 const ClassFunction& eta);

/// Verifies the Clifford correspondence Irr(G_theta|theta) -> Irr(G|theta)
/// by induction, including equivariance under A_theta, and returns the pairs
/// (row of Irr(G_theta), row of Irr(G)).
std::vector<std::pair<int, int>> clifford_correspondence_check(
    GroupPtr ambient, const Subgroup& G, const Subgroup& N,
    const ClassFunction& theta);

struct GoodnessWitness {
  int extension_index;  // into the extension list of theta to N<a>
  int x;                // element of D with eta^x != eta
};

struct GoodnessCertificate {
  int element = -1;
  bool good = false;
  std::optional<GoodnessWitness> witness;
};

/// Memoizing theta-good tester for a fixed (A, N, theta) with theta
/// A-invariant.  Evaluates the definition (all extensions of theta to N<a>
/// are D-invariant for D/N = C_{A/N}(Na)) and cross-checks it against the
/// extension characterization (theta extends to N<a,x> for every x with
/// N<a,x>/N abelian); a disagreement is a hard error.
class GoodnessTester {
public:
  GoodnessTester(GroupPtr ambient, Subgroup N, ClassFunction theta);

  GoodnessCertificate test(int a);
  const Quotient& ambient_mod_N() const { return qA_; }
  const ExtensionSet& extensions_over(int a);

private:
  struct CosetVerdict {
    bool good;
    std::optional<GoodnessWitness> witness;
  };
  CosetVerdict evaluate_coset(int coset);

  GroupPtr ambient_;
  Subgroup N_;
  ClassFunction theta_;
  Embedding N_emb_;
  Quotient qA_;
  std::map<int, CosetVerdict> coset_memo_;
  std::map<std::vector<char>, ExtensionSet> extension_memo_;   // by U mask
  std::map<std::vector<char>, bool> characterization_memo_;    // by W mask (in A/N)
};

/// Classes of G/N consisting entirely of theta-good elements of A.
struct ThetaGoodClasses {
  Embedding G_emb;
  Quotient G_mod_N;               // quotient of G_emb.sub
  std::vector<int> good_classes;  // class indices of G_mod_N.group
  long good_count = 0;
  /// Number of good classes after fusing G/N-classes under A-conjugation;
  /// recorded alongside the literal count, not asserted equal.
  long a_fused_good_count = 0;
  std::vector<GoodnessCertificate> certificates;  // per element of G, ambient indices
};
ThetaGoodClasses theta_good_classes(GroupPtr ambient, const Subgroup& G,
                                    const Subgroup& N, const ClassFunction& theta);

/// Lemma check: chi(g) = 0 for every non-good g in A and every chi in
/// Irr(A|theta).  Throws CheckFailure on any nonzero value.
struct VanishingReport {
  std::vector<int> non_good_elements;
  std::vector<int> members;  // rows of Irr(A|theta)
  long pairs_checked = 0;
  long zero_pairs = 0;
};
VanishingReport vanishing_check(GroupPtr ambient, const Subgroup& N,
                                const ClassFunction& theta);

} // namespace charlab
