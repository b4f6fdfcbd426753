#include "charlab/clifford.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace charlab {

namespace {

void require_irreducible(const ClassFunction& theta, const char* who) {
  if (!is_irreducible_character(theta))
    throw HypothesisError(std::string(who) + ": theta is not irreducible");
  if (theta.degree() < 1)
    throw HypothesisError(std::string(who) + ": theta is not a character");
}

void require_normal(const Subgroup& s, const char* name, const char* who) {
  if (!s.is_normal_in_parent())
    throw HypothesisError(std::string(who) + ": " + name +
                          " is not normal in the ambient group");
}

} // namespace

std::vector<int> invariant_rows(const Embedding& emb,
                                const std::vector<int>& rows,
                                const Subgroup& acting) {
  const auto& table = character_table(emb.sub);
  std::vector<std::vector<int>> perms;
  perms.reserve(acting.size());
  for (int a : acting.elements()) perms.push_back(class_action(emb, a));
  std::vector<int> out;
  for (int row : rows) {
    const auto& values = table.rows[row].values;
    bool fixed = true;
    for (const auto& perm : perms) {
      for (std::size_t k = 0; k < values.size() && fixed; ++k)
        if (perm[k] != static_cast<int>(k) && !(values[perm[k]] == values[k]))
          fixed = false;
      if (!fixed) break;
    }
    if (fixed) out.push_back(row);
  }
  return out;
}

std::vector<int> p_prime_rows(const Embedding& emb, const std::vector<int>& rows,
                              long p) {
  const auto& table = character_table(emb.sub);
  std::vector<int> out;
  for (int row : rows)
    if (table.rows[row].degree() % p != 0) out.push_back(row);
  return out;
}

OverTheta irr_over(GroupPtr ambient, const Subgroup& G, const Subgroup& N,
                   const ClassFunction& theta) {
  if (G.parent().get() != ambient.get() || N.parent().get() != ambient.get())
    throw Error("irr_over: subgroups of a different ambient group");
  if (!G.contains_subgroup(N))
    throw HypothesisError("irr_over: N is not contained in G");
  require_normal(G, "G", "irr_over");
  require_normal(N, "N", "irr_over");
  require_irreducible(theta, "irr_over");

  OverTheta ot;
  ot.ambient = ambient;
  ot.G = G;
  ot.N = N;
  ot.G_emb = as_group(G);
  ot.N_emb = as_group(N);
  ot.theta = transport(theta, ot.N_emb.sub);

  const auto& table = character_table(ot.G_emb.sub);
  Subgroup n_in_g = pull_back(ot.G_emb, N);
  Embedding n_in_g_emb = as_group(n_in_g);
  ClassFunction theta_local = transport(theta, n_in_g_emb.sub);
  for (int row = 0; row < table.num_rows(); ++row) {
    if (inner_product_int(restrict_to(table.rows[row], n_in_g_emb),
                          theta_local) != 0)
      ot.members.push_back(row);
  }
  if (ot.members.empty())
    throw CheckFailure("irr_over: Irr(G|theta) is empty"); // cannot happen

  ot.inertia_in_A = stabilizer_of(ot.theta, ot.N_emb, Subgroup::whole(ambient));
  ot.inertia_in_G = intersect_subgroups(G, ot.inertia_in_A);
  return ot;
}

long count_invariant_over(const OverTheta& ot, const Subgroup& acting, long p) {
  std::vector<int> rows = ot.members;
  if (p > 0) rows = p_prime_rows(ot.G_emb, rows, p);
  rows = invariant_rows(ot.G_emb, rows, acting);
  return static_cast<long>(rows.size());
}

long orbit_count(const Embedding& emb, const std::vector<int>& rows,
                 const Subgroup& acting) {
  const auto& table = character_table(emb.sub);
  std::set<int> remaining(rows.begin(), rows.end());
  long orbits = 0;
  while (!remaining.empty()) {
    ++orbits;
    std::vector<int> frontier{*remaining.begin()};
    remaining.erase(remaining.begin());
    while (!frontier.empty()) {
      int cur = frontier.back();
      frontier.pop_back();
      for (int x : acting.elements()) {
        int image = table.find_row(conjugate_by(table.rows[cur], emb, x));
        if (image < 0)
          throw Error("orbit_count: conjugate left the character table");
        auto it = remaining.find(image);
        if (it != remaining.end()) {
          remaining.erase(it);
          frontier.push_back(image);
        }
      }
    }
  }
  return orbits;
}

ExtensionSet extensions(GroupPtr ambient, const Subgroup& N, const Subgroup& U,
                        const ClassFunction& theta) {
  if (N.parent().get() != ambient.get() || U.parent().get() != ambient.get())
    throw Error("extensions: subgroups of a different ambient group");
  if (!U.contains_subgroup(N))
    throw HypothesisError("extensions: N is not contained in U");
  if (!N.is_normal_in(U))
    throw HypothesisError("extensions: N is not normal in U");
  require_irreducible(theta, "extensions");

  ExtensionSet out;
  out.U_emb = as_group(U);
  out.N_in_U = pull_back(out.U_emb, N);
  Embedding n_local = as_group(out.N_in_U);
  ClassFunction theta_local = transport(theta, n_local.sub);
  long target_degree = theta_local.degree();
  const auto& table = character_table(out.U_emb.sub);
  for (int row = 0; row < table.num_rows(); ++row) {
    if (table.rows[row].degree() != target_degree) continue;
    if (restrict_to(table.rows[row], n_local) == theta_local) {
      out.rows.push_back(row);
      out.list.push_back(table.rows[row]);
    }
  }
  return out;
}

ClassFunction canonical_extension(GroupPtr ambient, const Subgroup& N,
                                  const Subgroup& U, const ClassFunction& theta) {
  Embedding n_emb = as_group(N);
  ClassFunction theta_on_n = transport(theta, n_emb.sub);
  if (stabilizer_of(theta_on_n, n_emb, U).size() != U.size())
    throw HypothesisError("canonical_extension: theta is not U-invariant");
  long index = U.size() / N.size();
  if (std::gcd(index, static_cast<long>(N.size())) != 1)
    throw HypothesisError(
        "canonical_extension: |U:N| is not coprime to |N|");
  long theta_det = determinantal_order(theta_on_n);
  auto exts = extensions(ambient, N, U, theta);
  std::vector<int> matching;
  for (std::size_t i = 0; i < exts.list.size(); ++i)
    if (determinantal_order(exts.list[i]) == theta_det)
      matching.push_back(static_cast<int>(i));
  if (matching.size() != 1)
    throw CheckFailure("canonical_extension: found " +
                       std::to_string(matching.size()) +
                       " extensions with determinantal order " +
                       std::to_string(theta_det));
  return exts.list[matching[0]];
}

std::vector<std::pair<int, int>> gallagher_check(GroupPtr ambient,
                                                 const Subgroup& N,
                                                 const Subgroup& U,
                                                 const ClassFunction& theta,
                                                 const ClassFunction& eta) {
  auto exts = extensions(ambient, N, U, theta);
  Embedding n_local = as_group(exts.N_in_U);
  ClassFunction theta_local = transport(theta, n_local.sub);
  ClassFunction eta_local = transport(eta, exts.U_emb.sub);
  if (!(restrict_to(eta_local, n_local) == theta_local) ||
      eta_local.degree() != theta_local.degree())
    throw HypothesisError("gallagher_check: eta is not an extension of theta");

  const auto& table = character_table(exts.U_emb.sub);
  Quotient q = quotient(exts.U_emb.sub, exts.N_in_U);
  const auto& quotient_table = character_table(q.group);

  // members of Irr(U|theta), computed independently of the products
  std::vector<int> over;
  for (int row = 0; row < table.num_rows(); ++row)
    if (inner_product_int(restrict_to(table.rows[row], n_local), theta_local) !=
        0)
      over.push_back(row);

  std::vector<std::pair<int, int>> pairs;
  std::vector<int> image;
  for (int brow = 0; brow < quotient_table.num_rows(); ++brow) {
    ClassFunction lifted = lift_through(q, quotient_table.rows[brow]);
    ClassFunction prod = product(eta_local, lifted);
    if (!is_irreducible_character(prod))
      throw CheckFailure("gallagher_check: eta * beta is reducible");
    int target = table.find_row(prod);
    if (target < 0)
      throw CheckFailure("gallagher_check: product is not a table row");
    image.push_back(target);
    pairs.emplace_back(brow, target);
  }
  std::vector<int> sorted_image = image;
  std::sort(sorted_image.begin(), sorted_image.end());
  if (std::adjacent_find(sorted_image.begin(), sorted_image.end()) !=
      sorted_image.end())
    throw CheckFailure("gallagher_check: map is not injective");
  if (sorted_image != over)
    throw CheckFailure("gallagher_check: image is not Irr(U|theta)");
  return pairs;
}

std::vector<std::pair<int, int>> clifford_correspondence_check(
    GroupPtr ambient, const Subgroup& G, const Subgroup& N,
    const ClassFunction& theta) {
  OverTheta ot = irr_over(ambient, G, N, theta);
  const Subgroup& g_theta = ot.inertia_in_G;

  Embedding gt_emb = as_group(g_theta);  // parent = ambient, for conjugation
  Subgroup gt_in_g = pull_back(ot.G_emb, g_theta);
  Embedding gt_local = as_group(gt_in_g);  // parent = G_emb.sub, for induction

  // members of Irr(G_theta | theta)
  Subgroup n_in_gt = pull_back(gt_local, pull_back(ot.G_emb, N));
  Embedding n_in_gt_emb = as_group(n_in_gt);
  ClassFunction theta_local = transport(ot.theta, n_in_gt_emb.sub);
  const auto& t_gt = character_table(gt_local.sub);
  std::vector<int> over_theta;
  for (int row = 0; row < t_gt.num_rows(); ++row)
    if (inner_product_int(restrict_to(t_gt.rows[row], n_in_gt_emb),
                          theta_local) != 0)
      over_theta.push_back(row);

  const auto& t_g = character_table(ot.G_emb.sub);
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> image;
  for (int row : over_theta) {
    ClassFunction induced = induce_from(t_gt.rows[row], gt_local);
    if (!is_irreducible_character(induced))
      throw CheckFailure("clifford correspondence: induction is reducible");
    int target = t_g.find_row(induced);
    if (target < 0 ||
        std::find(ot.members.begin(), ot.members.end(), target) ==
            ot.members.end())
      throw CheckFailure("clifford correspondence: induction left Irr(G|theta)");
    image.push_back(target);
    pairs.emplace_back(row, target);
  }
  std::vector<int> sorted_image = image;
  std::sort(sorted_image.begin(), sorted_image.end());
  if (std::adjacent_find(sorted_image.begin(), sorted_image.end()) !=
      sorted_image.end())
    throw CheckFailure("clifford correspondence: induction is not injective");
  if (sorted_image != ot.members)
    throw CheckFailure("clifford correspondence: induction is not onto");

  // equivariance under A_theta
  for (int a : ot.inertia_in_A.elements()) {
    for (const auto& [row, target] : pairs) {
      ClassFunction psi_amb = transport(t_gt.rows[row], gt_emb.sub);
      ClassFunction psi_conj = conjugate_by(psi_amb, gt_emb, a);
      ClassFunction induced_conj =
          induce_from(transport(psi_conj, gt_local.sub), gt_local);
      ClassFunction conj_induced = conjugate_by(t_g.rows[target], ot.G_emb, a);
      if (!(induced_conj == conj_induced))
        throw CheckFailure(
            "clifford correspondence: not equivariant under A_theta");
    }
  }
  return pairs;
}

// ---- theta-good machinery --------------------------------------------------

GoodnessTester::GoodnessTester(GroupPtr ambient, Subgroup N, ClassFunction theta)
    : ambient_(std::move(ambient)),
      N_(std::move(N)),
      theta_(std::move(theta)),
      N_emb_(as_group(N_)),
      qA_(quotient(ambient_, N_)) {
  require_normal(N_, "N", "theta-good test");
  require_irreducible(theta_, "theta-good test");
  theta_ = transport(theta_, N_emb_.sub);
  if (stabilizer_of(theta_, N_emb_, Subgroup::whole(ambient_)).size() !=
      ambient_->order())
    throw HypothesisError("theta-good test: theta is not invariant in the ambient group");
}

const ExtensionSet& GoodnessTester::extensions_over(int a) {
  int coset = qA_.project[a];
  // U = preimage of <Na>
  std::vector<char> quotient_mask(qA_.group->order(), 0);
  {
    int x = 0;
    do {
      quotient_mask[x] = 1;
      x = qA_.group->mul(x, coset);
    } while (x != 0);
  }
  std::vector<int> u_elems;
  for (int x = 0; x < ambient_->order(); ++x)
    if (quotient_mask[qA_.project[x]]) u_elems.push_back(x);
  Subgroup u(ambient_, std::move(u_elems));
  auto it = extension_memo_.find(u.mask());
  if (it == extension_memo_.end())
    it = extension_memo_.emplace(u.mask(), extensions(ambient_, N_, u, theta_))
             .first;
  return it->second;
}

GoodnessTester::CosetVerdict GoodnessTester::evaluate_coset(int coset) {
  auto memo = coset_memo_.find(coset);
  if (memo != coset_memo_.end()) return memo->second;

  int a = qA_.section[coset];
  const ExtensionSet& exts = extensions_over(a);

  // D = full preimage of C_{A/N}(Na)
  Subgroup centralizer_q = centralizer(qA_.group, coset);
  std::vector<int> d_elems;
  for (int x = 0; x < ambient_->order(); ++x)
    if (centralizer_q.contains(qA_.project[x])) d_elems.push_back(x);
  Subgroup d(ambient_, std::move(d_elems));

  CosetVerdict verdict{true, std::nullopt};
  for (std::size_t i = 0; i < exts.list.size() && verdict.good; ++i) {
    for (int x : d.elements()) {
      if (!(conjugate_by(exts.list[i], exts.U_emb, x) == exts.list[i])) {
        verdict.good = false;
        verdict.witness = GoodnessWitness{static_cast<int>(i), x};
        break;
      }
    }
  }
  if (verdict.witness) {
    // witness re-verification through a fresh embedding
    const auto& w = *verdict.witness;
    Embedding fresh = as_group(Subgroup(ambient_, std::vector<int>(
                                                      exts.U_emb.to_parent)));
    ClassFunction eta = transport(exts.list[w.extension_index], fresh.sub);
    if (conjugate_by(eta, fresh, w.x) == eta)
      throw CheckFailure("theta-good: recorded witness failed recomputation");
  }

  // cross-check: theta extends to N<a, x> for every x with N<a,x>/N abelian,
  // equivalently for every Nx centralizing Na in A/N
  bool characterization = true;
  for (int xq : centralizer_q.elements()) {
    Subgroup w_quotient = Subgroup::generated(qA_.group, {coset, xq});
    auto cit = characterization_memo_.find(w_quotient.mask());
    if (cit == characterization_memo_.end()) {
      std::vector<int> v_elems;
      for (int y = 0; y < ambient_->order(); ++y)
        if (w_quotient.contains(qA_.project[y])) v_elems.push_back(y);
      Subgroup v(ambient_, std::move(v_elems));
      bool extends = !extensions(ambient_, N_, v, theta_).list.empty();
      cit = characterization_memo_.emplace(w_quotient.mask(), extends).first;
    }
    if (!cit->second) {
      characterization = false;
      break;
    }
  }
  if (characterization != verdict.good)
    throw CheckFailure(
        "theta-good: definition and extension characterization disagree");

  coset_memo_.emplace(coset, verdict);
  return verdict;
}

GoodnessCertificate GoodnessTester::test(int a) {
  if (a < 0 || a >= ambient_->order())
    throw Error("theta-good test: element index out of range");
  CosetVerdict v = evaluate_coset(qA_.project[a]);
  GoodnessCertificate cert;
  cert.element = a;
  cert.good = v.good;
  cert.witness = v.witness;
  return cert;
}

ThetaGoodClasses theta_good_classes(GroupPtr ambient, const Subgroup& G,
                                    const Subgroup& N,
                                    const ClassFunction& theta) {
  if (!G.contains_subgroup(N))
    throw HypothesisError("theta_good_classes: N is not contained in G");
  require_normal(G, "G", "theta_good_classes");
  require_normal(N, "N", "theta_good_classes");
  GoodnessTester tester(ambient, N, theta);

  ThetaGoodClasses out;
  out.G_emb = as_group(G);
  out.G_mod_N = quotient(out.G_emb.sub, pull_back(out.G_emb, N));
  const Quotient& q = out.G_mod_N;
  const auto& classes = q.group->classes();

  out.certificates.reserve(G.size());
  std::vector<char> has_good(classes.count(), 0);
  std::vector<char> has_bad(classes.count(), 0);
  for (int local = 0; local < out.G_emb.sub->order(); ++local) {
    int a = out.G_emb.to_parent[local];
    GoodnessCertificate cert = tester.test(a);
    int cls = classes.of[q.project[local]];
    (cert.good ? has_good : has_bad)[cls] = 1;
    out.certificates.push_back(std::move(cert));
  }
  // goodness is a coset/class invariant; a mixed class would be an engine bug
  std::vector<char> class_good(classes.count(), 0);
  for (int k = 0; k < classes.count(); ++k) {
    if (has_good[k] && has_bad[k])
      throw CheckFailure("theta_good_classes: class with mixed goodness");
    class_good[k] = has_good[k];
    if (class_good[k]) out.good_classes.push_back(k);
  }
  out.good_count = static_cast<long>(out.good_classes.size());

  // A-conjugation fuses classes of G/N; record the fused good count
  std::vector<int> fused(classes.count());
  for (int k = 0; k < classes.count(); ++k) fused[k] = k;
  std::function<int(int)> find = [&](int x) {
    while (fused[x] != x) x = fused[x] = fused[fused[x]];
    return x;
  };
  for (int a = 0; a < ambient->order(); ++a) {
    for (int k = 0; k < classes.count(); ++k) {
      int rep_local = q.section[classes.rep[k]];
      int conj_parent = ambient->conj(out.G_emb.to_parent[rep_local], a);
      int conj_local = out.G_emb.from_parent[conj_parent];
      if (conj_local < 0)
        throw CheckFailure("theta_good_classes: G is not normal"); // unreachable
      int target = classes.of[q.project[conj_local]];
      int ra = find(k), rb = find(target);
      if (ra != rb) fused[ra] = rb;
    }
  }
  std::set<int> fused_good_roots;
  std::set<int> fused_bad_roots;
  for (int k = 0; k < classes.count(); ++k) {
    int root = find(k);
    (class_good[k] ? fused_good_roots : fused_bad_roots).insert(root);
  }
  // goodness is constant on A-conjugacy orbits, so no fused orbit may mix
  for (int root : fused_good_roots)
    if (fused_bad_roots.count(root))
      throw CheckFailure(
          "theta_good_classes: conjugate classes with different goodness");
  out.a_fused_good_count = static_cast<long>(fused_good_roots.size());
  return out;
}

VanishingReport vanishing_check(GroupPtr ambient, const Subgroup& N,
                                const ClassFunction& theta) {
  GoodnessTester tester(ambient, N, theta);
  OverTheta ot =
      irr_over(ambient, Subgroup::whole(ambient), N, theta);
  const auto& table = character_table(ot.G_emb.sub);
  const auto& classes = ot.G_emb.sub->classes();

  VanishingReport report;
  report.members = ot.members;
  for (int a = 0; a < ambient->order(); ++a)
    if (!tester.test(a).good) report.non_good_elements.push_back(a);

  for (int g : report.non_good_elements) {
    int cls = classes.of[ot.G_emb.from_parent[g]];
    for (int row : ot.members) {
      ++report.pairs_checked;
      if (table.rows[row].values[cls].is_zero())
        ++report.zero_pairs;
      else
        throw CheckFailure("vanishing_check: chi(g) != 0 at a non-good element");
    }
  }

  // dual direction, valid when N is central and theta faithful: restriction
  // of cf(A|theta) to good class representatives is then an isomorphism, so
  // at every good element some character over theta is nonzero.  (Not true
  // in general: over the invariant 3-dimensional character of A4 both
  // characters of S4 vanish at the good 3-cycles.)
  bool central = centralizer(Subgroup::whole(ambient), N).size() ==
                 ambient->order();
  bool faithful = true;
  {
    const ClassFunction& th = ot.theta;
    const auto& n_classes = th.group->classes();
    for (int k = 1; k < n_classes.count() && faithful; ++k)
      if (th.values[k] == th.values[0]) faithful = false;
  }
  if (central && faithful) {
    std::set<int> non_good(report.non_good_elements.begin(),
                           report.non_good_elements.end());
    for (int g = 0; g < ambient->order(); ++g) {
      if (non_good.count(g)) continue;
      int cls = classes.of[ot.G_emb.from_parent[g]];
      bool hit = false;
      for (int row : ot.members)
        if (!table.rows[row].values[cls].is_zero()) {
          hit = true;
          break;
        }
      if (!hit)
        throw CheckFailure(
            "vanishing_check: every character over theta vanishes at a good "
            "element of a central-faithful configuration");
    }
  }
  return report;
}

} // namespace charlab
