#include "charlab/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <ctime>
#include <functional>
#include <set>
#include <thread>

#include "charlab/clifford.hpp"
#include "charlab/dsl.hpp"
#include "charlab/glauberman.hpp"

namespace charlab {

const std::vector<Kind>& all_kinds() {
  static const std::vector<Kind> kinds{
      Kind::GALLAGHER_1_2, Kind::THM_1_3, Kind::COR_1_4,
      Kind::LEM_1_1,       Kind::OW_2_1,  Kind::COR_2_2,
      Kind::THM_2_4,       Kind::THM_3_1, Kind::COUNTEREXAMPLE_1};
  return kinds;
}

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::GALLAGHER_1_2: return "GALLAGHER_1_2";
    case Kind::THM_1_3: return "THM_1_3";
    case Kind::COR_1_4: return "COR_1_4";
    case Kind::LEM_1_1: return "LEM_1_1";
    case Kind::OW_2_1: return "OW_2_1";
    case Kind::COR_2_2: return "COR_2_2";
    case Kind::THM_2_4: return "THM_2_4";
    case Kind::THM_3_1: return "THM_3_1";
    case Kind::COUNTEREXAMPLE_1: return "COUNTEREXAMPLE_1";
  }
  throw Error("unknown kind");
}

Kind kind_from_name(const std::string& name) {
  for (Kind k : all_kinds())
    if (kind_name(k) == name) return k;
  throw ParseError("unknown check kind '" + name + "'");
}

// ---- instance plumbing ----------------------------------------------------

const Subgroup& McKayInstance::sub(const std::string& key) const {
  auto it = subgroups.find(key);
  if (it == subgroups.end())
    throw HypothesisError("instance is missing subgroup '" + key + "'");
  return it->second;
}

ClassFunction McKayInstance::character(const std::string& key) const {
  auto it = characters.find(key);
  if (it == characters.end())
    throw HypothesisError("instance is missing character '" + key + "'");
  const CharRef& ref = it->second;
  Embedding emb = as_group(sub(ref.group));
  const auto& table = character_table(emb.sub);
  if (ref.row < 0 || ref.row >= table.num_rows())
    throw HypothesisError("character '" + key + "' row out of range");
  const ClassFunction& chi = table.rows[ref.row];
  if (chi.degree() != ref.degree)
    throw HypothesisError("character '" + key +
                          "' degree fingerprint mismatch (canonical order "
                          "drift)");
  if (determinantal_order(chi) != ref.det_order)
    throw HypothesisError("character '" + key +
                          "' determinantal order fingerprint mismatch");
  return chi;
}

std::string McKayInstance::label() const {
  std::string out = kind_name(kind) + " over " + ambient_expr;
  std::string parts;
  for (const auto& [key, s] : subgroups) {
    if (!parts.empty()) parts += ", ";
    parts += key + ":" + std::to_string(s.size());
  }
  if (p != 0) parts += (parts.empty() ? "" : ", ") + std::string("p=") +
                       std::to_string(p);
  if (!parts.empty()) out += " [" + parts + "]";
  return out;
}

nlohmann::json instance_to_json(const McKayInstance& inst) {
  nlohmann::json doc;
  doc["kind"] = kind_name(inst.kind);
  doc["ambient"] = inst.ambient_expr;
  if (inst.p != 0) doc["p"] = inst.p;
  nlohmann::json subs = nlohmann::json::object();
  for (const auto& [key, s] : inst.subgroups)
    subs[key] = subgroup_to_selector(s);
  doc["subgroups"] = std::move(subs);
  nlohmann::json chars = nlohmann::json::object();
  for (const auto& [key, ref] : inst.characters)
    chars[key] = {{"group", ref.group},
                  {"row", ref.row},
                  {"degree", ref.degree},
                  {"det_order", ref.det_order}};
  doc["characters"] = std::move(chars);
  return doc;
}

McKayInstance instance_from_json(const nlohmann::json& doc) {
  McKayInstance inst;
  inst.kind = kind_from_name(doc.at("kind").get<std::string>());
  inst.ambient_expr = doc.at("ambient").get<std::string>();
  inst.ambient = evaluate_group(inst.ambient_expr);
  inst.p = doc.value("p", 0L);
  for (const auto& [key, value] : doc.at("subgroups").items())
    inst.subgroups.emplace(
        key, apply_selector_text(value.get<std::string>(), inst.ambient));
  for (const auto& [key, value] : doc.at("characters").items()) {
    CharRef ref;
    ref.group = value.at("group").get<std::string>();
    ref.row = value.at("row").get<int>();
    ref.degree = value.at("degree").get<long>();
    ref.det_order = value.at("det_order").get<long>();
    inst.characters.emplace(key, ref);
  }
  for (const auto& entry : inst.subgroups)
    if (entry.first.size() > 1 && entry.first[0] == 'U') ++inst.ow_u_count;
  // resolve character references now so that malformed files fail at load
  for (const auto& entry : inst.characters) inst.character(entry.first);
  return inst;
}

// ---- mining ----------------------------------------------------------------

namespace {

std::vector<long> prime_divisors(long n) {
  std::vector<long> primes;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) primes.push_back(n);
  return primes;
}

CharRef make_char_ref(const McKayInstance& inst, const std::string& subgroup_key,
                      int row) {
  Embedding emb = as_group(inst.sub(subgroup_key));
  const auto& table = character_table(emb.sub);
  CharRef ref;
  ref.group = subgroup_key;
  ref.row = row;
  ref.degree = table.rows[row].degree();
  ref.det_order = determinantal_order(table.rows[row]);
  return ref;
}

// canonical form of a subgroup tuple under simultaneous A-conjugation
std::string tuple_canonical(const GroupPtr& a,
                            const std::vector<const Subgroup*>& subs) {
  std::string best;
  for (int x = 0; x < a->order(); ++x) {
    std::string form;
    form.reserve(subs.size() * a->order());
    for (const auto* s : subs) {
      Subgroup c = conjugate_subgroup(*s, x);
      form.append(c.mask().begin(), c.mask().end());
    }
    if (best.empty() || form < best) best = form;
  }
  return best;
}

// representatives (minimal row index) of the orbits of `acting` on the given
// table rows, restricted to the filtered set
std::vector<int> orbit_representatives(const Embedding& emb,
                                       const std::vector<int>& filtered,
                                       const Subgroup& acting) {
  const auto& table = character_table(emb.sub);
  std::set<int> filtered_set(filtered.begin(), filtered.end());
  std::vector<int> reps;
  std::set<int> seen;
  for (int row : filtered) {
    if (seen.count(row)) continue;
    // orbit of row
    std::set<int> orbit{row};
    std::vector<int> frontier{row};
    while (!frontier.empty()) {
      int cur = frontier.back();
      frontier.pop_back();
      for (int x : acting.elements()) {
        int image = table.find_row(conjugate_by(table.rows[cur], emb, x));
        if (image < 0) throw Error("orbit computation left the table");
        if (orbit.insert(image).second) frontier.push_back(image);
      }
    }
    for (int member : orbit)
      if (filtered_set.count(member)) seen.insert(member);
    reps.push_back(row);
  }
  return reps;
}

struct Miner {
  const CatalogEntry& entry;
  const Limits& limits;
  std::vector<McKayInstance>& out;
  int local_count = 0;

  GroupPtr A() const { return entry.group; }
  bool full() const {
    return local_count >= limits.per_ambient ||
           static_cast<int>(out.size()) >= limits.max_instances;
  }
  bool exhausted() const {
    return static_cast<int>(out.size()) >= limits.max_instances;
  }
  /// Prime-parameterized kinds get a fresh per-ambient budget per prime.
  void begin_prime() { local_count = 0; }
  void push(McKayInstance inst) {
    out.push_back(std::move(inst));
    ++local_count;
  }
  McKayInstance start(Kind kind, long p = 0) const {
    McKayInstance inst;
    inst.kind = kind;
    inst.ambient_expr = entry.expr;
    inst.ambient = entry.group;
    inst.p = p;
    return inst;
  }
};

// p-subgroup candidates: Sylow of A, Sylows of normal subgroups, and the
// cyclic group over the first p-element; descending size, deduplicated
std::vector<Subgroup> p_subgroup_candidates(const GroupPtr& a,
                                            const std::vector<Subgroup>& normals,
                                            long p) {
  std::vector<Subgroup> result;
  std::set<std::vector<char>> seen;
  auto add = [&](Subgroup s) {
    if (seen.insert(s.mask()).second) result.push_back(std::move(s));
  };
  if (a->order() % p == 0) add(sylow_subgroup(a, p));
  for (const auto& n : normals)
    if (n.size() % p == 0) add(sylow_in(n, p));
  for (int x = 0; x < a->order(); ++x) {
    int o = a->element_order(x);
    if (o == static_cast<int>(p)) {
      add(Subgroup::generated(a, {x}));
      break;
    }
  }
  add(Subgroup::trivial(a));
  std::stable_sort(result.begin(), result.end(),
                   [](const Subgroup& x, const Subgroup& y) {
                     return x.size() > y.size();
                   });
  return result;
}

void mine_gallagher_or_lemma(Miner& m, Kind kind,
                             const std::vector<Subgroup>& normals) {
  for (const auto& n : normals) {
    if (m.full()) return;
    Embedding n_emb = as_group(n);
    const auto& table = character_table(n_emb.sub);
    std::vector<int> rows(table.num_rows());
    for (int i = 0; i < table.num_rows(); ++i) rows[i] = i;
    std::vector<int> invariant =
        invariant_rows(n_emb, rows, Subgroup::whole(m.A()));
    int taken = 0;
    for (int row : invariant) {
      if (m.full() || taken >= 2) break;
      McKayInstance inst = m.start(kind);
      inst.subgroups.emplace("N", n);
      inst.characters.emplace("theta", make_char_ref(inst, "N", row));
      m.push(std::move(inst));
      ++taken;
    }
  }
}

void mine_thm_1_3(Miner& m, const std::vector<Subgroup>& normals) {
  std::vector<Subgroup> gs = normals;
  std::reverse(gs.begin(), gs.end());  // ambient-sized G first
  for (const auto& g : gs) {
    for (const auto& n : normals) {
      if (m.full()) return;
      if (!g.contains_subgroup(n)) continue;
      Embedding n_emb = as_group(n);
      const auto& table = character_table(n_emb.sub);
      std::vector<int> rows(table.num_rows());
      for (int i = 0; i < table.num_rows(); ++i) rows[i] = i;
      std::vector<int> invariant =
          invariant_rows(n_emb, rows, Subgroup::whole(m.A()));
      int taken = 0;
      for (int row : invariant) {
        if (m.full() || taken >= 2) break;
        McKayInstance inst = m.start(Kind::THM_1_3);
        inst.subgroups.emplace("G", g);
        inst.subgroups.emplace("N", n);
        inst.characters.emplace("theta", make_char_ref(inst, "N", row));
        m.push(std::move(inst));
        ++taken;
      }
    }
  }
}

void mine_cor_1_4(Miner& m, const std::vector<Subgroup>& normals) {
  std::vector<Subgroup> gs = normals;
  std::reverse(gs.begin(), gs.end());
  for (const auto& g : gs) {
    for (const auto& n : normals) {
      if (m.full()) return;
      if (!g.contains_subgroup(n)) continue;
      Embedding n_emb = as_group(n);
      const auto& table = character_table(n_emb.sub);
      std::vector<int> rows(table.num_rows());
      for (int i = 0; i < table.num_rows(); ++i) rows[i] = i;
      std::vector<int> invariant =
          invariant_rows(n_emb, rows, Subgroup::whole(m.A()));
      std::set<int> invariant_set(invariant.begin(), invariant.end());
      std::vector<int> movable;
      for (int row : rows)
        if (!invariant_set.count(row)) movable.push_back(row);
      int taken = 0;
      for (int row : orbit_representatives(n_emb, movable, Subgroup::whole(m.A()))) {
        if (m.full() || taken >= 2) break;
        // hypothesis: Irr_A(G|theta) nonempty
        OverTheta ot = irr_over(m.A(), g, n, table.rows[row]);
        if (count_invariant_over(ot, Subgroup::whole(m.A())) == 0) continue;
        McKayInstance inst = m.start(Kind::COR_1_4);
        inst.subgroups.emplace("G", g);
        inst.subgroups.emplace("N", n);
        inst.characters.emplace("theta", make_char_ref(inst, "N", row));
        m.push(std::move(inst));
        ++taken;
      }
    }
  }
}

void mine_ow_2_1(Miner& m, const std::vector<Subgroup>& normals) {
  const GroupPtr& a = m.A();
  std::vector<Subgroup> ks = normals;
  std::reverse(ks.begin(), ks.end());  // largest p'-kernels first
  std::set<std::string> seen_tuples;
  for (long p : prime_divisors(a->order())) {
    if (m.exhausted()) return;
    m.begin_prime();
    for (const auto& k : ks) {
      if (m.full()) break;
      if (k.size() % p == 0) continue;
      for (const auto& q : p_subgroup_candidates(a, normals, p)) {
        if (m.full()) break;
        Subgroup kq = product_subgroup(k, q);
        if (!kq.is_normal_in_parent()) continue;
        if (!seen_tuples.insert(tuple_canonical(a, {&k, &q})).second) continue;
        CoprimeAction action = make_coprime_action(a, k, q, p);
        Subgroup b = normalizer(a, q);
        // U candidates between C and B with U/C abelian
        std::vector<Subgroup> us;
        std::set<std::vector<char>> seen_u;
        auto consider = [&](Subgroup u) {
          if (us.size() >= 10) return;
          if (!seen_u.insert(u.mask()).second) return;
          if (!action.C.is_normal_in(u)) return;
          for (int x : u.elements())
            for (int y : u.elements())
              if (!action.C.contains(a->commutator(x, y))) return;
          us.push_back(std::move(u));
        };
        consider(action.C);
        for (int bb : b.elements()) {
          if (us.size() >= 10) break;
          std::vector<int> gens = action.C.generating_set();
          gens.push_back(bb);
          consider(Subgroup::generated(a, gens));
        }
        if (us.empty()) continue;
        int taken = 0;
        for (int theta_row : invariant_characters(action)) {
          if (m.full() || taken >= 2) break;
          int star_row = glauberman_correspondent(action, theta_row);
          McKayInstance inst = m.start(Kind::OW_2_1, p);
          inst.subgroups.emplace("K", k);
          inst.subgroups.emplace("Q", q);
          inst.subgroups.emplace("B", b);
          inst.subgroups.emplace("C", action.C);
          for (std::size_t i = 0; i < us.size(); ++i)
            inst.subgroups.emplace("U" + std::to_string(i + 1), us[i]);
          inst.ow_u_count = static_cast<int>(us.size());
          inst.characters.emplace("theta", make_char_ref(inst, "K", theta_row));
          inst.characters.emplace("theta_star",
                                  make_char_ref(inst, "C", star_row));
          m.push(std::move(inst));
          ++taken;
        }
      }
    }
  }
}

void mine_cor_2_2(Miner& m, const std::vector<Subgroup>& normals) {
  const GroupPtr& a = m.A();
  std::vector<Subgroup> ks = normals;
  std::reverse(ks.begin(), ks.end());
  std::set<std::string> seen_tuples;
  for (long p : prime_divisors(a->order())) {
    if (m.exhausted()) return;
    m.begin_prime();
    for (const auto& k : ks) {
      if (m.full()) break;
      if (k.size() % p == 0) continue;
      for (const auto& q : p_subgroup_candidates(a, normals, p)) {
        if (m.full()) break;
        Subgroup kp = product_subgroup(k, q);
        if (!kp.is_normal_in_parent()) continue;
        CoprimeAction action = make_coprime_action(a, k, q, p);
        Subgroup b = normalizer(a, q);
        // D between C and B; S normal in D with C <= S
        std::vector<Subgroup> ds;
        std::set<std::vector<char>> seen_d;
        auto consider_d = [&](Subgroup d) {
          if (ds.size() >= 4) return;
          if (seen_d.insert(d.mask()).second) ds.push_back(std::move(d));
        };
        consider_d(b);
        for (int bb : b.elements()) {
          if (ds.size() >= 4) break;
          std::vector<int> gens = action.C.generating_set();
          gens.push_back(bb);
          consider_d(Subgroup::generated(a, gens));
        }
        for (const auto& d : ds) {
          if (m.full()) break;
          Embedding d_emb = as_group(d);
          Subgroup c_in_d = pull_back(d_emb, action.C);
          std::vector<Subgroup> ss;
          for (const auto& s_local : normal_subgroups(d_emb.sub)) {
            if (ss.size() >= 3) break;
            if (!s_local.contains_subgroup(c_in_d)) continue;
            ss.push_back(push_forward(d_emb, s_local));
          }
          for (const auto& s : ss) {
            if (m.full()) break;
            if (!seen_tuples.insert(tuple_canonical(a, {&k, &q, &d, &s})).second)
              continue;
            int taken = 0;
            for (int theta_row : invariant_characters(action)) {
              if (m.full() || taken >= 2) break;
              int star_row = glauberman_correspondent(action, theta_row);
              McKayInstance inst = m.start(Kind::COR_2_2, p);
              inst.subgroups.emplace("K", k);
              inst.subgroups.emplace("P", q);
              inst.subgroups.emplace("B", b);
              inst.subgroups.emplace("C", action.C);
              inst.subgroups.emplace("D", d);
              inst.subgroups.emplace("S", s);
              inst.characters.emplace("theta",
                                      make_char_ref(inst, "K", theta_row));
              inst.characters.emplace("theta_star",
                                      make_char_ref(inst, "C", star_row));
              m.push(std::move(inst));
              ++taken;
            }
          }
        }
      }
    }
  }
}

void mine_thm_2_4(Miner& m, const std::vector<Subgroup>& normals) {
  const GroupPtr& a = m.A();
  std::vector<Subgroup> normals_desc = normals;
  std::reverse(normals_desc.begin(), normals_desc.end());
  for (long p : prime_divisors(a->order())) {
    if (m.exhausted()) return;
    m.begin_prime();
    for (const auto& g : normals_desc) {
      if (m.full()) break;
      if (g.size() % p != 0) continue;
      for (const auto& k : normals_desc) {
        if (m.full()) break;
        if (k.size() % p == 0 || !g.contains_subgroup(k)) continue;
        Subgroup sylow_p = sylow_in(g, p);
        Subgroup kp = product_subgroup(k, sylow_p);
        if (!kp.is_normal_in_parent()) continue;
        CoprimeAction action = make_coprime_action(a, k, sylow_p, p);
        Subgroup b = normalizer(a, sylow_p);
        Subgroup h = intersect_subgroups(g, b);
        // Z: normal p-subgroups of A inside G, larger first
        for (const auto& z : normals_desc) {
          if (m.full()) break;
          if (!g.contains_subgroup(z)) continue;
          if (p_part(z.size(), p) != z.size()) continue;
          Embedding z_emb = as_group(z);
          const auto& z_table = character_table(z_emb.sub);
          std::vector<int> z_rows(z_table.num_rows());
          for (int i = 0; i < z_table.num_rows(); ++i) z_rows[i] = i;
          std::vector<int> lambdas =
              invariant_rows(z_emb, z_rows, Subgroup::whole(a));
          int lambda_taken = 0;
          for (int lambda_row : lambdas) {
            if (m.full() || lambda_taken >= 2) break;
            int theta_taken = 0;
            for (int theta_row : invariant_characters(action)) {
              if (m.full() || theta_taken >= 2) break;
              int star_row = glauberman_correspondent(action, theta_row);
              McKayInstance inst = m.start(Kind::THM_2_4, p);
              inst.subgroups.emplace("G", g);
              inst.subgroups.emplace("K", k);
              inst.subgroups.emplace("P", sylow_p);
              inst.subgroups.emplace("Z", z);
              inst.subgroups.emplace("B", b);
              inst.subgroups.emplace("H", h);
              inst.subgroups.emplace("C", action.C);
              inst.characters.emplace("theta",
                                      make_char_ref(inst, "K", theta_row));
              inst.characters.emplace("lambda",
                                      make_char_ref(inst, "Z", lambda_row));
              inst.characters.emplace("theta_star",
                                      make_char_ref(inst, "C", star_row));
              m.push(std::move(inst));
              ++theta_taken;
              ++lambda_taken;
            }
          }
        }
      }
    }
  }
}

void mine_thm_3_1(Miner& m, const std::vector<Subgroup>& normals) {
  const GroupPtr& a = m.A();
  std::vector<Subgroup> gs = normals;
  std::reverse(gs.begin(), gs.end());
  for (long p : prime_divisors(a->order())) {
    if (m.exhausted()) return;
    m.begin_prime();
    for (const auto& g : gs) {
      if (m.full()) break;
      if (g.size() % p != 0) continue;
      Subgroup sylow_p = sylow_in(g, p);
      Subgroup b = normalizer(a, sylow_p);
      Subgroup h = normalizer(g, sylow_p);
      for (const auto& n : normals) {
        if (m.full()) break;
        if (!g.contains_subgroup(n)) continue;
        // G/N p-solvable
        Embedding g_emb = as_group(g);
        Quotient q = quotient(g_emb.sub, pull_back(g_emb, n));
        if (!is_p_solvable(q.group, p)) continue;
        Subgroup hn = product_subgroup(h, n);
        Embedding n_emb = as_group(n);
        const auto& n_table = character_table(n_emb.sub);
        std::vector<int> candidates;
        for (int i = 0; i < n_table.num_rows(); ++i)
          if (n_table.rows[i].degree() % p != 0) candidates.push_back(i);
        candidates = invariant_rows(n_emb, candidates, sylow_p);
        int taken = 0;
        for (int row :
             orbit_representatives(n_emb, candidates, Subgroup::whole(a))) {
          if (m.full() || taken >= 2) break;
          McKayInstance inst = m.start(Kind::THM_3_1, p);
          inst.subgroups.emplace("G", g);
          inst.subgroups.emplace("N", n);
          inst.subgroups.emplace("P", sylow_p);
          inst.subgroups.emplace("B", b);
          inst.subgroups.emplace("H", h);
          inst.subgroups.emplace("HN", hn);
          inst.characters.emplace("mu", make_char_ref(inst, "N", row));
          m.push(std::move(inst));
          ++taken;
        }
      }
    }
  }
}

void mine_counterexample(Miner& m) {
  // the fixed configuration A = D8 x C2, G = C4 x C2, N = C4, theta faithful
  GroupPtr reference = evaluate_group("D(8) x C(2)");
  if (!FiniteGroup::same_structure(*m.A(), *reference)) return;
  const GroupPtr& a = m.A();
  // N: the normal cyclic subgroup of order 4 with the smallest element list
  std::vector<Subgroup> candidates;
  for (const auto& n : normal_subgroups(a)) {
    if (n.size() != 4) continue;
    Embedding emb = as_group(n);
    if (emb.sub->exponent() == 4) candidates.push_back(n);
  }
  if (candidates.empty()) throw Error("counterexample: no cyclic normal C4");
  const Subgroup& n = candidates.front();
  Subgroup center = centralizer(Subgroup::whole(a), Subgroup::whole(a));
  Subgroup g = product_subgroup(n, center);
  if (g.size() != 8) throw Error("counterexample: G should be C4 x C2");

  Embedding n_emb = as_group(n);
  const auto& table = character_table(n_emb.sub);
  int faithful = -1;
  for (int i = 0; i < table.num_rows(); ++i) {
    if (determinantal_order(table.rows[i]) == 4) {
      faithful = i;
      break;
    }
  }
  if (faithful < 0) throw Error("counterexample: no faithful character of C4");
  McKayInstance inst = m.start(Kind::COUNTEREXAMPLE_1);
  inst.subgroups.emplace("G", g);
  inst.subgroups.emplace("N", n);
  inst.characters.emplace("theta", make_char_ref(inst, "N", faithful));
  m.push(std::move(inst));
}

} // namespace

std::vector<McKayInstance> mine_instances(const std::vector<CatalogEntry>& catalog,
                                          Kind kind, const Limits& limits) {
  std::vector<McKayInstance> out;
  for (const auto& entry : catalog) {
    if (entry.group->order() > limits.max_order) continue;
    if (static_cast<int>(out.size()) >= limits.max_instances) break;
    Miner m{entry, limits, out};
    std::vector<Subgroup> normals = normal_subgroups(entry.group);
    switch (kind) {
      case Kind::GALLAGHER_1_2:
        mine_gallagher_or_lemma(m, Kind::GALLAGHER_1_2, normals);
        break;
      case Kind::LEM_1_1:
        mine_gallagher_or_lemma(m, Kind::LEM_1_1, normals);
        break;
      case Kind::THM_1_3:
        mine_thm_1_3(m, normals);
        break;
      case Kind::COR_1_4:
        mine_cor_1_4(m, normals);
        break;
      case Kind::OW_2_1:
        mine_ow_2_1(m, normals);
        break;
      case Kind::COR_2_2:
        mine_cor_2_2(m, normals);
        break;
      case Kind::THM_2_4:
        mine_thm_2_4(m, normals);
        break;
      case Kind::THM_3_1:
        mine_thm_3_1(m, normals);
        break;
      case Kind::COUNTEREXAMPLE_1:
        mine_counterexample(m);
        break;
    }
  }
  return out;
}

// ---- checks ----------------------------------------------------------------

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw HypothesisError(message);
}

nlohmann::json subgroup_sizes(const McKayInstance& inst) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [key, s] : inst.subgroups) out[key] = s.size();
  return out;
}

void fill_group_names(InstanceResult& result, const McKayInstance& inst) {
  result.group_names["A"] = inst.ambient_expr;
  for (const auto& [key, s] : inst.subgroups)
    result.group_names[key] = subgroup_to_selector(s);
}

// theta x lambda on the internal direct product X * Y
ClassFunction outer_product_character(const GroupPtr& a, const Subgroup& x,
                                      const Subgroup& y,
                                      const ClassFunction& alpha,
                                      const ClassFunction& beta,
                                      const Embedding& xy_emb) {
  require(intersect_subgroups(x, y).size() == 1,
          "internal direct product: X intersect Y != 1");
  for (int xe : x.elements())
    for (int ye : y.elements())
      require(a->commutator(xe, ye) == 0,
              "internal direct product: factors do not commute");
  Embedding x_emb = as_group(x);
  Embedding y_emb = as_group(y);
  ClassFunction alpha_local = transport(alpha, x_emb.sub);
  ClassFunction beta_local = transport(beta, y_emb.sub);
  const auto& classes = xy_emb.sub->classes();
  ClassFunction out;
  out.group = xy_emb.sub;
  for (int k = 0; k < classes.count(); ++k) {
    int w = xy_emb.to_parent[classes.rep[k]];
    Cyclotomic value;
    bool found = false;
    for (int xe : x.elements()) {
      int rest = a->mul(a->inv(xe), w);
      if (y.contains(rest)) {
        value = alpha_local.at_element(x_emb.from_parent[xe]) *
                beta_local.at_element(y_emb.from_parent[rest]);
        found = true;
        break;
      }
    }
    require(found, "internal direct product: element not decomposable");
    out.values.push_back(std::move(value));
  }
  require(is_irreducible_character(out),
          "outer product character is not irreducible");
  return out;
}

std::string canonical_mask_under(const Subgroup& stab, const Subgroup& acting) {
  std::string best;
  for (int s : acting.elements()) {
    Subgroup c = conjugate_subgroup(stab, s);
    std::string mask(c.mask().begin(), c.mask().end());
    if (best.empty() || mask < best) best = mask;
  }
  return best;
}

// Shared core of the Gallagher-style class-counting checks.  The identity
// that holds in full generality matches the number of A-orbits on
// Irr(G|theta) with the number of theta-good classes of G/N counted after
// fusion under A-conjugation.  Pairing the A-invariant character count with
// literal G/N-classes instead fails whenever A fuses G/N-classes or moves
// characters over theta (A = S3, G = A3, N = 1 fuses the two 3-cycle
// classes; A = Q8, G = <i>, N = Z(Q8) with theta faithful swaps the two
// characters over theta).  For G = A all four counts coincide and the check
// is the classical Gallagher count.  All four numbers are recorded.
void check_good_class_count(const McKayInstance& inst, InstanceResult& result,
                            const Subgroup& g) {
  const GroupPtr& a = inst.ambient;
  const Subgroup& n = inst.sub("N");
  ClassFunction theta = inst.character("theta");
  Subgroup whole = Subgroup::whole(a);

  OverTheta ot = irr_over(a, g, n, theta);
  require(ot.inertia_in_A.size() == a->order(), "theta is not A-invariant");

  long invariant_count = count_invariant_over(ot, whole);
  long orbits = orbit_count(ot.G_emb, ot.members, whole);
  ThetaGoodClasses good = theta_good_classes(a, g, n, theta);

  result.lhs = orbits;
  result.rhs = good.a_fused_good_count;
  result.hypotheses = subgroup_sizes(inst);
  result.hypotheses["theta_invariant"] = true;
  result.witnesses["good_classes"] = good.good_classes;
  result.witnesses["invariant_character_count"] = invariant_count;
  result.witnesses["literal_good_class_count"] = good.good_count;
  result.witnesses["printed_form_holds"] =
      invariant_count == good.good_count;
  nlohmann::json bad = nlohmann::json::array();
  for (const auto& cert : good.certificates) {
    if (cert.good || bad.size() >= 8) continue;
    bad.push_back({{"element", cert.element},
                   {"extension_index", cert.witness->extension_index},
                   {"x", cert.witness->x}});
  }
  result.witnesses["bad_element_witnesses"] = std::move(bad);

  bool ok = result.lhs == result.rhs;
  if (invariant_count > orbits || good.a_fused_good_count > good.good_count)
    ok = false;  // structural sanity: fixed <= orbits, fused <= literal
  if (g.size() == a->order()) {
    // G = A: inner conjugation fixes characters and classes, so the
    // classical count must hold on the nose
    if (invariant_count != orbits || good.good_count != good.a_fused_good_count)
      ok = false;
  }
  result.verdict = ok ? "pass" : "fail";
}

void check_gallagher_1_2(const McKayInstance& inst, InstanceResult& result) {
  check_good_class_count(inst, result, Subgroup::whole(inst.ambient));
}

void check_thm_1_3(const McKayInstance& inst, InstanceResult& result) {
  check_good_class_count(inst, result, inst.sub("G"));
}

void check_cor_1_4(const McKayInstance& inst, InstanceResult& result) {
  const GroupPtr& a = inst.ambient;
  const Subgroup& g = inst.sub("G");
  const Subgroup& n = inst.sub("N");
  ClassFunction theta = inst.character("theta");

  OverTheta ot = irr_over(a, g, n, theta);
  require(ot.inertia_in_A.size() < a->order(),
          "theta is A-invariant; this is the Thm 1.3 case");
  result.lhs = count_invariant_over(ot, Subgroup::whole(a));
  require(result.lhs > 0, "Irr_A(G|theta) is empty");

  // inertia side: |Irr_{A_theta}(G_theta|theta)|, equal to the ambient count
  // through the A_theta-equivariant Clifford correspondence
  Embedding at_emb = as_group(ot.inertia_in_A);
  Subgroup g_theta = pull_back(at_emb, ot.inertia_in_G);
  Subgroup n_in_at = pull_back(at_emb, n);
  ClassFunction theta_local = transport(ot.theta, as_group(n_in_at).sub);
  OverTheta ot_inertia = irr_over(at_emb.sub, g_theta, n_in_at, theta_local);
  result.rhs = count_invariant_over(ot_inertia, Subgroup::whole(at_emb.sub));

  // the Clifford correspondence behind the reduction
  clifford_correspondence_check(a, g, n, theta);

  // inside A_theta the class-counting identity applies to theta, which is
  // A_theta-invariant there: orbits against fused good classes
  long inertia_orbits = orbit_count(ot_inertia.G_emb, ot_inertia.members,
                                    Subgroup::whole(at_emb.sub));
  ThetaGoodClasses good =
      theta_good_classes(at_emb.sub, g_theta, n_in_at, theta_local);

  result.hypotheses = subgroup_sizes(inst);
  result.hypotheses["A_theta"] = ot.inertia_in_A.size();
  result.hypotheses["G_theta"] = ot.inertia_in_G.size();
  result.witnesses["good_classes_of_G_theta_mod_N"] = good.good_classes;
  result.witnesses["inertia_orbit_count"] = inertia_orbits;
  result.witnesses["fused_good_class_count"] = good.a_fused_good_count;
  result.witnesses["literal_good_class_count"] = good.good_count;

  bool ok = result.lhs == result.rhs &&
            inertia_orbits == good.a_fused_good_count;
  result.verdict = ok ? "pass" : "fail";
}

void check_lemma_1_1(const McKayInstance& inst, InstanceResult& result) {
  const GroupPtr& a = inst.ambient;
  const Subgroup& n = inst.sub("N");
  ClassFunction theta = inst.character("theta");
  VanishingReport report = vanishing_check(a, n, theta);
  result.lhs = report.zero_pairs;
  result.rhs = report.pairs_checked;
  result.hypotheses = subgroup_sizes(inst);
  result.witnesses["non_good_elements"] = report.non_good_elements;
  result.witnesses["members"] = report.members;
  result.verdict = result.lhs == result.rhs ? "pass" : "fail";
}

void check_counterexample(const McKayInstance& inst, InstanceResult& result) {
  const GroupPtr& a = inst.ambient;
  const Subgroup& g = inst.sub("G");
  const Subgroup& n = inst.sub("N");
  require(a->order() == 16 && g.size() == 8 && n.size() == 4,
          "unexpected counterexample configuration");
  ClassFunction theta = inst.character("theta");

  auto counts = [&](const ClassFunction& th) -> std::pair<long, long> {
    OverTheta ot = irr_over(a, g, n, th);
    long lhs = count_invariant_over(ot, Subgroup::whole(a));
    Embedding at_emb = as_group(ot.inertia_in_A);
    Subgroup g_theta = pull_back(at_emb, ot.inertia_in_G);
    Subgroup n_local = pull_back(at_emb, n);
    ClassFunction theta_local = transport(ot.theta, as_group(n_local).sub);
    OverTheta ot_inertia =
        irr_over(at_emb.sub, g_theta, n_local, theta_local);
    long rhs = count_invariant_over(ot_inertia, Subgroup::whole(at_emb.sub));
    return {lhs, rhs};
  };

  auto [lhs, rhs] = counts(theta);
  result.lhs = lhs;
  result.rhs = rhs;

  // the Galois conjugate of theta gives the same counts
  ClassFunction conj_theta;
  conj_theta.group = theta.group;
  for (const auto& v : theta.values) conj_theta.values.push_back(v.conj());
  auto [lhs2, rhs2] = counts(conj_theta);
  result.witnesses["conjugate_lhs"] = lhs2;
  result.witnesses["conjugate_rhs"] = rhs2;
  result.hypotheses = subgroup_sizes(inst);

  bool ok = lhs == 0 && rhs == 2 && lhs2 == 0 && rhs2 == 2;
  result.verdict = ok ? "pass" : "fail";
}

void check_ow_2_1(const McKayInstance& inst, InstanceResult& result) {
  const GroupPtr& a = inst.ambient;
  const Subgroup& k = inst.sub("K");
  const Subgroup& q = inst.sub("Q");
  const Subgroup& b = inst.sub("B");
  const Subgroup& c = inst.sub("C");
  long p = inst.p;

  require(product_subgroup(k, q).is_normal_in_parent(), "KQ is not normal in A");
  CoprimeAction action = make_coprime_action(a, k, q, p);
  require(action.C == c, "C != C_K(Q)");
  require(normalizer(a, q) == b, "B != N_A(Q)");

  ClassFunction theta = inst.character("theta");
  Embedding k_emb = as_group(k);
  int theta_row = character_table(k_emb.sub).find_row(transport(theta, k_emb.sub));
  require(theta_row >= 0, "theta is not a row of Irr(K)");
  int star_row = glauberman_correspondent(action, theta_row);
  ClassFunction theta_star = inst.character("theta_star");
  {
    Embedding c_emb = as_group(c);
    require(character_table(c_emb.sub)
                .find_row(transport(theta_star, c_emb.sub)) == star_row,
            "stored theta_star is not the Glauberman correspondent");
  }
  correspondence_audit(action);

  long agreeing = 0;
  nlohmann::json pairs = nlohmann::json::array();
  for (int i = 1; i <= inst.ow_u_count; ++i) {
    const Subgroup& u = inst.sub("U" + std::to_string(i));
    require(u.contains_subgroup(c) && b.contains_subgroup(u),
            "U is not between C and B");
    require(c.is_normal_in(u), "C is not normal in U");
    for (int x : u.elements())
      for (int y : u.elements())
        require(c.contains(a->commutator(x, y)), "U/C is not abelian");
    Subgroup ku = product_subgroup(k, u);
    bool lhs_ext = !extensions(a, k, ku, theta).list.empty();
    bool rhs_ext = !extensions(a, c, u, theta_star).list.empty();
    if (lhs_ext == rhs_ext) ++agreeing;
    pairs.push_back({{"U_order", u.size()},
                     {"theta_extends_to_KU", lhs_ext},
                     {"theta_star_extends_to_U", rhs_ext}});
  }
  result.lhs = agreeing;
  result.rhs = inst.ow_u_count;
  result.hypotheses = subgroup_sizes(inst);
  result.hypotheses["p"] = p;
  result.witnesses["pairs"] = std::move(pairs);
  result.verdict = result.lhs == result.rhs ? "pass" : "fail";
}

void check_cor_2_2(const McKayInstance& inst, InstanceResult& result) {
  const GroupPtr& a = inst.ambient;
  const Subgroup& k = inst.sub("K");
  const Subgroup& pp = inst.sub("P");
  const Subgroup& b = inst.sub("B");
  const Subgroup& c = inst.sub("C");
  const Subgroup& d = inst.sub("D");
  const Subgroup& s = inst.sub("S");
  long p = inst.p;

  require(product_subgroup(k, pp).is_normal_in_parent(), "KP is not normal in A");
  CoprimeAction action = make_coprime_action(a, k, pp, p);
  require(action.C == c, "C != C_K(P)");
  require(normalizer(a, pp) == b, "B != N_A(P)");
  require(b.contains_subgroup(d) && d.contains_subgroup(c),
          "C <= D <= B violated");
  require(d.contains_subgroup(s) && s.contains_subgroup(c),
          "C <= S <= D violated");
  require(s.is_normal_in(d), "S is not normal in D");

  ClassFunction theta = inst.character("theta");
  Embedding k_emb = as_group(k);
  int theta_row = character_table(k_emb.sub).find_row(transport(theta, k_emb.sub));
  require(theta_row >= 0, "theta is not a row of Irr(K)");
  {
    auto inv = invariant_rows(k_emb, {theta_row}, pp);
    require(!inv.empty(), "theta is not P-invariant");
  }
  int star_row = glauberman_correspondent(action, theta_row);
  ClassFunction theta_star = inst.character("theta_star");
  {
    Embedding c_emb = as_group(c);
    require(character_table(c_emb.sub)
                .find_row(transport(theta_star, c_emb.sub)) == star_row,
            "stored theta_star is not the Glauberman correspondent");
  }

  // |Irr_KD(KS|theta)|
  Subgroup kd = product_subgroup(k, d);
  Subgroup ks = product_subgroup(k, s);
  Embedding kd_emb = as_group(kd);
  OverTheta lhs_ot =
      irr_over(kd_emb.sub, pull_back(kd_emb, ks), pull_back(kd_emb, k),
               transport(theta, as_group(pull_back(kd_emb, k)).sub));
  result.lhs = count_invariant_over(lhs_ot, Subgroup::whole(kd_emb.sub));

  // |Irr_D(S|theta*)|
  Embedding d_emb = as_group(d);
  OverTheta rhs_ot =
      irr_over(d_emb.sub, pull_back(d_emb, s), pull_back(d_emb, c),
               transport(theta_star, as_group(pull_back(d_emb, c)).sub));
  result.rhs = count_invariant_over(rhs_ot, Subgroup::whole(d_emb.sub));

  result.hypotheses = subgroup_sizes(inst);
  result.hypotheses["p"] = p;
  bool ok = result.lhs == result.rhs;

  // the goodness bridge behind the equality: when D = B and theta is
  // KB-invariant, Cs is theta*-good in D exactly when Ks is theta-good in
  // KD, element for element along the isomorphism S/C -> KS/K
  bool bridge_checked = false;
  if (d == b) {
    Embedding kd_check = as_group(kd);
    Subgroup k_in_kd = pull_back(kd_check, k);
    ClassFunction theta_kd =
        transport(theta, as_group(k_in_kd).sub);
    Embedding n_kd = as_group(k_in_kd);
    bool theta_invariant =
        stabilizer_of(theta_kd, n_kd, Subgroup::whole(kd_check.sub)).size() ==
        kd_check.sub->order();
    if (theta_invariant) {
      bridge_checked = true;
      GoodnessTester lhs_tester(kd_check.sub, k_in_kd, theta_kd);
      Subgroup c_in_d = pull_back(d_emb, c);
      GoodnessTester rhs_tester(
          d_emb.sub, c_in_d,
          transport(theta_star, as_group(c_in_d).sub));
      for (int se : s.elements()) {
        bool lhs_good = lhs_tester.test(kd_check.from_parent[se]).good;
        bool rhs_good = rhs_tester.test(d_emb.from_parent[se]).good;
        if (lhs_good != rhs_good) {
          ok = false;
          result.error = "goodness transfer failed at element " +
                         std::to_string(se);
          break;
        }
      }
    }
  }
  result.witnesses["goodness_bridge_checked"] = bridge_checked;
  result.verdict = ok ? "pass" : "fail";
}

void check_thm_2_4(const McKayInstance& inst, InstanceResult& result) {
  const GroupPtr& a = inst.ambient;
  const Subgroup& g = inst.sub("G");
  const Subgroup& k = inst.sub("K");
  const Subgroup& pp = inst.sub("P");
  const Subgroup& z = inst.sub("Z");
  const Subgroup& b = inst.sub("B");
  const Subgroup& h = inst.sub("H");
  const Subgroup& c = inst.sub("C");
  long p = inst.p;

  require(g.is_normal_in_parent(), "G is not normal in A");
  require(k.is_normal_in_parent(), "K is not normal in A");
  require(z.is_normal_in_parent(), "Z is not normal in A");
  require(g.contains_subgroup(k) && g.contains_subgroup(z), "K, Z <= G violated");
  require(k.size() % p != 0, "p divides |K|");
  require(p_part(z.size(), p) == static_cast<long>(z.size()), "Z is not a p-group");
  require(sylow_in(g, p) == pp, "P is not the chosen Sylow p-subgroup of G");
  require(pp.contains_subgroup(z), "Z is not contained in P");
  require(product_subgroup(k, pp).is_normal_in_parent(), "KP is not normal in A");
  require(normalizer(a, pp) == b, "B != N_A(P)");
  require(intersect_subgroups(g, b) == h, "H != N_G(P)");

  CoprimeAction action = make_coprime_action(a, k, pp, p);
  require(action.C == c, "C != C_K(P)");

  ClassFunction theta = inst.character("theta");
  ClassFunction lambda = inst.character("lambda");
  Embedding k_emb = as_group(k);
  int theta_row = character_table(k_emb.sub).find_row(transport(theta, k_emb.sub));
  require(theta_row >= 0, "theta is not a row of Irr(K)");
  require(!invariant_rows(k_emb, {theta_row}, pp).empty(),
          "theta is not P-invariant");
  Embedding z_emb = as_group(z);
  int lambda_row =
      character_table(z_emb.sub).find_row(transport(lambda, z_emb.sub));
  require(lambda_row >= 0, "lambda is not a row of Irr(Z)");
  require(!invariant_rows(z_emb, {lambda_row}, Subgroup::whole(a)).empty(),
          "lambda is not A-invariant");
  int star_row = glauberman_correspondent(action, theta_row);
  ClassFunction theta_star = inst.character("theta_star");
  {
    Embedding c_emb = as_group(c);
    require(character_table(c_emb.sub)
                .find_row(transport(theta_star, c_emb.sub)) == star_row,
            "stored theta_star is not the Glauberman correspondent");
  }

  // theta x lambda on KZ and theta* x lambda on CZ
  Subgroup kz = product_subgroup(k, z);
  Subgroup cz = product_subgroup(c, z);
  Embedding kz_emb = as_group(kz);
  Embedding cz_emb = as_group(cz);
  ClassFunction theta_lambda =
      outer_product_character(a, k, z, theta, lambda, kz_emb);
  ClassFunction star_lambda =
      outer_product_character(a, c, z, theta_star, lambda, cz_emb);

  // Lemma 2.3 hypothesis: B_{theta x lambda} = B_{theta* x lambda}
  Subgroup b_theta = stabilizer_of(theta_lambda, kz_emb, b);
  Subgroup b_star = stabilizer_of(star_lambda, cz_emb, b);
  if (!(b_theta == b_star))
    throw CheckFailure("B_{theta x lambda} != B_{theta* x lambda}");

  // full counts
  OverTheta lhs_ot = irr_over(a, g, kz, theta_lambda);
  result.lhs = count_invariant_over(lhs_ot, Subgroup::whole(a), p);

  Embedding b_emb = as_group(b);
  OverTheta rhs_ot =
      irr_over(b_emb.sub, pull_back(b_emb, h), pull_back(b_emb, cz),
               transport(star_lambda, as_group(pull_back(b_emb, cz)).sub));
  result.rhs = count_invariant_over(rhs_ot, Subgroup::whole(b_emb.sub), p);

  // inertia-restricted counts (the Lemma 2.3 reduction); Thm 2.4 applies to
  // the restricted configuration as well, so these must also agree
  Subgroup a_theta = stabilizer_of(theta_lambda, kz_emb, Subgroup::whole(a));
  Subgroup g_theta = intersect_subgroups(g, a_theta);
  Subgroup h_phi = intersect_subgroups(h, b_theta);
  Embedding at_emb = as_group(a_theta);
  OverTheta lhs_res_ot = irr_over(
      at_emb.sub, pull_back(at_emb, g_theta), pull_back(at_emb, kz),
      transport(theta_lambda, as_group(pull_back(at_emb, kz)).sub));
  long lhs_restricted =
      count_invariant_over(lhs_res_ot, Subgroup::whole(at_emb.sub), p);
  Embedding bt_emb = as_group(b_theta);
  OverTheta rhs_res_ot = irr_over(
      bt_emb.sub, pull_back(bt_emb, h_phi), pull_back(bt_emb, cz),
      transport(star_lambda, as_group(pull_back(bt_emb, cz)).sub));
  long rhs_restricted =
      count_invariant_over(rhs_res_ot, Subgroup::whole(bt_emb.sub), p);

  result.hypotheses = subgroup_sizes(inst);
  result.hypotheses["p"] = p;
  result.hypotheses["B_theta_equals_B_theta_star"] = true;
  result.witnesses["restricted_lhs"] = lhs_restricted;
  result.witnesses["restricted_rhs"] = rhs_restricted;

  bool ok = result.lhs == result.rhs && lhs_restricted == rhs_restricted;
  // Lemma 2.3: restricted equality must imply the full one
  if (lhs_restricted == rhs_restricted && result.lhs != result.rhs) ok = false;
  result.verdict = ok ? "pass" : "fail";
}

void check_thm_3_1(const McKayInstance& inst, InstanceResult& result) {
  const GroupPtr& a = inst.ambient;
  const Subgroup& g = inst.sub("G");
  const Subgroup& n = inst.sub("N");
  const Subgroup& pp = inst.sub("P");
  const Subgroup& b = inst.sub("B");
  const Subgroup& h = inst.sub("H");
  const Subgroup& hn = inst.sub("HN");
  long p = inst.p;

  require(g.is_normal_in_parent(), "G is not normal in A");
  require(n.is_normal_in_parent(), "N is not normal in A");
  require(g.contains_subgroup(n), "N <= G violated");
  require(sylow_in(g, p) == pp, "P is not the chosen Sylow p-subgroup of G");
  require(normalizer(a, pp) == b, "B != N_A(P)");
  require(normalizer(g, pp) == h, "H != N_G(P)");
  require(product_subgroup(h, n) == hn, "HN != N_G(P) N");

  Embedding g_emb = as_group(g);
  Quotient g_mod_n = quotient(g_emb.sub, pull_back(g_emb, n));
  require(is_p_solvable(g_mod_n.group, p), "G/N is not p-solvable");

  ClassFunction mu = inst.character("mu");
  require(mu.degree() % p != 0, "mu does not have p'-degree");
  Embedding n_emb = as_group(n);
  int mu_row = character_table(n_emb.sub).find_row(transport(mu, n_emb.sub));
  require(mu_row >= 0, "mu is not a row of Irr(N)");
  require(!invariant_rows(n_emb, {mu_row}, pp).empty(), "mu is not P-invariant");

  // count sides
  OverTheta lhs_ot = irr_over(a, g, n, mu);
  result.lhs = count_invariant_over(lhs_ot, Subgroup::whole(a), p);

  Subgroup a_prime = product_subgroup(hn, b);  // HN B, where HN is normal
  Embedding ap_emb = as_group(a_prime);
  OverTheta rhs_ot =
      irr_over(ap_emb.sub, pull_back(ap_emb, hn), pull_back(ap_emb, n),
               transport(mu, as_group(pull_back(ap_emb, n)).sub));
  result.rhs = count_invariant_over(rhs_ot, pull_back(ap_emb, b), p);

  // equivariant-bijection criterion: the multisets of stabilizer-subgroup
  // conjugacy classes under S = B_mu must coincide on the two p'-sets
  Subgroup s_acting = stabilizer_of(transport(mu, n_emb.sub), n_emb, b);
  std::multiset<std::string> lhs_multiset, rhs_multiset;
  {
    std::vector<int> rows = p_prime_rows(lhs_ot.G_emb, lhs_ot.members, p);
    const auto& table = character_table(lhs_ot.G_emb.sub);
    for (int row : rows) {
      Subgroup stab = stabilizer_of(table.rows[row], lhs_ot.G_emb, s_acting);
      lhs_multiset.insert(canonical_mask_under(stab, s_acting));
    }
  }
  {
    std::vector<int> rows = p_prime_rows(rhs_ot.G_emb, rhs_ot.members, p);
    const auto& table = character_table(rhs_ot.G_emb.sub);
    Subgroup s_in_ap = pull_back(ap_emb, s_acting);
    for (int row : rows) {
      Subgroup stab_local =
          stabilizer_of(table.rows[row], rhs_ot.G_emb, s_in_ap);
      Subgroup stab = push_forward(ap_emb, stab_local);
      rhs_multiset.insert(canonical_mask_under(stab, s_acting));
    }
  }
  bool orbit_match = lhs_multiset == rhs_multiset;

  result.hypotheses = subgroup_sizes(inst);
  result.hypotheses["p"] = p;
  result.hypotheses["G_mod_N_p_solvable"] = true;
  result.witnesses["lhs_p_prime_set_size"] =
      static_cast<long>(lhs_multiset.size());
  result.witnesses["rhs_p_prime_set_size"] =
      static_cast<long>(rhs_multiset.size());
  result.witnesses["stabilizer_multisets_match"] = orbit_match;
  result.verdict = (result.lhs == result.rhs && orbit_match) ? "pass" : "fail";
}

} // namespace

InstanceResult check_instance(const McKayInstance& inst,
                              bool downgrade_failures) {
  InstanceResult result;
  result.kind = kind_name(inst.kind);
  result.label = inst.label();
  fill_group_names(result, inst);
  try {
    switch (inst.kind) {
      case Kind::GALLAGHER_1_2: check_gallagher_1_2(inst, result); break;
      case Kind::THM_1_3: check_thm_1_3(inst, result); break;
      case Kind::COR_1_4: check_cor_1_4(inst, result); break;
      case Kind::LEM_1_1: check_lemma_1_1(inst, result); break;
      case Kind::OW_2_1: check_ow_2_1(inst, result); break;
      case Kind::COR_2_2: check_cor_2_2(inst, result); break;
      case Kind::THM_2_4: check_thm_2_4(inst, result); break;
      case Kind::THM_3_1: check_thm_3_1(inst, result); break;
      case Kind::COUNTEREXAMPLE_1: check_counterexample(inst, result); break;
    }
    if (result.verdict == "fail" && !downgrade_failures)
      result.error =
          "ENGINE BUG SUSPECTED: a proved statement failed to verify";
  } catch (const HypothesisError& e) {
    result.verdict = "error";
    result.error = std::string("hypothesis: ") + e.what();
  } catch (const CheckFailure& e) {
    result.verdict = "fail";
    result.error = downgrade_failures
                       ? std::string(e.what())
                       : std::string("ENGINE BUG SUSPECTED: ") + e.what();
  } catch (const std::exception& e) {
    result.verdict = "error";
    result.error = e.what();
  }
  return result;
}

// ---- suite -----------------------------------------------------------------

namespace {

std::string iso_timestamp_now() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::tm tm_utc;
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

SuiteReport assemble(const std::vector<McKayInstance>& instances,
                     const SuiteOptions& options) {
  set_chartab_seed(options.seed);

  std::vector<InstanceResult> results(instances.size());
  std::atomic<std::size_t> next{0};
  int jobs = std::max(1, options.jobs);
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= instances.size()) break;
      auto started = std::chrono::steady_clock::now();
      results[i] = check_instance(instances[i], options.downgrade_failures);
      if (options.timing) {
        auto elapsed = std::chrono::steady_clock::now() - started;
        results[i].millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
                .count();
      }
    }
  };
  if (jobs == 1 || instances.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  SuiteReport report;
  nlohmann::json doc;
  doc["suite"] = options.suite_name;
  doc["seed"] = options.seed;
  doc["timestamp"] =
      options.timing ? iso_timestamp_now() : "1970-01-01T00:00:00Z";
  nlohmann::json kinds = nlohmann::json::array();
  for (Kind k : options.kinds) kinds.push_back(kind_name(k));
  doc["kinds"] = std::move(kinds);
  doc["limits"] = {{"max_order", options.limits.max_order},
                   {"max_instances", options.limits.max_instances},
                   {"per_ambient", options.limits.per_ambient}};

  nlohmann::json items = nlohmann::json::array();
  std::map<std::string, std::array<int, 3>> tally;  // pass, fail, error
  for (const auto& r : results) {
    nlohmann::json item;
    item["kind"] = r.kind;
    item["label"] = r.label;
    item["group_names"] = r.group_names;
    item["hypotheses"] = r.hypotheses;
    item["lhs"] = r.lhs;
    item["rhs"] = r.rhs;
    item["verdict"] = r.verdict;
    if (!r.error.empty()) item["error"] = r.error;
    item["millis"] = r.millis;
    item["witnesses"] = r.witnesses;
    items.push_back(std::move(item));
    auto& t = tally[r.kind];
    if (r.verdict == "pass") {
      ++t[0];
      ++report.passed;
    } else if (r.verdict == "fail") {
      ++t[1];
      ++report.failed;
    } else {
      ++t[2];
      ++report.errors;
    }
    ++report.total;
  }
  doc["instances"] = std::move(items);
  nlohmann::json totals = nlohmann::json::object();
  for (const auto& [kind, t] : tally)
    totals[kind] = {{"instances", t[0] + t[1] + t[2]},
                    {"pass", t[0]},
                    {"fail", t[1]},
                    {"error", t[2]}};
  totals["all"] = {{"instances", report.total},
                   {"pass", report.passed},
                   {"fail", report.failed},
                   {"error", report.errors}};
  doc["totals"] = std::move(totals);
  report.all_pass = report.total == report.passed;
  doc["all_pass"] = report.all_pass;
  report.document = std::move(doc);
  return report;
}

} // namespace

SuiteReport run_suite(const std::vector<CatalogEntry>& catalog,
                      const SuiteOptions& options) {
  set_chartab_seed(options.seed);
  std::vector<McKayInstance> instances;
  for (Kind kind : options.kinds) {
    auto mined = mine_instances(catalog, kind, options.limits);
    for (auto& inst : mined) instances.push_back(std::move(inst));
  }
  return assemble(instances, options);
}

SuiteReport run_suite_on_instances(const std::vector<McKayInstance>& instances,
                                   const SuiteOptions& options) {
  std::vector<McKayInstance> filtered;
  for (const auto& inst : instances)
    if (std::find(options.kinds.begin(), options.kinds.end(), inst.kind) !=
        options.kinds.end())
      filtered.push_back(inst);
  return assemble(filtered, options);
}

} // namespace charlab
