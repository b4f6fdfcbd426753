#include "charlab/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace charlab {

GroupPtr cyclic_group(int n) {
  if (n < 1) throw Error("cyclic group order must be positive");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return FiniteGroup::from_table("C" + std::to_string(n), n, std::move(table));
}

GroupPtr dihedral_group(int order) {
  if (order < 4 || order % 2 != 0)
    throw Error("dihedral group order must be even and at least 4");
  const int n = order / 2;
  // element (i, j) = r^i s^j with index i + j*n; s r s = r^{-1}
  auto idx = [n](int i, int j) { return i + j * n; };
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          int rot = j == 0 ? (i + k) % n : ((i - k) % n + n) % n;
          table[static_cast<std::size_t>(idx(i, j)) * order + idx(k, l)] =
              idx(rot, j ^ l);
        }
  return FiniteGroup::from_table("D" + std::to_string(order), order,
                                 std::move(table));
}

GroupPtr quaternion_group() {
  // a^4 = 1, b^2 = a^2, b a b^{-1} = a^{-1}; element (i, j) = a^i b^j,
  // index i + 4j.
  auto idx = [](int i, int j) { return i + 4 * j; };
  std::vector<int> table(64);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 2; ++l) {
          int rot, refl;
          if (j == 0) {
            rot = (i + k) % 4;
            refl = l;
          } else {
            rot = ((i - k) % 4 + 4) % 4;
            if (l == 1) rot = (rot + 2) % 4; // b^2 = a^2
            refl = 1 ^ l;
          }
          table[static_cast<std::size_t>(idx(i, j)) * 8 + idx(k, l)] =
              idx(rot, refl);
        }
  return FiniteGroup::from_table("Q8", 8, std::move(table));
}

namespace {

std::vector<std::vector<int>> permutations_lex(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

bool is_even_permutation(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

GroupPtr group_from_permutations(std::string name,
                                 std::vector<std::vector<int>> perms) {
  const int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<int> composed(perms[0].size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < composed.size(); ++x)
        composed[x] = perms[a][perms[b][x]];
      auto it = index.find(composed);
      if (it == index.end()) throw Error("permutation set is not closed");
      table[static_cast<std::size_t>(a) * n + b] = it->second;
    }
  return FiniteGroup::from_table(std::move(name), n, std::move(table));
}

} // namespace

GroupPtr symmetric_group(int n) {
  if (n < 1) throw Error("symmetric group degree must be positive");
  long order = 1;
  for (int i = 2; i <= n; ++i) {
    order *= i;
    if (order > order_cap()) throw Error("symmetric group order exceeds cap");
  }
  return group_from_permutations("S" + std::to_string(n), permutations_lex(n));
}

GroupPtr alternating_group(int n) {
  if (n < 1) throw Error("alternating group degree must be positive");
  long order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  if (n >= 2) order /= 2;
  if (order > order_cap()) throw Error("alternating group order exceeds cap");
  auto perms = permutations_lex(n);
  std::vector<std::vector<int>> even;
  for (auto& p : perms)
    if (is_even_permutation(p)) even.push_back(std::move(p));
  return group_from_permutations("A" + std::to_string(n), std::move(even));
}

GroupPtr sl_2_3() {
  // 2x2 matrices over GF(3) with determinant 1; identity listed first,
  // the rest in lexicographic order of (a, b, c, d).
  std::vector<std::array<int, 4>> mats;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if (((a * d - b * c) % 3 + 3) % 3 == 1) mats.push_back({a, b, c, d});
  std::array<int, 4> id{1, 0, 0, 1};
  std::stable_partition(mats.begin(), mats.end(),
                        [&](const std::array<int, 4>& m) { return m == id; });
  const int n = static_cast<int>(mats.size());
  std::map<std::array<int, 4>, int> index;
  for (int i = 0; i < n; ++i) index[mats[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& m = mats[x];
      const auto& k = mats[y];
      std::array<int, 4> prod{(m[0] * k[0] + m[1] * k[2]) % 3,
                              (m[0] * k[1] + m[1] * k[3]) % 3,
                              (m[2] * k[0] + m[3] * k[2]) % 3,
                              (m[2] * k[1] + m[3] * k[3]) % 3};
      table[static_cast<std::size_t>(x) * n + y] = index.at(prod);
    }
  return FiniteGroup::from_table("SL(2,3)", n, std::move(table));
}

GroupPtr frobenius_21() {
  GroupPtr k = cyclic_group(7);
  GroupPtr q = cyclic_group(3);
  // generator of C3 acts as x -> 2x on C7 (2 has order 3 mod 7)
  std::vector<std::vector<int>> action(3, std::vector<int>(7));
  int mult = 1;
  for (int j = 0; j < 3; ++j) {
    for (int x = 0; x < 7; ++x) action[j][x] = (x * mult) % 7;
    mult = (mult * 2) % 7;
  }
  auto g = semidirect_product(k, q, action);
  return g;
}

} // namespace charlab
