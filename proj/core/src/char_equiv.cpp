#include "monoidchar/char_equiv.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "monoidchar/errors.hpp"

namespace monoidchar {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

EquivPartition EquivPartition::from_labels(const std::vector<int>& labels) {
  EquivPartition P;
  P.host_size = static_cast<int>(labels.size());
  P.class_of.assign(P.host_size, -1);
  std::map<int, int> remap;  // label -> canonical class id, by first occurrence
  for (int m = 0; m < P.host_size; ++m) {
    auto [it, fresh] = remap.emplace(labels[m], static_cast<int>(P.classes.size()));
    if (fresh) P.classes.emplace_back();
    P.class_of[m] = it->second;
    P.classes[it->second].push_back(m);
  }
  return P;
}

SubsetPartition k_conjugacy_classes(const GroupView& G, const GaloisImage& T, long p) {
  const FiniteMonoid& M = *G.host;
  std::vector<int> preg;
  for (int g : G.elements)
    if (is_p_regular(M, g, p)) preg.push_back(g);
  for (int g : preg)
    if (T.modulus % group_order(M, g) != 0)
      throw ModulusTooSmall("order of element " + std::to_string(g) +
                            " does not divide modulus " + std::to_string(T.modulus));

  auto related = [&](int g, int h) {
    for (int x : G.elements) {
      int conj = M.mul(M.mul(x, g), G.inverse(x));
      for (long j : T.members)
        if (conj == group_power(M, h, j)) return true;
    }
    return false;
  };

  int n = static_cast<int>(preg.size());
  UnionFind uf(n);
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      if (uf.find(i) != uf.find(k) && related(preg[i], preg[k])) uf.unite(i, k);

  SubsetPartition P;
  P.elements = preg;
  std::map<int, int> class_id;
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = class_id.emplace(uf.find(i), static_cast<int>(P.classes.size()));
    if (fresh) P.classes.emplace_back();
    P.classes[it->second].push_back(preg[i]);
  }
  for (auto& c : P.classes) std::sort(c.begin(), c.end());
  return P;
}

EquivPartition equiv_closure(const FiniteMonoid& M, const FieldSpec& fs) {
  long p = fs.characteristic;
  long n = lcm_p_regular_orders(M, p);
  GaloisImage T = galois_image(fs, n);

  UnionFind uf(M.size);
  for (int a = 0; a < M.size; ++a)
    for (int b = 0; b < M.size; ++b) uf.unite(M.mul(a, b), M.mul(b, a));
  for (int m = 0; m < M.size; ++m) uf.unite(m, p_regular_part(M, m, p));
  for (int m = 0; m < M.size; ++m)
    if (is_p_regular(M, m, p))
      for (long j : T.members) uf.unite(m, group_power(M, m, j));

  std::vector<int> labels(M.size);
  for (int m = 0; m < M.size; ++m) labels[m] = uf.find(m);
  return EquivPartition::from_labels(labels);
}

std::optional<ApproxWitness> approx_test(const FiniteMonoid& M, const FieldSpec& fs,
                                         int a, int b) {
  long p = fs.characteristic;
  long n = lcm_p_regular_orders(M, p);
  GaloisImage T = galois_image(fs, n);

  int aw = omega(M, a);
  int bw = omega(M, b);
  int ap = p_regular_part(M, a, p);
  int bp = p_regular_part(M, b, p);

  std::vector<int> b_twists;  // (b_{p'}^{omega+1})^j for j in T, in T order
  for (long j : T.members) b_twists.push_back(group_power(M, bp, j));

  for (int x = 0; x < M.size; ++x) {
    // x = xyx = (xy)x = b^w x and x = x(yx) = x a^w
    if (M.mul(bw, x) != x || M.mul(x, aw) != x) continue;
    for (int y = 0; y < M.size; ++y) {
      if (M.mul(aw, y) != y || M.mul(y, bw) != y) continue;
      if (M.mul(x, y) != bw || M.mul(y, x) != aw) continue;
      if (M.mul(M.mul(x, y), x) != x || M.mul(M.mul(y, x), y) != y) continue;
      int lhs = M.mul(M.mul(x, ap), y);
      for (size_t t = 0; t < T.members.size(); ++t)
        if (lhs == b_twists[t]) return ApproxWitness{x, y, T.members[t]};
    }
  }
  return std::nullopt;
}

EquivPartition partition_from_approx(const FiniteMonoid& M, const FieldSpec& fs) {
  long p = fs.characteristic;
  // The relation only sees (omega, p'-part) of each side, so memoize on that
  // signature instead of re-searching per element pair.
  std::vector<std::pair<int, int>> sig(M.size);
  for (int m = 0; m < M.size; ++m)
    sig[m] = {omega(M, m), p_regular_part(M, m, p)};

  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, bool> memo;
  auto related = [&](int a, int b) {
    auto key = std::pair{sig[a], sig[b]};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool r = approx_test(M, fs, a, b).has_value();
    memo.emplace(key, r);
    return r;
  };

  std::vector<std::vector<char>> rel(M.size, std::vector<char>(M.size, 0));
  for (int a = 0; a < M.size; ++a)
    for (int b = 0; b < M.size; ++b) rel[a][b] = related(a, b) ? 1 : 0;

  for (int a = 0; a < M.size; ++a) {
    if (!rel[a][a]) throw NotTransitive("relation is not reflexive");
    for (int b = 0; b < M.size; ++b) {
      if (rel[a][b] != rel[b][a]) throw NotTransitive("relation is not symmetric");
      if (!rel[a][b]) continue;
      for (int c = 0; c < M.size; ++c)
        if (rel[b][c] && !rel[a][c]) throw NotTransitive("relation is not transitive");
    }
  }

  std::vector<int> labels(M.size, -1);
  for (int a = 0; a < M.size; ++a) {
    if (labels[a] >= 0) continue;
    for (int b = a; b < M.size; ++b)
      if (rel[a][b]) labels[b] = a;
  }
  return EquivPartition::from_labels(labels);
}

long irr_count(const FiniteMonoid& M, const FieldSpec& fs) {
  long p = fs.characteristic;
  long n = lcm_p_regular_orders(M, p);
  GaloisImage T = galois_image(fs, n);
  long total = 0;
  for (int e : d_class_idempotent_reps(M))
    total += k_conjugacy_classes(maximal_subgroup(M, e), T, p).num_classes();
  return total;
}

PsiBijection psi_bijection(const FiniteMonoid& M, const FieldSpec& fs) {
  long p = fs.characteristic;
  long n = lcm_p_regular_orders(M, p);
  GaloisImage T = galois_image(fs, n);

  PsiBijection psi;
  psi.d_class_reps = d_class_idempotent_reps(M);
  psi.monoid_partition = equiv_closure(M, fs);

  std::set<int> hit;
  for (size_t i = 0; i < psi.d_class_reps.size(); ++i) {
    SubsetPartition P = k_conjugacy_classes(maximal_subgroup(M, psi.d_class_reps[i]), T, p);
    for (size_t c = 0; c < P.classes.size(); ++c) {
      int target = psi.monoid_partition.class_of[P.classes[c][0]];
      for (int g : P.classes[c])
        if (psi.monoid_partition.class_of[g] != target)
          throw BijectionFailure("psi is not well defined on a K-conjugacy class");
      if (!hit.insert(target).second)
        throw BijectionFailure("psi is not injective across the disjoint union");
      psi.assignments.push_back({{static_cast<int>(i), static_cast<int>(c)}, target});
    }
    psi.group_partitions.push_back(std::move(P));
  }
  if (static_cast<int>(hit.size()) != psi.monoid_partition.num_classes())
    throw BijectionFailure("psi is not surjective onto the equivalence classes");
  return psi;
}

}  // namespace monoidchar
