#include "tree.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"
#include "homology.hpp"

namespace mcres {

RootedTree make_tree(int n, int root, std::vector<int> parent) {
  if (n <= 0) fail(ErrorKind::Input, "tree must have at least one vertex");
  if (root < 0 || root >= n) fail(ErrorKind::Input, "tree root out of range");
  if (static_cast<int>(parent.size()) != n)
    fail(ErrorKind::Input, "tree parent array has wrong length");
  if (parent[root] != -1) fail(ErrorKind::Input, "tree root must have no parent");
  for (int v = 0; v < n; ++v) {
    if (v == root) continue;
    if (parent[v] < 0 || parent[v] >= n)
      fail(ErrorKind::Input, "vertex " + std::to_string(v + 1) + " has no valid parent");
  }
  // Every vertex must reach the root without revisiting anything.
  for (int v = 0; v < n; ++v) {
    int cursor = v;
    int steps = 0;
    while (cursor != root) {
      cursor = parent[cursor];
      if (++steps > n)
        fail(ErrorKind::Input, "parent map contains a cycle through vertex " +
                                   std::to_string(v + 1));
    }
  }
  return RootedTree{n, root, std::move(parent)};
}

int leaf_count(const RootedTree& t) {
  std::vector<bool> has_child(t.n, false);
  for (int v = 0; v < t.n; ++v)
    if (v != t.root) has_child[t.parent[v]] = true;
  int m = 0;
  for (int v = 0; v < t.n; ++v)
    if (!has_child[v]) ++m;
  return m;
}

std::vector<std::vector<int>> max_paths(const RootedTree& t) {
  std::vector<bool> has_child(t.n, false);
  for (int v = 0; v < t.n; ++v)
    if (v != t.root) has_child[t.parent[v]] = true;

  std::vector<std::vector<int>> paths;
  for (int leaf = 0; leaf < t.n; ++leaf) {
    if (has_child[leaf]) continue;
    std::vector<int> path;
    for (int v = leaf; v != t.root; v = t.parent[v]) path.push_back(v);
    path.push_back(t.root);
    std::reverse(path.begin(), path.end());
    paths.push_back(std::move(path));
  }
  return paths;  // ordered by leaf index
}

MonomialIdeal path_ideal(const RootedTree& t) {
  std::vector<Monomial> gens;
  for (const auto& path : max_paths(t)) {
    Monomial m = unit_monomial(t.n);
    for (int v : path) m.exponents[v] = 1;
    gens.push_back(std::move(m));
  }
  return minimalize(t.n, std::move(gens));
}

namespace {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

TreeInvariants closed_invariants(const RootedTree& t) {
  int m = leaf_count(t);
  TreeInvariants inv;
  inv.n = t.n;
  inv.leaves = m;
  inv.dim = t.n - 1;
  inv.proj_dim = m;
  inv.depth = t.n - m;
  inv.reg = t.n - m;
  inv.cohen_macaulay = (m == 1);
  for (int i = 0; i <= m; ++i) inv.total_betti.push_back(binomial(m, i));
  return inv;
}

CertifiedOrder find_tree_order(const RootedTree& t) {
  auto paths = max_paths(t);
  CertifiedOrder order;
  order.n = t.n;
  for (size_t k = 0; k < paths.size(); ++k) {
    Monomial m = unit_monomial(t.n);
    for (int v : paths[k]) m.exponents[v] = 1;
    OrderStep step;
    step.generator = std::move(m);
    if (k > 0) {
      // The path's leaf is its last vertex and belongs to no other path.
      step.witness = StepWitness{StepWitness::Kind::VariableDominance, paths[k].back()};
    }
    order.steps.push_back(std::move(step));
  }
  return order;
}

SimplicialComplex facet_complex(const RootedTree& t) {
  std::vector<int> vertices(t.n);
  for (int v = 0; v < t.n; ++v) vertices[v] = v;
  auto facets = max_paths(t);
  for (auto& f : facets) std::sort(f.begin(), f.end());
  return make_complex(std::move(vertices), std::move(facets));
}

std::pair<int, int> dual_invariants(const RootedTree& t, int p, HomologyCache* cache,
                                    int threads) {
  MonomialIdeal dual = alexander_dual(path_ideal(t));
  BettiTable table = oracle_betti(dual, p, cache, threads);
  // The resolution of the ideal is the resolution of R/dual shifted by one
  // homological degree, so module regularity gains one and pd loses one.
  return {regularity(table) + 1, proj_dim(table) - 1};
}

}  // namespace mcres
