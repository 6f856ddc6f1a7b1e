#pragma once

// Rooted trees and their maximal-path ideals: one squarefree generator per
// root-to-leaf path. With n vertices and m leaves the quotient has Krull
// dimension n-1, total Betti numbers binom(m,i), projective dimension m,
// and depth = regularity = n-m; it is Cohen-Macaulay only for a path.

#include <cstdint>
#include <utility>
#include <vector>

#include "engine.hpp"
#include "monomial.hpp"
#include "simplicial.hpp"
#include "workspace.hpp"

namespace mcres {

struct RootedTree {
  int n = 0;
  int root = 0;                // 0-indexed
  std::vector<int> parent;     // parent[v], with parent[root] = -1
};

// Validates: indices in range, parent[root] = -1, no other vertex is its
// own ancestor, every vertex reaches the root.
RootedTree make_tree(int n, int root, std::vector<int> parent);

int leaf_count(const RootedTree& t);

// Root-to-leaf vertex lists ordered by leaf index; the one-vertex tree has
// the single path [root].
std::vector<std::vector<int>> max_paths(const RootedTree& t);

MonomialIdeal path_ideal(const RootedTree& t);

struct TreeInvariants {
  int n = 0;
  int leaves = 0;
  int dim = 0;
  int proj_dim = 0;
  int depth = 0;
  int reg = 0;
  bool cohen_macaulay = false;
  std::vector<std::int64_t> total_betti;  // binom(leaves, i)
};
TreeInvariants closed_invariants(const RootedTree& t);

// A certified order of the path generators: each path's leaf variable
// occurs in no other path, so it strictly dominates every prefix.
CertifiedOrder find_tree_order(const RootedTree& t);

// The complex whose facets are the path vertex sets (a simplicial tree).
SimplicialComplex facet_complex(const RootedTree& t);

// (regularity, projective dimension) of the Alexander dual ideal, computed
// from the homology oracle of R/dual; equals (m, n-m).
std::pair<int, int> dual_invariants(const RootedTree& t, int p,
                                    HomologyCache* cache = nullptr, int threads = 1);

}  // namespace mcres
