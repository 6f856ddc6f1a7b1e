#pragma once

// Simple hypergraphs (edges of size >= 2 forming an antichain), their edge
// ideals, and Betti tables of an edge ideal plus pure powers of variables.
// Writing I = J + (x_{t}^{a_t} : t in P) with G(I) = G(J) ∪ powers,
//
//   beta_{i,j}(R/I) = sum over sigma ⊆ P of
//                     beta_{i-|sigma|, j-l_sigma}(R/(J : prod x_t^{a_t})),
//
// where l_sigma sums the chosen exponents. When J is an edge ideal the
// colon quotient splits as the variables neighboring sigma (a Koszul
// strand) tensored with the edge ideal of the hypergraph restricted away
// from sigma and its neighborhood; sigma with dependent support drop out.

#include <cstdint>
#include <map>
#include <vector>

#include "betti_table.hpp"
#include "monomial.hpp"
#include "simplicial.hpp"
#include "workspace.hpp"

namespace mcres {

struct Hypergraph {
  int n = 0;
  std::vector<std::uint64_t> edges;  // sorted bitmasks, antichain, sizes >= 2

  auto operator<=>(const Hypergraph&) const = default;
};

// Validates simplicity; vertex lists are 0-indexed.
Hypergraph make_hypergraph(int n, const std::vector<std::vector<int>>& edges);
Hypergraph hypergraph_from_masks(int n, std::vector<std::uint64_t> edges);

MonomialIdeal edge_ideal(const Hypergraph& h);
// Inverse view of a squarefree ideal whose generators all have >= 2
// variables; n is preserved.
Hypergraph hypergraph_of_ideal(const MonomialIdeal& ideal);

bool is_independent(const Hypergraph& h, std::uint64_t set);
// All independent sets, ascending as masks. Vertex counts above 24 are a
// resource error (the enumeration is exponential by nature).
std::vector<std::uint64_t> independent_sets(const Hypergraph& h);
std::vector<std::uint64_t> maximal_independent_sets(const Hypergraph& h);
int alpha(const Hypergraph& h);  // independence number
SimplicialComplex independence_complex(const Hypergraph& h);

// Vertices outside sigma whose addition breaks independence. sigma must be
// independent.
std::uint64_t neighborhood(const Hypergraph& h, std::uint64_t sigma);

// The hypergraph induced away from sigma and its neighborhood: edges E\sigma
// that survive inside the remaining vertex set, re-minimalized. Keeps the
// original labels alongside a compressed copy.
struct RestrictedHypergraph {
  std::vector<int> vertices;  // original labels, ascending
  Hypergraph h;               // relabeled onto 0..k-1
};
RestrictedHypergraph restricted_hypergraph(const Hypergraph& h, std::uint64_t sigma);

struct PowerSpec {
  // (variable, exponent), exponents >= 2, variables distinct.
  std::vector<std::pair<int, int>> powers;
};

// Betti table of R/(J + powers). J is any monomial ideal satisfying
// G(J + powers) = G(J) ∪ powers (checked); the hypergraph decomposition is
// used when J is an edge ideal, otherwise each colon quotient goes to the
// oracle directly.
BettiTable betti_with_powers(const MonomialIdeal& j, const PowerSpec& added,
                             Workspace& ws);

// Last-column data for J_H + squares on a subset: beta_{n,j} counts the
// maximal independent sets inside the squared set with |sigma| = j - n.
struct LastBetti {
  std::map<int, std::int64_t> by_degree;  // internal degree j -> count
  bool depth_zero = false;                // squared set holds a maximal ind. set
};
LastBetti last_betti(const Hypergraph& h, std::uint64_t squared);

struct AllSquaresInvariants {
  BettiTable table;
  int reg = 0;
  bool level = false;
  std::int64_t beta_n = 0;
};
// J_H plus x_v^2 for every vertex; asserts reg = alpha(H), beta_n = number
// of facets of the independence complex, and level <=> purity.
AllSquaresInvariants plus_all_squares_invariants(const Hypergraph& h, Workspace& ws);

// Closed-form table of R/(J_G + all squares) for the complete multipartite
// graph with the given part sizes (at least two parts).
BettiTable complete_multipartite_betti(const std::vector<int>& parts);

struct MultipartiteCheck {
  bool degree_sum_matches = false;   // sum_j beta_{n,j} (j-n) == n
  bool complement_is_cliques = false;
  std::int64_t parts = 0;            // beta_n = number of maximal ind. sets
  bool agree() const { return degree_sum_matches == complement_is_cliques; }
};
// Requires a 2-uniform hypergraph (a graph).
MultipartiteCheck multipartite_characterization(const Hypergraph& g);

}  // namespace mcres
