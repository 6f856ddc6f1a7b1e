#pragma once

// Finite simplicial complexes given by their facet list. Two degenerate
// complexes are kept distinct: the void complex (no faces at all, empty
// facet list) and the irrelevant complex {∅} (a single empty facet).

#include <string>
#include <vector>

namespace mcres {

struct SimplicialComplex {
  std::vector<int> vertices;              // sorted ground set
  std::vector<std::vector<int>> facets;   // antichain; each facet sorted

  bool is_void() const { return facets.empty(); }
  bool is_irrelevant() const { return facets.size() == 1 && facets[0].empty(); }
};

// Facets must form an antichain and stay inside the vertex set; throws an
// internal error otherwise (construction sites are all in this codebase).
SimplicialComplex make_complex(std::vector<int> vertices,
                               std::vector<std::vector<int>> facets);

// A facet F is a leaf of K if F is the only facet or there is another facet
// G with F ∩ F' ⊆ F ∩ G for every facet F' ≠ F. K is a simplicial tree when
// it is connected (facet-intersection graph) and every nonempty subset of
// its facets, viewed as a complex, has a leaf. Exhaustive over the 2^q - 1
// subcollections; q above facet_cap is a resource error.
bool is_simplicial_tree(const SimplicialComplex& k, int facet_cap);

std::string render_complex(const SimplicialComplex& k);

}  // namespace mcres
