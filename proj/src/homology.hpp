#pragma once

// Multigraded Betti numbers of R/I from simplicial homology: for i >= 1 and
// a multidegree a, beta_{i,a}(R/I) is the GF(p)-dimension of the reduced
// homology H~_{i-2} of the upper Koszul complex of I at a, plus the single
// unit beta_{0,0} = 1. Conventions for the degenerate complexes matter and
// are fixed here once:
//   - void complex (no faces):       every reduced homology group is 0;
//   - irrelevant complex {∅}:        H~_{-1} = k, everything else 0.
// Multidegrees range over the componentwise divisors of lcm(G(I)); for a
// squarefree ideal these are the subsets of its support, walked as bitmasks.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "betti_table.hpp"
#include "monomial.hpp"
#include "simplicial.hpp"
#include "workspace.hpp"

namespace mcres {

// Faces are the subsets tau of supp(a) with x^a / x^tau in I; this is a
// union of full simplexes, one per generator dividing x^a, so the facet
// list comes straight from the maximal admissible supports. Void when
// x^a is not in I.
SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const std::vector<int>& a);

// Reduced homology ranks over GF(p), index 0 holding dim H~_{-1}, index
// d+1 holding dim H~_d up to the dimension of the complex. Empty vector
// for the void complex.
std::vector<int> homology_ranks(const SimplicialComplex& k, int p,
                                HomologyCache* cache = nullptr);

struct MultigradedBetti {
  int n = 0;
  // (homological degree, multidegree) -> rank; multidegrees are full
  // exponent vectors of length n.
  std::map<std::pair<int, std::vector<int>>, std::int64_t> entries;

  BettiTable coarsen() const;  // total degree |a|
};

// Requires a proper ideal (the unit ideal has no minimal free resolution
// of R/I to speak of). The zero ideal yields the point table.
MultigradedBetti multigraded_betti(const MonomialIdeal& ideal, int p,
                                   HomologyCache* cache = nullptr, int threads = 1);

BettiTable oracle_betti(const MonomialIdeal& ideal, int p,
                        HomologyCache* cache = nullptr, int threads = 1);

std::string render_multigraded(const MultigradedBetti& mg);

}  // namespace mcres
