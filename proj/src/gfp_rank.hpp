#pragma once

// Exact matrix rank over GF(p). Small matrices go through dense elimination
// (bit-packed when p = 2); past 2^14 entries a sparse elimination with
// minimum-fill pivoting takes over, densifying its tail once the active
// submatrix is small or has filled in.

#include <cstdint>
#include <vector>

namespace mcres {

struct GfpEntry {
  int row;
  int col;
  int val;  // nonzero mod p
};

struct GfpMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<GfpEntry> entries;
};

bool is_prime(int p);
// Throws a domain error unless p is prime.
void require_prime_field(int p);

int gfp_rank(const GfpMatrix& m, int p);

}  // namespace mcres
