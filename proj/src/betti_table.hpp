#pragma once

// Graded Betti tables of cyclic quotients R/I, stored sparsely as
// (homological degree i, internal degree j) -> multiplicity. The ambient
// variable count n rides along for depth and for convolution bookkeeping.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mcres {

struct BettiTable {
  int n = 0;
  std::map<std::pair<int, int>, std::int64_t> entries;

  std::int64_t at(int i, int j) const;
  void add(int i, int j, std::int64_t mult);  // drops the entry if it cancels
  bool empty() const { return entries.empty(); }

  auto operator<=>(const BettiTable&) const = default;
};

// Table of R itself: a single entry (0,0) = 1.
BettiTable point_table(int n);

int regularity(const BettiTable& t);  // max j - i
int proj_dim(const BettiTable& t);    // max i
int depth(const BettiTable& t);       // n - proj_dim
// True when the last nonzero homological degree has one internal degree.
bool is_level(const BettiTable& t);

// Cauchy product in (i, j): the table of a tensor product over disjoint
// variable sets. The variable counts add; disjointness is the caller's
// contract and cannot be checked here.
BettiTable convolve(const BettiTable& a, const BettiTable& b);

// Table of R/(x1^a1, ..., xm^am): entry (i, j) counts the i-subsets of the
// exponent multiset with sum j. n is the number of exponents.
BettiTable koszul_pure_powers(const std::vector<int>& exponents);

BettiTable shifted(const BettiTable& t, int di, int dj);
BettiTable entrywise_sum(const BettiTable& a, const BettiTable& b);

// Total Betti numbers: index i -> sum over j.
std::vector<std::int64_t> total_betti(const BettiTable& t);

std::string render_diagram(const BettiTable& t);
std::string render_json(const BettiTable& t);
std::string render_csv(const BettiTable& t);
std::string render_diff(const BettiTable& a, const BettiTable& b);

}  // namespace mcres
