#pragma once

// Monomials and monomial ideals, kept in a canonical form: generators are
// sorted lexicographically by exponent vector and form an antichain under
// divisibility. Variables are 0-indexed internally; the text formats and all
// rendered output use x1..xn.

#include <cstdint>
#include <string>
#include <vector>

namespace mcres {

struct Monomial {
  std::vector<int> exponents;

  int vars() const { return static_cast<int>(exponents.size()); }
  int degree() const;
  int deg(int var) const { return exponents[var]; }
  bool is_unit() const { return degree() == 0; }
  bool is_squarefree() const;
  std::vector<int> support() const;

  bool divides(const Monomial& other) const;
  Monomial times(const Monomial& other) const;
  Monomial lcm_with(const Monomial& other) const;
  // lcm(*this, other) / other, the generator map of a monomial colon ideal.
  Monomial colon_by(const Monomial& other) const;
  // *this / x_var; the exponent of var must be positive.
  Monomial divide_var(int var) const;

  auto operator<=>(const Monomial&) const = default;
};

Monomial unit_monomial(int n);
Monomial variable_monomial(int n, int var);
// Convenience factory: make_monomial(4, {{0,1},{2,2}}) = x1*x3^2.
Monomial make_monomial(int n, const std::vector<std::pair<int, int>>& var_exps);

struct MonomialIdeal {
  int n = 0;
  std::vector<Monomial> gens;  // canonical: lex-sorted divisibility antichain

  bool is_zero() const { return gens.empty(); }
  bool is_unit() const { return gens.size() == 1 && gens[0].is_unit(); }
  bool is_proper() const { return !is_unit(); }
  bool is_squarefree() const;
  bool is_maximal_squarefree() const;  // exactly (x1,...,xn)
  Monomial lcm_of_gens() const;        // unit monomial for the zero ideal

  auto operator<=>(const MonomialIdeal&) const = default;
};

// Discards duplicates and non-minimal generators; if the unit monomial is
// present the result is the unit ideal with gens = {1}.
MonomialIdeal minimalize(int n, std::vector<Monomial> gens);

bool contains(const MonomialIdeal& ideal, const Monomial& m);

// (I : u), computed as minimalize({lcm(v,u)/u : v in G(I)}).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);

// Alexander dual of a squarefree ideal: the intersection of the variable
// primes P_supp(v) over the generators v. Requires I squarefree, nonzero,
// proper; involutive on that class.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

// Partition of the generators into support-connected blocks. Each block is
// compressed onto its own variables (order-preserving relabeling), so Betti
// tables of blocks convolve with n adding up to the count of used variables.
struct ComponentSplit {
  struct Block {
    std::vector<int> vars;  // ascending original variable indices
    MonomialIdeal ideal;    // over n = vars.size()
  };
  std::vector<Block> blocks;      // ordered by smallest variable
  std::vector<int> unused_vars;   // variables appearing in no generator
};
ComponentSplit disjoint_components(const MonomialIdeal& ideal);

// Standard polarization: exponent slots are reduced left to right per
// variable; slot 1 keeps the original variable, higher slots map to new
// variables appended after the originals in variable order. The result is
// squarefree and has the same graded Betti numbers.
MonomialIdeal polarize(const MonomialIdeal& ideal);

// Stable string key identifying (n, gens); used for memoization.
std::string canonical_key(const MonomialIdeal& ideal);

}  // namespace mcres
