#pragma once

// Betti tables by iterated mapping cones. Adding a generator u to I gives a
// minimal cone exactly when u admits a witness against I:
//
//   VariableDominance(v): deg_v(u) > deg_v(w) for every w in G(I); or
//   ColonEquality(v):     (I : u) = (I : u/x_v) for some v in supp(u).
//
// Dominance implies colon equality at the same variable, so it is tried
// first as the cheap test. A certified step contributes additively:
//
//   beta_{i,j}(R/(I + u)) = beta_{i,j}(R/I) + beta_{i-1, j-deg u}(R/(I:u)).
//
// The engine peels generators backwards, splitting support-disjoint blocks
// and closing pure-power / principal base cases combinatorially. Where no
// generator of a subideal admits a witness, the policy decides: consult the
// homology oracle for that subideal (recording it in the certificate), or
// fail with the stuck subideal.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "betti_table.hpp"
#include "monomial.hpp"
#include "workspace.hpp"

namespace mcres {

struct StepWitness {
  enum class Kind { VariableDominance, ColonEquality };
  Kind kind;
  int var;  // 0-indexed

  auto operator<=>(const StepWitness&) const = default;
};

struct OrderStep {
  Monomial generator;
  // The first position of an order carries no witness; its step is vacuous.
  std::optional<StepWitness> witness;
};

struct CertifiedOrder {
  int n = 0;
  std::vector<OrderStep> steps;
};

// Checks every non-initial witness against the ideal generated by the
// preceding prefix. The generators must use n variables each.
bool validate_order(const CertifiedOrder& order);

// Precondition: u is not in I and divides no generator of I (so that u
// genuinely joins the minimal generating set); violations are input errors.
// Tries dominance on supp(u) in ascending variable order, then colon
// equality. The zero ideal accepts any u vacuously via dominance.
std::optional<StepWitness> check_step(const MonomialIdeal& ideal, const Monomial& u);

// Searches for an order of G(I) in which every generator strictly dominates
// its prefix in some variable (dominance witnesses only), via a subset
// search memoized on the set of remaining generators. Deterministic
// tie-break by canonical generator order. Generator counts above the cap
// are resource errors; I must be proper and nonzero.
std::optional<CertifiedOrder> find_decreasing_order(const MonomialIdeal& ideal,
                                                    int generator_cap = 22);

// Certificate tree recording how a table was assembled.
struct EngineNode {
  enum class Kind { Point, Principal, PurePowers, Components, ConeStep, OracleLeaf };
  Kind kind;
  MonomialIdeal ideal;
  BettiTable table;
  bool fully_certified = true;
  std::vector<MonomialIdeal> oracle_subideals;  // aggregated over the subtree

  // ConeStep
  Monomial last;
  std::optional<StepWitness> witness;
  std::shared_ptr<const EngineNode> prefix;
  std::shared_ptr<const EngineNode> colon_part;
  // Components
  std::vector<std::shared_ptr<const EngineNode>> children;
};

struct EngineResult {
  BettiTable table;
  bool fully_certified = true;
  std::vector<MonomialIdeal> oracle_subideals;
  std::shared_ptr<const EngineNode> certificate;
};

// The unit ideal is an input error. Results are memoized in the workspace
// keyed by (ideal, policy, field); in strict mode a certification failure
// throws ErrorKind::Certification naming the stuck subideal.
EngineResult betti_engine(const MonomialIdeal& ideal, Workspace& ws);

std::string render_order(const CertifiedOrder& order);

}  // namespace mcres
