#include "engine.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "errors.hpp"
#include "formats.hpp"
#include "homology.hpp"

namespace mcres {

namespace {

bool dominates_all(const Monomial& u, int var, const std::vector<Monomial>& gens) {
  for (const auto& g : gens)
    if (g.deg(var) >= u.deg(var)) return false;
  return true;
}

}  // namespace

std::optional<StepWitness> check_step(const MonomialIdeal& ideal, const Monomial& u) {
  if (u.is_unit()) fail(ErrorKind::Input, "check_step: the unit monomial never joins G");
  if (u.vars() != ideal.n) fail(ErrorKind::Input, "check_step: variable count mismatch");
  if (contains(ideal, u))
    fail(ErrorKind::Input, "check_step: " + render_monomial(u) + " already lies in the ideal");
  for (const auto& g : ideal.gens)
    if (u.divides(g))
      fail(ErrorKind::Input,
           "check_step: " + render_monomial(u) + " divides the generator " + render_monomial(g));

  auto supp = u.support();
  for (int v : supp)
    if (dominates_all(u, v, ideal.gens))
      return StepWitness{StepWitness::Kind::VariableDominance, v};

  MonomialIdeal cu = colon(ideal, u);
  for (int v : supp)
    if (colon(ideal, u.divide_var(v)) == cu)
      return StepWitness{StepWitness::Kind::ColonEquality, v};
  return std::nullopt;
}

bool validate_order(const CertifiedOrder& order) {
  std::vector<Monomial> prefix;
  for (size_t k = 0; k < order.steps.size(); ++k) {
    const auto& step = order.steps[k];
    if (step.generator.vars() != order.n) return false;
    if (k > 0) {
      if (!step.witness.has_value()) return false;
      int v = step.witness->var;
      if (v < 0 || v >= order.n || step.generator.deg(v) == 0) return false;
      if (step.witness->kind == StepWitness::Kind::VariableDominance) {
        if (!dominates_all(step.generator, v, prefix)) return false;
      } else {
        MonomialIdeal before = minimalize(order.n, prefix);
        if (colon(before, step.generator) != colon(before, step.generator.divide_var(v)))
          return false;
      }
    }
    prefix.push_back(step.generator);
  }
  return true;
}

std::optional<CertifiedOrder> find_decreasing_order(const MonomialIdeal& ideal,
                                                    int generator_cap) {
  if (ideal.is_zero() || ideal.is_unit())
    fail(ErrorKind::Input, "find_decreasing_order requires a proper nonzero ideal");
  int m = static_cast<int>(ideal.gens.size());
  if (m > generator_cap)
    fail(ErrorKind::Resource, "find_decreasing_order: " + std::to_string(m) +
                                  " generators exceeds cap " + std::to_string(generator_cap));

  // An order exists for a set S iff some u in S strictly dominates S\{u} in
  // a variable and S\{u} is orderable; build from the last element down.
  // Failed subsets are memoized, successful paths short-circuit.
  std::unordered_map<std::uint64_t, bool> dead;
  std::vector<int> order_rev;

  auto dominating_var = [&](int idx, std::uint64_t rest) -> int {
    const Monomial& u = ideal.gens[idx];
    for (int v = 0; v < ideal.n; ++v) {
      if (u.deg(v) == 0) continue;
      bool ok = true;
      for (int k = 0; k < m; ++k) {
        if ((rest >> k & 1) && ideal.gens[k].deg(v) >= u.deg(v)) {
          ok = false;
          break;
        }
      }
      if (ok) return v;
    }
    return -1;
  };

  auto search = [&](auto&& self, std::uint64_t mask) -> bool {
    if (std::popcount(mask) <= 1) {
      if (mask != 0)
        order_rev.push_back(std::countr_zero(mask));
      return true;
    }
    auto it = dead.find(mask);
    if (it != dead.end()) return false;
    for (int idx = 0; idx < m; ++idx) {
      if (!(mask >> idx & 1)) continue;
      std::uint64_t rest = mask & ~(std::uint64_t(1) << idx);
      if (dominating_var(idx, rest) < 0) continue;
      if (self(self, rest)) {
        order_rev.push_back(idx);
        return true;
      }
    }
    dead.emplace(mask, true);
    return false;
  };

  std::uint64_t full = (m == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << m) - 1);
  if (!search(search, full)) return std::nullopt;

  CertifiedOrder order;
  order.n = ideal.n;
  std::vector<Monomial> prefix;
  for (int idx : order_rev) {
    OrderStep step;
    step.generator = ideal.gens[idx];
    if (!prefix.empty()) {
      int v = -1;
      for (int cand = 0; cand < ideal.n && v < 0; ++cand)
        if (step.generator.deg(cand) > 0 && dominates_all(step.generator, cand, prefix))
          v = cand;
      step.witness = StepWitness{StepWitness::Kind::VariableDominance, v};
    }
    prefix.push_back(step.generator);
    order.steps.push_back(std::move(step));
  }
  return order;
}

namespace {

using NodePtr = std::shared_ptr<const EngineNode>;

struct EngineRun {
  Workspace& ws;
  long long budget;
};

std::string memo_key(const MonomialIdeal& ideal, const Options& opts) {
  std::string key = canonical_key(ideal);
  key += (opts.policy == FallbackPolicy::Strict) ? "#s" : "#o";
  key += std::to_string(opts.field);
  return key;
}

NodePtr memo_find(Workspace& ws, const std::string& key) {
  std::lock_guard<std::mutex> lock(ws.engine_memo.mu);
  auto it = ws.engine_memo.map.find(key);
  return it == ws.engine_memo.map.end() ? nullptr : it->second;
}

NodePtr memo_store(Workspace& ws, const std::string& key, NodePtr node) {
  std::lock_guard<std::mutex> lock(ws.engine_memo.mu);
  auto [it, inserted] = ws.engine_memo.map.emplace(key, std::move(node));
  return it->second;  // first writer wins; results are deterministic anyway
}

NodePtr compute(const MonomialIdeal& ideal, EngineRun& run);

NodePtr compute_components(const MonomialIdeal& ideal, const ComponentSplit& split,
                           EngineRun& run) {
  auto node = std::make_shared<EngineNode>();
  node->kind = EngineNode::Kind::Components;
  node->ideal = ideal;
  BettiTable table = point_table(0);
  for (const auto& block : split.blocks) {
    NodePtr child = compute(block.ideal, run);
    table = convolve(table, child->table);
    node->fully_certified = node->fully_certified && child->fully_certified;
    node->oracle_subideals.insert(node->oracle_subideals.end(),
                                  child->oracle_subideals.begin(),
                                  child->oracle_subideals.end());
    node->children.push_back(std::move(child));
  }
  table.n = ideal.n;  // unused variables are free: entries are unaffected
  node->table = std::move(table);
  return node;
}

NodePtr compute(const MonomialIdeal& ideal, EngineRun& run) {
  std::string key = memo_key(ideal, run.ws.opts);
  if (NodePtr hit = memo_find(run.ws, key)) return hit;

  auto node = std::make_shared<EngineNode>();
  node->ideal = ideal;

  if (ideal.is_zero()) {
    node->kind = EngineNode::Kind::Point;
    node->table = point_table(ideal.n);
    return memo_store(run.ws, key, std::move(node));
  }

  if (ideal.gens.size() == 1) {
    node->kind = EngineNode::Kind::Principal;
    node->table = point_table(ideal.n);
    node->table.entries[{1, ideal.gens[0].degree()}] = 1;
    return memo_store(run.ws, key, std::move(node));
  }

  bool pure_powers = true;
  for (const auto& g : ideal.gens)
    if (g.support().size() != 1) pure_powers = false;
  if (pure_powers) {
    std::vector<int> exps;
    exps.reserve(ideal.gens.size());
    for (const auto& g : ideal.gens) exps.push_back(g.degree());
    node->kind = EngineNode::Kind::PurePowers;
    node->table = koszul_pure_powers(exps);
    node->table.n = ideal.n;
    return memo_store(run.ws, key, std::move(node));
  }

  auto split = disjoint_components(ideal);
  if (split.blocks.size() > 1 || !split.unused_vars.empty())
    return memo_store(run.ws, key, compute_components(ideal, split, run));

  // Peel a last generator with a certified step against the others. The
  // walk is greedy in canonical order; in strict mode a failed branch is
  // retried with the next candidate until the backtrack budget runs out.
  for (size_t pick = 0; pick < ideal.gens.size(); ++pick) {
    const Monomial& u = ideal.gens[pick];
    std::vector<Monomial> rest_gens;
    rest_gens.reserve(ideal.gens.size() - 1);
    for (size_t k = 0; k < ideal.gens.size(); ++k)
      if (k != pick) rest_gens.push_back(ideal.gens[k]);
    MonomialIdeal prefix{ideal.n, std::move(rest_gens)};

    auto witness = check_step(prefix, u);
    if (!witness.has_value()) continue;

    NodePtr prefix_node, colon_node;
    try {
      prefix_node = compute(prefix, run);
      colon_node = compute(colon(prefix, u), run);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Certification) throw;
      if (--run.budget <= 0)
        fail(ErrorKind::Certification,
             "backtrack budget exhausted at " + render_ideal_inline(ideal));
      continue;
    }

    node->kind = EngineNode::Kind::ConeStep;
    node->last = u;
    node->witness = witness;
    node->table = entrywise_sum(prefix_node->table,
                                shifted(colon_node->table, 1, u.degree()));
    node->table.n = ideal.n;
    node->fully_certified =
        prefix_node->fully_certified && colon_node->fully_certified;
    node->oracle_subideals = prefix_node->oracle_subideals;
    node->oracle_subideals.insert(node->oracle_subideals.end(),
                                  colon_node->oracle_subideals.begin(),
                                  colon_node->oracle_subideals.end());
    node->prefix = std::move(prefix_node);
    node->colon_part = std::move(colon_node);
    return memo_store(run.ws, key, std::move(node));
  }

  if (run.ws.opts.policy == FallbackPolicy::Strict)
    fail(ErrorKind::Certification,
         "no certified mapping-cone step for " + render_ideal_inline(ideal));

  node->kind = EngineNode::Kind::OracleLeaf;
  node->table = oracle_betti(ideal, run.ws.opts.field, &run.ws.hom_cache,
                             run.ws.opts.threads);
  node->fully_certified = false;
  node->oracle_subideals = {ideal};
  return memo_store(run.ws, key, std::move(node));
}

}  // namespace

EngineResult betti_engine(const MonomialIdeal& ideal, Workspace& ws) {
  if (ideal.is_unit())
    fail(ErrorKind::Input, "betti_engine: the unit ideal has no Betti table");
  EngineRun run{ws, std::max<long long>(ws.opts.backtrack_budget, 1)};
  NodePtr root = compute(ideal, run);
  EngineResult result;
  result.table = root->table;
  result.fully_certified = root->fully_certified;
  result.oracle_subideals = root->oracle_subideals;
  result.certificate = std::move(root);
  return result;
}

std::string render_order(const CertifiedOrder& order) {
  std::ostringstream os;
  os << "decreasing-type order (" << order.steps.size() << " generators):\n";
  for (size_t k = 0; k < order.steps.size(); ++k) {
    const auto& step = order.steps[k];
    os << "  " << k + 1 << ". " << render_monomial(step.generator);
    if (!step.witness.has_value()) {
      os << "    (first step)";
    } else if (step.witness->kind == StepWitness::Kind::VariableDominance) {
      os << "    x" << step.witness->var + 1 << " strictly dominates the prefix";
    } else {
      os << "    colon equality at x" << step.witness->var + 1;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace mcres
