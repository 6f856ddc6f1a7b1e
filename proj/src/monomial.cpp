#include "monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace mcres {

int Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

bool Monomial::is_squarefree() const {
  for (int e : exponents)
    if (e > 1) return false;
  return true;
}

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  for (int i = 0; i < vars(); ++i)
    if (exponents[i] > 0) out.push_back(i);
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < vars(); ++i)
    if (exponents[i] > other.exponents[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out = *this;
  for (int i = 0; i < vars(); ++i) out.exponents[i] += other.exponents[i];
  return out;
}

Monomial Monomial::lcm_with(const Monomial& other) const {
  Monomial out = *this;
  for (int i = 0; i < vars(); ++i)
    out.exponents[i] = std::max(out.exponents[i], other.exponents[i]);
  return out;
}

Monomial Monomial::colon_by(const Monomial& other) const {
  Monomial out = *this;
  for (int i = 0; i < vars(); ++i)
    out.exponents[i] = std::max(exponents[i] - other.exponents[i], 0);
  return out;
}

Monomial Monomial::divide_var(int var) const {
  if (exponents[var] <= 0) fail(ErrorKind::Internal, "divide_var: exponent is zero");
  Monomial out = *this;
  --out.exponents[var];
  return out;
}

Monomial unit_monomial(int n) { return Monomial{std::vector<int>(n, 0)}; }

Monomial variable_monomial(int n, int var) {
  Monomial m = unit_monomial(n);
  m.exponents[var] = 1;
  return m;
}

Monomial make_monomial(int n, const std::vector<std::pair<int, int>>& var_exps) {
  Monomial m = unit_monomial(n);
  for (auto [v, e] : var_exps) m.exponents[v] += e;
  return m;
}

bool MonomialIdeal::is_squarefree() const {
  for (const auto& g : gens)
    if (!g.is_squarefree()) return false;
  return true;
}

bool MonomialIdeal::is_maximal_squarefree() const {
  if (static_cast<int>(gens.size()) != n) return false;
  for (const auto& g : gens)
    if (g.degree() != 1) return false;
  return true;
}

Monomial MonomialIdeal::lcm_of_gens() const {
  Monomial l = unit_monomial(n);
  for (const auto& g : gens) l = l.lcm_with(g);
  return l;
}

MonomialIdeal minimalize(int n, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.vars() != n) fail(ErrorKind::Internal, "minimalize: variable count mismatch");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (!gens.empty() && gens.front().is_unit()) return MonomialIdeal{n, {unit_monomial(n)}};

  std::vector<Monomial> keep;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : gens) {
      if (h != g && h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) keep.push_back(g);
  }
  return MonomialIdeal{n, std::move(keep)};
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  for (const auto& g : ideal.gens)
    if (g.divides(m)) return true;
  return false;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.gens.size());
  for (const auto& g : ideal.gens) gens.push_back(g.colon_by(u));
  return minimalize(ideal.n, std::move(gens));
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) fail(ErrorKind::Domain, "alexander dual of the zero ideal");
  if (ideal.is_unit()) fail(ErrorKind::Domain, "alexander dual of the unit ideal");
  if (!ideal.is_squarefree())
    fail(ErrorKind::Domain, "alexander dual requires a squarefree ideal");

  // Iteratively intersect the variable primes over generator supports.
  std::vector<Monomial> current = {unit_monomial(ideal.n)};
  for (const auto& g : ideal.gens) {
    std::vector<Monomial> next;
    for (const auto& m : current)
      for (int v : g.support()) next.push_back(m.lcm_with(variable_monomial(ideal.n, v)));
    current = minimalize(ideal.n, std::move(next)).gens;
  }
  return MonomialIdeal{ideal.n, std::move(current)};
}

ComponentSplit disjoint_components(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    fail(ErrorKind::Input, "disjoint_components requires a proper nonzero ideal");

  std::vector<int> parent(ideal.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  std::vector<bool> used(ideal.n, false);
  for (const auto& g : ideal.gens) {
    auto supp = g.support();
    for (int v : supp) used[v] = true;
    for (size_t k = 1; k < supp.size(); ++k) unite(supp[0], supp[k]);
  }

  // Group used variables by component root, ordered by smallest member.
  std::vector<std::vector<int>> var_groups;
  std::vector<int> root_to_group(ideal.n, -1);
  ComponentSplit out;
  for (int v = 0; v < ideal.n; ++v) {
    if (!used[v]) {
      out.unused_vars.push_back(v);
      continue;
    }
    int r = find(v);
    if (root_to_group[r] < 0) {
      root_to_group[r] = static_cast<int>(var_groups.size());
      var_groups.emplace_back();
    }
    var_groups[root_to_group[r]].push_back(v);
  }

  for (auto& vars : var_groups) {
    std::vector<int> pos(ideal.n, -1);
    for (size_t k = 0; k < vars.size(); ++k) pos[vars[k]] = static_cast<int>(k);
    std::vector<Monomial> gens;
    for (const auto& g : ideal.gens) {
      auto supp = g.support();
      if (pos[supp[0]] < 0) continue;
      Monomial m = unit_monomial(static_cast<int>(vars.size()));
      for (int v : supp) m.exponents[pos[v]] = g.exponents[v];
      gens.push_back(std::move(m));
    }
    std::sort(gens.begin(), gens.end());
    int block_n = static_cast<int>(vars.size());
    out.blocks.push_back({std::move(vars), MonomialIdeal{block_n, std::move(gens)}});
  }
  return out;
}

MonomialIdeal polarize(const MonomialIdeal& ideal) {
  std::vector<int> max_exp(ideal.n, 0);
  for (const auto& g : ideal.gens)
    for (int v = 0; v < ideal.n; ++v) max_exp[v] = std::max(max_exp[v], g.exponents[v]);

  // slot_base[v] is the index of the new variable for slot 2 of x_v.
  std::vector<int> slot_base(ideal.n, -1);
  int total = ideal.n;
  for (int v = 0; v < ideal.n; ++v) {
    if (max_exp[v] >= 2) {
      slot_base[v] = total;
      total += max_exp[v] - 1;
    }
  }

  std::vector<Monomial> gens;
  gens.reserve(ideal.gens.size());
  for (const auto& g : ideal.gens) {
    Monomial m = unit_monomial(total);
    for (int v = 0; v < ideal.n; ++v) {
      int e = g.exponents[v];
      if (e == 0) continue;
      m.exponents[v] = 1;
      for (int k = 2; k <= e; ++k) m.exponents[slot_base[v] + (k - 2)] = 1;
    }
    gens.push_back(std::move(m));
  }
  std::sort(gens.begin(), gens.end());
  return MonomialIdeal{total, std::move(gens)};
}

std::string canonical_key(const MonomialIdeal& ideal) {
  std::ostringstream os;
  os << ideal.n << '|';
  for (const auto& g : ideal.gens) {
    for (int e : g.exponents) os << e << ',';
    os << ';';
  }
  return os.str();
}

}  // namespace mcres
