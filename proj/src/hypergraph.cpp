#include "hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>
#include <utility>

#include "engine.hpp"
#include "errors.hpp"
#include "homology.hpp"
#include "parallel.hpp"

namespace mcres {

namespace {

void check_vertex_count(int n) {
  if (n < 0 || n > 64)
    fail(ErrorKind::Input,
         "vertex count must be between 0 and 64, got " + std::to_string(n));
}

std::uint64_t full_mask(int n) {
  return n == 64 ? ~0ull : (1ull << n) - 1;
}

std::vector<int> mask_vertices(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

std::string edge_text(std::uint64_t mask) {
  std::string out = "{";
  for (int v : mask_vertices(mask)) {
    if (out.size() > 1) out += ' ';
    out += std::to_string(v + 1);
  }
  return out + "}";
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (int t = 1; t <= k; ++t) out = out * (n - k + t) / t;
  return out;
}

}  // namespace

Hypergraph hypergraph_from_masks(int n, std::vector<std::uint64_t> edges) {
  check_vertex_count(n);
  for (auto e : edges) {
    if ((e & ~full_mask(n)) != 0)
      fail(ErrorKind::Input,
           "edge " + edge_text(e) + " leaves the vertex set of size " +
               std::to_string(n));
    if (std::popcount(e) < 2)
      fail(ErrorKind::Input, "edge " + edge_text(e) + " has fewer than two vertices");
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = 0; b < edges.size(); ++b)
      if (a != b && (edges[a] & edges[b]) == edges[a])
        fail(ErrorKind::Input, "edge " + edge_text(edges[a]) +
                                   " is contained in edge " + edge_text(edges[b]));
  return Hypergraph{n, std::move(edges)};
}

Hypergraph make_hypergraph(int n, const std::vector<std::vector<int>>& edges) {
  check_vertex_count(n);
  std::vector<std::uint64_t> masks;
  masks.reserve(edges.size());
  for (const auto& edge : edges) {
    std::uint64_t mask = 0;
    for (int v : edge) {
      if (v < 0 || v >= n)
        fail(ErrorKind::Input, "vertex " + std::to_string(v + 1) +
                                   " outside the vertex set of size " +
                                   std::to_string(n));
      if (mask >> v & 1)
        fail(ErrorKind::Input,
             "repeated vertex " + std::to_string(v + 1) + " in an edge");
      mask |= 1ull << v;
    }
    masks.push_back(mask);
  }
  return hypergraph_from_masks(n, std::move(masks));
}

MonomialIdeal edge_ideal(const Hypergraph& h) {
  std::vector<Monomial> gens;
  gens.reserve(h.edges.size());
  for (auto e : h.edges) {
    Monomial g = unit_monomial(h.n);
    for (int v : mask_vertices(e)) g.exponents[v] = 1;
    gens.push_back(std::move(g));
  }
  return minimalize(h.n, std::move(gens));
}

Hypergraph hypergraph_of_ideal(const MonomialIdeal& ideal) {
  check_vertex_count(ideal.n);
  if (ideal.is_unit())
    fail(ErrorKind::Input, "the unit ideal is not an edge ideal");
  std::vector<std::uint64_t> masks;
  masks.reserve(ideal.gens.size());
  for (const auto& g : ideal.gens) {
    std::uint64_t mask = 0;
    int size = 0;
    for (int v = 0; v < ideal.n; ++v) {
      if (g.exponents[v] > 1)
        fail(ErrorKind::Input, "edge ideals are squarefree");
      if (g.exponents[v] == 1) {
        mask |= 1ull << v;
        ++size;
      }
    }
    if (size < 2)
      fail(ErrorKind::Input,
           "edge ideal generators involve at least two variables");
    masks.push_back(mask);
  }
  return hypergraph_from_masks(ideal.n, std::move(masks));
}

bool is_independent(const Hypergraph& h, std::uint64_t set) {
  for (auto e : h.edges)
    if ((set & e) == e) return false;
  return true;
}

std::vector<std::uint64_t> independent_sets(const Hypergraph& h) {
  if (h.n > 24)
    fail(ErrorKind::Resource,
         "independent-set enumeration is capped at 24 vertices, got " +
             std::to_string(h.n));
  std::vector<std::uint64_t> out;
  for (std::uint64_t set = 0; set <= full_mask(h.n); ++set) {
    if (is_independent(h, set)) out.push_back(set);
    if (set == full_mask(h.n)) break;
  }
  return out;
}

std::vector<std::uint64_t> maximal_independent_sets(const Hypergraph& h) {
  const auto ind = independent_sets(h);
  const std::unordered_set<std::uint64_t> members(ind.begin(), ind.end());
  std::vector<std::uint64_t> out;
  for (auto set : ind) {
    bool maximal = true;
    for (int v = 0; v < h.n && maximal; ++v)
      if (!(set >> v & 1) && members.count(set | 1ull << v)) maximal = false;
    if (maximal) out.push_back(set);
  }
  return out;
}

int alpha(const Hypergraph& h) {
  int best = 0;
  for (auto set : maximal_independent_sets(h))
    best = std::max(best, std::popcount(set));
  return best;
}

SimplicialComplex independence_complex(const Hypergraph& h) {
  std::vector<std::vector<int>> facets;
  for (auto set : maximal_independent_sets(h))
    facets.push_back(mask_vertices(set));
  std::vector<int> ground(h.n);
  for (int v = 0; v < h.n; ++v) ground[v] = v;
  return make_complex(std::move(ground), std::move(facets));
}

std::uint64_t neighborhood(const Hypergraph& h, std::uint64_t sigma) {
  if (!is_independent(h, sigma))
    fail(ErrorKind::Input,
         "neighborhood of the dependent set " + edge_text(sigma));
  std::uint64_t out = 0;
  for (int v = 0; v < h.n; ++v) {
    if (sigma >> v & 1) continue;
    if (!is_independent(h, sigma | 1ull << v)) out |= 1ull << v;
  }
  return out;
}

RestrictedHypergraph restricted_hypergraph(const Hypergraph& h,
                                           std::uint64_t sigma) {
  const std::uint64_t killed = sigma | neighborhood(h, sigma);
  const std::uint64_t remaining = full_mask(h.n) & ~killed;

  std::vector<std::uint64_t> traces;
  for (auto e : h.edges) {
    const std::uint64_t f = e & ~sigma;
    if ((f & ~remaining) != 0) continue;
    if (std::popcount(f) < 2)
      fail(ErrorKind::Internal,
           "restriction produced the short edge " + edge_text(f));
    traces.push_back(f);
  }
  std::sort(traces.begin(), traces.end(),
            [](std::uint64_t a, std::uint64_t b) {
              const int pa = std::popcount(a), pb = std::popcount(b);
              return pa != pb ? pa < pb : a < b;
            });
  std::vector<std::uint64_t> kept;
  for (auto f : traces) {
    bool redundant = false;
    for (auto g : kept)
      if ((f & g) == g) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(f);
  }

  RestrictedHypergraph out;
  out.vertices = mask_vertices(remaining);
  std::vector<int> position(h.n, -1);
  for (std::size_t i = 0; i < out.vertices.size(); ++i)
    position[out.vertices[i]] = static_cast<int>(i);
  for (auto& f : kept) {
    std::uint64_t relabeled = 0;
    for (int v : mask_vertices(f)) relabeled |= 1ull << position[v];
    f = relabeled;
  }
  out.h = hypergraph_from_masks(static_cast<int>(out.vertices.size()),
                                std::move(kept));
  return out;
}

namespace {

// Betti table of R/(J_H : prod x_v^2 over sigma) through the tensor
// splitting: a Koszul strand on the neighborhood variables times the table
// of the restriction. Returns an empty table for dependent sigma.
BettiTable colon_table_by_restriction(const Hypergraph& h, std::uint64_t sigma,
                                      Workspace& ws) {
  if (!is_independent(h, sigma)) return BettiTable{};
  const auto restricted = restricted_hypergraph(h, sigma);
  const int killed =
      std::popcount(neighborhood(h, sigma));
  BettiTable sub;
  if (restricted.h.edges.empty()) {
    sub = point_table(restricted.h.n);
  } else {
    const MonomialIdeal sub_ideal = edge_ideal(restricted.h);
    if (ws.opts.hyper_subtables == SubtableSource::Engine)
      sub = betti_engine(sub_ideal, ws).table;
    else
      sub = oracle_betti(sub_ideal, ws.opts.field, &ws.hom_cache, 1);
  }
  return convolve(koszul_pure_powers(std::vector<int>(killed, 1)), sub);
}

}  // namespace

BettiTable betti_with_powers(const MonomialIdeal& j, const PowerSpec& added,
                             Workspace& ws) {
  if (j.is_unit()) fail(ErrorKind::Input, "the base ideal must be proper");
  const int n = j.n;

  std::vector<char> used(n, 0);
  for (auto [v, a] : added.powers) {
    if (v < 0 || v >= n)
      fail(ErrorKind::Input, "power variable x" + std::to_string(v + 1) +
                                 " outside the ring with " + std::to_string(n) +
                                 " variables");
    if (a < 2)
      fail(ErrorKind::Input, "power exponents must be at least 2, got " +
                                 std::to_string(a) + " on x" +
                                 std::to_string(v + 1));
    if (used[v])
      fail(ErrorKind::Input, "repeated power variable x" + std::to_string(v + 1));
    used[v] = 1;
  }

  const MonomialIdeal base = minimalize(n, j.gens);
  std::vector<Monomial> powers;
  powers.reserve(added.powers.size());
  for (auto [v, a] : added.powers)
    powers.push_back(make_monomial(n, {{v, a}}));
  {
    std::vector<Monomial> expected = base.gens;
    expected.insert(expected.end(), powers.begin(), powers.end());
    std::sort(expected.begin(), expected.end());
    std::vector<Monomial> joined = base.gens;
    joined.insert(joined.end(), powers.begin(), powers.end());
    if (minimalize(n, std::move(joined)).gens != expected)
      fail(ErrorKind::Input,
           "adding the powers changes the minimal generating set");
  }

  const int m = static_cast<int>(added.powers.size());
  if (m > 20)
    fail(ErrorKind::Resource,
         "more than 20 power variables, got " + std::to_string(m));

  bool edge_route = n <= 64;
  for (const auto& g : base.gens) {
    int size = 0;
    for (int v = 0; v < n && edge_route; ++v) {
      if (g.exponents[v] > 1) edge_route = false;
      if (g.exponents[v] == 1) ++size;
    }
    if (size < 2) edge_route = false;
    if (!edge_route) break;
  }
  Hypergraph h;
  if (edge_route) h = hypergraph_of_ideal(base);

  const std::size_t terms = 1ull << m;
  std::vector<BettiTable> tables(terms);
  std::vector<std::pair<int, int>> shifts(terms);
  parallel_for(terms, ws.opts.threads, [&](std::size_t subset) {
    int rank = 0, degree = 0;
    std::uint64_t sigma = 0;
    Monomial product = unit_monomial(n);
    for (int t = 0; t < m; ++t) {
      if (!(subset >> t & 1)) continue;
      const auto [v, a] = added.powers[t];
      ++rank;
      degree += a;
      sigma |= 1ull << v;
      product.exponents[v] = a;
    }
    shifts[subset] = {rank, degree};
    if (edge_route) {
      tables[subset] = colon_table_by_restriction(h, sigma, ws);
      return;
    }
    const MonomialIdeal quotient = colon(base, product);
    if (quotient.is_unit()) return;
    tables[subset] =
        oracle_betti(quotient, ws.opts.field, &ws.hom_cache, 1);
  });

  BettiTable out;
  out.n = n;
  for (std::size_t subset = 0; subset < terms; ++subset) {
    if (tables[subset].entries.empty()) continue;
    const auto [di, dj] = shifts[subset];
    for (const auto& [key, mult] : tables[subset].entries)
      out.add(key.first + di, key.second + dj, mult);
  }
  return out;
}

LastBetti last_betti(const Hypergraph& h, std::uint64_t squared) {
  if ((squared & ~full_mask(h.n)) != 0)
    fail(ErrorKind::Input, "squared set leaves the vertex set");
  LastBetti out;
  for (auto set : maximal_independent_sets(h))
    if ((set & ~squared) == 0) ++out.by_degree[h.n + std::popcount(set)];
  out.depth_zero = !out.by_degree.empty();
  return out;
}

AllSquaresInvariants plus_all_squares_invariants(const Hypergraph& h,
                                                 Workspace& ws) {
  PowerSpec squares;
  for (int v = 0; v < h.n; ++v) squares.powers.emplace_back(v, 2);

  AllSquaresInvariants out;
  out.table = betti_with_powers(edge_ideal(h), squares, ws);
  out.reg = regularity(out.table);
  out.level = is_level(out.table);
  for (const auto& [key, mult] : out.table.entries)
    if (key.first == h.n) out.beta_n += mult;

  const auto facets = maximal_independent_sets(h);
  if (out.reg != alpha(h))
    fail(ErrorKind::Internal,
         "regularity disagrees with the independence number");
  if (out.beta_n != static_cast<std::int64_t>(facets.size()))
    fail(ErrorKind::Internal,
         "last total Betti number disagrees with the facet count");
  bool pure = true;
  for (auto set : facets)
    if (std::popcount(set) != std::popcount(facets.front())) pure = false;
  if (out.level != pure)
    fail(ErrorKind::Internal,
         "levelness disagrees with purity of the independence complex");
  return out;
}

BettiTable complete_multipartite_betti(const std::vector<int>& parts) {
  if (parts.size() < 2)
    fail(ErrorKind::Input, "at least two parts are required");
  int n = 0;
  for (int size : parts) {
    if (size < 1) fail(ErrorKind::Input, "part sizes must be positive");
    n += size;
  }

  BettiTable out;
  out.n = n;
  out.add(0, 0, 1);

  // Linear strand of the edge ideal itself. Choosing l parts and a nonempty
  // set inside each gives the generating function below; layer[l] collects
  // the choices with exactly l parts by degree.
  std::vector<std::vector<std::int64_t>> layer(parts.size() + 1);
  layer[0] = {1};
  std::size_t chosen = 0;
  for (int size : parts) {
    std::vector<std::int64_t> nonempty(size + 1, 0);
    for (int d = 1; d <= size; ++d) nonempty[d] = binomial(size, d);
    for (std::size_t l = chosen + 1; l-- > 0;) {
      if (layer[l].empty()) continue;
      auto& target = layer[l + 1];
      target.resize(std::max(target.size(), layer[l].size() + size), 0);
      for (std::size_t d = 0; d < layer[l].size(); ++d) {
        if (layer[l][d] == 0) continue;
        for (int e = 1; e <= size; ++e)
          target[d + e] += layer[l][d] * nonempty[e];
      }
    }
    ++chosen;
  }
  for (std::size_t l = 2; l < layer.size(); ++l)
    for (std::size_t d = 2; d < layer[l].size(); ++d)
      if (layer[l][d] != 0)
        out.add(static_cast<int>(d) - 1, static_cast<int>(d),
                static_cast<std::int64_t>(l - 1) * layer[l][d]);

  for (int size : parts)
    for (int i = 1; i <= n; ++i)
      for (int jj = i + 1; jj <= 2 * i; ++jj) {
        const std::int64_t c =
            binomial(size, jj - i) * binomial(n - size, 2 * i - jj);
        if (c != 0) out.add(i, jj, c);
      }
  return out;
}

MultipartiteCheck multipartite_characterization(const Hypergraph& g) {
  for (auto e : g.edges)
    if (std::popcount(e) != 2)
      fail(ErrorKind::Input, "a graph is required, found the edge " +
                                 edge_text(e));
  const int n = g.n;
  const auto last = last_betti(g, full_mask(n));

  MultipartiteCheck out;
  std::int64_t weighted = 0;
  for (const auto& [degree, count] : last.by_degree) {
    weighted += count * (degree - n);
    out.parts += count;
  }
  out.degree_sum_matches = (weighted == n);

  std::vector<std::uint64_t> complement(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const std::uint64_t pair = (1ull << u) | (1ull << v);
      if (std::find(g.edges.begin(), g.edges.end(), pair) == g.edges.end()) {
        complement[u] |= 1ull << v;
        complement[v] |= 1ull << u;
      }
    }
  std::vector<int> component(n, -1);
  bool cliques = true;
  for (int start = 0; start < n; ++start) {
    if (component[start] != -1) continue;
    std::vector<int> stack{start};
    component[start] = start;
    std::uint64_t members = 0;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      members |= 1ull << u;
      for (int v : mask_vertices(complement[u]))
        if (component[v] == -1) {
          component[v] = start;
          stack.push_back(v);
        }
    }
    for (int u : mask_vertices(members))
      if ((complement[u] & members) != (members & ~(1ull << u)))
        cliques = false;
  }
  out.complement_is_cliques = cliques;
  return out;
}

}  // namespace mcres
