#include "homology.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "errors.hpp"
#include "gfp_rank.hpp"
#include "parallel.hpp"

namespace mcres {

namespace {

// Faces of the upper Koszul complex at a, as bitmasks over positions in
// supp(a). Admissible tau for a generator g dividing x^a avoid the tight
// variables (those with g_v = a_v), so the facets are the maximal sets
// supp(a) minus tight(g).
std::vector<std::uint64_t> upper_koszul_facet_masks(const MonomialIdeal& ideal,
                                                    const std::vector<int>& a,
                                                    const std::vector<int>& supp) {
  std::vector<std::uint64_t> free_masks;
  for (const auto& g : ideal.gens) {
    bool div = true;
    for (int v = 0; v < ideal.n; ++v) {
      if (g.exponents[v] > a[v]) {
        div = false;
        break;
      }
    }
    if (!div) continue;
    std::uint64_t m = 0;
    for (size_t k = 0; k < supp.size(); ++k)
      if (g.exponents[supp[k]] < a[supp[k]]) m |= std::uint64_t(1) << k;
    free_masks.push_back(m);
  }
  std::sort(free_masks.begin(), free_masks.end());
  free_masks.erase(std::unique(free_masks.begin(), free_masks.end()), free_masks.end());
  // Keep the maximal masks only.
  std::vector<std::uint64_t> facets;
  for (std::uint64_t m : free_masks) {
    bool covered = false;
    for (std::uint64_t other : free_masks) {
      if (other != m && (m & ~other) == 0) {
        covered = true;
        break;
      }
    }
    if (!covered) facets.push_back(m);
  }
  return facets;
}

std::string cache_key(int p, int vertex_count, const std::vector<std::uint64_t>& facets) {
  std::string key;
  key.reserve(facets.size() * 9 + 12);
  key.append(reinterpret_cast<const char*>(&p), sizeof(p));
  key.append(reinterpret_cast<const char*>(&vertex_count), sizeof(vertex_count));
  for (std::uint64_t m : facets) key.append(reinterpret_cast<const char*>(&m), sizeof(m));
  return key;
}

// Relabels the vertices that occur in facets onto 0..k-1, order preserved.
// Homology is invariant under renaming, which is what makes the cache hit
// across multidegrees and across ideals.
std::vector<std::uint64_t> relabel_facets(const std::vector<std::uint64_t>& facets,
                                          int* vertex_count) {
  std::uint64_t used = 0;
  for (std::uint64_t m : facets) used |= m;
  std::vector<int> map(64, -1);
  int next = 0;
  for (int b = 0; b < 64; ++b)
    if (used >> b & 1) map[b] = next++;
  *vertex_count = next;
  std::vector<std::uint64_t> out;
  out.reserve(facets.size());
  for (std::uint64_t m : facets) {
    std::uint64_t r = 0;
    for (int b = 0; b < 64; ++b)
      if (m >> b & 1) r |= std::uint64_t(1) << map[b];
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Reduced homology ranks from a facet mask list (relabeled, nonvoid).
std::vector<int> ranks_from_facets(const std::vector<std::uint64_t>& facets, int p) {
  // Expand to the full face set.
  std::unordered_set<std::uint64_t> face_set;
  for (std::uint64_t f : facets) {
    // Subsets of f, including the empty set.
    std::uint64_t sub = f;
    for (;;) {
      face_set.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }

  int max_card = 0;
  for (std::uint64_t f : face_set)
    max_card = std::max(max_card, std::popcount(f));

  // faces_by_card[c] holds faces with c vertices (dimension c-1), sorted.
  std::vector<std::vector<std::uint64_t>> faces_by_card(max_card + 1);
  for (std::uint64_t f : face_set) faces_by_card[std::popcount(f)].push_back(f);
  for (auto& faces : faces_by_card) std::sort(faces.begin(), faces.end());

  // rank of the boundary map from card-c faces to card-(c-1) faces
  std::vector<int> boundary_rank(max_card + 2, 0);
  for (int c = 1; c <= max_card; ++c) {
    GfpMatrix m;
    m.rows = static_cast<int>(faces_by_card[c - 1].size());
    m.cols = static_cast<int>(faces_by_card[c].size());
    const auto& rows = faces_by_card[c - 1];
    for (int col = 0; col < m.cols; ++col) {
      std::uint64_t f = faces_by_card[c][col];
      int sign = 1;
      for (std::uint64_t rest = f; rest != 0; rest &= rest - 1) {
        std::uint64_t bit = rest & (~rest + 1);
        std::uint64_t sub = f ^ bit;
        int row = static_cast<int>(
            std::lower_bound(rows.begin(), rows.end(), sub) - rows.begin());
        m.entries.push_back({row, col, sign > 0 ? 1 : p - 1});
        sign = -sign;
      }
    }
    boundary_rank[c] = gfp_rank(m, p);
  }

  std::vector<int> ranks(max_card + 1, 0);  // index c = dim H~_{c-1}
  for (int c = 0; c <= max_card; ++c) {
    ranks[c] = static_cast<int>(faces_by_card[c].size()) - boundary_rank[c] -
               boundary_rank[c + 1];
  }
  return ranks;
}

std::vector<int> ranks_cached(const std::vector<std::uint64_t>& facets, int p,
                              HomologyCache* cache) {
  if (facets.empty()) return {};
  int vertex_count = 0;
  auto canon = relabel_facets(facets, &vertex_count);
  // A full simplex (single facet covering every vertex) is contractible; so
  // is any cone. The simplex case is free to detect and common.
  if (canon.size() == 1 && canon[0] != 0 &&
      std::popcount(canon[0]) == vertex_count && vertex_count > 0)
    return std::vector<int>(vertex_count + 1, 0);

  if (!cache) return ranks_from_facets(canon, p);
  std::string key = cache_key(p, vertex_count, canon);
  {
    std::lock_guard<std::mutex> lock(cache->mu);
    auto it = cache->map.find(key);
    if (it != cache->map.end()) return it->second;
  }
  auto ranks = ranks_from_facets(canon, p);
  std::lock_guard<std::mutex> lock(cache->mu);
  cache->map.emplace(std::move(key), ranks);
  return ranks;
}

}  // namespace

SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != ideal.n)
    fail(ErrorKind::Input, "upper_koszul: multidegree length mismatch");
  for (int e : a)
    if (e < 0) fail(ErrorKind::Input, "upper_koszul: negative multidegree");

  std::vector<int> supp;
  for (int v = 0; v < ideal.n; ++v)
    if (a[v] > 0) supp.push_back(v);
  if (supp.size() > 64) fail(ErrorKind::Resource, "upper_koszul: support exceeds 64");

  auto masks = upper_koszul_facet_masks(ideal, a, supp);
  std::vector<std::vector<int>> facets;
  facets.reserve(masks.size());
  for (std::uint64_t m : masks) {
    std::vector<int> f;
    for (size_t k = 0; k < supp.size(); ++k)
      if (m >> k & 1) f.push_back(supp[k]);
    facets.push_back(std::move(f));
  }
  return make_complex(supp, std::move(facets));
}

std::vector<int> homology_ranks(const SimplicialComplex& k, int p, HomologyCache* cache) {
  require_prime_field(p);
  if (k.is_void()) return {};
  std::unordered_map<int, int> pos;
  for (int v : k.vertices) {
    int idx = static_cast<int>(pos.size());
    pos.emplace(v, idx);
  }
  if (pos.size() > 64) fail(ErrorKind::Resource, "homology_ranks: more than 64 vertices");
  std::vector<std::uint64_t> masks;
  masks.reserve(k.facets.size());
  for (const auto& f : k.facets) {
    std::uint64_t m = 0;
    for (int v : f) m |= std::uint64_t(1) << pos.at(v);
    masks.push_back(m);
  }
  return ranks_cached(masks, p, cache);
}

BettiTable MultigradedBetti::coarsen() const {
  BettiTable t;
  t.n = n;
  for (const auto& [key, mult] : entries) {
    int total = 0;
    for (int e : key.second) total += e;
    t.add(key.first, total, mult);
  }
  return t;
}

MultigradedBetti multigraded_betti(const MonomialIdeal& ideal, int p,
                                   HomologyCache* cache, int threads) {
  require_prime_field(p);
  if (ideal.is_unit())
    fail(ErrorKind::Domain, "Betti numbers of R/I require a proper ideal");

  MultigradedBetti out;
  out.n = ideal.n;
  out.entries[{0, std::vector<int>(ideal.n, 0)}] = 1;
  if (ideal.is_zero()) return out;

  Monomial lcm = ideal.lcm_of_gens();
  long long divisor_count = 1;
  for (int e : lcm.exponents) {
    divisor_count *= e + 1;
    if (divisor_count > 8'000'000)
      fail(ErrorKind::Resource, "multigraded_betti: divisor lattice too large");
  }

  // Walk the divisors of lcm(G(I)) in mixed-radix order; each index maps to
  // a unique multidegree, so parallel workers fill disjoint result slots and
  // the ordered merge below keeps the outcome schedule-independent.
  std::vector<std::vector<std::pair<int, int>>> found(static_cast<size_t>(divisor_count));
  auto decode = [&](long long idx) {
    std::vector<int> a(ideal.n);
    for (int v = 0; v < ideal.n; ++v) {
      a[v] = static_cast<int>(idx % (lcm.exponents[v] + 1));
      idx /= lcm.exponents[v] + 1;
    }
    return a;
  };

  parallel_for(static_cast<int>(divisor_count), threads, [&](int idx) {
    std::vector<int> a = decode(idx);
    if (!contains(ideal, Monomial{a})) return;  // void complex, nothing in degree a
    std::vector<int> supp;
    for (int v = 0; v < ideal.n; ++v)
      if (a[v] > 0) supp.push_back(v);
    auto facets = upper_koszul_facet_masks(ideal, a, supp);
    auto ranks = ranks_cached(facets, p, cache);
    for (size_t c = 0; c < ranks.size(); ++c) {
      // H~_{c-1} contributes to homological degree (c-1) + 2 = c + 1.
      if (ranks[c] > 0) found[idx].push_back({static_cast<int>(c) + 1, ranks[c]});
    }
  });

  for (long long idx = 0; idx < divisor_count; ++idx) {
    if (found[idx].empty()) continue;
    std::vector<int> a = decode(idx);
    for (auto [i, rank] : found[idx]) out.entries[{i, a}] += rank;
  }
  return out;
}

BettiTable oracle_betti(const MonomialIdeal& ideal, int p, HomologyCache* cache,
                        int threads) {
  return multigraded_betti(ideal, p, cache, threads).coarsen();
}

std::string render_multigraded(const MultigradedBetti& mg) {
  std::ostringstream os;
  for (const auto& [key, mult] : mg.entries) {
    os << "i=" << key.first << "  deg=(";
    for (size_t v = 0; v < key.second.size(); ++v) {
      if (v) os << ',';
      os << key.second[v];
    }
    os << ")  " << mult << '\n';
  }
  return os.str();
}

}  // namespace mcres
