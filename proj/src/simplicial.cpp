#include "simplicial.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <unordered_map>

#include "errors.hpp"

namespace mcres {

SimplicialComplex make_complex(std::vector<int> vertices,
                               std::vector<std::vector<int>> facets) {
  std::sort(vertices.begin(), vertices.end());
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      fail(ErrorKind::Internal, "complex facet with repeated vertex");
    for (int v : f)
      if (!std::binary_search(vertices.begin(), vertices.end(), v))
        fail(ErrorKind::Internal, "complex facet outside vertex set");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (const auto& f : facets)
    for (const auto& g : facets)
      if (&f != &g && std::includes(g.begin(), g.end(), f.begin(), f.end()))
        fail(ErrorKind::Internal, "complex facets are not an antichain");
  return SimplicialComplex{std::move(vertices), std::move(facets)};
}

namespace {

// Facet vertex sets as bitmasks over positions in a local vertex index.
std::vector<std::uint64_t> facet_masks(const SimplicialComplex& k) {
  std::unordered_map<int, int> pos;
  for (int v : k.vertices) {
    int idx = static_cast<int>(pos.size());
    pos.emplace(v, idx);
  }
  if (pos.size() > 64) fail(ErrorKind::Resource, "complex has more than 64 vertices");
  std::vector<std::uint64_t> masks;
  masks.reserve(k.facets.size());
  for (const auto& f : k.facets) {
    std::uint64_t m = 0;
    for (int v : f) m |= std::uint64_t(1) << pos.at(v);
    masks.push_back(m);
  }
  return masks;
}

bool subset_has_leaf(const std::vector<std::uint64_t>& masks, std::uint64_t chosen) {
  std::vector<int> idx;
  for (size_t i = 0; i < masks.size(); ++i)
    if (chosen >> i & 1) idx.push_back(static_cast<int>(i));
  if (idx.size() <= 1) return true;
  for (int f : idx) {
    for (int g : idx) {
      if (g == f) continue;
      std::uint64_t joint = masks[f] & masks[g];
      bool dominates = true;
      for (int h : idx) {
        if (h == f) continue;
        if ((masks[f] & masks[h] & ~joint) != 0) {
          dominates = false;
          break;
        }
      }
      if (dominates) return true;  // f is a leaf witnessed by g
    }
  }
  return false;
}

bool facet_graph_connected(const std::vector<std::uint64_t>& masks) {
  size_t q = masks.size();
  std::vector<bool> seen(q, false);
  std::vector<size_t> stack = {0};
  seen[0] = true;
  size_t visited = 1;
  while (!stack.empty()) {
    size_t f = stack.back();
    stack.pop_back();
    for (size_t g = 0; g < q; ++g) {
      if (!seen[g] && (masks[f] & masks[g]) != 0) {
        seen[g] = true;
        ++visited;
        stack.push_back(g);
      }
    }
  }
  return visited == q;
}

}  // namespace

bool is_simplicial_tree(const SimplicialComplex& k, int facet_cap) {
  size_t q = k.facets.size();
  if (q == 0) return false;
  if (static_cast<int>(q) > facet_cap)
    fail(ErrorKind::Resource,
         "simplicial-tree check: " + std::to_string(q) + " facets exceeds cap " +
             std::to_string(facet_cap));
  auto masks = facet_masks(k);
  if (!facet_graph_connected(masks)) return false;
  for (std::uint64_t chosen = 1; chosen < (std::uint64_t(1) << q); ++chosen)
    if (!subset_has_leaf(masks, chosen)) return false;
  return true;
}

std::string render_complex(const SimplicialComplex& k) {
  std::ostringstream os;
  os << "complex on " << k.vertices.size() << " vertices";
  if (k.is_void()) {
    os << " (void)\n";
    return os.str();
  }
  os << ", " << k.facets.size() << " facet" << (k.facets.size() == 1 ? "" : "s") << '\n';
  for (const auto& f : k.facets) {
    os << "  {";
    for (size_t i = 0; i < f.size(); ++i) {
      if (i) os << ' ';
      os << f[i] + 1;
    }
    os << "}\n";
  }
  return os.str();
}

}  // namespace mcres
