#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "betti_table.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "homology.hpp"
#include "monomial.hpp"
#include "simplicial.hpp"
#include "tree.hpp"
#include "workspace.hpp"

using namespace mcres;

namespace {

RootedTree path_tree(int n) {
  std::vector<int> parent(n);
  parent[0] = -1;
  for (int v = 1; v < n; ++v) parent[v] = v - 1;
  return make_tree(n, 0, std::move(parent));
}

RootedTree star_tree() { return make_tree(3, 0, {-1, 0, 0}); }

// Edge 0-1 with two leaves 2, 3 hanging off vertex 1.
RootedTree broom_tree() { return make_tree(4, 0, {-1, 0, 1, 1}); }

RootedTree random_tree(std::mt19937_64& rng, int n) {
  std::vector<int> parent(n);
  parent[0] = -1;
  for (int v = 1; v < n; ++v)
    parent[v] = std::uniform_int_distribution<int>(0, v - 1)(rng);
  return make_tree(n, 0, std::move(parent));
}

MonomialIdeal ideal_of(int n, const std::vector<std::vector<std::pair<int, int>>>& gens) {
  std::vector<Monomial> ms;
  for (const auto& g : gens) ms.push_back(make_monomial(n, g));
  return minimalize(n, std::move(ms));
}

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("make_tree validates the parent array") {
  CHECK_NOTHROW(make_tree(1, 0, {-1}));
  CHECK_NOTHROW(make_tree(3, 1, {1, -1, 1}));

  CHECK_THROWS_AS(make_tree(0, 0, {}), Error);
  CHECK_THROWS_AS(make_tree(2, 0, {-1}), Error);        // length mismatch
  CHECK_THROWS_AS(make_tree(2, 0, {0, 0}), Error);      // root with a parent
  CHECK_THROWS_AS(make_tree(2, 0, {-1, 5}), Error);     // out of range
  CHECK_THROWS_AS(make_tree(2, 0, {-1, 1}), Error);     // self loop
  CHECK_THROWS_AS(make_tree(3, 0, {-1, 2, 1}), Error);  // cycle off the root
  CHECK_THROWS_AS(make_tree(2, 3, {-1, 0}), Error);     // root out of range
  try {
    make_tree(3, 0, {-1, 2, 1});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Input);
  }
}

TEST_CASE("leaf count") {
  CHECK(leaf_count(make_tree(1, 0, {-1})) == 1);
  CHECK(leaf_count(path_tree(5)) == 1);
  CHECK(leaf_count(star_tree()) == 2);
  CHECK(leaf_count(broom_tree()) == 2);
}

TEST_CASE("maximal paths run from the root to each leaf") {
  CHECK(max_paths(path_tree(3)) == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(max_paths(star_tree()) == std::vector<std::vector<int>>{{0, 1}, {0, 2}});
  CHECK(max_paths(make_tree(1, 0, {-1})) == std::vector<std::vector<int>>{{0}});
  CHECK(max_paths(broom_tree()) ==
        std::vector<std::vector<int>>{{0, 1, 2}, {0, 1, 3}});
}

TEST_CASE("path ideals have one generator per leaf") {
  CHECK(path_ideal(star_tree()) == ideal_of(3, {{{0, 1}, {1, 1}}, {{0, 1}, {2, 1}}}));
  CHECK(path_ideal(path_tree(3)) == ideal_of(3, {{{0, 1}, {1, 1}, {2, 1}}}));
  CHECK(path_ideal(broom_tree()) ==
        ideal_of(4, {{{0, 1}, {1, 1}, {2, 1}}, {{0, 1}, {1, 1}, {3, 1}}}));
  CHECK(path_ideal(make_tree(1, 0, {-1})) == ideal_of(1, {{{0, 1}}}));

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    RootedTree t = random_tree(rng, 2 + trial % 9);
    MonomialIdeal pi = path_ideal(t);
    CHECK(static_cast<int>(pi.gens.size()) == leaf_count(t));
    CHECK(pi.is_squarefree());
    for (const auto& g : pi.gens) CHECK(g.deg(t.root) == 1);
  }
}

TEST_CASE("closed invariants of a path") {
  TreeInvariants inv = closed_invariants(path_tree(5));
  CHECK(inv.n == 5);
  CHECK(inv.leaves == 1);
  CHECK(inv.dim == 4);
  CHECK(inv.total_betti == std::vector<std::int64_t>{1, 1});
  CHECK(inv.proj_dim == 1);
  CHECK(inv.reg == 4);
  CHECK(inv.depth == 4);
  CHECK(inv.cohen_macaulay);
}

TEST_CASE("closed invariants of a star") {
  TreeInvariants inv = closed_invariants(star_tree());
  CHECK(inv.leaves == 2);
  CHECK(inv.dim == 2);
  CHECK(inv.total_betti == std::vector<std::int64_t>{1, 2, 1});
  CHECK(inv.proj_dim == 2);
  CHECK(inv.reg == 1);
  CHECK(inv.depth == 1);
  CHECK_FALSE(inv.cohen_macaulay);
}

TEST_CASE("closed invariants of the broom") {
  TreeInvariants inv = closed_invariants(broom_tree());
  CHECK(inv.leaves == 2);
  CHECK(inv.dim == 3);
  CHECK(inv.total_betti == std::vector<std::int64_t>{1, 2, 1});
  CHECK(inv.proj_dim == 2);
  CHECK(inv.reg == 2);
  CHECK(inv.depth == 2);
  CHECK_FALSE(inv.cohen_macaulay);
}

TEST_CASE("closed invariants of the one-vertex tree") {
  TreeInvariants inv = closed_invariants(make_tree(1, 0, {-1}));
  CHECK(inv.leaves == 1);
  CHECK(inv.dim == 0);
  CHECK(inv.proj_dim == 1);
  CHECK(inv.depth == 0);
  CHECK(inv.reg == 0);
  CHECK(inv.cohen_macaulay);
}

TEST_CASE("closed invariants match the engine and the oracle") {
  std::mt19937_64 rng(47);
  Workspace ws;
  for (int trial = 0; trial < 12; ++trial) {
    RootedTree t = random_tree(rng, 2 + trial % 7);
    TreeInvariants inv = closed_invariants(t);
    MonomialIdeal pi = path_ideal(t);

    EngineResult r = betti_engine(pi, ws);
    CHECK(r.fully_certified);
    CHECK(total_betti(r.table) == inv.total_betti);
    CHECK(proj_dim(r.table) == inv.proj_dim);
    CHECK(regularity(r.table) == inv.reg);
    CHECK(depth(r.table) == inv.depth);
    CHECK(r.table == oracle_betti(pi, 2, &ws.hom_cache));
    for (int i = 0; i <= inv.proj_dim; ++i)
      CHECK(inv.total_betti[i] == binom(inv.leaves, i));
    CHECK(inv.cohen_macaulay == (inv.dim == inv.depth));
  }
}

TEST_CASE("tree orders dominate through leaf variables") {
  CertifiedOrder order = find_tree_order(star_tree());
  REQUIRE(order.steps.size() == 2);
  CHECK(validate_order(order));
  REQUIRE(order.steps[1].witness.has_value());
  CHECK(order.steps[1].witness->kind == StepWitness::Kind::VariableDominance);

  CertifiedOrder broom = find_tree_order(broom_tree());
  CHECK(validate_order(broom));

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    RootedTree t = random_tree(rng, 2 + trial % 11);
    CertifiedOrder o = find_tree_order(t);
    CHECK(static_cast<int>(o.steps.size()) == leaf_count(t));
    CHECK(validate_order(o));
    std::vector<Monomial> prefix;
    for (size_t k = 0; k < o.steps.size(); ++k) {
      if (k > 0) {
        REQUIRE(o.steps[k].witness.has_value());
        int v = o.steps[k].witness->var;
        // The witness variable is the leaf of its own path: degree one in
        // its generator and absent from every other one.
        CHECK(o.steps[k].generator.deg(v) == 1);
        for (const auto& other : prefix) CHECK(other.deg(v) == 0);
      }
      prefix.push_back(o.steps[k].generator);
    }
  }
}

TEST_CASE("facet complexes of trees are simplicial trees") {
  SimplicialComplex star = facet_complex(star_tree());
  CHECK(star.facets == std::vector<std::vector<int>>{{0, 1}, {0, 2}});
  CHECK(is_simplicial_tree(star, 15));

  SimplicialComplex path = facet_complex(path_tree(4));
  REQUIRE(path.facets.size() == 1);
  CHECK(path.facets[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(is_simplicial_tree(path, 15));

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 15; ++trial) {
    RootedTree t = random_tree(rng, 2 + trial % 9);
    CHECK(is_simplicial_tree(facet_complex(t), 15));
  }
}

TEST_CASE("dual invariants swap the leaf count and its complement") {
  CHECK(dual_invariants(star_tree(), 2) == std::pair<int, int>{2, 1});
  CHECK(dual_invariants(path_tree(5), 2) == std::pair<int, int>{1, 4});
  CHECK(dual_invariants(broom_tree(), 2) == std::pair<int, int>{2, 2});
  CHECK(dual_invariants(make_tree(1, 0, {-1}), 2) == std::pair<int, int>{1, 0});

  std::mt19937_64 rng(71);
  HomologyCache cache;
  for (int trial = 0; trial < 10; ++trial) {
    RootedTree t = random_tree(rng, 2 + trial % 8);
    int m = leaf_count(t);
    CHECK(dual_invariants(t, 2, &cache) == std::pair<int, int>{m, t.n - m});
  }
}

TEST_CASE("projective dimension transfers to dual regularity") {
  std::mt19937_64 rng(83);
  HomologyCache cache;
  for (int trial = 0; trial < 10; ++trial) {
    RootedTree t = random_tree(rng, 2 + trial % 8);
    MonomialIdeal pi = path_ideal(t);
    BettiTable primal = oracle_betti(pi, 2, &cache);
    CHECK(proj_dim(primal) == dual_invariants(t, 2, &cache).first);
  }
}
