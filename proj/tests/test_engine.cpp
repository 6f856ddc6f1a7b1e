#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "betti_table.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "homology.hpp"
#include "monomial.hpp"
#include "workspace.hpp"

using namespace mcres;

namespace {

MonomialIdeal ideal_of(int n, const std::vector<std::vector<std::pair<int, int>>>& gens) {
  std::vector<Monomial> ms;
  for (const auto& g : gens) ms.push_back(make_monomial(n, g));
  return minimalize(n, std::move(ms));
}

MonomialIdeal four_generator_chain() {
  return ideal_of(4, {{{0, 1}, {1, 1}}, {{1, 1}, {2, 1}}, {{2, 2}}, {{2, 1}, {3, 1}}});
}

MonomialIdeal triangle() {
  return ideal_of(3, {{{0, 1}, {1, 1}}, {{1, 1}, {2, 1}}, {{0, 1}, {2, 1}}});
}

// Stanley-Reisner ideal of the six-vertex projective plane: no generator
// admits a certified step against the other nine.
MonomialIdeal projective_plane_ideal() {
  return ideal_of(6, {{{0, 1}, {1, 1}, {4, 1}},
                      {{0, 1}, {1, 1}, {5, 1}},
                      {{0, 1}, {2, 1}, {3, 1}},
                      {{0, 1}, {2, 1}, {5, 1}},
                      {{0, 1}, {3, 1}, {4, 1}},
                      {{1, 1}, {2, 1}, {3, 1}},
                      {{1, 1}, {2, 1}, {4, 1}},
                      {{1, 1}, {3, 1}, {5, 1}},
                      {{2, 1}, {4, 1}, {5, 1}},
                      {{3, 1}, {4, 1}, {5, 1}}});
}

MonomialIdeal random_ideal(std::mt19937_64& rng, int n, int gens, int max_exp) {
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::vector<Monomial> ms;
  for (int k = 0; k < gens; ++k) {
    Monomial m = unit_monomial(n);
    for (int v = 0; v < n; ++v) m.exponents[v] = exp(rng);
    if (m.is_unit()) m = variable_monomial(n, 0);
    ms.push_back(std::move(m));
  }
  return minimalize(n, std::move(ms));
}

}  // namespace

TEST_CASE("check_step finds a dominating variable") {
  MonomialIdeal i = ideal_of(3, {{{0, 1}, {1, 1}}, {{1, 1}, {2, 1}}});
  auto w = check_step(i, make_monomial(3, {{2, 2}}));
  REQUIRE(w.has_value());
  CHECK(w->kind == StepWitness::Kind::VariableDominance);
  CHECK(w->var == 2);

  MonomialIdeal principal = ideal_of(3, {{{0, 1}, {1, 1}}});
  auto w2 = check_step(principal, make_monomial(3, {{0, 1}, {2, 1}}));
  REQUIRE(w2.has_value());
  CHECK(w2->kind == StepWitness::Kind::VariableDominance);
  CHECK(w2->var == 2);
}

TEST_CASE("check_step falls back to colon equality") {
  // Closing a triangle: no variable of x1*x3 strictly dominates, yet
  // dropping the x1 leaves the colon ideal (x2) unchanged.
  MonomialIdeal path = ideal_of(3, {{{0, 1}, {1, 1}}, {{1, 1}, {2, 1}}});
  Monomial u = make_monomial(3, {{0, 1}, {2, 1}});
  auto w = check_step(path, u);
  REQUIRE(w.has_value());
  CHECK(w->kind == StepWitness::Kind::ColonEquality);
  CHECK(w->var == 0);
  CHECK(colon(path, u) == colon(path, u.divide_var(w->var)));
}

TEST_CASE("check_step accepts anything against the zero ideal") {
  MonomialIdeal zero{3, {}};
  auto w = check_step(zero, make_monomial(3, {{1, 2}}));
  REQUIRE(w.has_value());
  CHECK(w->kind == StepWitness::Kind::VariableDominance);
  CHECK(w->var == 1);
}

TEST_CASE("check_step rejects redundant generators") {
  MonomialIdeal i = ideal_of(3, {{{0, 1}, {1, 1}}});
  CHECK_THROWS_AS(check_step(i, make_monomial(3, {{0, 1}, {1, 1}, {2, 1}})), Error);
  CHECK_THROWS_AS(check_step(i, make_monomial(3, {{0, 1}})), Error);
  CHECK_THROWS_AS(check_step(i, make_monomial(3, {{0, 1}, {1, 1}})), Error);
  try {
    check_step(i, make_monomial(3, {{0, 1}}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Input);
  }
}

TEST_CASE("check_step may find nothing") {
  MonomialIdeal i = projective_plane_ideal();
  for (size_t pick = 0; pick < i.gens.size(); ++pick) {
    std::vector<Monomial> rest;
    for (size_t k = 0; k < i.gens.size(); ++k)
      if (k != pick) rest.push_back(i.gens[k]);
    CHECK_FALSE(check_step(MonomialIdeal{6, rest}, i.gens[pick]).has_value());
  }
}

TEST_CASE("decreasing order for the four-generator chain") {
  auto order = find_decreasing_order(four_generator_chain());
  REQUIRE(order.has_value());
  REQUIRE(order->steps.size() == 4);
  CHECK(validate_order(*order));
  CHECK_FALSE(order->steps[0].witness.has_value());
  for (size_t k = 1; k < 4; ++k) {
    REQUIRE(order->steps[k].witness.has_value());
    CHECK(order->steps[k].witness->kind == StepWitness::Kind::VariableDominance);
  }
}

TEST_CASE("a principal ideal yields the one-step order") {
  auto order = find_decreasing_order(ideal_of(2, {{{0, 1}, {1, 1}}}));
  REQUIRE(order.has_value());
  REQUIRE(order->steps.size() == 1);
  CHECK_FALSE(order->steps[0].witness.has_value());
  CHECK(validate_order(*order));
}

TEST_CASE("the triangle has no dominance order") {
  CHECK_FALSE(find_decreasing_order(triangle()).has_value());
}

TEST_CASE("order search enforces the generator cap") {
  CHECK_THROWS_AS(find_decreasing_order(triangle(), 2), Error);
  try {
    find_decreasing_order(triangle(), 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Resource);
  }
  CHECK_THROWS_AS(find_decreasing_order(MonomialIdeal{2, {}}), Error);
  CHECK_THROWS_AS(find_decreasing_order(minimalize(2, {unit_monomial(2)})), Error);
}

TEST_CASE("validate_order checks the claimed witnesses") {
  auto order = find_decreasing_order(four_generator_chain());
  REQUIRE(order.has_value());

  CertifiedOrder missing = *order;
  missing.steps[2].witness.reset();
  CHECK_FALSE(validate_order(missing));

  CertifiedOrder wrong_var = *order;
  wrong_var.steps[1].witness->var = 0;
  CHECK_FALSE(validate_order(wrong_var));

  CertifiedOrder bad_ambient = *order;
  bad_ambient.n = 3;
  CHECK_FALSE(validate_order(bad_ambient));
}

TEST_CASE("validate_order accepts a hand-built colon witness") {
  CertifiedOrder order;
  order.n = 3;
  order.steps.push_back({make_monomial(3, {{0, 1}, {1, 1}}), std::nullopt});
  order.steps.push_back({make_monomial(3, {{1, 1}, {2, 1}}),
                         StepWitness{StepWitness::Kind::VariableDominance, 2}});
  order.steps.push_back({make_monomial(3, {{0, 1}, {2, 1}}),
                         StepWitness{StepWitness::Kind::ColonEquality, 0}});
  CHECK(validate_order(order));

  order.steps[2].witness->kind = StepWitness::Kind::VariableDominance;
  CHECK_FALSE(validate_order(order));
}

TEST_CASE("render_order spells out the witnesses") {
  auto order = find_decreasing_order(four_generator_chain());
  REQUIRE(order.has_value());
  CHECK(render_order(*order) ==
        "decreasing-type order (4 generators):\n"
        "  1. x1*x2    (first step)\n"
        "  2. x2*x3    x3 strictly dominates the prefix\n"
        "  3. x3^2    x3 strictly dominates the prefix\n"
        "  4. x3*x4    x4 strictly dominates the prefix\n");
}

TEST_CASE("engine handles the base cases") {
  Workspace ws;
  CHECK(betti_engine(MonomialIdeal{3, {}}, ws).table == point_table(3));
  CHECK(betti_engine(MonomialIdeal{3, {}}, ws).certificate->kind ==
        EngineNode::Kind::Point);

  EngineResult principal = betti_engine(ideal_of(2, {{{0, 1}}}), ws);
  CHECK(principal.certificate->kind == EngineNode::Kind::Principal);
  CHECK(principal.table.entries ==
        std::map<std::pair<int, int>, std::int64_t>{{{0, 0}, 1}, {{1, 1}, 1}});

  EngineResult powers = betti_engine(ideal_of(2, {{{0, 2}}, {{1, 2}}}), ws);
  CHECK(powers.certificate->kind == EngineNode::Kind::PurePowers);
  CHECK(powers.table == koszul_pure_powers({2, 2}));

  CHECK_THROWS_AS(betti_engine(minimalize(2, {unit_monomial(2)}), ws), Error);
}

TEST_CASE("engine splits variable-disjoint blocks") {
  Workspace ws;
  EngineResult r = betti_engine(ideal_of(4, {{{0, 1}, {1, 1}}, {{2, 1}, {3, 1}}}), ws);
  CHECK(r.certificate->kind == EngineNode::Kind::Components);
  CHECK(r.certificate->children.size() == 2);
  CHECK(r.fully_certified);
  CHECK(r.table.n == 4);
  CHECK(r.table.entries == std::map<std::pair<int, int>, std::int64_t>{
                               {{0, 0}, 1}, {{1, 2}, 2}, {{2, 4}, 1}});
}

TEST_CASE("engine certifies two quadrics sharing a variable") {
  Workspace ws;
  EngineResult r = betti_engine(ideal_of(3, {{{0, 1}, {1, 1}}, {{0, 1}, {2, 1}}}), ws);
  CHECK(r.certificate->kind == EngineNode::Kind::ConeStep);
  CHECK(r.fully_certified);
  CHECK(r.oracle_subideals.empty());
  CHECK(r.table.entries == std::map<std::pair<int, int>, std::int64_t>{
                               {{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}});
}

TEST_CASE("engine table for a mixed ideal") {
  Workspace ws;
  EngineResult r = betti_engine(ideal_of(2, {{{0, 1}, {1, 1}}, {{0, 2}}, {{1, 2}}}), ws);
  CHECK(r.fully_certified);
  CHECK(r.table.entries == std::map<std::pair<int, int>, std::int64_t>{
                               {{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}});
}

TEST_CASE("engine certifies the four-generator chain") {
  Workspace ws;
  EngineResult r = betti_engine(four_generator_chain(), ws);
  CHECK(r.fully_certified);
  CHECK(r.certificate->kind == EngineNode::Kind::ConeStep);
  CHECK(r.certificate->prefix != nullptr);
  CHECK(r.certificate->colon_part != nullptr);
  REQUIRE(r.certificate->witness.has_value());
  CHECK(r.table.entries ==
        std::map<std::pair<int, int>, std::int64_t>{
            {{0, 0}, 1}, {{1, 2}, 4}, {{2, 3}, 4}, {{3, 4}, 1}});
}

TEST_CASE("engine certifies the triangle through colon equality") {
  Workspace ws;
  EngineResult r = betti_engine(triangle(), ws);
  CHECK(r.fully_certified);
  CHECK(r.certificate->kind == EngineNode::Kind::ConeStep);
  REQUIRE(r.certificate->witness.has_value());
  CHECK(r.certificate->witness->kind == StepWitness::Kind::ColonEquality);
  CHECK(r.table.entries == std::map<std::pair<int, int>, std::int64_t>{
                               {{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}});
}

TEST_CASE("strict policy fails on the projective plane ideal") {
  Workspace ws;
  ws.opts.policy = FallbackPolicy::Strict;
  CHECK_THROWS_AS(betti_engine(projective_plane_ideal(), ws), Error);
  try {
    betti_engine(projective_plane_ideal(), ws);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Certification);
  }
}

TEST_CASE("fallback policy consults the oracle and says so") {
  Workspace ws;
  EngineResult r = betti_engine(projective_plane_ideal(), ws);
  CHECK_FALSE(r.fully_certified);
  REQUIRE(r.oracle_subideals.size() == 1);
  CHECK(r.oracle_subideals[0] == projective_plane_ideal());
  CHECK(r.certificate->kind == EngineNode::Kind::OracleLeaf);
  CHECK(r.table == oracle_betti(projective_plane_ideal(), 2));

  Workspace ws3;
  ws3.opts.field = 3;
  EngineResult r3 = betti_engine(projective_plane_ideal(), ws3);
  CHECK(r3.table == oracle_betti(projective_plane_ideal(), 3));
  CHECK(proj_dim(r.table) == 4);
  CHECK(proj_dim(r3.table) == 3);
}

TEST_CASE("certified steps are additive") {
  std::mt19937_64 rng(1234);
  int checked = 0;
  while (checked < 60) {
    MonomialIdeal i = random_ideal(rng, 4, 3, 2);
    if (i.is_zero() || i.is_unit()) continue;
    Monomial u = unit_monomial(4);
    for (int v = 0; v < 4; ++v)
      u.exponents[v] = std::uniform_int_distribution<int>(0, 2)(rng);
    if (u.is_unit() || contains(i, u)) continue;
    bool shrinks = false;
    for (const auto& g : i.gens)
      if (u.divides(g)) shrinks = true;
    if (shrinks) continue;
    auto witness = check_step(i, u);
    if (!witness.has_value()) continue;

    std::vector<Monomial> joined = i.gens;
    joined.push_back(u);
    MonomialIdeal bigger = minimalize(4, std::move(joined));
    BettiTable lhs = oracle_betti(bigger, 2);
    BettiTable base = oracle_betti(i, 2);
    BettiTable quot = oracle_betti(colon(i, u), 2);
    BettiTable rhs = entrywise_sum(base, shifted(quot, 1, u.degree()));
    rhs.n = 4;
    CHECK(lhs == rhs);
    CHECK(regularity(lhs) ==
          std::max(regularity(base), regularity(quot) + u.degree() - 1));
    CHECK(proj_dim(lhs) == std::max(proj_dim(base), proj_dim(quot) + 1));
    ++checked;
  }
}

TEST_CASE("engine agrees with the oracle on random ideals") {
  std::mt19937_64 rng(4321);
  Workspace ws;
  for (int trial = 0; trial < 40; ++trial) {
    MonomialIdeal i = random_ideal(rng, 4, 4, 2);
    if (i.is_unit()) continue;
    EngineResult r = betti_engine(i, ws);
    CHECK(r.table == oracle_betti(i, 2, &ws.hom_cache));
  }
}

TEST_CASE("strict mode matches fallback when it succeeds") {
  std::mt19937_64 rng(8765);
  Workspace strict;
  strict.opts.policy = FallbackPolicy::Strict;
  Workspace loose;
  int certified = 0;
  for (int trial = 0; trial < 60 && certified < 30; ++trial) {
    MonomialIdeal i = random_ideal(rng, 3, 3, 2);
    if (i.is_unit()) continue;
    EngineResult fallback = betti_engine(i, loose);
    if (!fallback.fully_certified) continue;
    EngineResult tight = betti_engine(i, strict);
    CHECK(tight.table == fallback.table);
    CHECK(tight.fully_certified);
    ++certified;
  }
  CHECK(certified >= 10);
}

TEST_CASE("engine runs are deterministic and memoized") {
  Workspace ws;
  EngineResult first = betti_engine(four_generator_chain(), ws);
  EngineResult second = betti_engine(four_generator_chain(), ws);
  CHECK(first.table == second.table);
  CHECK(first.certificate == second.certificate);  // same memoized node

  Workspace fresh;
  EngineResult third = betti_engine(four_generator_chain(), fresh);
  CHECK(third.table == first.table);
  CHECK(third.certificate != first.certificate);
}
