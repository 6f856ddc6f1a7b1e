#include "mcres.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "betti_table.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "formats.hpp"
#include "homology.hpp"
#include "hypergraph.hpp"
#include "monomial.hpp"
#include "simplicial.hpp"
#include "tree.hpp"
#include "workspace.hpp"

struct mcres_ideal {
  mcres::MonomialIdeal value;
};
struct mcres_tree {
  mcres::RootedTree value;
};
struct mcres_hypergraph {
  mcres::Hypergraph value;
};
struct mcres_betti {
  mcres::BettiTable value;
};

namespace {

thread_local std::string tls_error;

mcres_status status_of(mcres::ErrorKind kind) {
  switch (kind) {
    case mcres::ErrorKind::Parse:
      return MCRES_ERR_PARSE;
    case mcres::ErrorKind::Input:
      return MCRES_ERR_INPUT;
    case mcres::ErrorKind::Domain:
      return MCRES_ERR_DOMAIN;
    case mcres::ErrorKind::Resource:
      return MCRES_ERR_RESOURCE;
    case mcres::ErrorKind::Certification:
      return MCRES_ERR_CERTIFICATION;
    case mcres::ErrorKind::Internal:
      return MCRES_ERR_INTERNAL;
  }
  return MCRES_ERR_INTERNAL;
}

template <typename Fn>
mcres_status guarded(Fn&& fn) {
  try {
    tls_error.clear();
    fn();
    return MCRES_OK;
  } catch (const mcres::Error& e) {
    tls_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    tls_error = e.what();
    return MCRES_ERR_INTERNAL;
  } catch (...) {
    tls_error = "unknown failure";
    return MCRES_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename T>
const T& require(const T* handle, const char* what) {
  if (handle == nullptr)
    mcres::fail(mcres::ErrorKind::Input, std::string("null ") + what);
  return *handle;
}

const char* require_text(const char* text) {
  if (text == nullptr) mcres::fail(mcres::ErrorKind::Input, "null text");
  return text;
}

mcres::Options options_of(const mcres_options* opts) {
  mcres::Options o;
  if (opts == nullptr) return o;
  o.field = opts->field;
  o.policy = opts->strict ? mcres::FallbackPolicy::Strict
                          : mcres::FallbackPolicy::OracleFallback;
  o.generator_cap = opts->generator_cap;
  o.facet_cap = opts->facet_cap;
  o.backtrack_budget = opts->backtrack_budget;
  o.threads = opts->threads;
  o.hyper_subtables = opts->subtables_engine ? mcres::SubtableSource::Engine
                                             : mcres::SubtableSource::Oracle;
  return o;
}

}  // namespace

extern "C" {

void mcres_options_init(mcres_options* opts) {
  if (opts == nullptr) return;
  const mcres::Options defaults;
  opts->field = defaults.field;
  opts->strict = 0;
  opts->generator_cap = defaults.generator_cap;
  opts->facet_cap = defaults.facet_cap;
  opts->backtrack_budget = defaults.backtrack_budget;
  opts->threads = defaults.threads;
  opts->subtables_engine = 0;
}

const char* mcres_version(void) { return "1.0.0"; }

const char* mcres_last_error(void) { return tls_error.c_str(); }

void mcres_string_free(char* s) { std::free(s); }

/* ---- monomial ideals ---- */

mcres_status mcres_ideal_parse(const char* text, mcres_ideal** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new mcres_ideal{mcres::parse_ideal(require_text(text))};
  });
}

void mcres_ideal_free(mcres_ideal* ideal) { delete ideal; }

mcres_status mcres_ideal_render(const mcres_ideal* ideal, char** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = copy_string(mcres::render_ideal(require(ideal, "ideal").value));
  });
}

mcres_status mcres_ideal_render_inline(const mcres_ideal* ideal, char** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = copy_string(
        mcres::render_ideal_inline(require(ideal, "ideal").value));
  });
}

mcres_status mcres_ideal_vars(const mcres_ideal* ideal, int* out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = require(ideal, "ideal").value.n;
  });
}

mcres_status mcres_ideal_generators(const mcres_ideal* ideal, int* out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = static_cast<int>(require(ideal, "ideal").value.gens.size());
  });
}

mcres_status mcres_ideal_dual(const mcres_ideal* ideal, mcres_ideal** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new mcres_ideal{mcres::alexander_dual(require(ideal, "ideal").value)};
  });
}

/* ---- Betti tables ---- */

mcres_status mcres_betti_engine(const mcres_ideal* ideal,
                                const mcres_options* opts, mcres_betti** out,
                                int* fully_certified) {
  return guarded([&] {
    require(out, "output pointer");
    mcres::Workspace ws;
    ws.opts = options_of(opts);
    const auto result = mcres::betti_engine(require(ideal, "ideal").value, ws);
    if (fully_certified != nullptr)
      *fully_certified = result.fully_certified ? 1 : 0;
    *out = new mcres_betti{result.table};
  });
}

mcres_status mcres_betti_oracle(const mcres_ideal* ideal,
                                const mcres_options* opts, mcres_betti** out) {
  return guarded([&] {
    require(out, "output pointer");
    mcres::Workspace ws;
    ws.opts = options_of(opts);
    *out = new mcres_betti{mcres::oracle_betti(require(ideal, "ideal").value,
                                               ws.opts.field, &ws.hom_cache,
                                               ws.opts.threads)};
  });
}

mcres_status mcres_oracle_multigraded_render(const mcres_ideal* ideal,
                                             const mcres_options* opts,
                                             char** out) {
  return guarded([&] {
    require(out, "output pointer");
    mcres::Workspace ws;
    ws.opts = options_of(opts);
    const auto mg =
        mcres::multigraded_betti(require(ideal, "ideal").value, ws.opts.field,
                                 &ws.hom_cache, ws.opts.threads);
    *out = copy_string(mcres::render_multigraded(mg));
  });
}

mcres_status mcres_order_find(const mcres_ideal* ideal,
                              const mcres_options* opts, int* found,
                              char** rendered) {
  return guarded([&] {
    require(found, "output pointer");
    require(rendered, "output pointer");
    mcres::Workspace ws;
    ws.opts = options_of(opts);
    const auto order = mcres::find_decreasing_order(
        require(ideal, "ideal").value, ws.opts.generator_cap);
    *found = order.has_value() ? 1 : 0;
    *rendered = copy_string(order ? mcres::render_order(*order) : "");
  });
}

mcres_status mcres_verify(const mcres_ideal* ideal, const mcres_options* opts,
                          int* equal, char** diff) {
  return guarded([&] {
    require(equal, "output pointer");
    require(diff, "output pointer");
    mcres::Workspace ws;
    ws.opts = options_of(opts);
    const auto& value = require(ideal, "ideal").value;
    const auto engine = mcres::betti_engine(value, ws);
    const auto oracle = mcres::oracle_betti(value, ws.opts.field,
                                            &ws.hom_cache, ws.opts.threads);
    const bool same = engine.table.entries == oracle.entries;
    *equal = same ? 1 : 0;
    *diff = copy_string(same ? "" : mcres::render_diff(engine.table, oracle));
  });
}

void mcres_betti_free(mcres_betti* table) { delete table; }

mcres_status mcres_betti_render(const mcres_betti* table, mcres_format format,
                                char** out) {
  return guarded([&] {
    require(out, "output pointer");
    const auto& value = require(table, "table").value;
    switch (format) {
      case MCRES_FORMAT_DIAGRAM:
        *out = copy_string(mcres::render_diagram(value));
        return;
      case MCRES_FORMAT_JSON:
        *out = copy_string(mcres::render_json(value));
        return;
      case MCRES_FORMAT_CSV:
        *out = copy_string(mcres::render_csv(value));
        return;
    }
    mcres::fail(mcres::ErrorKind::Input, "unknown output format");
  });
}

mcres_status mcres_betti_regularity(const mcres_betti* table, int* out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = mcres::regularity(require(table, "table").value);
  });
}

mcres_status mcres_betti_proj_dim(const mcres_betti* table, int* out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = mcres::proj_dim(require(table, "table").value);
  });
}

mcres_status mcres_betti_depth(const mcres_betti* table, int* out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = mcres::depth(require(table, "table").value);
  });
}

mcres_status mcres_betti_is_level(const mcres_betti* table, int* out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = mcres::is_level(require(table, "table").value) ? 1 : 0;
  });
}

mcres_status mcres_betti_entry_count(const mcres_betti* table, int* out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = static_cast<int>(require(table, "table").value.entries.size());
  });
}

mcres_status mcres_betti_entry(const mcres_betti* table, int index, int* i,
                               int* j, long long* multiplicity) {
  return guarded([&] {
    const auto& entries = require(table, "table").value.entries;
    if (index < 0 || static_cast<std::size_t>(index) >= entries.size())
      mcres::fail(mcres::ErrorKind::Input, "entry index out of range");
    auto it = entries.begin();
    std::advance(it, index);
    if (i != nullptr) *i = it->first.first;
    if (j != nullptr) *j = it->first.second;
    if (multiplicity != nullptr) *multiplicity = it->second;
  });
}

/* ---- rooted trees ---- */

mcres_status mcres_tree_parse(const char* text, mcres_tree** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new mcres_tree{mcres::parse_tree(require_text(text))};
  });
}

void mcres_tree_free(mcres_tree* tree) { delete tree; }

mcres_status mcres_tree_render(const mcres_tree* tree, char** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = copy_string(mcres::render_tree(require(tree, "tree").value));
  });
}

mcres_status mcres_tree_ideal(const mcres_tree* tree, mcres_ideal** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new mcres_ideal{mcres::path_ideal(require(tree, "tree").value)};
  });
}

mcres_status mcres_tree_invariants(const mcres_tree* tree, int* leaves,
                                   int* dim, int* proj_dim, int* depth,
                                   int* reg, int* cohen_macaulay) {
  return guarded([&] {
    const auto inv = mcres::closed_invariants(require(tree, "tree").value);
    if (leaves != nullptr) *leaves = inv.leaves;
    if (dim != nullptr) *dim = inv.dim;
    if (proj_dim != nullptr) *proj_dim = inv.proj_dim;
    if (depth != nullptr) *depth = inv.depth;
    if (reg != nullptr) *reg = inv.reg;
    if (cohen_macaulay != nullptr) *cohen_macaulay = inv.cohen_macaulay ? 1 : 0;
  });
}

mcres_status mcres_tree_order(const mcres_tree* tree, char** rendered) {
  return guarded([&] {
    require(rendered, "output pointer");
    *rendered = copy_string(
        mcres::render_order(mcres::find_tree_order(require(tree, "tree").value)));
  });
}

mcres_status mcres_tree_simplicial_check(const mcres_tree* tree,
                                         const mcres_options* opts,
                                         int* is_tree) {
  return guarded([&] {
    require(is_tree, "output pointer");
    const auto options = options_of(opts);
    *is_tree = mcres::is_simplicial_tree(
                   mcres::facet_complex(require(tree, "tree").value),
                   options.facet_cap)
                   ? 1
                   : 0;
  });
}

mcres_status mcres_tree_dual_invariants(const mcres_tree* tree,
                                        const mcres_options* opts, int* reg,
                                        int* proj_dim) {
  return guarded([&] {
    mcres::Workspace ws;
    ws.opts = options_of(opts);
    const auto [r, pd] =
        mcres::dual_invariants(require(tree, "tree").value, ws.opts.field,
                               &ws.hom_cache, ws.opts.threads);
    if (reg != nullptr) *reg = r;
    if (proj_dim != nullptr) *proj_dim = pd;
  });
}

/* ---- hypergraphs ---- */

mcres_status mcres_hypergraph_parse(const char* text, mcres_hypergraph** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new mcres_hypergraph{mcres::parse_hypergraph(require_text(text))};
  });
}

void mcres_hypergraph_free(mcres_hypergraph* h) { delete h; }

mcres_status mcres_hypergraph_render(const mcres_hypergraph* h, char** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = copy_string(
        mcres::render_hypergraph(require(h, "hypergraph").value));
  });
}

mcres_status mcres_hypergraph_vertices(const mcres_hypergraph* h, int* out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = require(h, "hypergraph").value.n;
  });
}

mcres_status mcres_hypergraph_edge_ideal(const mcres_hypergraph* h,
                                         mcres_ideal** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new mcres_ideal{mcres::edge_ideal(require(h, "hypergraph").value)};
  });
}

mcres_status mcres_hypergraph_betti_with_powers(const mcres_hypergraph* h,
                                                const int* variables,
                                                const int* exponents,
                                                int count,
                                                const mcres_options* opts,
                                                mcres_betti** out) {
  return guarded([&] {
    require(out, "output pointer");
    if (count < 0) mcres::fail(mcres::ErrorKind::Input, "negative power count");
    if (count > 0) {
      require(variables, "variable array");
      require(exponents, "exponent array");
    }
    mcres::PowerSpec added;
    for (int k = 0; k < count; ++k)
      added.powers.emplace_back(variables[k] - 1, exponents[k]);
    mcres::Workspace ws;
    ws.opts = options_of(opts);
    const auto& value = require(h, "hypergraph").value;
    *out = new mcres_betti{
        mcres::betti_with_powers(mcres::edge_ideal(value), added, ws)};
  });
}

mcres_status mcres_hypergraph_alpha(const mcres_hypergraph* h, int* out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = mcres::alpha(require(h, "hypergraph").value);
  });
}

mcres_status mcres_hypergraph_mis_render(const mcres_hypergraph* h,
                                         char** out) {
  return guarded([&] {
    require(out, "output pointer");
    std::string text;
    for (auto set : mcres::maximal_independent_sets(require(h, "hypergraph").value)) {
      bool first = true;
      for (int v = 0; v < 64; ++v) {
        if (!(set >> v & 1)) continue;
        if (!first) text += ' ';
        first = false;
        text += std::to_string(v + 1);
      }
      text += '\n';
    }
    *out = copy_string(text);
  });
}

mcres_status mcres_hypergraph_complex_render(const mcres_hypergraph* h,
                                             char** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = copy_string(mcres::render_complex(
        mcres::independence_complex(require(h, "hypergraph").value)));
  });
}

mcres_status mcres_hypergraph_multipartite_check(const mcres_hypergraph* h,
                                                 int* degree_sum_matches,
                                                 int* complement_is_cliques,
                                                 long long* parts) {
  return guarded([&] {
    const auto check =
        mcres::multipartite_characterization(require(h, "hypergraph").value);
    if (degree_sum_matches != nullptr)
      *degree_sum_matches = check.degree_sum_matches ? 1 : 0;
    if (complement_is_cliques != nullptr)
      *complement_is_cliques = check.complement_is_cliques ? 1 : 0;
    if (parts != nullptr) *parts = check.parts;
  });
}

}  // extern "C"
