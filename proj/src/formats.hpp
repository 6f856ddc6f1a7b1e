#pragma once

// Text formats and renderers.
//
//   ideal       line 1 `vars n`, then one generator per line as
//               space-separated `x<k>` or `x<k>^<e>` tokens (`1` for the
//               unit monomial)
//   tree        line 1 `tree n root`, then one `child parent` pair per line
//   hypergraph  line 1 `hypergraph n`, then one edge per line as
//               space-separated vertex indices
//
// Vertices and variables are 1-based in the text, 0-based in memory. Blank
// lines and `#` comments are ignored everywhere. Parse failures carry a
// position as "line L, column C: message".

#include <string>

#include "hypergraph.hpp"
#include "monomial.hpp"
#include "tree.hpp"

namespace mcres {

MonomialIdeal parse_ideal(const std::string& text);
RootedTree parse_tree(const std::string& text);
Hypergraph parse_hypergraph(const std::string& text);

std::string render_ideal(const MonomialIdeal& ideal);
std::string render_tree(const RootedTree& tree);
std::string render_hypergraph(const Hypergraph& h);

// Compact one-line forms for diagnostics, e.g. "x1*x3^2" and
// "(x1*x2, x2*x3)".
std::string render_monomial(const Monomial& m);
std::string render_ideal_inline(const MonomialIdeal& ideal);

}  // namespace mcres
