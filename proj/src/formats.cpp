#include "formats.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "errors.hpp"

namespace mcres {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int column = 0;
};

[[noreturn]] void fail_at(int line, int column, const std::string& message) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message);
}

[[noreturn]] void fail_at(const Token& t, const std::string& message) {
  fail_at(t.line, t.column, message);
}

// Lines of tokens, with blank lines and comments removed.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    ++line_no;
    std::vector<Token> tokens;
    for (std::size_t i = pos; i < end;) {
      const char c = text[i];
      if (c == '#') break;
      if (c == '\r' || std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < end && text[i] != '#' && text[i] != '\r' &&
             !std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
      tokens.push_back({text.substr(start, i - start), line_no,
                        static_cast<int>(start - pos) + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

long long parse_number(const Token& t, const std::string& what) {
  long long value = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    fail_at(t, "expected " + what + ", got '" + t.text + "'");
  return value;
}

int parse_count(const Token& t, const std::string& what, long long cap) {
  const long long value = parse_number(t, what);
  if (value < 1 || value > cap)
    fail_at(t, what + " must lie in 1.." + std::to_string(cap) + ", got " +
                   t.text);
  return static_cast<int>(value);
}

void expect_header(const std::vector<std::vector<Token>>& lines,
                   const std::string& keyword, std::size_t fields) {
  if (lines.empty())
    fail_at(1, 1, "empty input, expected a `" + keyword + "` header");
  const auto& header = lines.front();
  if (header[0].text != keyword)
    fail_at(header[0], "expected `" + keyword + "`, got '" + header[0].text + "'");
  if (header.size() < 1 + fields)
    fail_at(header[0], "`" + keyword + "` header needs " +
                           std::to_string(fields) + " number(s)");
  if (header.size() > 1 + fields)
    fail_at(header[1 + fields], "unexpected token '" +
                                    header[1 + fields].text + "' after the header");
}

// `x<k>` or `x<k>^<e>` (or `1`), multiplied into m.
void apply_factor(Monomial& m, int n, const Token& t) {
  if (t.text == "1") return;
  if (t.text[0] != 'x')
    fail_at(t, "expected a variable like x2 or x2^3, got '" + t.text + "'");
  const std::size_t caret = t.text.find('^');
  const std::string var_part = t.text.substr(1, caret == std::string::npos
                                                    ? std::string::npos
                                                    : caret - 1);
  long long var = 0;
  {
    const char* first = var_part.data();
    const char* last = first + var_part.size();
    auto [ptr, ec] = std::from_chars(first, last, var);
    if (var_part.empty() || ec != std::errc{} || ptr != last)
      fail_at(t, "expected a variable like x2 or x2^3, got '" + t.text + "'");
  }
  if (var < 1 || var > n)
    fail_at(t, "variable x" + std::to_string(var) + " outside x1..x" +
                   std::to_string(n));
  long long exp = 1;
  if (caret != std::string::npos) {
    const std::string exp_part = t.text.substr(caret + 1);
    const char* first = exp_part.data();
    const char* last = first + exp_part.size();
    auto [ptr, ec] = std::from_chars(first, last, exp);
    if (exp_part.empty() || ec != std::errc{} || ptr != last || exp < 1)
      fail_at(t, "expected a positive exponent after '^' in '" + t.text + "'");
  }
  if (exp > 1'000'000 || m.exponents[var - 1] > 1'000'000)
    fail_at(t, "exponent too large in '" + t.text + "'");
  m.exponents[var - 1] += static_cast<int>(exp);
}

}  // namespace

MonomialIdeal parse_ideal(const std::string& text) {
  const auto lines = tokenize(text);
  expect_header(lines, "vars", 1);
  const int n = parse_count(lines[0][1], "variable count", 4096);
  std::vector<Monomial> gens;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    Monomial g = unit_monomial(n);
    for (const auto& t : lines[k]) apply_factor(g, n, t);
    gens.push_back(std::move(g));
  }
  return minimalize(n, std::move(gens));
}

RootedTree parse_tree(const std::string& text) {
  const auto lines = tokenize(text);
  expect_header(lines, "tree", 2);
  const int n = parse_count(lines[0][1], "vertex count", 4096);
  const int root = parse_count(lines[0][2], "root", n);

  std::vector<int> parent(n, 0);
  std::vector<char> seen(n, 0);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& tokens = lines[k];
    if (tokens.size() != 2)
      fail_at(tokens[0], "expected a `child parent` pair");
    const int child = parse_count(tokens[0], "child", n);
    const int par = parse_count(tokens[1], "parent", n);
    if (child == root)
      fail_at(tokens[0], "the root " + std::to_string(root) +
                             " cannot have a parent");
    if (seen[child - 1])
      fail_at(tokens[0], "vertex " + std::to_string(child) +
                             " has two parent lines");
    seen[child - 1] = 1;
    parent[child - 1] = par - 1;
  }
  for (int v = 0; v < n; ++v)
    if (v != root - 1 && !seen[v])
      fail_at(static_cast<int>(lines.size()) + 1, 1,
              "vertex " + std::to_string(v + 1) + " has no parent line");
  parent[root - 1] = -1;
  try {
    return make_tree(n, root - 1, parent);
  } catch (const Error& e) {
    fail_at(1, 1, e.what());
  }
}

Hypergraph parse_hypergraph(const std::string& text) {
  const auto lines = tokenize(text);
  expect_header(lines, "hypergraph", 1);
  const int n = parse_count(lines[0][1], "vertex count", 64);

  std::vector<std::uint64_t> masks;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& tokens = lines[k];
    std::uint64_t mask = 0;
    for (const auto& t : tokens) {
      const int v = parse_count(t, "vertex", n);
      if (mask >> (v - 1) & 1)
        fail_at(t, "repeated vertex " + std::to_string(v) + " in an edge");
      mask |= 1ull << (v - 1);
    }
    if (std::popcount(mask) < 2)
      fail_at(tokens[0], "an edge needs at least two vertices");
    for (auto other : masks)
      if ((mask & other) == other || (mask & other) == mask)
        fail_at(tokens[0], "edge nests with an earlier edge");
    masks.push_back(mask);
  }
  return hypergraph_from_masks(n, std::move(masks));
}

std::string render_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t v = 0; v < m.exponents.size(); ++v) {
    if (m.exponents[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(v + 1);
    if (m.exponents[v] > 1) out += '^' + std::to_string(m.exponents[v]);
  }
  return out.empty() ? "1" : out;
}

std::string render_ideal_inline(const MonomialIdeal& ideal) {
  if (ideal.gens.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t k = 0; k < ideal.gens.size(); ++k) {
    if (k) out += ", ";
    out += render_monomial(ideal.gens[k]);
  }
  return out + ")";
}

std::string render_ideal(const MonomialIdeal& ideal) {
  std::ostringstream out;
  out << "vars " << ideal.n << '\n';
  for (const auto& g : ideal.gens) {
    bool first = true;
    for (int v = 0; v < ideal.n; ++v) {
      if (g.exponents[v] == 0) continue;
      if (!first) out << ' ';
      first = false;
      out << 'x' << v + 1;
      if (g.exponents[v] > 1) out << '^' << g.exponents[v];
    }
    if (first) out << '1';
    out << '\n';
  }
  return out.str();
}

std::string render_tree(const RootedTree& tree) {
  std::ostringstream out;
  out << "tree " << tree.n << ' ' << tree.root + 1 << '\n';
  for (int v = 0; v < tree.n; ++v)
    if (v != tree.root) out << v + 1 << ' ' << tree.parent[v] + 1 << '\n';
  return out.str();
}

std::string render_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << "hypergraph " << h.n << '\n';
  for (auto e : h.edges) {
    bool first = true;
    for (int v = 0; v < h.n; ++v) {
      if (!(e >> v & 1)) continue;
      if (!first) out << ' ';
      first = false;
      out << v + 1;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mcres
