#include "betti_table.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace mcres {

std::int64_t BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::int64_t mult) {
  if (mult == 0) return;
  auto [it, inserted] = entries.try_emplace({i, j}, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) entries.erase(it);
  }
}

BettiTable point_table(int n) {
  BettiTable t;
  t.n = n;
  t.entries[{0, 0}] = 1;
  return t;
}

int regularity(const BettiTable& t) {
  if (t.empty()) fail(ErrorKind::Domain, "regularity of an empty table");
  int r = 0;
  bool first = true;
  for (const auto& [ij, mult] : t.entries) {
    int v = ij.second - ij.first;
    if (first || v > r) r = v;
    first = false;
  }
  return r;
}

int proj_dim(const BettiTable& t) {
  if (t.empty()) fail(ErrorKind::Domain, "projective dimension of an empty table");
  int pd = 0;
  for (const auto& [ij, mult] : t.entries) pd = std::max(pd, ij.first);
  return pd;
}

int depth(const BettiTable& t) { return t.n - proj_dim(t); }

bool is_level(const BettiTable& t) {
  int pd = proj_dim(t);
  int count = 0;
  for (const auto& [ij, mult] : t.entries)
    if (ij.first == pd) ++count;
  return count == 1;
}

BettiTable convolve(const BettiTable& a, const BettiTable& b) {
  BettiTable out;
  out.n = a.n + b.n;
  for (const auto& [ij1, m1] : a.entries)
    for (const auto& [ij2, m2] : b.entries)
      out.add(ij1.first + ij2.first, ij1.second + ij2.second, m1 * m2);
  return out;
}

BettiTable koszul_pure_powers(const std::vector<int>& exponents) {
  for (int e : exponents)
    if (e <= 0) fail(ErrorKind::Input, "koszul_pure_powers: exponents must be positive");
  BettiTable out = point_table(static_cast<int>(exponents.size()));
  for (int e : exponents) {
    BettiTable one;
    one.n = 0;
    one.entries[{0, 0}] = 1;
    one.entries[{1, e}] = 1;
    BettiTable next = convolve(out, one);
    next.n = out.n;
    out = std::move(next);
  }
  return out;
}

BettiTable shifted(const BettiTable& t, int di, int dj) {
  BettiTable out;
  out.n = t.n;
  for (const auto& [ij, mult] : t.entries)
    out.entries[{ij.first + di, ij.second + dj}] = mult;
  return out;
}

BettiTable entrywise_sum(const BettiTable& a, const BettiTable& b) {
  BettiTable out = a;
  for (const auto& [ij, mult] : b.entries) out.add(ij.first, ij.second, mult);
  return out;
}

std::vector<std::int64_t> total_betti(const BettiTable& t) {
  std::vector<std::int64_t> out;
  for (const auto& [ij, mult] : t.entries) {
    if (static_cast<int>(out.size()) <= ij.first) out.resize(ij.first + 1, 0);
    out[ij.first] += mult;
  }
  return out;
}

std::string render_diagram(const BettiTable& t) {
  if (t.empty()) return "(empty table)\n";
  int pd = proj_dim(t);
  int reg = regularity(t);

  std::vector<std::int64_t> totals = total_betti(t);
  totals.resize(pd + 1, 0);

  // Column widths: header, total, and every strand entry.
  std::vector<size_t> width(pd + 1, 1);
  auto cell = [&](int i, int r) -> std::string {
    std::int64_t v = t.at(i, i + r);
    return v == 0 ? "." : std::to_string(v);
  };
  for (int i = 0; i <= pd; ++i) {
    width[i] = std::max(width[i], std::to_string(i).size());
    width[i] = std::max(width[i], std::to_string(totals[i]).size());
    for (int r = 0; r <= reg; ++r) width[i] = std::max(width[i], cell(i, r).size());
  }
  size_t label = std::max(std::string("total:").size(),
                          std::to_string(reg).size() + 1);

  std::ostringstream os;
  auto pad_left = [&](const std::string& s, size_t w) {
    if (s.size() < w) os << std::string(w - s.size(), ' ');
    os << s;
  };
  pad_left("", label);
  for (int i = 0; i <= pd; ++i) {
    os << ' ';
    pad_left(std::to_string(i), width[i]);
  }
  os << '\n';
  pad_left("total:", label);
  for (int i = 0; i <= pd; ++i) {
    os << ' ';
    pad_left(std::to_string(totals[i]), width[i]);
  }
  os << '\n';
  for (int r = 0; r <= reg; ++r) {
    pad_left(std::to_string(r) + ":", label);
    for (int i = 0; i <= pd; ++i) {
      os << ' ';
      pad_left(cell(i, r), width[i]);
    }
    os << '\n';
  }
  return os.str();
}

std::string render_json(const BettiTable& t) {
  std::ostringstream os;
  os << "{\"n\":" << t.n << ",\"entries\":[";
  bool first = true;
  for (const auto& [ij, mult] : t.entries) {
    if (!first) os << ',';
    first = false;
    os << '[' << ij.first << ',' << ij.second << ',' << mult << ']';
  }
  os << "]}";
  return os.str();
}

std::string render_csv(const BettiTable& t) {
  std::ostringstream os;
  os << "i,j,multiplicity\n";
  for (const auto& [ij, mult] : t.entries)
    os << ij.first << ',' << ij.second << ',' << mult << '\n';
  return os.str();
}

std::string render_diff(const BettiTable& a, const BettiTable& b) {
  std::ostringstream os;
  if (a.n != b.n) os << "n: " << a.n << " vs " << b.n << '\n';
  std::map<std::pair<int, int>, std::pair<std::int64_t, std::int64_t>> merged;
  for (const auto& [ij, mult] : a.entries) merged[ij].first = mult;
  for (const auto& [ij, mult] : b.entries) merged[ij].second = mult;
  for (const auto& [ij, pair] : merged) {
    if (pair.first == pair.second) continue;
    os << '(' << ij.first << ',' << ij.second << "): " << pair.first << " vs "
       << pair.second << '\n';
  }
  return os.str();
}

}  // namespace mcres
