#include "gfp_rank.hpp"

#include <algorithm>
#include <cstdlib>
#include <list>
#include <string>

#include "errors.hpp"

namespace mcres {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime_field(int p) {
  if (p < 2 || p > 32749 || !is_prime(p))
    fail(ErrorKind::Domain, "field characteristic must be a prime in [2, 32749], got " +
                                std::to_string(p));
}

namespace {

int mod_pow(long long base, int exp, int p) {
  long long acc = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<int>(acc);
}

int mod_inv(int a, int p) { return mod_pow(a, p - 2, p); }

int dense_rank_gf2(int rows, int cols, const std::vector<GfpEntry>& entries) {
  int words = (cols + 63) / 64;
  std::vector<std::uint64_t> bits(static_cast<size_t>(rows) * words, 0);
  for (const auto& e : entries)
    bits[static_cast<size_t>(e.row) * words + e.col / 64] ^= std::uint64_t(1) << (e.col % 64);

  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int w = c / 64;
    std::uint64_t bit = std::uint64_t(1) << (c % 64);
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (bits[static_cast<size_t>(r) * words + w] & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      std::swap_ranges(bits.begin() + static_cast<size_t>(pivot) * words,
                       bits.begin() + static_cast<size_t>(pivot + 1) * words,
                       bits.begin() + static_cast<size_t>(rank) * words);
    for (int r = rank + 1; r < rows; ++r) {
      if (bits[static_cast<size_t>(r) * words + w] & bit) {
        for (int k = w; k < words; ++k)
          bits[static_cast<size_t>(r) * words + k] ^=
              bits[static_cast<size_t>(rank) * words + k];
      }
    }
    ++rank;
  }
  return rank;
}

int dense_rank_modp(int rows, int cols, const std::vector<GfpEntry>& entries, int p) {
  std::vector<int> a(static_cast<size_t>(rows) * cols, 0);
  for (const auto& e : entries)
    a[static_cast<size_t>(e.row) * cols + e.col] = (e.val % p + p) % p;

  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[static_cast<size_t>(r) * cols + c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      std::swap_ranges(a.begin() + static_cast<size_t>(pivot) * cols,
                       a.begin() + static_cast<size_t>(pivot + 1) * cols,
                       a.begin() + static_cast<size_t>(rank) * cols);
    long long inv = mod_inv(a[static_cast<size_t>(rank) * cols + c], p);
    for (int r = rank + 1; r < rows; ++r) {
      int lead = a[static_cast<size_t>(r) * cols + c];
      if (lead == 0) continue;
      long long factor = lead * inv % p;
      for (int k = c; k < cols; ++k) {
        long long v = a[static_cast<size_t>(r) * cols + k] -
                      factor * a[static_cast<size_t>(rank) * cols + k] % p;
        a[static_cast<size_t>(r) * cols + k] = static_cast<int>((v % p + p) % p);
      }
    }
    ++rank;
  }
  return rank;
}

// Sparse rows as sorted (col, val) vectors.
using SparseRow = std::vector<std::pair<int, int>>;

SparseRow axpy(const SparseRow& target, const SparseRow& pivot, int factor, int p) {
  // target - factor * pivot over GF(p), merging sorted column lists.
  SparseRow out;
  out.reserve(target.size() + pivot.size());
  size_t i = 0, j = 0;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
      out.push_back(target[i++]);
    } else if (i == target.size() || pivot[j].first < target[i].first) {
      int v = static_cast<int>((p - static_cast<long long>(factor) * pivot[j].second % p) % p);
      if (v != 0) out.emplace_back(pivot[j].first, v);
      ++j;
    } else {
      long long v = (target[i].second - static_cast<long long>(factor) * pivot[j].second) % p;
      v = (v % p + p) % p;
      if (v != 0) out.emplace_back(target[i].first, static_cast<int>(v));
      ++i;
      ++j;
    }
  }
  return out;
}

int sparse_rank(int rows, int cols, const std::vector<GfpEntry>& entries, int p) {
  std::vector<SparseRow> row_data(rows);
  for (const auto& e : entries) {
    int v = (e.val % p + p) % p;
    if (v != 0) row_data[e.row].emplace_back(e.col, v);
  }
  std::vector<int> active;
  for (int r = 0; r < rows; ++r) {
    std::sort(row_data[r].begin(), row_data[r].end());
    if (!row_data[r].empty()) active.push_back(r);
  }

  int rank = 0;
  std::vector<int> col_count(cols, 0);
  while (!active.empty()) {
    // Densify the tail once the active block is small or has filled in.
    long long nnz = 0;
    int live_cols = 0;
    std::fill(col_count.begin(), col_count.end(), 0);
    for (int r : active) {
      nnz += static_cast<long long>(row_data[r].size());
      for (const auto& [c, v] : row_data[r])
        if (col_count[c]++ == 0) ++live_cols;
    }
    long long area = static_cast<long long>(active.size()) * live_cols;
    if (area <= 16384 || nnz * 4 >= area) {
      std::vector<int> col_map(cols, -1);
      int next = 0;
      std::vector<GfpEntry> dense_entries;
      for (size_t ri = 0; ri < active.size(); ++ri) {
        for (const auto& [c, v] : row_data[active[ri]]) {
          if (col_map[c] < 0) col_map[c] = next++;
          dense_entries.push_back({static_cast<int>(ri), col_map[c], v});
        }
      }
      int nr = static_cast<int>(active.size());
      rank += (p == 2) ? dense_rank_gf2(nr, next, dense_entries)
                       : dense_rank_modp(nr, next, dense_entries, p);
      return rank;
    }

    // Minimum-fill pivot: minimize (nnz(row)-1) * (nnz(col)-1).
    int best_row = -1, best_col = -1;
    long long best_score = -1;
    for (int r : active) {
      long long rw = static_cast<long long>(row_data[r].size()) - 1;
      for (const auto& [c, v] : row_data[r]) {
        long long score = rw * (col_count[c] - 1);
        if (best_score < 0 || score < best_score ||
            (score == best_score && (c < best_col || (c == best_col && r < best_row)))) {
          best_score = score;
          best_row = r;
          best_col = c;
        }
      }
    }

    SparseRow pivot_row = row_data[best_row];
    int pivot_val = 0;
    for (const auto& [c, v] : pivot_row)
      if (c == best_col) pivot_val = v;
    int inv = (p == 2) ? 1 : mod_inv(pivot_val, p);

    std::vector<int> next_active;
    next_active.reserve(active.size());
    for (int r : active) {
      if (r == best_row) continue;
      auto it = std::lower_bound(row_data[r].begin(), row_data[r].end(),
                                 std::make_pair(best_col, 0));
      if (it != row_data[r].end() && it->first == best_col) {
        int factor = static_cast<int>(static_cast<long long>(it->second) * inv % p);
        row_data[r] = axpy(row_data[r], pivot_row, factor, p);
      }
      if (!row_data[r].empty()) next_active.push_back(r);
    }
    row_data[best_row].clear();
    active = std::move(next_active);
    ++rank;
  }
  return rank;
}

}  // namespace

int gfp_rank(const GfpMatrix& m, int p) {
  require_prime_field(p);
  if (m.rows == 0 || m.cols == 0 || m.entries.empty()) return 0;
  long long area = static_cast<long long>(m.rows) * m.cols;
  if (area <= 16384)
    return (p == 2) ? dense_rank_gf2(m.rows, m.cols, m.entries)
                    : dense_rank_modp(m.rows, m.cols, m.entries, p);
  return sparse_rank(m.rows, m.cols, m.entries, p);
}

}  // namespace mcres
