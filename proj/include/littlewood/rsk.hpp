#pragma once

#include <algorithm>
#include <vector>

#include "littlewood/errors.hpp"
#include "littlewood/laurent.hpp"
#include "littlewood/schur.hpp"

namespace littlewood {

struct SSYT {
  std::vector<std::vector<long>> rows;

  bool empty() const { return rows.empty(); }
  size_t cells() const {
    size_t c = 0;
    for (const auto& r : rows) c += r.size();
    return c;
  }

  bool valid() const {
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r + 1 < rows.size() && rows[r + 1].size() > rows[r].size()) return false;
      for (size_t c = 0; c < rows[r].size(); ++c) {
        if (rows[r][c] <= 0) return false;
        if (c > 0 && rows[r][c] < rows[r][c - 1]) return false;
        if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;
      }
    }
    return true;
  }

  long max_entry() const {
    long m = 0;
    for (const auto& r : rows)
      for (long e : r) m = std::max(m, e);
    return m;
  }

  // number of occurrences of each value 1..n
  std::vector<long> content(int n) const {
    std::vector<long> c(static_cast<size_t>(n), 0);
    for (const auto& r : rows)
      for (long e : r)
        if (e >= 1 && e <= n) ++c[static_cast<size_t>(e - 1)];
    return c;
  }

  std::vector<long> shape() const {
    std::vector<long> s;
    for (const auto& r : rows) s.push_back(static_cast<long>(r.size()));
    return s;
  }

  bool operator==(const SSYT&) const = default;
};

// Row insertion; returns the row index (0-based) where the insertion ended.
inline int rsk_insert(SSYT& t, long x) {
  for (size_t r = 0;; ++r) {
    if (r == t.rows.size()) t.rows.emplace_back();
    auto& row = t.rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return static_cast<int>(r);
    }
    std::swap(x, *it);
  }
}

// Classical RSK on a word: P by row insertion, Q records the insertion order.
inline std::pair<SSYT, SSYT> rsk_classical(const std::vector<long>& word) {
  SSYT p, q;
  for (size_t i = 0; i < word.size(); ++i) {
    int r = rsk_insert(p, word[i]);
    while (static_cast<size_t>(r) >= q.rows.size()) q.rows.emplace_back();
    q.rows[static_cast<size_t>(r)].push_back(static_cast<long>(i + 1));
  }
  return {p, q};
}

struct SymMatrix {
  std::vector<std::vector<long>> a;

  int size() const { return static_cast<int>(a.size()); }

  static SymMatrix zero(int n) {
    SymMatrix m;
    m.a.assign(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
    return m;
  }

  bool valid() const {
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < a.size(); ++j)
        if (a[i][j] < 0 || a[i][j] != a[j][i]) return false;
    return true;
  }

  bool operator==(const SymMatrix&) const = default;
};

// Lexicographic two-line array of the full matrix: a_{r,c} columns (r over c).
inline std::vector<std::pair<long, long>> full_two_line_array(const SymMatrix& m) {
  std::vector<std::pair<long, long>> cols;
  for (int r = 1; r <= m.size(); ++r)
    for (int c = 1; c <= m.size(); ++c)
      for (long k = 0; k < m.a[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]; ++k)
        cols.emplace_back(r, c);
  return cols;  // already sorted lexicographically by construction
}

// Upper two-line array: one column (j over i) per a_{i,j} with i <= j.
inline std::vector<std::pair<long, long>> upper_two_line_array(const SymMatrix& m) {
  std::vector<std::pair<long, long>> cols;
  for (int j = 1; j <= m.size(); ++j)
    for (int i = 1; i <= j; ++i)
      for (long k = 0; k < m.a[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; ++k)
        cols.emplace_back(j, i);
  return cols;
}

// The symmetric-matrix variant: insert the bottom entry of each upper-array
// column; when i < j, additionally place j into the row below the end of the
// insertion, in the leftmost free cell.
inline SSYT rsk_symmetric_forward(const SymMatrix& m) {
  if (!m.valid()) throw PreconditionViolated("matrix must be symmetric and nonnegative");
  SSYT t;
  for (auto [j, i] : upper_two_line_array(m)) {
    int r = rsk_insert(t, i);
    if (i < j) {
      size_t target = static_cast<size_t>(r) + 1;
      if (target == t.rows.size()) t.rows.emplace_back();
      t.rows[target].push_back(j);
    }
  }
  return t;
}

// Inverse of the variant, reconstructed section by section from the largest
// entry down. Within the section of value v: the v's in the first row come
// from columns (v over v); the v's in row r+1 were placed by insertions
// ending in row r and are undone by reverse bumping from the rightmost cells
// of row r.
inline SymMatrix rsk_symmetric_inverse(const SSYT& input, int size = 0) {
  SSYT t = input;
  long n = std::max<long>(t.max_entry(), size);
  SymMatrix m = SymMatrix::zero(static_cast<int>(n));
  auto reverse_bump = [&](int from_row) -> long {
    long x = t.rows[static_cast<size_t>(from_row)].back();
    t.rows[static_cast<size_t>(from_row)].pop_back();
    for (int r = from_row - 1; r >= 0; --r) {
      auto& row = t.rows[static_cast<size_t>(r)];
      // rightmost entry strictly smaller than x
      auto it = std::lower_bound(row.begin(), row.end(), x);
      std::swap(x, *(it - 1));
    }
    return x;
  };
  for (long v = n; v >= 1; --v) {
    // diagonal columns (v over v)
    auto& first = t.rows.empty() ? t.rows.emplace_back() : t.rows[0];
    long diag = 0;
    while (!first.empty() && first.back() == v) {
      first.pop_back();
      ++diag;
    }
    m.a[static_cast<size_t>(v - 1)][static_cast<size_t>(v - 1)] = diag;
    // off-diagonal placements, rows from the top down
    std::vector<long> ejected;
    for (size_t r = 1; r < t.rows.size(); ++r) {
      long u = 0;
      auto& row = t.rows[r];
      while (!row.empty() && row.back() == v) {
        row.pop_back();
        ++u;
      }
      for (long k = 0; k < u; ++k) ejected.push_back(reverse_bump(static_cast<int>(r) - 1));
    }
    for (long i : ejected) {
      ++m.a[static_cast<size_t>(v - 1)][static_cast<size_t>(i - 1)];
      ++m.a[static_cast<size_t>(i - 1)][static_cast<size_t>(v - 1)];
    }
    while (!t.rows.empty() && t.rows.back().empty()) t.rows.pop_back();
  }
  return m;
}

// ---------------------------------------------------------------------------
// Insertion on Gelfand-Tsetlin patterns

// Pad the pattern to `rows` rows by appending copies of the bottom row with
// zeros prepended.
inline void gt_pad(GTPattern& p, int rows) {
  while (p.size() < rows) {
    std::vector<long> next = p.rows.back();
    next.insert(next.begin(), 0);
    p.rows.push_back(std::move(next));
  }
}

// Row-insert m into the pattern: start at the last entry of row m, walk down
// taking the SE step whenever the SE neighbor equals the current entry and
// the SW step otherwise, then add 1 along the path. Returns the 1-based
// column where the path meets the bottom row.
inline int gt_insert(GTPattern& p, long m) {
  if (m < 1) throw PreconditionViolated("inserted entries are positive");
  if (p.rows.empty()) p.rows.push_back({0});
  gt_pad(p, static_cast<int>(m));
  int i = static_cast<int>(m), j = i;  // 1-based position
  while (true) {
    p.rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] += 1;
    if (i == p.size()) break;
    long cur = p.rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] - 1;
    long se = p.entry(i + 1, j + 1);
    if (se == cur) {
      ++i;
      ++j;
    } else {
      ++i;
    }
  }
  return j;
}

// The variant's column step on patterns: insert i; when i < j additionally
// bump the entry immediately left of the path's end.
inline void column_pair_insert(GTPattern& p, long j, long i) {
  if (i > j) throw PreconditionViolated("columns need i <= j");
  if (p.rows.empty()) p.rows.push_back({0});
  gt_pad(p, static_cast<int>(j));
  int end_col = gt_insert(p, i);
  if (i < j)
    p.rows[static_cast<size_t>(p.size() - 1)][static_cast<size_t>(end_col - 2)] += 1;
}

// GT pattern with n rows from a tableau with entries <= n: row i read in
// reverse is the shape formed by the entries <= i.
inline GTPattern gt_from_ssyt(const SSYT& t, int n) {
  GTPattern p;
  for (int i = 1; i <= n; ++i) {
    std::vector<long> lambda(static_cast<size_t>(i), 0);
    for (size_t r = 0; r < t.rows.size() && r < static_cast<size_t>(i); ++r) {
      long cnt = 0;
      for (long e : t.rows[r])
        if (e <= i) ++cnt;
      lambda[r] = cnt;
    }
    p.rows.emplace_back(lambda.rbegin(), lambda.rend());
  }
  return p;
}

// Full matrix-to-pattern run of the variant, managing row counts as the
// two-line array is consumed.
inline GTPattern gt_from_matrix(const SymMatrix& m) {
  GTPattern p;
  p.rows.push_back({0});
  for (auto [j, i] : upper_two_line_array(m)) {
    gt_pad(p, static_cast<int>(j));
    column_pair_insert(p, j, i);
  }
  gt_pad(p, m.size());
  return p;
}

// Maximal entry sum over monotone right/down walks from (1,1) to (n,n)
// confined weakly above the main diagonal.
inline long max_path_statistic(const SymMatrix& m) {
  if (!m.valid()) throw PreconditionViolated("matrix must be symmetric and nonnegative");
  const int n = m.size();
  if (n == 0) return 0;
  std::vector<std::vector<long>> best(static_cast<size_t>(n),
                                      std::vector<long>(static_cast<size_t>(n), 0));
  for (int i = n - 1; i >= 0; --i) {
    for (int j = n - 1; j >= i; --j) {
      long go = 0;
      bool any = false;
      if (j + 1 < n) {
        go = std::max(go, best[static_cast<size_t>(i)][static_cast<size_t>(j + 1)]);
        any = true;
      }
      if (i + 1 < n && i + 1 <= j) {
        go = std::max(go, best[static_cast<size_t>(i + 1)][static_cast<size_t>(j)]);
        any = true;
      }
      if (i == n - 1 && j == n - 1) any = false;
      best[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          m.a[static_cast<size_t>(i)][static_cast<size_t>(j)] + (any ? go : 0);
    }
  }
  return best[0][0];
}

}  // namespace littlewood
