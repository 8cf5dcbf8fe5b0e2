#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "littlewood/homog.hpp"
#include "littlewood/identities.hpp"

namespace littlewood {

// Steps: NE=(1,1), NW=(-1,1), SE=(1,-1), E=(1,0), N=(0,1).
enum class Step : uint8_t { NE, NW, SE, E, N };

inline const char* step_name(Step s) {
  switch (s) {
    case Step::NE: return "NE";
    case Step::NW: return "NW";
    case Step::SE: return "SE";
    case Step::E: return "E";
    case Step::N: return "N";
  }
  return "?";
}

inline std::pair<long, long> step_delta(Step s) {
  switch (s) {
    case Step::NE: return {1, 1};
    case Step::NW: return {-1, 1};
    case Step::SE: return {1, -1};
    case Step::E: return {1, 0};
    case Step::N: return {0, 1};
  }
  return {0, 0};
}

struct LatticePath {
  long sx = 0, sy = 0;
  std::vector<Step> steps;

  std::vector<std::pair<long, long>> points() const {
    std::vector<std::pair<long, long>> pts{{sx, sy}};
    long x = sx, y = sy;
    for (Step s : steps) {
      auto [dx, dy] = step_delta(s);
      x += dx;
      y += dy;
      pts.emplace_back(x, y);
    }
    return pts;
  }
};

// A family of n paths with sign and step-weight data; the per-path weight is
// a single monomial in X_1..X_n and w (back steps and marked horizontal
// steps). The overall prefactors of the interpretation are NOT included here.
struct PathFamily {
  std::vector<bool> first_start;   // chose (-3i+1, -i+1) from A_i
  std::vector<int> endpoint_index; // sigma: path i targets E_{sigma(i)} (1-based)
  std::vector<std::pair<long, long>> endpoints;  // chosen endpoint points
  std::vector<LatticePath> paths;
  Monomial step_weight;
  int sign = 1;
};

enum class FamilyMode { AllSigned, NonIntersectingBelow, NonIntersecting };

namespace pathdetail {

// Weight of a back step (SE or NW) on the anti-diagonal x+y = -2k:
// k = 0,2,4,... -> X_{k/2+1}; k = 1,3,5,... -> X_{(k+1)/2}^{-1}.
// (Distances are counted in NE-step units; the n=2, m=3 example pins this.)
inline void bump_back_step_weight(Monomial& m, long xy_sum, int delta) {
  long k = -xy_sum / 2;
  int v = (k % 2 == 0) ? var::X(static_cast<int>(k / 2 + 1))
                       : var::X(static_cast<int>((k + 1) / 2));
  if (k % 2 != 0) delta = -delta;
  m.set(v, m.exp(v) + delta);
}

struct SinglePath {
  LatticePath path;
  Monomial weight;
};

// All paths from the chosen start of A_i to `target`, which is the endpoint
// assigned to index j (horizontal steps above x+y = j-1 carry w). Diagonal
// steps run while x+y <= 0; x+y never decreases, so the switch to the
// horizontal/vertical regime happens at the last point on the line.
inline std::vector<SinglePath> enumerate_single_paths(int i, bool first_start,
                                                      std::pair<long, long> target, int j) {
  std::vector<SinglePath> out;
  LatticePath cur;
  cur.sx = first_start ? -3 * i + 1 : -i + 1;
  cur.sy = first_start ? -i + 1 : -3 * i + 1;
  Monomial weight;

  auto hv = [&](auto&& self, long x, long y) -> void {
    if (x == target.first && y == target.second) {
      out.push_back({cur, weight});
      return;
    }
    if (x < target.first) {
      bool marked = x + y >= j - 1;
      if (marked) weight.set(var::w, weight.exp(var::w) + 1);
      cur.steps.push_back(Step::E);
      self(self, x + 1, y);
      cur.steps.pop_back();
      if (marked) weight.set(var::w, weight.exp(var::w) - 1);
    }
    if (y < target.second) {
      cur.steps.push_back(Step::N);
      self(self, x, y + 1);
      cur.steps.pop_back();
    }
  };

  auto diag = [&](auto&& self, long x, long y) -> void {
    if (x + y == 0) hv(hv, x, y);
    const long required_ne = -(x + y) / 2;  // NE steps still needed to reach the line
    // the monotone coordinate may not overshoot what the target admits
    if (first_start) {
      if (y + required_ne > target.second) return;
    } else {
      if (x + required_ne > target.first) return;
    }
    if (x + y + 2 <= 0) {
      cur.steps.push_back(Step::NE);
      self(self, x + 1, y + 1);
      cur.steps.pop_back();
    }
    const Step back = first_start ? Step::NW : Step::SE;
    const long bx = first_start ? x - 1 : x + 1;
    const long by = first_start ? y + 1 : y - 1;
    bool admissible = first_start ? (y + 1 + required_ne <= target.second)
                                  : (x + 1 + required_ne <= target.first);
    if (admissible) {
      cur.steps.push_back(back);
      bump_back_step_weight(weight, x + y, +1);
      self(self, bx, by);
      bump_back_step_weight(weight, x + y, -1);
      cur.steps.pop_back();
    }
  };
  diag(diag, cur.sx, cur.sy);
  return out;
}

inline std::vector<std::vector<std::pair<long, long>>> endpoint_sets(int n, int m,
                                                                     bool w_zero) {
  std::vector<std::vector<std::pair<long, long>>> sets(static_cast<size_t>(n));
  const int l = (m % 2 != 0) ? (m - 1) / 2 : m / 2;
  for (int j = 1; j <= n; ++j) {
    auto& s = sets[static_cast<size_t>(j - 1)];
    if (m % 2 != 0) {
      if (w_zero)
        s = {{n - j + l + 1, 2 * j - n - l - 2}};
      else
        s = {{n - j + l + 1, j - l - 2}};
    } else {
      if (w_zero)
        s = {{n - j + l + 1, 2 * j - n - l - 2}, {n - j + l, 2 * j - n - l - 1}};
      else
        s = {{n - j + l + 1, j - l - 2}, {n - j + l, j - l - 1}};
    }
  }
  return sets;
}

inline bool share_point(const std::vector<std::pair<long, long>>& a,
                        const std::vector<std::pair<long, long>>& b, bool below_only) {
  std::set<std::pair<long, long>> pts(a.begin(), a.end());
  for (const auto& p : b) {
    if (below_only && p.first + p.second > 0) continue;
    if (pts.count(p)) return true;
  }
  return false;
}

}  // namespace pathdetail

// All weighted path families of the right-hand-side interpretation.
// AllSigned and NonIntersectingBelow work with symbolic w and the endpoint
// sets E_j; NonIntersecting requires w bound to 0 or 1 (the endpoints are
// replaced by the on-the-line set E'_j when w = 0).
inline std::vector<PathFamily> enumerate_path_families(int n, int m, FamilyMode mode,
                                                       std::optional<int> w_value = std::nullopt) {
  if (m < n - 1 || n < 1) throw PreconditionViolated("need n >= 1 and m >= n-1");
  if (mode == FamilyMode::NonIntersecting &&
      (!w_value || (*w_value != 0 && *w_value != 1)))
    throw InvalidMode("non-intersecting mode needs w bound to 0 or 1");
  const bool w_zero = mode == FamilyMode::NonIntersecting && *w_value == 0;
  auto endpoints = pathdetail::endpoint_sets(n, m, w_zero);

  // cache single-path lists per (i, start, endpoint index, endpoint choice)
  struct Bundle {
    std::vector<pathdetail::SinglePath> paths;
    std::vector<std::vector<std::pair<long, long>>> point_sets;
  };
  auto bundle_for = [&](int i, bool first, int j, int choice) {
    Bundle b;
    b.paths = pathdetail::enumerate_single_paths(
        i, first, endpoints[static_cast<size_t>(j - 1)][static_cast<size_t>(choice)], j);
    for (const auto& sp : b.paths) b.point_sets.push_back(sp.path.points());
    return b;
  };
  std::map<std::tuple<int, int, int, int>, Bundle> cache;
  for (int i = 1; i <= n; ++i)
    for (int first = 0; first < 2; ++first)
      for (int j = 1; j <= n; ++j)
        for (int c = 0; c < static_cast<int>(endpoints[static_cast<size_t>(j - 1)].size()); ++c)
          cache[{i, first, j, c}] = bundle_for(i, first != 0, j, c);

  std::vector<PathFamily> out;
  std::vector<int> sigma(static_cast<size_t>(n));
  for (const auto& perm : permutations_of(n)) {
    for (int i = 0; i < n; ++i) sigma[static_cast<size_t>(i)] = perm[static_cast<size_t>(i)] + 1;
    const int sgn_sigma = permutation_sign(perm);

    // start choices, endpoint choices, then path choices per index
    auto assemble = [&](auto&& self, int i, PathFamily fam,
                        std::vector<const std::vector<std::pair<long, long>>*> pts) -> void {
      if (i > n) {
        int second_count = 0;
        for (bool f : fam.first_start)
          if (!f) ++second_count;
        if (mode == FamilyMode::NonIntersecting) {
          int first_sum = 0;
          for (int p = 1; p <= n; ++p)
            if (fam.first_start[static_cast<size_t>(p - 1)]) first_sum += p;
          fam.sign = first_sum % 2 == 0 ? 1 : -1;
        } else {
          fam.sign = sgn_sigma * (second_count % 2 == 0 ? 1 : -1);
        }
        out.push_back(std::move(fam));
        return;
      }
      for (int first = 0; first < 2; ++first) {
        const int j = sigma[static_cast<size_t>(i - 1)];
        const auto& eps = endpoints[static_cast<size_t>(j - 1)];
        for (int c = 0; c < static_cast<int>(eps.size()); ++c) {
          const Bundle& b = cache[{i, first, j, c}];
          for (size_t pi = 0; pi < b.paths.size(); ++pi) {
            if (mode != FamilyMode::AllSigned) {
              bool clash = false;
              for (const auto* prev : pts)
                if (pathdetail::share_point(*prev, b.point_sets[pi],
                                            mode == FamilyMode::NonIntersectingBelow)) {
                  clash = true;
                  break;
                }
              if (clash) continue;
            }
            if (w_value && *w_value == 0 && b.paths[pi].weight.exp(var::w) > 0) continue;
            PathFamily next = fam;
            next.first_start.push_back(first != 0);
            next.endpoint_index.push_back(j);
            next.endpoints.push_back(eps[static_cast<size_t>(c)]);
            next.paths.push_back(b.paths[pi].path);
            next.step_weight = next.step_weight * b.paths[pi].weight;
            auto npts = pts;
            npts.push_back(&b.point_sets[pi]);
            self(self, i + 1, std::move(next), std::move(npts));
          }
        }
      }
    };
    assemble(assemble, 1, PathFamily{}, {});
  }
  return out;
}

// Overall multiplicative factor of the interpretation: for the signed
// enumeration it carries (-1)^{C(n+1,2)}; in the non-intersecting setting the
// sign convention absorbs it.
inline LaurentPoly path_overall_factor(int n, int m, bool signed_convention) {
  const int l = (m % 2 != 0) ? (m - 1) / 2 : m / 2;
  LaurentPoly f(1);
  for (int i = 1; i <= n; ++i) {
    f *= xvar_pow(i, l) *
         (xvar_pow(i, -1) + 1 + LaurentPoly::variable(var::w) + xvar(i));
    if (m % 2 != 0) f *= LaurentPoly(1) + xvar(i);
  }
  if (signed_convention && ((n + 1) * n / 2) % 2 != 0) f = -f;
  return f;
}

// Signed weighted sum over families, including the overall factor; for bound
// w the weights are specialized first.
inline LaurentPoly path_families_total(int n, int m, FamilyMode mode,
                                       std::optional<int> w_value = std::nullopt) {
  LaurentPoly acc;
  for (const auto& fam : enumerate_path_families(n, m, mode, w_value)) {
    Monomial mm = fam.step_weight;
    mpz_class coeff = fam.sign;
    if (w_value) {
      int e = mm.exp(var::w);
      if (*w_value == 0 && e > 0) continue;
      if (*w_value != 1 && *w_value != 0 && e > 0) {
        coeff *= mpz_class(*w_value);  // only 0/1 reach here in practice
      }
      mm.set(var::w, 0);
    }
    acc.add_term(mm, coeff);
  }
  LaurentPoly factor = path_overall_factor(n, m, mode != FamilyMode::NonIntersecting);
  if (w_value)
    factor = factor.substitute(var::w, LaurentPoly(static_cast<long>(*w_value)));
  return acc * factor;
}

// Exact right-hand side of the bounded w-identity in its normalized form:
// prod_i (X_i^-1+1+w+X_i) det(...) / [prod(1-X_i) prod (1-X_iX_j)(X_j-X_i)].
inline LaurentPoly rhs_determinant(int n, int m) {
  PolyMatrix M(static_cast<size_t>(n), std::vector<LaurentPoly>(static_cast<size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      M[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = detail::entry8(i, j, n, m);
  LaurentPoly num = det(M);
  LaurentPoly lr(1);
  for (int i = 1; i <= n; ++i)
    lr *= xvar_pow(i, -1) + 1 + LaurentPoly::variable(var::w) + xvar(i);
  num = lr * num;
  std::vector<LaurentPoly> dens;
  for (int i = 1; i <= n; ++i) dens.push_back(LaurentPoly(1) - xvar(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      dens.push_back(LaurentPoly(1) - xvar(i) * xvar(j));
      dens.push_back(xvar(j) - xvar(i));
    }
  return num.exact_div_factors(dens);
}

// The determinant entries of the first-proof chain, both parities. Their
// determinant times path_overall_factor (signed convention) equals
// rhs_determinant.
inline PolyMatrix lgv_entry_matrix(int n, int m) {
  const LaurentPoly w = LaurentPoly::variable(var::w);
  const int l = (m % 2 != 0) ? (m - 1) / 2 : m / 2;
  PolyMatrix M(static_cast<size_t>(n), std::vector<LaurentPoly>(static_cast<size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      LaurentPoly e;
      for (int p = 0; p <= j - 1; ++p) {
        for (int q = 0; q <= n - j; ++q) {
          mpz_class c = binomial(j - 1, p) * binomial(n - j, q);
          LaurentPoly wq = w.pow(static_cast<unsigned long>(n - j - q));
          if (m % 2 != 0) {
            long d = p - q - l - 1;
            if (d != 0)
              e += LaurentPoly(sign_of(d) * c) * wq *
                   complete_homog_pm(std::abs(d) - i, i);
          } else {
            for (long shift : {0L, 1L}) {
              long d = p - q - l - shift;
              if (d != 0)
                e += LaurentPoly(sign_of(d) * c) * wq *
                     complete_homog_pm(std::abs(d) - i, i);
            }
          }
        }
      }
      M[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = e;
    }
  }
  return M;
}

// ---------------------------------------------------------------------------
// Decorated two-line arrays (the unbounded right-hand side)

// Generating function of decorated two-line arrays, shifted by prod X_i to
// clear the X^-1 content of the flagged diagonal columns, truncated at the
// cap. Columns: ordinary (j over i), i <= j, any multiplicity (weight X_i or
// X_i X_j); plus one flag column per pair with states
// {none: 1, over: X_j, under: X_i, both: w X_i X_j} off the diagonal and
// {1, X_i, X_i^-1, w} on it.
inline LaurentPoly rhs_unbounded_arrays(int n, int cap) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) pairs.emplace_back(i, j);

  // flag states, enumerated explicitly
  LaurentPoly flag_gf;
  auto flags = [&](auto&& self, size_t idx, Monomial m) -> void {
    if (idx == pairs.size()) {
      flag_gf.add_term(m, 1);
      return;
    }
    auto [i, j] = pairs[idx];
    for (int state = 0; state < 4; ++state) {
      Monomial mm = m;
      if (state == 1) mm.set(var::X(j), mm.exp(var::X(j)) + 1);
      if (state == 2) mm.set(var::X(i), mm.exp(var::X(i)) + (i == j ? -1 : 1));
      if (state == 3) {
        mm.set(var::w, mm.exp(var::w) + 1);
        if (i != j) {
          mm.set(var::X(i), mm.exp(var::X(i)) + 1);
          mm.set(var::X(j), mm.exp(var::X(j)) + 1);
        }
      }
      self(self, idx + 1, mm);
    }
  };
  flags(flags, 0, Monomial{});

  // ordinary column multisets up to the degree budget
  LaurentPoly ordinary;
  auto columns = [&](auto&& self, size_t idx, Monomial m, int budget) -> void {
    if (idx == pairs.size()) {
      ordinary.add_term(m, 1);
      return;
    }
    auto [i, j] = pairs[idx];
    const int deg = (i == j) ? 1 : 2;
    for (int mult = 0; mult * deg <= budget; ++mult) {
      Monomial mm = m;
      mm.set(var::X(i), mm.exp(var::X(i)) + mult);
      if (i != j) mm.set(var::X(j), mm.exp(var::X(j)) + mult);
      self(self, idx + 1, mm, budget - mult * deg);
    }
  };
  columns(columns, 0, Monomial{}, cap + n);

  Monomial shift;
  for (int i = 1; i <= n; ++i) shift.set(var::X(i), 1);
  LaurentPoly total = flag_gf * ordinary;
  total.scale(shift, 1);
  LaurentPoly truncated;
  for (const auto& [m, c] : total.terms())
    if (m.x_degree() <= cap) truncated.add_term(m, c);
  return truncated;
}

// The same object through the series expander.
inline Series rhs_unbounded_series(int n, int cap) {
  std::vector<LaurentPoly> nums, dens;
  const LaurentPoly w = LaurentPoly::variable(var::w);
  for (int i = 1; i <= n; ++i) {
    nums.push_back(LaurentPoly(1) + xvar(i) + w * xvar(i) + xvar(i) * xvar(i));
    dens.push_back(LaurentPoly(1) - xvar(i));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      nums.push_back(LaurentPoly(1) + xvar(i) + xvar(j) + w * xvar(i) * xvar(j));
      dens.push_back(LaurentPoly(1) - xvar(i) * xvar(j));
    }
  return series_expand(nums, dens, cap);
}

// ---------------------------------------------------------------------------
// Plane partition pairs (the w = 0 specialization)

struct PlanePartitionPair {
  std::vector<std::vector<long>> P;      // column-strict, rows 1..n
  std::vector<std::vector<long>> Q;      // row-strict, rows 1..n
  std::vector<int> q_start_col;          // 1 = full row, 2 = first cell deleted
};

// Translate a fully non-intersecting w=0 family (all second starts, sigma
// reversing) into the plane-partition pair: the below-the-line back steps of
// path i fill row n+1-i of P (entry = halved distance + 1), the horizontal
// steps of the remaining portion fill row i of Q with their step indices,
// read right to left.
inline PlanePartitionPair paths_to_plane_partitions(const PathFamily& fam, int n, int m) {
  const int l = (m % 2 != 0) ? (m - 1) / 2 : m / 2;
  if (m % 2 != 0 && l < n - 2)
    throw PreconditionViolated("odd case needs l >= n-2");
  if (m % 2 == 0 && l < n - 1)
    throw PreconditionViolated("even case needs l >= n-1");
  PlanePartitionPair pp;
  pp.P.assign(static_cast<size_t>(n), {});
  pp.Q.assign(static_cast<size_t>(n), {});
  pp.q_start_col.assign(static_cast<size_t>(n), 1);
  for (int i = 1; i <= n; ++i) {
    if (fam.first_start[static_cast<size_t>(i - 1)])
      throw PreconditionViolated("expected second start points only");
    if (fam.endpoint_index[static_cast<size_t>(i - 1)] != n + 1 - i)
      throw PreconditionViolated("expected the reversing endpoint assignment");
    const LatticePath& path = fam.paths[static_cast<size_t>(i - 1)];
    if (path.steps.size() != fam.paths[static_cast<size_t>(i - 1)].steps.size())
      throw PreconditionViolated("invalid path");
    long x = path.sx, y = path.sy;
    std::vector<long> p_row;
    size_t hv_from = 0;
    for (size_t s = 0; s < path.steps.size(); ++s) {
      Step st = path.steps[s];
      if (st == Step::E || st == Step::N) {
        hv_from = s;
        break;
      }
      if (st == Step::SE) p_row.push_back(-(x + y) / 2 + 1);
      auto [dx, dy] = step_delta(st);
      x += dx;
      y += dy;
      hv_from = s + 1;
    }
    pp.P[static_cast<size_t>(n - i)] = p_row;

    std::vector<long> q_row;
    int idx = 0;
    for (size_t s = hv_from; s < path.steps.size(); ++s) {
      ++idx;
      if (path.steps[s] == Step::E) q_row.push_back(idx);
    }
    std::reverse(q_row.begin(), q_row.end());
    pp.Q[static_cast<size_t>(i - 1)] = q_row;
    if (m % 2 == 0) {
      // endpoint choice: x-coordinate i+l is the full row, i+l-1 the deleted one
      long ex = fam.endpoints[static_cast<size_t>(i - 1)].first;
      pp.q_start_col[static_cast<size_t>(i - 1)] = (ex == i + l) ? 1 : 2;
    }
  }
  return pp;
}

namespace pathdetail {

// column-strict fillings of lambda, row i entries in [1, 2n+2-2i]; the
// accumulated weight exponent pattern: entry 2i-1 -> X_i, entry 2i -> X_i^-1.
inline LaurentPoly column_strict_sum(const std::vector<long>& lambda, int n) {
  LaurentPoly acc;
  std::vector<std::vector<long>> rows(lambda.size());
  for (size_t i = 0; i < lambda.size(); ++i)
    rows[i].assign(static_cast<size_t>(lambda[i]), 0);
  Monomial weight;
  auto fill = [&](auto&& self, size_t r, size_t c) -> void {
    if (r == rows.size()) {
      acc.add_term(weight, 1);
      return;
    }
    if (c == rows[r].size()) {
      self(self, r + 1, 0);
      return;
    }
    long hi = 2 * n + 2 - 2 * static_cast<long>(r + 1);
    if (c > 0) hi = std::min(hi, rows[r][c - 1]);
    if (r > 0 && c < rows[r - 1].size()) hi = std::min(hi, rows[r - 1][c] - 1);
    for (long e = 1; e <= hi; ++e) {
      rows[r][c] = e;
      int v = var::X(static_cast<int>((e + 1) / 2));
      int delta = (e % 2 != 0) ? 1 : -1;
      weight.set(v, weight.exp(v) + delta);
      self(self, r, c + 1);
      weight.set(v, weight.exp(v) - delta);
    }
  };
  fill(fill, 0, 0);
  return acc;
}

// Row-strict fillings with positive entries, row i bounded by n-i. Row r
// occupies absolute columns [hi_r - len_r + 1, hi_r] (hi_r is the complement
// length; the full row starts at column 1, the first-cell-deleted row at 2).
// Constraints across consecutive rows, aligned by absolute column:
//   (1) entries weakly decrease down columns where both rows have cells;
//   (2) every cell of row i at a column <= hi_{i+1} must sit above a cell of
//       row i+1, unless its entry is the maximal value n-i.
// Both encode the disjointness of the horizontal/vertical path portions.
inline long row_strict_count(const std::vector<long>& hi_col,
                             const std::vector<long>& row_len, int n) {
  const int nrows = static_cast<int>(row_len.size());
  std::vector<std::vector<long>> cells(static_cast<size_t>(nrows));
  for (int r = 0; r < nrows; ++r)
    cells[static_cast<size_t>(r)].assign(static_cast<size_t>(row_len[static_cast<size_t>(r)]), 0);
  auto lo_col = [&](int r) {
    return hi_col[static_cast<size_t>(r)] - row_len[static_cast<size_t>(r)] + 1;
  };
  long count = 0;
  auto fill = [&](auto&& self, int r, int c) -> void {
    if (r == nrows) {
      ++count;
      return;
    }
    if (c == static_cast<int>(row_len[static_cast<size_t>(r)])) {
      // coverage rule (2) against the next row
      if (r + 1 < nrows) {
        for (int cc = 0; cc < static_cast<int>(row_len[static_cast<size_t>(r)]); ++cc) {
          long col = lo_col(r) + cc;
          if (col > hi_col[static_cast<size_t>(r + 1)]) continue;
          bool covered = col >= hi_col[static_cast<size_t>(r + 1)] -
                                    row_len[static_cast<size_t>(r + 1)] + 1;
          if (!covered && cells[static_cast<size_t>(r)][static_cast<size_t>(cc)] != n - (r + 1))
            return;
        }
      }
      self(self, r + 1, 0);
      return;
    }
    long hi = n - (r + 1);
    if (c > 0) hi = std::min(hi, cells[static_cast<size_t>(r)][static_cast<size_t>(c - 1)] - 1);
    if (r > 0) {
      long pc = lo_col(r) + c - lo_col(r - 1);  // index within the previous row
      if (pc >= 0 && pc < static_cast<long>(row_len[static_cast<size_t>(r - 1)]))
        hi = std::min(hi, cells[static_cast<size_t>(r - 1)][static_cast<size_t>(pc)]);
    }
    for (long e = 1; e <= hi; ++e) {
      cells[static_cast<size_t>(r)][static_cast<size_t>(c)] = e;
      self(self, r, c + 1);
    }
  };
  fill(fill, 0, 0);
  return count;
}

}  // namespace pathdetail

// Direct enumeration of the plane-partition pairs of the w = 0 corollary;
// equals rhs_determinant at w = 0. Parity is selected by m = 2l+1 / 2l.
inline LaurentPoly enumerate_pp_pairs(int n, int l, bool odd) {
  if (odd && l < n - 2) throw PreconditionViolated("odd case needs l >= n-2");
  if (!odd && l < n - 1) throw PreconditionViolated("even case needs l >= n-1");
  LaurentPoly total;
  std::vector<long> lambda(static_cast<size_t>(n), 0);
  auto iterate = [&](auto&& self, int pos, long hi) -> void {
    if (pos == n) {
      LaurentPoly p_sum = pathdetail::column_strict_sum(lambda, n);
      if (p_sum.is_zero()) return;
      // complement shape in the n x l box
      std::vector<long> comp(static_cast<size_t>(n));
      for (int i = 1; i <= n; ++i)
        comp[static_cast<size_t>(i - 1)] = l - lambda[static_cast<size_t>(n - i)];
      long q_count = 0;
      if (odd) {
        q_count = pathdetail::row_strict_count(comp, comp, n);
      } else {
        // per-row choice: full complement row at column 1, or first cell
        // deleted (needs a nonempty row)
        std::vector<long> len(static_cast<size_t>(n), 0);
        auto choose = [&](auto&& cself, int r) -> void {
          if (r == n) {
            q_count += pathdetail::row_strict_count(comp, len, n);
            return;
          }
          long c = comp[static_cast<size_t>(r)];
          len[static_cast<size_t>(r)] = c;
          cself(cself, r + 1);
          if (c >= 1) {
            len[static_cast<size_t>(r)] = c - 1;
            cself(cself, r + 1);
          }
        };
        choose(choose, 0);
      }
      if (q_count != 0) total += LaurentPoly(q_count) * p_sum;
      return;
    }
    for (long x = 0; x <= hi; ++x) {
      lambda[static_cast<size_t>(pos)] = x;
      self(self, pos + 1, x);
    }
  };
  iterate(iterate, 0, l);

  LaurentPoly factor(1);
  for (int i = 1; i <= n; ++i) {
    factor *= xvar_pow(i, l) * (xvar_pow(i, -1) + 1 + xvar(i));
    if (odd) factor *= LaurentPoly(1) + xvar(i);
  }
  return total * factor;
}

}  // namespace littlewood
