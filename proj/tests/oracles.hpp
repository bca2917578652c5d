#pragma once

// Brute-force reference implementations used only by the tests. They share no
// code with the library beyond the Rational type.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Vec = std::vector<Q>;
using Mat = std::vector<Vec>;  // row-major

// Row reduction; returns rank and leaves `m` in reduced echelon form.
inline std::size_t reduce(Mat& m, std::size_t cols) {
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const Q inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const Q f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
  }
  return row;
}

// Conic Carathéodory: b lies in cone(columns of A) iff it is a nonnegative
// combination of some linearly independent set of columns of size rank(A).
inline bool in_cone(const Mat& a, const Vec& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  Mat m = a;
  const std::size_t rk = reduce(m, cols);
  Mat aug = a;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  if (reduce(aug, cols + 1) != rk) return false;
  if (rk == 0) return true;

  std::vector<bool> pick(cols, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(rk), true);
  do {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < cols; ++j) {
      if (pick[j]) idx.push_back(j);
    }
    Mat sys(rows, Vec(rk + 1));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t t = 0; t < rk; ++t) sys[i][t] = a[i][idx[t]];
      sys[i][rk] = b[i];
    }
    if (reduce(sys, rk) != rk) continue;
    bool consistent = true;
    for (std::size_t i = rk; i < rows; ++i) consistent = consistent && sys[i][rk] == 0;
    if (!consistent) continue;
    bool nonneg = true;
    for (std::size_t t = 0; t < rk; ++t) nonneg = nonneg && sys[t][rk] >= 0;
    if (nonneg) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

// Do the convex hulls of the pieces share a point? Eliminates the common point
// and asks whether (0, ..., 0, 1, ..., 1) is a nonnegative combination of the
// weight columns.
inline bool hulls_intersect(const std::vector<std::vector<Vec>>& pieces) {
  const std::size_t r = pieces.size();
  const std::size_t d = pieces[0][0].size();
  std::size_t n = 0;
  for (const auto& p : pieces) n += p.size();
  const std::size_t rows = (r - 1) * d + r;
  Mat a(rows, Vec(n));
  Vec b(rows);
  std::size_t col = 0;
  for (std::size_t j = 0; j < r; ++j) {
    for (const auto& pt : pieces[j]) {
      for (std::size_t t = 0; t + 1 < r; ++t) {
        for (std::size_t c = 0; c < d; ++c) {
          if (j == 0) a[t * d + c][col] = pt[c];
          if (j == t + 1) a[t * d + c][col] = -pt[c];
        }
      }
      a[(r - 1) * d + j][col] = 1;
      ++col;
    }
  }
  for (std::size_t j = 0; j < r; ++j) b[(r - 1) * d + j] = 1;
  return in_cone(a, b);
}

// Every assignment of n points to r pieces with at most one point per class per piece.
inline std::vector<std::vector<std::vector<std::size_t>>> colorful_assignments(
    const std::vector<std::size_t>& color_of, std::size_t r) {
  const std::size_t n = color_of.size();
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::size_t> piece(n, 0);
  for (;;) {
    bool ok = true;
    std::set<std::pair<std::size_t, std::size_t>> used;
    for (std::size_t i = 0; i < n && ok; ++i) ok = used.insert({piece[i], color_of[i]}).second;
    if (ok) {
      std::vector<std::vector<std::size_t>> parts(r);
      for (std::size_t i = 0; i < n; ++i) parts[piece[i]].push_back(i);
      out.push_back(std::move(parts));
    }
    std::size_t i = 0;
    while (i < n && ++piece[i] == r) piece[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// ---- integral Smith normal form ------------------------------------------

using IMat = std::vector<std::vector<mpz_class>>;

// Diagonal of the Smith normal form of an integer matrix.
inline std::vector<mpz_class> smith_diagonal(IMat m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry in the trailing block as pivot.
    std::optional<std::pair<std::size_t, std::size_t>> piv;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] != 0 && (!piv || abs(m[i][j]) < abs(m[piv->first][piv->second]))) piv = {{i, j}};
      }
    }
    if (!piv) break;
    std::swap(m[t], m[piv->first]);
    for (auto& row : m) std::swap(row[t], row[piv->second]);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const mpz_class q = m[i][t] / m[t][t];
        if (q != 0) {
          for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        }
        if (m[i][t] != 0) {
          clean = false;
          std::swap(m[t], m[i]);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const mpz_class q = m[t][j] / m[t][t];
        if (q != 0) {
          for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        }
        if (m[t][j] != 0) {
          clean = false;
          for (auto& row : m) std::swap(row[t], row[j]);
        }
      }
      if (!clean) continue;
      // Divisibility: fold any entry not divisible by the pivot into row t.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols && divides; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t c = t; c < cols; ++c) m[t][c] += m[i][c];
            divides = false;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

// Betti numbers over F_p of the complex generated by `facets`, via integral
// Smith normal forms and the universal coefficient theorem.
inline std::vector<std::size_t> betti_via_snf(const std::vector<std::vector<std::size_t>>& facets, unsigned p) {
  std::vector<std::set<std::vector<std::size_t>>> faces;
  for (const auto& f : facets) {
    std::vector<std::size_t> s = f;
    std::sort(s.begin(), s.end());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s.size()); ++mask) {
      std::vector<std::size_t> sub;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if ((mask >> i) & 1U) sub.push_back(s[i]);
      }
      if (faces.size() < sub.size()) faces.resize(sub.size());
      faces[sub.size() - 1].insert(sub);
    }
  }
  const std::size_t top = faces.size();
  std::vector<std::size_t> rank_p(top + 1, 0);  // rank_p[i] = rank of ∂_i mod p
  for (std::size_t i = 1; i < top; ++i) {
    std::map<std::vector<std::size_t>, std::size_t> row_of;
    for (const auto& f : faces[i - 1]) row_of.emplace(f, row_of.size());
    IMat m(faces[i - 1].size(), std::vector<mpz_class>(faces[i].size(), 0));
    std::size_t col = 0;
    for (const auto& f : faces[i]) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        auto sub = f;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
        m[row_of.at(sub)][col] = (j % 2 == 0) ? 1 : -1;
      }
      ++col;
    }
    for (const auto& e : smith_diagonal(m)) {
      if (e % p != 0) ++rank_p[i];
    }
  }
  std::vector<std::size_t> betti(top);
  for (std::size_t i = 0; i < top; ++i) betti[i] = faces[i].size() - rank_p[i] - rank_p[i + 1];
  return betti;
}

}  // namespace oracle
