#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "suzuki/classify.hpp"
#include "suzuki/nichols.hpp"

namespace testing {

using namespace suzuki;

struct GridPoint {
  int N, n, mu, lambda;
};

inline std::vector<GridPoint> grid(const std::vector<std::pair<int, int>>& Nn) {
  std::vector<GridPoint> out;
  for (auto [N, n] : Nn)
    for (int mu : {1, -1})
      for (int la : {1, -1}) out.push_back({N, n, mu, la});
  return out;
}

inline SuzukiParams params(const GridPoint& g) { return {g.N, g.n, g.mu, g.lambda}; }

// Polynomial from (coefficient, 1-based word) pairs.
inline FreeWordPoly poly(const std::vector<std::pair<long, std::vector<int>>>& t) {
  FreeWordPoly f;
  for (const auto& [c, w] : t) {
    std::vector<int> z;
    for (int x : w) z.push_back(x - 1);
    f.add(z, CycScalar(c));
  }
  return f;
}

// Brute-force S_k: every permutation, lifted through a bubble-sort reduced word.
// Column w of the result is S_k e_w in lexicographic word order.
inline std::vector<std::vector<CycScalar>> brute_symmetrizer(const MonomialBraiding& c, int k) {
  const int d = c.dim();
  std::size_t n = 1;
  for (int i = 0; i < k; ++i) n *= d;
  auto word_of = [&](std::size_t idx) {
    std::vector<int> w(k);
    for (int i = k - 1; i >= 0; --i) {
      w[i] = static_cast<int>(idx % d);
      idx /= d;
    }
    return w;
  };
  auto index_of = [&](const std::vector<int>& w) {
    std::size_t idx = 0;
    for (int x : w) idx = idx * d + x;
    return idx;
  };
  std::vector<std::vector<CycScalar>> cols(n, std::vector<CycScalar>(n, CycScalar()));
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // positions of adjacent swaps sorting perm; each permutation yields a distinct reduced word
    std::vector<int> p = perm, swaps;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j + 1 < k - i; ++j)
        if (p[j] > p[j + 1]) {
          std::swap(p[j], p[j + 1]);
          swaps.push_back(j);
        }
    for (std::size_t src = 0; src < n; ++src) {
      auto w = word_of(src);
      CycScalar s(1L);
      for (int pos : swaps) {
        const auto& e = c.at(w[pos], w[pos + 1]);
        w[pos] = e.k;
        w[pos + 1] = e.l;
        s = s * e.scalar;
      }
      cols[src][index_of(w)] += s;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cols;
}

// Rank by plain Gaussian elimination.
inline int brute_rank(std::vector<std::vector<CycScalar>> rows) {
  int r = 0;
  const int m = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int col = 0; col < m && r < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (!rows[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    CycScalar inv = rows[r][col].inverse();
    for (auto& x : rows[r]) x = x * inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      CycScalar f = rows[i][col];
      for (int j = col; j < m; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

inline MonomialBraiding line(const CycScalar& q) {
  return diagonal_braiding(DiagonalBraiding{1, {{q}}});
}

inline MonomialBraiding pair(const CycScalar& q11, const CycScalar& q12, const CycScalar& q21,
                             const CycScalar& q22) {
  return diagonal_braiding(DiagonalBraiding{2, {{q11, q12}, {q21, q22}}});
}

}  // namespace testing
