// Brute-force reference implementations used only by tests. These follow the
// definitions directly (nested loops over elements, explicit codeword
// enumeration) and share no algorithmic path with the library.
#pragma once

#include <climits>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "sidon/gf2.hpp"

namespace oracle {

using sidon::point_set;
using sidon::vec_t;

inline std::set<vec_t> k_sums(const point_set& m, int k) {
  std::set<vec_t> out;
  const auto& e = m.elems;
  const std::size_t n = e.size();
  if (n == 0) return out;
  // multisets of k indices: i <= j (<= l (<= p))
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (k == 2) {
        out.insert(e[i] ^ e[j]);
        continue;
      }
      for (std::size_t l = j; l < n; ++l) {
        if (k == 3) {
          out.insert(e[i] ^ e[j] ^ e[l]);
          continue;
        }
        for (std::size_t p = l; p < n; ++p) out.insert(e[i] ^ e[j] ^ e[l] ^ e[p]);
      }
    }
  return out;
}

inline std::set<vec_t> k_star_sums(const point_set& m, int k) {
  std::set<vec_t> out;
  const auto& e = m.elems;
  const std::size_t n = e.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (k == 2) {
        out.insert(e[i] ^ e[j]);
        continue;
      }
      for (std::size_t l = j + 1; l < n; ++l) {
        if (k == 3) {
          out.insert(e[i] ^ e[j] ^ e[l]);
          continue;
        }
        for (std::size_t p = l + 1; p < n; ++p) out.insert(e[i] ^ e[j] ^ e[l] ^ e[p]);
      }
    }
  return out;
}

// Straight from the definition: no pairwise distinct m1,m2,m3,m4 with
// m1+m2 = m3+m4.
inline bool is_sidon(const point_set& m) {
  const auto& e = m.elems;
  const std::size_t n = e.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          if (d == a || d == b) continue;
          if ((e[a] ^ e[b]) == (e[c] ^ e[d])) return false;
        }
      }
  return true;
}

inline bool is_sum_free(const point_set& m) {
  const auto& e = m.elems;
  for (vec_t x : e)
    for (vec_t y : e)
      for (vec_t z : e)
        if ((x ^ y) == z) return false;
  return true;
}

inline bool is_maximal_sidon(const point_set& m) {
  if (!is_sidon(m)) return false;
  const vec_t end = sidon::space_mask(m.dim);
  for (vec_t g = 0;; ++g) {
    if (!m.contains(g)) {
      std::vector<vec_t> ext = m.elems;
      ext.push_back(g);
      if (is_sidon(point_set(m.dim, std::move(ext)))) return false;
    }
    if (g == end) break;
  }
  return true;
}

// Exact minimum distance of the code with check-matrix columns m, by
// row-reducing the matrix and enumerating all nonzero codewords of the
// kernel. Returns INT_MAX when the kernel is trivial.
inline int min_distance(const point_set& m) {
  const int t = m.dim;
  const int n = m.size();
  std::vector<std::uint32_t> rows(t, 0);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < n; ++j)
      if ((m.elems[j] >> i) & 1) rows[i] |= std::uint32_t{1} << j;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < n && rank < t; ++c) {
    int r = -1;
    for (int i = rank; i < t; ++i)
      if ((rows[i] >> c) & 1) {
        r = i;
        break;
      }
    if (r < 0) continue;
    std::swap(rows[rank], rows[r]);
    for (int i = 0; i < t; ++i)
      if (i != rank && ((rows[i] >> c) & 1)) rows[i] ^= rows[rank];
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<std::uint32_t> kernel;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::uint32_t x = std::uint32_t{1} << f;
    for (int r = 0; r < rank; ++r)
      if ((rows[r] >> f) & 1) x |= std::uint32_t{1} << pivot_col[r];
    kernel.push_back(x);
  }
  const int k = static_cast<int>(kernel.size());
  int best = INT_MAX;
  for (std::uint32_t combo = 1; combo < (std::uint32_t{1} << k); ++combo) {
    std::uint32_t word = 0;
    for (int i = 0; i < k; ++i)
      if ((combo >> i) & 1) word ^= kernel[i];
    best = std::min(best, std::popcount(word));
  }
  return best;
}

// Smallest R with every syndrome a sum of at most R columns, by breadth-first
// closure over std::set.
inline int covering_radius(const point_set& m, int cap = 10) {
  const std::size_t universe = std::size_t{1} << m.dim;
  std::set<vec_t> reached{0};
  for (int r = 0; r <= cap; ++r) {
    if (reached.size() == universe) return r;
    std::set<vec_t> next = reached;
    for (vec_t u : reached)
      for (vec_t c : m.elems) next.insert(u ^ c);
    reached = std::move(next);
  }
  return -1;
}

// size -> number of maximal Sidon sets containing {0, e_1..e_t}, over all
// subsets of F_2^t. Only sensible for t <= 4.
inline std::map<int, std::uint64_t> maximal_histogram(int t) {
  const point_set base = point_set::zero_and_basis(t);
  std::vector<vec_t> free_vals;
  const vec_t end = sidon::space_mask(t);
  for (vec_t v = 0;; ++v) {
    if (!base.contains(v)) free_vals.push_back(v);
    if (v == end) break;
  }
  std::map<int, std::uint64_t> hist;
  const std::size_t combos = std::size_t{1} << free_vals.size();
  for (std::size_t mask = 0; mask < combos; ++mask) {
    std::vector<vec_t> elems = base.elems;
    for (std::size_t i = 0; i < free_vals.size(); ++i)
      if ((mask >> i) & 1) elems.push_back(free_vals[i]);
    point_set m(t, std::move(elems));
    if (is_maximal_sidon(m)) ++hist[m.size()];
  }
  return hist;
}

// Maximum size of a sum-free Sidon set in F_2^t by exhaustive ordered search
// with no symmetry reduction.
inline int sfsmax(int t) {
  const vec_t end = sidon::space_mask(t);
  std::vector<vec_t> stack;
  int best = 0;
  // g extends a sum-free Sidon set iff g is outside both the 2-sums and the
  // 3-sums of the current set.
  auto extend_ok = [&](vec_t g) {
    const std::size_t n = stack.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if ((stack[i] ^ stack[j]) == g) return false;
        for (std::size_t l = j; l < n; ++l)
          if ((stack[i] ^ stack[j] ^ stack[l]) == g) return false;
      }
    return true;
  };
  auto dfs = [&](auto&& self, vec_t from) -> void {
    best = std::max(best, static_cast<int>(stack.size()));
    for (vec_t g = from; g <= end; ++g) {
      if (!extend_ok(g)) continue;
      stack.push_back(g);
      self(self, g + 1);
      stack.pop_back();
      if (g == end) break;
    }
  };
  dfs(dfs, 1);
  return best;
}

inline point_set random_subset(int t, int target, std::mt19937_64& rng) {
  std::set<vec_t> vals;
  const vec_t mask = sidon::space_mask(t);
  while (static_cast<int>(vals.size()) < target)
    vals.insert(static_cast<vec_t>(rng()) & mask);
  return point_set(t, std::vector<vec_t>(vals.begin(), vals.end()));
}

// Grows a random Sidon set by rejection; stops when stuck or at target size.
inline point_set random_sidon_set(int t, int target, std::mt19937_64& rng) {
  std::vector<vec_t> elems;
  const vec_t mask = sidon::space_mask(t);
  for (int tries = 0; tries < 400 && static_cast<int>(elems.size()) < target; ++tries) {
    const vec_t g = static_cast<vec_t>(rng()) & mask;
    std::vector<vec_t> ext = elems;
    ext.push_back(g);
    std::sort(ext.begin(), ext.end());
    if (std::adjacent_find(ext.begin(), ext.end()) != ext.end()) continue;
    point_set candidate(t, ext);
    if (is_sidon(candidate)) elems = std::move(ext);
  }
  std::sort(elems.begin(), elems.end());
  return point_set(t, elems);
}

}  // namespace oracle
