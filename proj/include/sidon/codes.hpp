#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sidon/bitmap.hpp"
#include "sidon/errors.hpp"
#include "sidon/gf2.hpp"
#include "sidon/sidon.hpp"

namespace sidon {

// Minimum-distance classification of the code whose check-matrix columns are M.
// Columns are nonzero and distinct, so the class is always at least d3.
enum class dist_class { d3, d4, d5, d6_or_more };

inline std::string to_string(dist_class d) {
  switch (d) {
    case dist_class::d3: return "D3";
    case dist_class::d4: return "D4";
    case dist_class::d5: return "D5";
    case dist_class::d6_or_more: return "D6_OR_MORE";
  }
  return "?";
}

inline void require_no_zero(const point_set& m) {
  if (m.contains(0)) fail(errc::zero_in_set, "0 must not be a column");
}

// d3: some 3 distinct columns sum to zero (not sum-free).
// d4: sum-free but not Sidon (some 4 distinct columns sum to zero).
// d5: sum-free Sidon with 5 distinct columns summing to zero, found by joining
//     2-subset sums (unique per value, since Sidon) against 3-subset sums over
//     disjoint index sets.
// d6_or_more: none of the above.
inline dist_class min_distance_class(const point_set& m) {
  require_no_zero(m);
  if (!is_sum_free(m)) return dist_class::d3;
  if (!is_sidon(m)) return dist_class::d4;
  const auto& e = m.elems;
  const std::size_t n = e.size();
  std::unordered_map<vec_t, std::pair<std::size_t, std::size_t>> pair_of_sum;
  pair_of_sum.reserve(n * n / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pair_of_sum.emplace(e[i] ^ e[j], std::make_pair(i, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l) {
        const auto it = pair_of_sum.find(e[i] ^ e[j] ^ e[l]);
        if (it == pair_of_sum.end()) continue;
        const auto [p, q] = it->second;
        if (p != i && p != j && p != l && q != i && q != j && q != l) return dist_class::d5;
      }
  return dist_class::d6_or_more;
}

// The associated code of M: length |M|, check-matrix columns the elements of M
// in ascending order, dimension |M| - rank.
struct code_view {
  int n = 0;
  int t = 0;
  int k = 0;
  point_set columns;
  dist_class d = dist_class::d6_or_more;
  std::optional<int> covering_radius;
};

inline code_view associated_code(const point_set& m) {
  require_no_zero(m);
  if (m.size() < m.dim + 1) fail(errc::too_few_columns, "need at least t+1 columns");
  code_view c;
  c.n = m.size();
  c.t = m.dim;
  c.k = c.n - span_dim(m);
  c.columns = m;
  c.d = min_distance_class(m);
  return c;
}

// Smallest R <= cap such that the sums of at most R distinct columns cover the
// space, by breadth-first bitmap expansion. Requires full column rank.
inline int covering_radius(const point_set& m, int cap = 5) {
  require_no_zero(m);
  if (span_dim(m) != m.dim) fail(errc::not_full_rank, "columns do not span the space");
  vec_set layer(m.dim);
  layer.insert(0);
  vec_set covered = layer;
  if (covered.all()) return 0;
  for (int r = 1; r <= cap; ++r) {
    vec_set next(m.dim);
    for (vec_t v : m.elems) next.or_translated(layer, v);
    covered |= next;
    if (covered.all()) return r;
    layer = std::move(next);
  }
  fail(errc::cap_exceeded, "not covered within " + std::to_string(cap) + " column sums");
}

// Remove one column and one coordinate from the check matrix. drop_row is
// 1-based and must be a set coordinate of drop_col. Fails if the image has a
// zero or duplicate column, since it is then not a valid associated set.
inline point_set puncture_set(const point_set& m, vec_t drop_col, int drop_row) {
  if (drop_row < 1 || drop_row > m.dim) fail(errc::bad_value, "row index out of range");
  if (!m.contains(drop_col)) fail(errc::column_not_present, "column is not in the set");
  if (((drop_col >> (drop_row - 1)) & 1) == 0)
    fail(errc::row_not_set, "column has a 0 in the dropped row");
  const vec_t low = (vec_t{1} << (drop_row - 1)) - 1;
  std::vector<vec_t> out;
  for (vec_t v : m.elems) {
    if (v == drop_col) continue;
    out.push_back((v & low) | ((v >> drop_row) << (drop_row - 1)));
  }
  std::sort(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i] == 0 || (i > 0 && out[i] == out[i - 1]))
      fail(errc::collapse_to_zero_or_duplicate, "puncturing produced a zero or repeated column");
  return point_set(m.dim - 1, std::move(out));
}

// Best possible minimum distance dmax(n, n-t) on the t-th subdiagonal,
// classified from the maximum Sidon-set sizes of dimensions t-1 and t.
inline dist_class subdiagonal_class(std::int64_t n, int t,
                                    const std::map<int, std::int64_t>& smax_table) {
  if (t < 2 || n <= t) fail(errc::out_of_domain, "need n > t >= 2");
  const auto it_prev = smax_table.find(t - 1);
  const auto it_cur = smax_table.find(t);
  if (it_prev == smax_table.end() || it_cur == smax_table.end())
    fail(errc::missing_smax, "smax table must cover t-1 and t");
  const std::int64_t smax_prev = it_prev->second, smax_cur = it_cur->second;
  const std::int64_t half = std::int64_t{1} << (t - 1);
  if (n >= 2 * half) fail(errc::out_of_domain, "no such code: n >= 2^t");
  if (n > half) return dist_class::d3;
  if (n >= smax_cur) return dist_class::d4;
  if (n > smax_prev) return dist_class::d5;
  return dist_class::d6_or_more;
}

// Check matrix as t rows of n characters '0'/'1', row i = coordinate i of each
// column in ascending column order.
inline std::vector<std::string> check_matrix_rows(const point_set& m) {
  std::vector<std::string> rows(m.dim);
  for (int i = 0; i < m.dim; ++i) {
    std::string& r = rows[i];
    r.reserve(m.elems.size());
    for (vec_t v : m.elems) r.push_back(((v >> i) & 1) ? '1' : '0');
  }
  return rows;
}

}  // namespace sidon
