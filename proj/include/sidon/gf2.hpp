#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sidon/errors.hpp"

namespace sidon {

// A vector of F_2^t is a nonnegative integer below 2^t; bit i-1 is coordinate i,
// so the integer sum a_i 2^i "is" the vector (a_1, ..., a_t).
using vec_t = std::uint32_t;

inline constexpr int max_dim = 31;         // point sets and maps
inline constexpr int max_bitmap_dim = 28;  // anything backed by a full 2^t bitmap

inline int weight(vec_t v) { return std::popcount(v); }

// e_i, the i-th standard basis vector (1-based).
inline vec_t unit(int i) { return vec_t{1} << (i - 1); }

// All-ones mask for F_2^dim.
inline vec_t space_mask(int dim) {
  return dim >= 32 ? ~vec_t{0} : (vec_t{1} << dim) - 1;
}

inline void check_dim(int dim) {
  if (dim < 0 || dim > max_dim)
    fail(errc::dimension_too_large, "dimension " + std::to_string(dim) + " out of range [0," +
                                        std::to_string(max_dim) + "]");
}

// A finite subset of F_2^dim, kept strictly sorted and duplicate free.
struct point_set {
  int dim = 0;
  std::vector<vec_t> elems;

  point_set() = default;

  point_set(int dim_, std::vector<vec_t> values) : dim(dim_), elems(std::move(values)) {
    check_dim(dim);
    std::sort(elems.begin(), elems.end());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (elems[i] > space_mask(dim))
        fail(errc::bad_value, "element " + std::to_string(elems[i]) + " is not below 2^" +
                                  std::to_string(dim));
      if (i > 0 && elems[i] == elems[i - 1])
        fail(errc::duplicate_element, "duplicate element " + std::to_string(elems[i]));
    }
  }

  int size() const { return static_cast<int>(elems.size()); }
  bool empty() const { return elems.empty(); }
  bool contains(vec_t v) const { return std::binary_search(elems.begin(), elems.end(), v); }

  bool operator==(const point_set&) const = default;

  // {0, e_1, ..., e_t}
  static point_set zero_and_basis(int dim) {
    std::vector<vec_t> v{0};
    for (int i = 1; i <= dim; ++i) v.push_back(unit(i));
    return point_set(dim, std::move(v));
  }
};

// Rank over F_2, eliminating on the lowest set bit of each vector.
inline int rank_of(std::span<const vec_t> vecs) {
  vec_t pivot[32] = {};
  int rank = 0;
  for (vec_t v : vecs) {
    while (v != 0) {
      const int b = std::countr_zero(v);
      if (pivot[b] == 0) {
        pivot[b] = v;
        ++rank;
        break;
      }
      v ^= pivot[b];
    }
  }
  return rank;
}

inline int span_dim(const point_set& m) { return rank_of(m.elems); }

// Greedy independent subset: scans `vecs` in order and keeps each element that
// is independent of the ones kept so far. Returns the kept elements.
inline std::vector<vec_t> greedy_basis(std::span<const vec_t> vecs) {
  vec_t pivot[32] = {};
  std::vector<vec_t> kept;
  for (vec_t v : vecs) {
    vec_t w = v;
    while (w != 0) {
      const int b = std::countr_zero(w);
      if (pivot[b] == 0) {
        pivot[b] = w;
        kept.push_back(v);
        break;
      }
      w ^= pivot[b];
    }
  }
  return kept;
}

// A linear map of F_2^dim given by the images of the standard basis.
struct linear_map {
  int dim = 0;
  std::vector<vec_t> cols;  // cols[i-1] = image of e_i

  vec_t operator()(vec_t v) const {
    vec_t out = 0;
    while (v != 0) {
      const int b = std::countr_zero(v);
      out ^= cols[b];
      v &= v - 1;
    }
    return out;
  }

  static linear_map identity(int dim) {
    check_dim(dim);
    linear_map l;
    l.dim = dim;
    for (int i = 1; i <= dim; ++i) l.cols.push_back(unit(i));
    return l;
  }
};

inline bool invertible(const linear_map& l) { return rank_of(l.cols) == l.dim; }

inline linear_map inverse(const linear_map& l) {
  const int t = l.dim;
  // Row i holds the matrix row in bits 0..t-1 and the identity in bits t..2t-1.
  std::vector<std::uint64_t> row(t);
  for (int i = 0; i < t; ++i) {
    std::uint64_t r = 0;
    for (int j = 0; j < t; ++j) r |= ((l.cols[j] >> i) & 1u) << j;
    row[i] = r | (std::uint64_t{1} << (t + i));
  }
  for (int c = 0; c < t; ++c) {
    int p = -1;
    for (int i = c; i < t; ++i)
      if ((row[i] >> c) & 1) {
        p = i;
        break;
      }
    if (p < 0) fail(errc::non_invertible_map, "linear map is singular");
    std::swap(row[c], row[p]);
    for (int i = 0; i < t; ++i)
      if (i != c && ((row[i] >> c) & 1)) row[i] ^= row[c];
  }
  linear_map inv;
  inv.dim = t;
  inv.cols.assign(t, 0);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      if ((row[i] >> (t + j)) & 1) inv.cols[j] |= unit(i + 1);
  return inv;
}

// f after g.
inline linear_map compose(const linear_map& f, const linear_map& g) {
  if (f.dim != g.dim) fail(errc::dim_mismatch, "composing maps of different dimension");
  linear_map h;
  h.dim = f.dim;
  for (vec_t c : g.cols) h.cols.push_back(f(c));
  return h;
}

// x -> linear(x) + translation. A permutation of F_2^dim iff linear is invertible.
struct affine_map {
  linear_map linear;
  vec_t translation = 0;

  vec_t operator()(vec_t v) const { return linear(v) ^ translation; }

  static affine_map identity(int dim) { return affine_map{linear_map::identity(dim), 0}; }
};

inline affine_map compose(const affine_map& f, const affine_map& g) {
  return affine_map{compose(f.linear, g.linear), static_cast<vec_t>(f.linear(g.translation) ^ f.translation)};
}

inline affine_map inverse(const affine_map& t) {
  linear_map li = inverse(t.linear);
  return affine_map{li, li(t.translation)};
}

inline point_set apply_affine(const affine_map& t, const point_set& m) {
  if (t.linear.dim != m.dim) fail(errc::dim_mismatch, "map and set dimensions differ");
  if (!invertible(t.linear)) fail(errc::non_invertible_map, "affine map is not a permutation");
  std::vector<vec_t> out;
  out.reserve(m.elems.size());
  for (vec_t v : m.elems) out.push_back(t(v));
  return point_set(m.dim, std::move(out));
}

// Deterministic pseudorandom invertible affine map for a seed.
inline affine_map random_affine(int dim, std::uint64_t seed) {
  if (dim < 1) fail(errc::bad_value, "dimension must be positive");
  check_dim(dim);
  std::mt19937_64 rng(seed);
  const vec_t mask = space_mask(dim);
  linear_map l;
  l.dim = dim;
  do {
    l.cols.clear();
    for (int i = 0; i < dim; ++i) l.cols.push_back(static_cast<vec_t>(rng()) & mask);
  } while (!invertible(l));
  return affine_map{std::move(l), static_cast<vec_t>(rng()) & mask};
}

}  // namespace sidon
