#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sidon/bitmap.hpp"
#include "sidon/errors.hpp"
#include "sidon/gf2.hpp"

namespace sidon {

inline std::uint64_t choose2(std::uint64_t n) { return n * (n - 1) / 2; }

// Sums of k not-necessarily-distinct elements of M.
inline vec_set k_sums(const point_set& m, int k) {
  if (k < 2 || k > 4) fail(errc::unsupported_k, "k must be 2, 3 or 4");
  vec_set acc = to_vec_set(m);
  if (m.empty()) return acc;
  for (int fold = 1; fold < k; ++fold) {
    vec_set next(m.dim);
    for (vec_t v : m.elems) next.or_translated(acc, v);
    acc = std::move(next);
  }
  return acc;
}

// Sums of k pairwise-distinct elements of M; empty if |M| < k.
inline vec_set k_star_sums(const point_set& m, int k) {
  if (k < 2 || k > 4) fail(errc::unsupported_k, "k must be 2, 3 or 4");
  vec_set out(m.dim);
  const auto& e = m.elems;
  const std::size_t n = e.size();
  if (n < static_cast<std::size_t>(k)) return out;
  if (k == 2) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) out.insert(e[i] ^ e[j]);
  } else if (k == 3) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t l = j + 1; l < n; ++l) out.insert(e[i] ^ e[j] ^ e[l]);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t l = j + 1; l < n; ++l)
          for (std::size_t p = l + 1; p < n; ++p) out.insert(e[i] ^ e[j] ^ e[l] ^ e[p]);
  }
  return out;
}

// No four pairwise-distinct elements with m1+m2 = m3+m4; equivalently all
// 2-star-sums are distinct. Sets with at most 3 elements are Sidon.
inline bool is_sidon(const point_set& m) {
  const std::size_t n = m.elems.size();
  if (n <= 3) return true;
  return k_star_sums(m, 2).count() == choose2(n);
}

// No solution of m1+m2 = m3 within M; never holds when 0 is a member.
inline bool is_sum_free(const point_set& m) {
  const auto& e = m.elems;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i; j < e.size(); ++j)
      if (m.contains(e[i] ^ e[j])) return false;
  return true;
}

// Vectors whose addition keeps M Sidon: the complement of the 3-sums.
inline vec_set extension_candidates(const point_set& m) {
  if (!is_sidon(m)) fail(errc::not_sidon, "set is not Sidon");
  return complement(k_sums(m, 3));
}

// Sidon and not extendable, i.e. the 3-sums cover the whole space.
inline bool is_maximal_sidon(const point_set& m) {
  if (!is_sidon(m)) fail(errc::not_sidon, "set is not Sidon");
  return k_sums(m, 3).all();
}

struct sidon_report {
  bool is_sidon = false;
  bool is_sum_free = false;
  bool is_maximal_sidon = false;
  std::uint64_t two_star_count = 0;
  std::uint64_t three_sum_count = 0;
  std::uint64_t candidate_count = 0;  // |F_2^t \ 3-sums|
};

inline sidon_report analyze(const point_set& m) {
  sidon_report r;
  r.is_sidon = is_sidon(m);
  r.is_sum_free = is_sum_free(m);
  r.two_star_count = k_star_sums(m, 2).count();
  const vec_set s3 = k_sums(m, 3);
  r.three_sum_count = s3.count();
  r.candidate_count = s3.universe() - r.three_sum_count;
  r.is_maximal_sidon = r.is_sidon && r.candidate_count == 0;
  return r;
}

enum class extension_kind { sum_free_sidon, sidon_not_sum_free, not_sidon, already_member };

// How M u {g} behaves for a sum-free Sidon M.
inline extension_kind sum_free_extension_class(const point_set& m, vec_t g) {
  if (!is_sum_free(m) || !is_sidon(m))
    fail(errc::not_sum_free_sidon, "set is not sum-free Sidon");
  if (g > space_mask(m.dim)) fail(errc::bad_value, "vector outside the space");
  if (m.contains(g)) return extension_kind::already_member;
  const bool in2 = k_sums(m, 2).contains(g);
  const bool in3 = k_sums(m, 3).contains(g);
  if (!in2 && !in3) return extension_kind::sum_free_sidon;
  if (in2 && !in3) return extension_kind::sidon_not_sum_free;
  return extension_kind::not_sidon;
}

// For a Sidon set containing 0, removing 0 leaves a sum-free Sidon set.
inline point_set strip_zero(const point_set& m) {
  if (!is_sidon(m)) fail(errc::not_sidon, "set is not Sidon");
  if (!m.contains(0)) fail(errc::zero_not_member, "0 is not a member");
  std::vector<vec_t> rest(m.elems.begin() + 1, m.elems.end());
  return point_set(m.dim, std::move(rest));
}

// Affine permutation T with {0, e_1, ..., e_t} in T(M). The translation source
// m0 is the smallest member whose translate of M still spans the whole space,
// and the basis is picked greedily over the translated set in ascending order.
inline std::pair<affine_map, point_set> normalize(const point_set& m) {
  const int t = m.dim;
  if (m.size() < t + 1) fail(errc::too_small, "need at least t+1 elements");
  if (span_dim(m) < t) fail(errc::insufficient_span, "set does not span the space");
  for (vec_t m0 : m.elems) {
    std::vector<vec_t> shifted;
    shifted.reserve(m.elems.size());
    for (vec_t v : m.elems) shifted.push_back(v ^ m0);
    std::sort(shifted.begin(), shifted.end());
    std::vector<vec_t> basis = greedy_basis(shifted);
    if (static_cast<int>(basis.size()) < t) continue;
    linear_map b;  // e_i -> basis[i-1]
    b.dim = t;
    b.cols = basis;
    const linear_map l = inverse(b);
    affine_map trans{l, l(m0)};
    point_set image = apply_affine(trans, m);
    return {std::move(trans), std::move(image)};
  }
  fail(errc::insufficient_span, "no translate of the set spans the space");
}

// Linear permutation moving the support of m onto coordinates 1..w, so the
// image contains e_1 + ... + e_w. Requires {0, e_1..e_t} in M and weight(m) >= 2.
inline std::pair<affine_map, point_set> normalize_weight(const point_set& m, vec_t v) {
  const int t = m.dim;
  if (!m.contains(0)) fail(errc::basis_not_contained, "0 is not a member");
  for (int i = 1; i <= t; ++i)
    if (!m.contains(unit(i))) fail(errc::basis_not_contained, "standard basis not contained");
  if (!m.contains(v)) fail(errc::not_member, "vector is not a member");
  const int w = weight(v);
  if (w < 2) fail(errc::weight_too_small, "weight must be at least 2");
  linear_map l;
  l.dim = t;
  l.cols.assign(t, 0);
  int in_support = 0, outside = w;
  for (int i = 1; i <= t; ++i) {
    const bool set = (v >> (i - 1)) & 1;
    l.cols[i - 1] = unit(set ? ++in_support : ++outside);
  }
  affine_map trans{std::move(l), 0};
  point_set image = apply_affine(trans, m);
  return {std::move(trans), std::move(image)};
}

struct four_sum_report {
  bool covers = false;     // 4-sums fill the whole space
  bool span_full = false;  // M and its 2-star-sums both span the space
  bool exceeds_prev_max = false;  // |M| > supplied smax(t-1)
};

// For Sidon M with |M| > smax(t-1) both flags are guaranteed true.
inline four_sum_report four_sum_coverage(const point_set& m, int smax_prev) {
  if (!is_sidon(m)) fail(errc::not_sidon, "set is not Sidon");
  four_sum_report r;
  r.covers = !m.empty() && k_sums(m, 4).all();
  r.span_full = span_dim(m) == m.dim && rank_of(k_star_sums(m, 2).members()) == m.dim;
  r.exceeds_prev_max = m.size() > smax_prev;
  return r;
}

}  // namespace sidon
