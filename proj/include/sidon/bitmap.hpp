#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "sidon/errors.hpp"
#include "sidon/gf2.hpp"

namespace sidon {

namespace detail {

// bit b of the result = bit (b ^ m) of y, for m < 64
inline std::uint64_t permute_xor_word(std::uint64_t y, unsigned m) {
  static constexpr std::uint64_t half[6] = {
      0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
      0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};
  for (int s = 0; s < 6; ++s)
    if (m & (1u << s)) {
      const std::uint64_t mask = half[s];
      const int sh = 1 << s;
      y = ((y >> sh) & mask) | ((y & mask) << sh);
    }
  return y;
}

}  // namespace detail

// Membership bitmap over all 2^dim vectors of F_2^dim.
class vec_set {
 public:
  static constexpr vec_t npos = ~vec_t{0};

  explicit vec_set(int dim) : dim_(dim) {
    if (dim < 0 || dim > max_bitmap_dim)
      fail(errc::dimension_too_large,
           "bitmap dimension " + std::to_string(dim) + " out of range [0," +
               std::to_string(max_bitmap_dim) + "]");
    words_.assign(word_count(dim), 0);
  }

  int dim() const { return dim_; }
  std::uint64_t universe() const { return std::uint64_t{1} << dim_; }

  bool contains(vec_t v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
  void insert(vec_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (std::uint64_t w : words_) if (w != 0) return false;
    return true;
  }

  // True iff every vector of F_2^dim is present.
  bool all() const {
    for (std::size_t i = 0; i + 1 < words_.size(); ++i)
      if (words_[i] != ~std::uint64_t{0}) return false;
    return words_.back() == tail_mask();
  }

  vec_set& operator|=(const vec_set& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  vec_set& operator&=(const vec_set& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  friend vec_set complement(const vec_set& s) {
    vec_set out(s.dim_);
    for (std::size_t i = 0; i < s.words_.size(); ++i) out.words_[i] = ~s.words_[i];
    out.words_.back() &= s.tail_mask();
    return out;
  }

  bool operator==(const vec_set&) const = default;

  // *this |= { x ^ m : x in src }. Safe when &src == this.
  void or_translated(const vec_set& src, vec_t m) {
    const unsigned ml = m & 63u;
    const std::size_t mh = static_cast<std::size_t>(m >> 6);
    if (&src == this && mh != 0) {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        const std::size_t j = i ^ mh;
        if (j < i) continue;
        const std::uint64_t a = words_[i], b = words_[j];
        words_[i] |= detail::permute_xor_word(b, ml);
        words_[j] |= detail::permute_xor_word(a, ml);
      }
    } else {
      for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= detail::permute_xor_word(src.words_[i ^ mh], ml);
    }
  }

  // Smallest v >= from with v absent from *this and present in mask, or npos.
  vec_t next_gap(const vec_set& mask, vec_t from) const {
    if (from >= universe()) return npos;
    std::size_t i = from >> 6;
    std::uint64_t w = ~words_[i] & mask.words_[i] & (~std::uint64_t{0} << (from & 63));
    if (dim_ < 6) w &= tail_mask();
    while (true) {
      if (w != 0) return static_cast<vec_t>((i << 6) + std::countr_zero(w));
      if (++i == words_.size()) return npos;
      w = ~words_[i] & mask.words_[i];
    }
  }

  // Smallest member >= from, or npos.
  vec_t next(vec_t from) const {
    if (from >= universe()) return npos;
    std::size_t i = from >> 6;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w != 0) return static_cast<vec_t>((i << 6) + std::countr_zero(w));
      if (++i == words_.size()) return npos;
      w = words_[i];
    }
  }

  std::vector<vec_t> members() const {
    std::vector<vec_t> out;
    out.reserve(count());
    for (vec_t v = next(0); v != npos; v = next(v + 1)) out.push_back(v);
    return out;
  }

  point_set to_point_set() const { return point_set(dim_, members()); }

 private:
  static std::size_t word_count(int dim) { return dim <= 6 ? 1 : (std::size_t{1} << (dim - 6)); }

  std::uint64_t tail_mask() const {
    return dim_ >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1u << dim_)) - 1;
  }

  int dim_;
  std::vector<std::uint64_t> words_;
};

inline vec_set to_vec_set(const point_set& m) {
  vec_set s(m.dim);
  for (vec_t v : m.elems) s.insert(v);
  return s;
}

}  // namespace sidon
