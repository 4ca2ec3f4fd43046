#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "sidon/bitmap.hpp"
#include "sidon/errors.hpp"
#include "sidon/gf2.hpp"
#include "sidon/sidon.hpp"

namespace sidon {

// Subtask tags for dimension 8: the maximal weight of the set is w, the
// vector e_1 + ... + e_w is a member, and other weights are capped per rule.
enum class weight_class { w4, w5, w6, w7, w8 };

inline std::string to_string(weight_class c) {
  switch (c) {
    case weight_class::w4: return "W4";
    case weight_class::w5: return "W5";
    case weight_class::w6: return "W6";
    case weight_class::w7: return "W7";
    case weight_class::w8: return "W8";
  }
  return "?";
}

struct weight_class_rule {
  vec_t anchor;
  int max_other_weight;
};

inline weight_class_rule weight_class_constraints(int dim, weight_class c) {
  if (dim != 8) fail(errc::unsupported_dim, "weight classes are defined for dimension 8");
  switch (c) {
    case weight_class::w4: return {space_mask(4), 4};
    case weight_class::w5: return {space_mask(5), 5};
    case weight_class::w6: return {space_mask(6), 6};
    case weight_class::w7: return {space_mask(7), 6};
    case weight_class::w8: return {space_mask(8), 5};
  }
  fail(errc::unknown_class, "bad weight class");
}

struct enum_options {
  std::optional<weight_class> wclass;
  int workers = 0;  // 0: hardware concurrency
  bool collect_examples = true;
  std::ostream* witness_stream = nullptr;  // one sorted set per line, comma separated
};

struct enum_result {
  // Leaf count of the plain extension tree: a maximal set with k elements
  // beyond the base is reached along all k! extension orders, so this equals
  // distinct_per_size times (size - |base|)!.
  std::map<int, std::uint64_t> size_histogram;
  // Distinct maximal sets containing the base, counted once each.
  std::map<int, std::uint64_t> distinct_per_size;
  std::map<int, point_set> example_per_size;  // lexicographically smallest witness
  std::uint64_t nodes_visited = 0;
  double wall_seconds = 0.0;
};

// A self-contained piece of the search: extend `prefix` (a Sidon set
// containing `base`) by candidates greater than `last` drawn from
// `candidate_mask`, which is the weight-allowed complement of the 3-sums.
struct enum_task {
  int dim = 0;
  point_set base;
  std::optional<weight_class> wclass;
  point_set prefix;
  vec_t last = 0;
  vec_set candidate_mask{0};
};

namespace detail {

// Extensions allowed by the weight class; the whole space otherwise.
inline vec_set extension_mask(int dim, const std::optional<weight_class>& wc) {
  if (!wc) return complement(vec_set(dim));
  const weight_class_rule rule = weight_class_constraints(dim, *wc);
  vec_set s(dim);
  const vec_t end = space_mask(dim);
  for (vec_t v = 0;; ++v) {
    if (weight(v) <= rule.max_other_weight) s.insert(v);
    if (v == end) break;
  }
  return s;
}

struct enum_partial {
  std::map<int, std::uint64_t> hist;
  std::map<int, std::vector<vec_t>> example;  // sorted element lists
  std::uint64_t nodes = 0;
  std::string witness;
};

// Depth-first extension with one pair of bitmaps per level, reused across the
// whole task so descending allocates nothing once warm.
class enum_dfs {
 public:
  enum_dfs(int dim, vec_set allowed, bool want_examples, bool want_witness)
      : dim_(dim),
        allowed_(std::move(allowed)),
        want_examples_(want_examples),
        want_witness_(want_witness) {}

  void run(const enum_task& task, enum_partial& out) {
    out_ = &out;
    prefix_ = task.prefix.elems;
    elems_ = prefix_;
    added_.clear();
    if (levels_.empty()) levels_.push_back(level{vec_set(dim_), vec_set(dim_)});
    levels_[0].s2 = k_sums(task.prefix, 2);
    levels_[0].s3 = k_sums(task.prefix, 3);
    dfs(0, task.last);
  }

 private:
  struct level {
    vec_set s2, s3;
  };

  void dfs(std::size_t lvl, vec_t last) {
    ++out_->nodes;
    const bool maximal = levels_[lvl].s3.all();
    if (maximal) {
      record(lvl);
      return;
    }
    for (vec_t g = levels_[lvl].s3.next_gap(allowed_, last + 1); g != vec_set::npos;
         g = levels_[lvl].s3.next_gap(allowed_, g + 1)) {
      if (lvl + 1 == levels_.size()) levels_.push_back(level{vec_set(dim_), vec_set(dim_)});
      level& next = levels_[lvl + 1];
      const level& cur = levels_[lvl];
      next.s3 = cur.s3;
      next.s3.or_translated(cur.s2, g);
      next.s3.insert(g);
      next.s2 = cur.s2;
      elems_.push_back(g);
      for (vec_t m : elems_) next.s2.insert(m ^ g);
      added_.push_back(g);
      dfs(lvl + 1, g);
      elems_.pop_back();
      added_.pop_back();
    }
  }

  void record(std::size_t lvl) {
    const int size = static_cast<int>(prefix_.size() + lvl);
    ++out_->hist[size];
    if (!want_examples_ && !want_witness_) return;
    std::vector<vec_t> sorted(prefix_.size() + lvl);
    std::merge(prefix_.begin(), prefix_.end(), added_.begin(), added_.end(), sorted.begin());
    if (want_witness_) {
      std::string& w = out_->witness;
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i) w += ',';
        w += std::to_string(sorted[i]);
      }
      w += '\n';
    }
    if (want_examples_) {
      auto it = out_->example.find(size);
      if (it == out_->example.end() || sorted < it->second) out_->example[size] = std::move(sorted);
    }
  }

  int dim_;
  vec_set allowed_;
  bool want_examples_;
  bool want_witness_;
  enum_partial* out_ = nullptr;
  std::vector<vec_t> prefix_;
  std::vector<vec_t> elems_;
  std::vector<vec_t> added_;
  std::vector<level> levels_;
};

}  // namespace detail

// The fresh task at the normalization prefix {0, e_1..e_t} (plus the weight
// class anchor when set).
inline enum_task root_task(int dim, const std::optional<weight_class>& wc) {
  if (dim < 1) fail(errc::bad_value, "dimension must be positive");
  if (dim > max_bitmap_dim)
    fail(errc::dimension_too_large, "enumeration supports dimensions up to " +
                                        std::to_string(max_bitmap_dim));
  enum_task t;
  t.dim = dim;
  std::vector<vec_t> b{0};
  for (int i = 1; i <= dim; ++i) b.push_back(unit(i));
  if (wc) b.push_back(weight_class_constraints(dim, *wc).anchor);
  t.base = point_set(dim, std::move(b));
  t.wclass = wc;
  t.prefix = t.base;
  t.last = 0;
  t.candidate_mask = detail::extension_mask(dim, wc);
  t.candidate_mask &= complement(k_sums(t.prefix, 3));
  return t;
}

// Child tasks in canonical (ascending extension) order.
inline std::vector<enum_task> expand_task(const enum_task& t) {
  std::vector<enum_task> out;
  for (vec_t g = t.candidate_mask.next(t.last + 1); g != vec_set::npos;
       g = t.candidate_mask.next(g + 1)) {
    enum_task child;
    child.dim = t.dim;
    child.base = t.base;
    child.wclass = t.wclass;
    std::vector<vec_t> ext = t.prefix.elems;
    ext.push_back(g);
    child.prefix = point_set(t.dim, std::move(ext));
    child.last = g;
    child.candidate_mask = detail::extension_mask(t.dim, t.wclass);
    child.candidate_mask &= complement(k_sums(child.prefix, 3));
    out.push_back(std::move(child));
  }
  return out;
}

// Every maximal Sidon set containing {0, e_1..e_t} (and the weight-class
// anchor when one is set), found by ordered depth-first extension. A set is
// recorded when its 3-sums cover the whole space. The histogram, witnesses and
// node count do not depend on the worker count.
inline enum_result enumerate_maximal(int dim, const enum_options& options = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  enum_result result;
  const bool want_witness = options.witness_stream != nullptr;

  enum_task root = root_task(dim, options.wclass);
  const vec_set allowed = detail::extension_mask(dim, options.wclass);

  // Split the tree at depth 1 (depth 2 from dimension 8 up) into independent
  // units; `prelude` records the nodes the splitter expands itself.
  detail::enum_partial prelude;
  std::vector<enum_task> units;
  if (root.candidate_mask.next(root.last + 1) == vec_set::npos) {
    detail::enum_dfs dfs(dim, allowed, options.collect_examples, want_witness);
    dfs.run(root, prelude);
  } else if (dim < 8) {
    prelude.nodes = 1;
    units = expand_task(root);
  } else {
    prelude.nodes = 1;
    for (enum_task& child : expand_task(root)) {
      std::vector<enum_task> grandchildren = expand_task(child);
      if (grandchildren.empty()) {
        units.push_back(std::move(child));  // its own unit; leaf or dead end
      } else {
        ++prelude.nodes;
        for (enum_task& g : grandchildren) units.push_back(std::move(g));
      }
    }
  }

  std::vector<detail::enum_partial> parts(units.size());
  int workers = options.workers;
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min<int>(workers, static_cast<int>(units.size()));

  if (workers <= 1) {
    detail::enum_dfs dfs(dim, allowed, options.collect_examples, want_witness);
    for (std::size_t i = 0; i < units.size(); ++i) dfs.run(units[i], parts[i]);
  } else {
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
      detail::enum_dfs dfs(dim, allowed, options.collect_examples, want_witness);
      for (;;) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= units.size()) break;
        dfs.run(units[i], parts[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  // Deterministic merge in unit order.
  auto fold = [&](detail::enum_partial& p) {
    for (const auto& [size, count] : p.hist) result.distinct_per_size[size] += count;
    result.nodes_visited += p.nodes;
    if (options.collect_examples)
      for (auto& [size, set] : p.example) {
        auto it = result.example_per_size.find(size);
        if (it == result.example_per_size.end() || set < it->second.elems)
          result.example_per_size.insert_or_assign(size, point_set(dim, std::move(set)));
      }
    if (want_witness) *options.witness_stream << p.witness;
  };
  fold(prelude);
  for (auto& p : parts) fold(p);
  for (const auto& [size, count] : result.distinct_per_size) {
    std::uint64_t orderings = 1;
    for (int k = 2; k <= size - root.base.size(); ++k) orderings *= static_cast<std::uint64_t>(k);
    result.size_histogram[size] = count * orderings;
  }

  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

// Maximum size over all maximal Sidon sets, by exhaustive normalized search.
inline int smax_search(int dim) {
  enum_options opt;
  opt.collect_examples = false;
  const enum_result r = enumerate_maximal(dim, opt);
  return r.size_histogram.rbegin()->first;
}

// Searches for an affine permutation T with T(m1) = m2 by backtracking over
// the image of a reference point and of an independent basis drawn from m1,
// pruned by span and k-star-sum cardinality invariants.
inline std::optional<affine_map> affine_equivalent(const point_set& m1, const point_set& m2) {
  if (m1.dim != m2.dim) fail(errc::dim_mismatch, "sets live in different spaces");
  const int t = m1.dim;
  if (t > 6) fail(errc::dimension_too_large, "equivalence search supports t <= 6");
  if (m1.size() != m2.size()) return std::nullopt;
  if (m1.empty()) return affine_map::identity(t);
  if (span_dim(m1) != span_dim(m2)) return std::nullopt;
  if (k_star_sums(m1, 2).count() != k_star_sums(m2, 2).count()) return std::nullopt;
  if (k_star_sums(m1, 3).count() != k_star_sums(m2, 3).count()) return std::nullopt;

  const vec_t p = m1.elems[0];
  std::vector<vec_t> a;
  a.reserve(m1.elems.size());
  for (vec_t v : m1.elems) a.push_back(v ^ p);
  std::sort(a.begin(), a.end());

  const std::vector<vec_t> basis = greedy_basis(a);
  const int r = static_cast<int>(basis.size());

  // Express every element of `a` in `basis`; combo bit i means basis[i] is used.
  vec_t piv_vec[32] = {};
  std::uint32_t piv_combo[32] = {};
  for (int i = 0; i < r; ++i) {
    vec_t w = basis[i];
    std::uint32_t c = std::uint32_t{1} << i;
    while (true) {
      const int b = std::countr_zero(w);
      if (piv_vec[b] == 0) {
        piv_vec[b] = w;
        piv_combo[b] = c;
        break;
      }
      w ^= piv_vec[b];
      c ^= piv_combo[b];
    }
  }
  auto coords = [&](vec_t x) {
    std::uint32_t c = 0;
    while (x != 0) {
      const int b = std::countr_zero(x);
      x ^= piv_vec[b];
      c ^= piv_combo[b];
    }
    return c;
  };
  // Elements to verify once basis image j is chosen: those whose highest used
  // basis index is j.
  std::vector<std::vector<std::uint32_t>> by_top(r);
  for (vec_t x : a) {
    const std::uint32_t c = coords(x);
    if (c != 0) by_top[31 - std::countl_zero(c)].push_back(c);
  }

  for (vec_t q : m2.elems) {
    vec_set b_map(t);
    std::vector<vec_t> b_vals;
    b_vals.reserve(m2.elems.size());
    for (vec_t v : m2.elems) {
      b_map.insert(v ^ q);
      b_vals.push_back(v ^ q);
    }
    std::sort(b_vals.begin(), b_vals.end());

    std::vector<vec_t> beta(r, 0);
    auto image_of = [&](std::uint32_t combo) {
      vec_t img = 0;
      while (combo != 0) {
        img ^= beta[std::countr_zero(combo)];
        combo &= combo - 1;
      }
      return img;
    };

    // Images of basis[0..j) chosen so far; descend keeping them independent
    // and every fully determined element of `a` landing inside b.
    std::function<bool(int)> descend = [&](int j) {
      if (j == r) return true;
      for (vec_t cand : b_vals) {
        if (cand == 0) continue;
        std::vector<vec_t> chosen(beta.begin(), beta.begin() + j);
        chosen.push_back(cand);
        if (rank_of(chosen) != j + 1) continue;
        beta[j] = cand;
        bool ok = true;
        for (std::uint32_t combo : by_top[j])
          if (!b_map.contains(image_of(combo))) {
            ok = false;
            break;
          }
        if (ok && descend(j + 1)) return true;
      }
      return false;
    };

    if (!descend(0)) continue;

    // Complete both sides to full bases and assemble the witness map.
    std::vector<vec_t> full_a(basis.begin(), basis.end());
    std::vector<vec_t> full_b(beta.begin(), beta.end());
    for (int i = 1; i <= t && static_cast<int>(full_a.size()) < t; ++i) {
      full_a.push_back(unit(i));
      if (rank_of(full_a) != static_cast<int>(full_a.size())) full_a.pop_back();
    }
    for (vec_t v = 1; static_cast<int>(full_b.size()) < t; ++v) {
      full_b.push_back(v);
      if (rank_of(full_b) != static_cast<int>(full_b.size())) full_b.pop_back();
    }
    linear_map pa{t, std::move(full_a)};
    linear_map pb{t, std::move(full_b)};
    const linear_map l = compose(pb, inverse(pa));
    return affine_map{l, static_cast<vec_t>(l(p) ^ q)};
  }
  return std::nullopt;
}

}  // namespace sidon
