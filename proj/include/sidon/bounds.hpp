#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "sidon/errors.hpp"

namespace sidon {

using bigint = boost::multiprecision::cpp_int;

// sign of a + b*sqrt(2) for integers a, b
inline int sign_plus_sqrt2(const bigint& a, const bigint& b) {
  if (a >= 0 && b >= 0) return (a == 0 && b == 0) ? 0 : 1;
  if (a <= 0 && b <= 0) return -1;
  const bigint a2 = a * a, b2 = 2 * b * b;
  if (a > 0) return a2 >= b2 ? 1 : -1;  // equality impossible for b != 0
  return b2 >= a2 ? 1 : -1;
}

// Nearest integer to sqrt(2^{t+1}): floor(sqrt(2^{t+1}) + 0.5). The rounding
// is decided by comparing (2m+1)^2 against 2^{t+3} in integers.
inline bigint nearest_sqrt_pow2(int t) {
  const bigint n = bigint(1) << (t + 1);
  bigint m = boost::multiprecision::sqrt(n);
  if ((2 * m + 1) * (2 * m + 1) < 4 * n) ++m;
  return m;
}

// 2^{(t+1)/2} for odd t, floor(sqrt(2^{t+1}) + 0.5) for even t.
inline bigint trivial_bound(int t) {
  if (t < 1) fail(errc::out_of_domain, "dimension must be at least 1");
  if (t % 2 == 1) return bigint(1) << ((t + 1) / 2);
  return nearest_sqrt_pow2(t);
}

// floor((1 + sqrt(2^{t+3} - 7)) / 2) == floor(sqrt(2^{t+1}) + 0.5), evaluated
// in exact integer arithmetic. Holds for every even t.
inline bool floor_equality_check(int t) {
  if (t < 2 || t % 2 != 0) fail(errc::out_of_domain, "need even t >= 2");
  const bigint x = (bigint(1) << (t + 3)) - 7;
  const bigint lhs = (1 + boost::multiprecision::sqrt(x)) / 2;
  return lhs == nearest_sqrt_pow2(t);
}

// No [n, n-t, 5] code for n = 2^{(t+1)/2} - 2, odd t >= 7.
inline bigint bt93_bound(int t) {
  if (t < 7 || t % 2 != 1) fail(errc::out_of_domain, "need odd t >= 7");
  return (bigint(1) << ((t + 1) / 2)) - 2;
}

// Band of eps = sqrt(2^{t+1}) + 0.5 - F relative to the case thresholds.
// none: the case has no eps condition. low/mid/high: below the first
// threshold / between the two / above the last.
enum class eps_band { none, low, mid, high };

struct lambda_case {
  int t = 0;
  bigint f;      // floor(sqrt(2^{t+1}) + 0.5)
  bigint a;      // f - 4 = 3a + b
  int b = 0;     // 0, 1 or 2
  eps_band eps = eps_band::none;
  int lambda = 0;
  bigint n_t;    // f - lambda
};

namespace detail {

// sqrt(2^{t+1}) <= f + 1/2 - 2^{-e}, all quantities scaled by 2^e.
inline bool eps_le_one_minus_pow2(int t, const bigint& f, int e) {
  const bigint p = (f << e) + (bigint(1) << (e - 1)) - 1;
  const bigint q = -(bigint(1) << (e + t / 2));
  return sign_plus_sqrt2(p, q) >= 0;
}

// sqrt(2^{t+1}) <= f + 1/2 - sqrt(2)*2^{-e}, scaled by 2^e.
inline bool eps_le_one_minus_sqrt2_pow2(int t, const bigint& f, int e) {
  const bigint p = (f << e) + (bigint(1) << (e - 1));
  const bigint q = -((bigint(1) << (e + t / 2)) + 1);
  return sign_plus_sqrt2(p, q) >= 0;
}

// eps <= 1/2, i.e. sqrt(2^{t+1}) <= f; 2^{t+1} is never a perfect square here.
inline bool eps_le_half(int t, const bigint& f) { return (bigint(1) << (t + 1)) < f * f; }

}  // namespace detail

// The case data of the lambda table: f, a, b, the eps band resolved in exact
// arithmetic, the resulting lambda and the nonexistence length n_t = f - lambda.
inline lambda_case lambda_breakdown(int t) {
  if (t < 6 || t % 2 != 0) fail(errc::out_of_domain, "need even t >= 6");
  lambda_case c;
  c.t = t;
  c.f = nearest_sqrt_pow2(t);
  c.a = (c.f - 4) / 3;
  c.b = static_cast<int>((c.f - 4) % 3);
  const bool a_odd = (c.a & 1) != 0;
  if (a_odd) {
    if (c.b == 0) {
      c.lambda = 1;
    } else if (c.b == 1) {
      // thresholds 1 - 2^{-(t-4)/2} and 1
      c.eps = detail::eps_le_one_minus_pow2(t, c.f, (t - 4) / 2) ? eps_band::low : eps_band::high;
      c.lambda = c.eps == eps_band::low ? 2 : 1;
    } else {
      c.lambda = 2;
    }
  } else {
    if (c.b == 0) {
      c.eps = detail::eps_le_half(t, c.f) ? eps_band::low : eps_band::high;
      c.lambda = c.eps == eps_band::low ? 2 : 1;
    } else if (c.b == 1) {
      // thresholds 1 - 2^{-(t-5)/2} and 1 - 2^{-(t+7)/2}, both sqrt(2) multiples
      if (detail::eps_le_one_minus_sqrt2_pow2(t, c.f, (t - 4) / 2)) {
        c.eps = eps_band::low;
        c.lambda = 2;
      } else if (detail::eps_le_one_minus_sqrt2_pow2(t, c.f, (t + 8) / 2)) {
        c.eps = eps_band::mid;
        c.lambda = 1;
      } else {
        c.eps = eps_band::high;
        c.lambda = 0;
      }
    } else {
      c.lambda = 0;
    }
  }
  c.n_t = c.f - c.lambda;
  return c;
}

// smax(t) <= 2^{(t+1)/2} - 2 for odd t, f - lambda for even t; defined for t >= 6.
inline bigint new_bound(int t) {
  if (t < 6) fail(errc::out_of_domain, "need t >= 6");
  if (t % 2 == 1) return (bigint(1) << ((t + 1) / 2)) - 2;
  return lambda_breakdown(t).n_t;
}

struct bound_row {
  int t = 0;
  bigint trivial;
  std::optional<bigint> new_bound;
  std::optional<bigint> bt93;
};

inline bound_row bound_table_row(int t) {
  bound_row r;
  r.t = t;
  r.trivial = trivial_bound(t);
  if (t >= 6) r.new_bound = new_bound(t);
  if (t >= 7 && t % 2 == 1) r.bt93 = bt93_bound(t);
  return r;
}

// The six cases of the nonexistence proof, by parity of a' and value of b'
// where n - 2 = 3a' + b' at the length n under consideration.
enum class proof_case { odd_b0, odd_b1, odd_b2, even_b0, even_b1, even_b2 };

inline std::string to_string(proof_case c) {
  switch (c) {
    case proof_case::odd_b0: return "ODD_B0";
    case proof_case::odd_b1: return "ODD_B1";
    case proof_case::odd_b2: return "ODD_B2";
    case proof_case::even_b0: return "EVEN_B0";
    case proof_case::even_b1: return "EVEN_B1";
    case proof_case::even_b2: return "EVEN_B2";
  }
  return "?";
}

namespace detail {

// Lower bound on 2s for a length-n code in the given case, times 4 so that
// every coefficient is an integer. The inequality to establish is
// 2s > 2^{t+1}, i.e. two_s_lower_x4 > 2^{t+3}.
inline bigint two_s_lower_x4(proof_case c, const bigint& n) {
  switch (c) {
    case proof_case::odd_b0: return (2 * n + 1) * (2 * n + 1) + 7;
    case proof_case::odd_b1: return (2 * n + 5) * (2 * n + 5) - 33;
    case proof_case::odd_b2: return 4 * (n + 3) * (n + 3) - 28;
    case proof_case::even_b0: return 4 * (n + 2) * (n + 2) + 4;
    case proof_case::even_b1: return (2 * n + 5) * (2 * n + 5) - 57;
    case proof_case::even_b2: return (2 * n + 3) * (2 * n + 3) - 1;
  }
  fail(errc::unknown_class, "bad proof case");
}

inline proof_case case_at_length(const bigint& n) {
  const bigint a = (n - 2) / 3;
  const int b = static_cast<int>((n - 2) % 3);
  const bool odd = (a & 1) != 0;
  switch (b) {
    case 0: return odd ? proof_case::odd_b0 : proof_case::even_b0;
    case 1: return odd ? proof_case::odd_b1 : proof_case::even_b1;
    default: return odd ? proof_case::odd_b2 : proof_case::even_b2;
  }
}

}  // namespace detail

struct proof_step {
  proof_case which;
  bigint n;
  bool holds = false;
};

struct proof_check_report {
  int t = 0;
  proof_case case_id = proof_case::odd_b0;  // case of the final step
  bigint n_used;                            // length of the final step
  bool inequality_holds = false;
  std::vector<proof_step> walk;             // every visited step in order
};

// Replays the case-selection chain of the nonexistence proof for even t >= 6:
// starting at n = f-2 and hopping to f-1 or f exactly where the proof does,
// each visited 2s lower bound is compared against 2^{t+1} in exact integer
// arithmetic. The final inequality must hold; anything else is a bug.
inline proof_check_report proof_case_check(int t) {
  const lambda_case lc = lambda_breakdown(t);
  const bool a_odd = (lc.a & 1) != 0;
  std::vector<bigint> lengths;
  if (a_odd) {
    if (lc.b == 0) lengths = {lc.f - 2, lc.f - 1};
    else if (lc.b == 1) lengths = lc.eps == eps_band::low
                                      ? std::vector<bigint>{lc.f - 2}
                                      : std::vector<bigint>{lc.f - 2, lc.f - 1};
    else lengths = {lc.f - 2};
  } else {
    if (lc.b == 0) lengths = lc.eps == eps_band::low
                                 ? std::vector<bigint>{lc.f - 2}
                                 : std::vector<bigint>{lc.f - 2, lc.f - 1};
    else if (lc.b == 1) {
      if (lc.eps == eps_band::low) lengths = {lc.f - 2};
      else if (lc.eps == eps_band::mid) lengths = {lc.f - 2, lc.f - 1};
      else lengths = {lc.f - 2, lc.f - 1, lc.f};
    } else {
      lengths = {lc.f - 2, lc.f - 1, lc.f};
    }
  }

  proof_check_report r;
  r.t = t;
  const bigint limit = bigint(1) << (t + 3);
  for (const bigint& n : lengths) {
    proof_step s;
    s.which = detail::case_at_length(n);
    s.n = n;
    s.holds = detail::two_s_lower_x4(s.which, n) > limit;
    r.walk.push_back(s);
  }
  const proof_step& last = r.walk.back();
  r.case_id = last.which;
  r.n_used = last.n;
  r.inequality_holds = last.holds;
  assert(r.n_used == lc.n_t);
  if (!r.inequality_holds)
    fail(errc::proof_chain_broken, "final case inequality failed at t=" + std::to_string(t));
  return r;
}

// eps truncated to three decimals, computed after the exact decisions;
// display only.
inline std::string eps_approx3(int t, const bigint& f) {
  const bigint scaled = (bigint(1) << (t + 1)) * 1000000;
  const bigint s = boost::multiprecision::sqrt(scaled);  // floor(1e3 sqrt)
  const long v = bigint(s + 500 - f * 1000).convert_to<long>();  // floor(1e3 eps)
  char buf[32];
  std::snprintf(buf, sizeof buf, "0.%03ld", v);
  return buf;
}

struct cor19_row {
  int t = 0;
  bigint f;
  bigint a;
  int b = 0;
  std::string eps_approx;
  int lambda = 0;
  bigint n;  // nonexistence length
  bigint k;  // n - t
};

// The improved-entries table for t = 16, 18, 20, 22, 24, 26.
inline std::vector<cor19_row> cor19_table() {
  std::vector<cor19_row> rows;
  for (int t = 16; t <= 26; t += 2) {
    const lambda_case lc = lambda_breakdown(t);
    cor19_row r;
    r.t = t;
    r.f = lc.f;
    r.a = lc.a;
    r.b = lc.b;
    r.eps_approx = eps_approx3(t, lc.f);
    r.lambda = lc.lambda;
    r.n = lc.n_t;
    r.k = lc.n_t - t;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace sidon
