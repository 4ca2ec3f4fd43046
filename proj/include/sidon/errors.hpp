#pragma once

#include <stdexcept>
#include <string>

namespace sidon {

// Every precondition / domain failure in the library throws sidon::error
// with one of these codes, so callers can branch without string matching.
enum class errc {
  bad_value,
  duplicate_element,
  dimension_too_large,
  dim_mismatch,
  non_invertible_map,
  unsupported_k,
  not_sidon,
  not_sum_free_sidon,
  zero_not_member,
  not_member,
  insufficient_span,
  too_small,
  basis_not_contained,
  weight_too_small,
  zero_in_set,
  too_few_columns,
  not_full_rank,
  cap_exceeded,
  column_not_present,
  row_not_set,
  collapse_to_zero_or_duplicate,
  missing_smax,
  out_of_domain,
  proof_chain_broken,
  unsupported_dim,
  unknown_class,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace sidon
