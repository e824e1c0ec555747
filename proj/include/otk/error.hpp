#pragma once

// Error reporting for the otk library.  Every contract violation throws
// otk::Error carrying a machine-checkable code plus a human-readable message;
// the offending indices (when meaningful) ride along in `where`.

#include <stdexcept>
#include <string>
#include <vector>

namespace otk {

enum class errc {
  invalid_argument,       // malformed parameter outside the more specific codes
  parse_error,            // unreadable file / token
  duplicate_point,        // two identical points handed to a predicate
  duplicate_x,            // two points sharing an x-coordinate
  collinear_triple,       // three collinear points
  bad_line_order,         // line endpoints not in x-order where required
  invalid_union,          // union of two sets violates general position
  bad_cut,                // splitting cut index out of range
  bad_index,              // tuple position / subset size out of range
  size_mismatch,          // table/point-set size disagreement
  size_limit,             // exact search beyond its configured size cap
  not_a_bijection,        // recovered labeling is not a permutation
  decode_failure,         // crossing table not realizable / corrupted
  not_a_wheel_set,        // >1 interior point where a wheel set is required
  not_nonconvex_quad,     // 4-point set with interior point required
  not_decomposable,       // construction input admits no recursive splitting
  precondition_violated,  // caller broke a documented precondition
  wrong_witness_shape,    // refutation input lacks the 5-point witness shape
  budget_exceeded,        // construction would exceed its point/depth budget
  enumeration_budget,     // exhaustive coloring enumeration too large
  search_budget,          // backtracking search ran out of nodes
  resample_budget,        // resampling loop ran out of attempts
  duplicate_exhaustion,   // could not find a non-equivalent sample
};

struct Error : std::runtime_error {
  errc code;
  std::vector<std::size_t> where;  // 1-based indices involved, possibly empty

  Error(errc c, const std::string& msg, std::vector<std::size_t> idx = {})
      : std::runtime_error(msg), code(c), where(std::move(idx)) {}
};

[[noreturn]] inline void fail(errc c, const std::string& msg,
                              std::vector<std::size_t> idx = {}) {
  throw Error(c, msg, std::move(idx));
}

}  // namespace otk
