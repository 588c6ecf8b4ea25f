#pragma once

#include <cstdint>
#include <utility>

#include "degset/types.hpp"

namespace degset {

enum class PaddingCase {
  a_even_sum,           // sum of the set even
  a_odd_min,            // sum odd, smallest element odd
  b_odd_sum_even_min,   // sum odd, smallest element even (doubles d_r)
  singleton,            // one-element set, complete-graph answer
};

std::string to_string(PaddingCase c);

/// Result of computing the least number of extra copies of min D that make
/// the one-copy-each sequence graphic.
struct PaddingResult {
  DegreeSequence base;    // one run per value; d_r doubled in the b case
  std::int64_t c;         // max of the ceiling terms, clamped at 0
  int k_star;             // smallest index attaining c
  std::int64_t C_star;    // minimal number of extra copies of min D
  PaddingCase kase;
  DegreeSequence padded;  // base with C_star extra copies of min D
};

/// c = max over 1 <= k <= k_range of ceil(-delta(base, k) / min(k, d_n)),
/// clamped below at 0, with the smallest attaining k on ties.
std::pair<std::int64_t, int> compute_c(const DegreeSequence& base,
                                       int k_range);

/// Minimal padding for a degree set. Singletons take the complete-graph
/// route; otherwise the parity of the set sum and of min D select the case.
PaddingResult min_padding(const DegreeSet& d);

/// Complete-graph padding for a one-element set {d}: d extra copies,
/// yielding (d)_{d+1}, the degree sequence of K_{d+1}.
PaddingResult pad_singleton(int d);

}  // namespace degset
