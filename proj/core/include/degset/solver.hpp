#pragma once

#include <cstdint>
#include <vector>

#include "degset/types.hpp"

namespace degset {

/// Even degree totals to scan: 2*lq lies in (lo_exclusive, hi_inclusive].
struct SearchWindow {
  std::int64_t lo_exclusive;
  std::int64_t hi_inclusive;
};

/// Size budget for the exact search and the brute-force oracle.
struct SolverLimits {
  std::int64_t max_sigma = 100000;
  int oracle_max_degree = 10;
  int oracle_max_size = 5;
};

/// Approximation-quality certificate: the witness ratio sigma(padded)/(2 lq)
/// is provably below 1 + m_bound.
struct RatioBound {
  double m_bound;
  double witness_ratio;
};

/// The minimally padded graphic sequence with degree set d. Its half-sum
/// exceeds lq(d) by at most min(d) - 1.
DegreeSequence approx_sequence(const DegreeSet& d);

/// Window (sigma(padded) - 2 min(d), sigma(padded)] containing 2*lq(d).
SearchWindow search_window(const DegreeSet& d);

/// All multiplicity vectors (m_1, ..., m_n), each m_i >= 1, with
/// sum m_i * d_i = sigma, in lexicographic order.
std::vector<std::vector<int>> enumerate_multiplicities(const DegreeSet& d,
                                                       std::int64_t sigma);

/// Exact least size: scans even totals ascending through the window and
/// returns the first graphic sequence found (refined Erdos-Gallai test).
/// The first hit is minimal because no graph with degree set d has degree
/// total below the first graphic total, and the window is guaranteed to
/// contain 2*lq. Throws LimitExceeded when the window top exceeds
/// limits.max_sigma.
LqOutcome lq_exact(const DegreeSet& d, const SolverLimits& limits = {},
                   bool with_graph = false);

/// Independent ground-truth oracle: scans even totals ascending from the
/// parity-rounded set sum with no window and the full (unrefined)
/// Erdos-Gallai decider, sharing no search logic with lq_exact.
/// Restricted to small instances via limits.
std::int64_t lq_oracle(const DegreeSet& d, const SolverLimits& limits = {});

/// Approximation ratio certificate for a known lq value.
RatioBound approx_ratio_bound(const DegreeSet& d, std::int64_t lq);

/// Closed form when one applies, otherwise the window search.
LqOutcome lq_auto(const DegreeSet& d, const SolverLimits& limits = {},
                  bool with_graph = false);

}  // namespace degset
