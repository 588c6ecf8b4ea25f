#pragma once

#include <cstdint>

#include "degset/types.hpp"

namespace degset {

/// Least order of a graph with degree set d: max(d) + 1.
int min_order(const DegreeSet& d);

/// Least size for a one-element set {d}: the complete graph K_{d+1},
/// d(d+1)/2 edges.
LqOutcome lq_singleton(int d, bool with_graph = false);

/// Least size when min(d) divides every element. Throws NotApplicable
/// otherwise.
LqOutcome lq_divisible(const DegreeSet& d, bool with_graph = false);

/// Least size when min(d) = 1. Throws NotApplicable otherwise.
LqOutcome lq_min1(const DegreeSet& d, bool with_graph = false);

/// Least size when min(d) = 2, with the odd-sum correction of d_r/2.
/// Throws NotApplicable otherwise.
LqOutcome lq_min2(const DegreeSet& d, bool with_graph = false);

/// The two candidate minimum-sum sequences for an interval [m, n] in the
/// large-m regime:
///   s1 = n, n-1, ..., m+1, (m)_{m+1}
///   s2 = n, n-1, ..., m+2, (m+1)_2, (m)_m
/// Their sums differ by one; exactly one is graphic.
struct IntervalCandidates {
  DegreeSequence s1;
  DegreeSequence s2;
  int graphic_one;  // 1 or 2
};

/// Builds both candidates and identifies the graphic one by the
/// Erdos-Gallai test. Requires m < n and 2*ceil(n/2) <= m(m+1).
IntervalCandidates interval_candidates(int m, int n);

enum class IntervalBranch { singleton, small_m, large_m };

/// Which formula applies to [m, n]: m = n is the singleton case,
/// m(m+1) < 2*ceil(n/2) is the explicit-construction regime, and the
/// boundary goes to the candidate-sequence regime.
IntervalBranch interval_branch(int m, int n);

/// Least size of a graph with degree set [m, n]. Throws BadInterval unless
/// 1 <= m <= n.
LqOutcome lq_interval(int m, int n, bool with_graph = false);

/// Explicit graph with degree set [m, n] and exactly lq([1, n]) edges.
/// Only valid in the small-m regime m(m+1) < 2*ceil(n/2); throws
/// NotApplicable otherwise.
Graph build_interval_graph(int m, int n);

/// Tries the closed forms in order singleton, min = 1, divisible, min = 2;
/// returns nullopt when none applies. Interval sets are not routed here:
/// lq_interval is a family-level query, dispatched explicitly (table) or
/// called directly.
std::optional<LqOutcome> lq_closed(const DegreeSet& d,
                                   bool with_graph = false);

}  // namespace degset
