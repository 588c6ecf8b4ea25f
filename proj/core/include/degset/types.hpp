#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace degset {

// Degrees and sequence lengths above this are rejected at construction;
// keeps the window search and the brute-force oracle tractable.
inline constexpr int kDefaultLimit = 10000;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct ZeroDegreeVertex : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotGraphic : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadPartition : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct PreconditionViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotApplicable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadInterval : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when an instance exceeds the configured size limits. Carries the
// part of the search window known at the time, so a caller can resume with
// a raised budget.
class LimitExceeded : public std::runtime_error {
 public:
  explicit LimitExceeded(const std::string& what, std::int64_t lo = 0,
                         std::int64_t hi = 0)
      : std::runtime_error(what), window_lo(lo), window_hi(hi) {}
  std::int64_t window_lo;
  std::int64_t window_hi;
};

/// A set of distinct vertex degrees, stored strictly decreasing.
/// Duplicates and non-positive entries are rejected at construction.
class DegreeSet {
 public:
  explicit DegreeSet(std::vector<int> degrees, int limit = kDefaultLimit);

  const std::vector<int>& degrees() const { return degrees_; }
  int size() const { return static_cast<int>(degrees_.size()); }
  int max() const { return degrees_.front(); }
  int min() const { return degrees_.back(); }
  std::int64_t sum() const;
  bool contains(int d) const;

  /// True when the set is a contiguous interval [min, max].
  bool is_interval() const;

  std::string to_text() const;

  bool operator==(const DegreeSet&) const = default;

 private:
  std::vector<int> degrees_;  // strictly decreasing
};

/// A nonincreasing degree sequence in run-length form: (value, multiplicity)
/// pairs with strictly decreasing values and every multiplicity >= 1.
class DegreeSequence {
 public:
  using Run = std::pair<int, int>;  // (value d_i, multiplicity m_i)

  explicit DegreeSequence(std::vector<Run> runs, int limit = kDefaultLimit);

  /// Builds a sequence from raw values (any order); sorts nonincreasing and
  /// merges equal values into runs.
  static DegreeSequence from_values(std::vector<int> values,
                                    int limit = kDefaultLimit);

  const std::vector<Run>& runs() const { return runs_; }
  int run_count() const { return static_cast<int>(runs_.size()); }

  /// Length p = sum of multiplicities.
  int length() const { return static_cast<int>(count_prefix_.back()); }

  /// Sum of all terms.
  std::int64_t sigma() const { return sum_prefix_.back(); }

  /// Cumulative multiplicities b_1 < b_2 < ... < b_n = p.
  std::vector<int> breakpoints() const;

  /// The k-th term a_k, 1-based.
  int value_at(int k) const;

  /// Fully expanded nonincreasing list of length p.
  std::vector<int> expand() const;

  /// Distinct values as a DegreeSet.
  DegreeSet degree_set() const;

  /// Same sequence with `copies` more occurrences of the smallest value.
  DegreeSequence append_min(std::int64_t copies) const;

  /// Text form, e.g. "5,4,3^5".
  std::string to_text() const;

  bool operator==(const DegreeSequence& other) const {
    return runs_ == other.runs_;
  }

  // Prefix sums over runs, exposed for O(n)-per-k slack evaluation.
  const std::vector<std::int64_t>& count_prefix() const {
    return count_prefix_;
  }
  const std::vector<std::int64_t>& sum_prefix() const { return sum_prefix_; }

 private:
  std::vector<Run> runs_;
  std::vector<std::int64_t> count_prefix_;  // count_prefix_[i] = sum of m_j, j < i
  std::vector<std::int64_t> sum_prefix_;    // sum_prefix_[i] = sum of m_j * d_j, j < i
};

/// Simple undirected labeled graph on vertices 0..vertex_count-1.
/// Edges are canonicalized as (min, max); loops and duplicates rejected.
class Graph {
 public:
  explicit Graph(int vertex_count);

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const;

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::set<std::pair<int, int>>& edges() const { return edges_; }

  std::vector<int> degrees() const;
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;  // sorted ascending

  bool operator==(const Graph&) const = default;

 private:
  int vertex_count_;
  std::set<std::pair<int, int>> edges_;
};

enum class Method {
  closed_divisible,
  closed_min1,
  closed_min2,
  closed_interval,
  closed_singleton,
  window_search,
  oracle,
};

std::string to_string(Method m);

/// A least-size answer: the edge count, a witness degree sequence whose
/// distinct values are the queried set, optionally a realized graph.
struct LqOutcome {
  std::int64_t lq;
  DegreeSequence witness;
  std::optional<Graph> graph;
  Method method;
};

/// Run-length degree sequence of g. Rejects graphs with isolated vertices,
/// since degree sets are sets of positive integers.
DegreeSequence degree_sequence_of(const Graph& g);

/// Distinct vertex degrees of g.
DegreeSet degree_set_of(const Graph& g);

}  // namespace degset
