#include "degset/closedform.hpp"

#include <algorithm>

#include "degset/graphicality.hpp"
#include "degset/padding.hpp"
#include "degset/realization.hpp"

namespace degset {
namespace {

int ceil_half(int n) { return (n + 1) / 2; }

// Least size for the interval [1, n]: (n(n+1)/2 + ceil(n/2)) / 2.
std::int64_t lq_one_to(int n) {
  std::int64_t total =
      static_cast<std::int64_t>(n) * (n + 1) / 2 + ceil_half(n);
  if (total % 2 != 0)
    throw std::logic_error("lq([1,n]) numerator is odd");
  return total / 2;
}

LqOutcome outcome_from_padding(const PaddingResult& pr, Method method,
                               bool with_graph) {
  LqOutcome out{pr.padded.sigma() / 2, pr.padded, std::nullopt, method};
  if (with_graph) out.graph = realize(pr.padded);
  return out;
}

}  // namespace

int min_order(const DegreeSet& d) { return d.max() + 1; }

LqOutcome lq_singleton(int d, bool with_graph) {
  auto pr = pad_singleton(d);
  return outcome_from_padding(pr, Method::closed_singleton, with_graph);
}

LqOutcome lq_divisible(const DegreeSet& d, bool with_graph) {
  const int dn = d.min();
  for (int value : d.degrees())
    if (value % dn != 0)
      throw NotApplicable("min does not divide " + std::to_string(value));
  if (d.size() == 1) return lq_singleton(d.max(), with_graph);

  auto pr = min_padding(d);
  if ((d.sum() + pr.C_star * dn) / 2 != pr.padded.sigma() / 2)
    throw std::logic_error("divisible formula disagrees with padded sum");
  return outcome_from_padding(pr, Method::closed_divisible, with_graph);
}

LqOutcome lq_min1(const DegreeSet& d, bool with_graph) {
  if (d.min() != 1) throw NotApplicable("min of the set is not 1");
  if (d.size() == 1) return lq_singleton(1, with_graph);
  auto pr = min_padding(d);
  return outcome_from_padding(pr, Method::closed_min1, with_graph);
}

LqOutcome lq_min2(const DegreeSet& d, bool with_graph) {
  if (d.min() != 2) throw NotApplicable("min of the set is not 2");
  if (d.size() == 1) return lq_singleton(2, with_graph);
  auto pr = min_padding(d);

  // parity-split formula cross-check
  std::int64_t formula = (d.sum() + 2 * pr.C_star) / 2;
  if (d.sum() % 2 != 0) {
    int d_r = 0;
    for (int value : d.degrees())
      if (value % 2 == 1) d_r = value;  // smallest odd element
    formula = (d.sum() + 2 * pr.C_star + d_r) / 2;
  }
  if (formula != pr.padded.sigma() / 2)
    throw std::logic_error("min-2 formula disagrees with padded sum");
  return outcome_from_padding(pr, Method::closed_min2, with_graph);
}

IntervalCandidates interval_candidates(int m, int n) {
  if (m < 1 || m >= n) throw NotApplicable("requires 1 <= m < n");
  if (2 * ceil_half(n) > static_cast<std::int64_t>(m) * (m + 1))
    throw NotApplicable("interval is in the small-m regime");

  std::vector<DegreeSequence::Run> r1;
  for (int v = n; v > m; --v) r1.emplace_back(v, 1);
  r1.emplace_back(m, m + 1);
  DegreeSequence s1(std::move(r1));

  std::vector<DegreeSequence::Run> r2;
  for (int v = n; v > m + 1; --v) r2.emplace_back(v, 1);
  r2.emplace_back(m + 1, 2);
  r2.emplace_back(m, m);
  DegreeSequence s2(std::move(r2));

  const bool g1 = is_graphic_full(s1);
  const bool g2 = is_graphic_full(s2);
  if (g1 == g2)
    throw std::logic_error("expected exactly one graphic candidate");
  return IntervalCandidates{std::move(s1), std::move(s2), g1 ? 1 : 2};
}

IntervalBranch interval_branch(int m, int n) {
  if (m < 1 || m > n) throw BadInterval("requires 1 <= m <= n");
  if (m == n) return IntervalBranch::singleton;
  if (static_cast<std::int64_t>(m) * (m + 1) < 2 * ceil_half(n))
    return IntervalBranch::small_m;
  return IntervalBranch::large_m;
}

LqOutcome lq_interval(int m, int n, bool with_graph) {
  switch (interval_branch(m, n)) {
    case IntervalBranch::singleton:
      return lq_singleton(m, with_graph);
    case IntervalBranch::small_m: {
      Graph g = build_interval_graph(m, n);
      DegreeSequence witness = degree_sequence_of(g);
      std::int64_t lq = lq_one_to(n);
      if (witness.sigma() != 2 * lq)
        throw std::logic_error("interval construction has wrong size");
      LqOutcome out{lq, std::move(witness), std::nullopt,
                    Method::closed_interval};
      if (with_graph) out.graph = std::move(g);
      return out;
    }
    case IntervalBranch::large_m: {
      auto cands = interval_candidates(m, n);
      DegreeSequence witness =
          cands.graphic_one == 1 ? cands.s1 : cands.s2;
      LqOutcome out{witness.sigma() / 2, witness, std::nullopt,
                    Method::closed_interval};
      if (with_graph) out.graph = realize(out.witness);
      return out;
    }
  }
  throw BadInterval("unreachable");
}

Graph build_interval_graph(int m, int n) {
  if (interval_branch(m, n) != IntervalBranch::small_m)
    throw NotApplicable("requires m(m+1) < 2*ceil(n/2)");

  const int x_count = ceil_half(n) - 1;
  const int y_count = n / 2;
  // layout: x_1..x_X at 0.., y_1..y_Y at x_count.., then w, w_star
  auto x = [&](int i) { return i - 1; };
  auto y = [&](int j) { return x_count + j - 1; };
  const int w = x_count + y_count;
  const int w_star = w + 1;
  Graph g(x_count + y_count + 2);

  for (int i = 1; i <= x_count; ++i)
    for (int j = 1; j <= i; ++j) g.add_edge(x(i), y(j));
  for (int i = 1; i <= y_count; ++i)
    for (int j = i + 1; j <= y_count; ++j) g.add_edge(y(i), y(j));
  for (int j = 1; j <= y_count; ++j) {
    g.add_edge(y(j), w);
    g.add_edge(y(j), w_star);
  }
  if (n % 2 == 1) g.add_edge(w, w_star);
  // deg x_i = i, deg y_j = n-j+1, deg w = deg w_star = ceil(n/2)

  if (m >= 2) {
    // raise x_1..x_{m-1} to degree m: cut the m(m-1)/2 highest-index
    // y-edges at w_star and hand them out in blocks of size m-i
    const int moved = m * (m - 1) / 2;
    int j = y_count - moved + 1;
    for (int i = 1; i <= m - 1; ++i) {
      for (int t = 0; t < m - i; ++t, ++j) {
        g.remove_edge(y(j), w_star);
        g.add_edge(x(i), y(j));
      }
    }
  }
  return g;
}

std::optional<LqOutcome> lq_closed(const DegreeSet& d, bool with_graph) {
  if (d.size() == 1) return lq_singleton(d.max(), with_graph);
  if (d.min() == 1) return lq_min1(d, with_graph);
  if (std::all_of(d.degrees().begin(), d.degrees().end(),
                  [&](int v) { return v % d.min() == 0; }))
    return lq_divisible(d, with_graph);
  if (d.min() == 2) return lq_min2(d, with_graph);
  return std::nullopt;
}

}  // namespace degset
