#include "degset/solver.hpp"

#include <algorithm>
#include <cmath>

#include "degset/closedform.hpp"
#include "degset/graphicality.hpp"
#include "degset/padding.hpp"
#include "degset/realization.hpp"

namespace degset {
namespace {

DegreeSequence sequence_from_multiplicities(const DegreeSet& d,
                                            const std::vector<int>& mult) {
  std::vector<DegreeSequence::Run> runs;
  runs.reserve(mult.size());
  for (std::size_t i = 0; i < mult.size(); ++i)
    runs.emplace_back(d.degrees()[i], mult[i]);
  return DegreeSequence(std::move(runs));
}

}  // namespace

DegreeSequence approx_sequence(const DegreeSet& d) {
  return min_padding(d).padded;
}

SearchWindow search_window(const DegreeSet& d) {
  std::int64_t top = approx_sequence(d).sigma();
  return SearchWindow{top - 2 * d.min(), top};
}

std::vector<std::vector<int>> enumerate_multiplicities(const DegreeSet& d,
                                                       std::int64_t sigma) {
  const auto& values = d.degrees();
  const int n = d.size();
  std::vector<std::int64_t> suffix_min(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n - 1; i >= 0; --i)
    suffix_min[static_cast<std::size_t>(i)] =
        suffix_min[static_cast<std::size_t>(i) + 1] +
        values[static_cast<std::size_t>(i)];

  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(n));
  auto recurse = [&](auto&& self, int i, std::int64_t left) -> void {
    const auto di = static_cast<std::int64_t>(values[static_cast<std::size_t>(i)]);
    if (i == n - 1) {
      if (left >= di && left % di == 0) {
        current[static_cast<std::size_t>(i)] = static_cast<int>(left / di);
        out.push_back(current);
      }
      return;
    }
    // m_i bounded by what the remaining values must still consume
    std::int64_t rest = suffix_min[static_cast<std::size_t>(i) + 1];
    for (std::int64_t m = 1; m * di + rest <= left; ++m) {
      current[static_cast<std::size_t>(i)] = static_cast<int>(m);
      self(self, i + 1, left - m * di);
    }
  };
  if (sigma >= suffix_min[0]) recurse(recurse, 0, sigma);
  return out;
}

LqOutcome lq_exact(const DegreeSet& d, const SolverLimits& limits,
                   bool with_graph) {
  SearchWindow window = search_window(d);
  if (window.hi_inclusive > limits.max_sigma)
    throw LimitExceeded("window top " + std::to_string(window.hi_inclusive) +
                            " exceeds max sigma " +
                            std::to_string(limits.max_sigma),
                        window.lo_exclusive, window.hi_inclusive);

  std::int64_t sigma = window.lo_exclusive + 1;
  if (sigma % 2 != 0) ++sigma;
  for (; sigma <= window.hi_inclusive; sigma += 2) {
    for (const auto& mult : enumerate_multiplicities(d, sigma)) {
      DegreeSequence candidate = sequence_from_multiplicities(d, mult);
      if (is_graphic_refined(candidate)) {
        LqOutcome out{sigma / 2, std::move(candidate), std::nullopt,
                      Method::window_search};
        if (with_graph) out.graph = realize(out.witness);
        return out;
      }
    }
  }
  // unreachable: the padded sequence itself is graphic at the window top
  throw std::logic_error("window search found no graphic sequence");
}

std::int64_t lq_oracle(const DegreeSet& d, const SolverLimits& limits) {
  if (d.max() > limits.oracle_max_degree || d.size() > limits.oracle_max_size)
    throw LimitExceeded("instance too large for the brute-force oracle");

  const auto& values = d.degrees();
  const int n = d.size();
  std::int64_t sigma = d.sum();
  if (sigma % 2 != 0) ++sigma;
  for (; sigma <= limits.max_sigma; sigma += 2) {
    // own enumeration of positive solutions to sum m_i d_i = sigma
    std::vector<int> mult(static_cast<std::size_t>(n), 1);
    bool found = false;
    auto scan = [&](auto&& self, int i, std::int64_t left) -> void {
      if (found) return;
      const auto di =
          static_cast<std::int64_t>(values[static_cast<std::size_t>(i)]);
      if (i == n - 1) {
        if (left >= di && left % di == 0) {
          mult[static_cast<std::size_t>(i)] = static_cast<int>(left / di);
          if (is_graphic_full(sequence_from_multiplicities(d, mult)))
            found = true;
        }
        return;
      }
      for (std::int64_t m = 1; m * di <= left; ++m) {
        mult[static_cast<std::size_t>(i)] = static_cast<int>(m);
        self(self, i + 1, left - m * di);
        if (found) return;
      }
    };
    scan(scan, 0, sigma);
    if (found) return sigma / 2;
  }
  throw LimitExceeded("oracle scan exceeded max sigma " +
                      std::to_string(limits.max_sigma));
}

RatioBound approx_ratio_bound(const DegreeSet& d, std::int64_t lq) {
  if (lq < 1) throw PreconditionViolated("lq must be positive");
  double m_bound = 2.0 / (d.max() + 1);
  if (d.size() >= 2)
    m_bound = std::min(m_bound,
                       2.0 * (std::sqrt(2.0) - 1.0) / (d.size() - 1));
  double ratio = static_cast<double>(approx_sequence(d).sigma()) /
                 static_cast<double>(2 * lq);
  if (!(ratio < 1.0 + m_bound))
    throw std::logic_error("approximation ratio bound violated");
  return RatioBound{m_bound, ratio};
}

LqOutcome lq_auto(const DegreeSet& d, const SolverLimits& limits,
                  bool with_graph) {
  if (auto closed = lq_closed(d, with_graph)) return *closed;
  return lq_exact(d, limits, with_graph);
}

}  // namespace degset
