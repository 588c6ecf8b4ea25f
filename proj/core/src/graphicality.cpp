#include "degset/graphicality.hpp"

#include <algorithm>

namespace degset {

std::int64_t delta(const DegreeSequence& s, int k) {
  const int p = s.length();
  if (k < 1 || k > p)
    throw IndexOutOfRange("k = " + std::to_string(k) + " out of range 1.." +
                          std::to_string(p));
  const auto& counts = s.count_prefix();
  const auto& sums = s.sum_prefix();
  const auto& runs = s.runs();
  const auto k64 = static_cast<std::int64_t>(k);

  // run containing position k
  auto it = std::lower_bound(counts.begin() + 1, counts.end(), k64);
  auto t = static_cast<std::size_t>(it - counts.begin() - 1);
  std::int64_t head =
      sums[t] + (k64 - counts[t]) * runs[t].first;  // sum of a_1..a_k

  std::int64_t tail = 0;  // sum of min(k, a_i) for i > k
  for (std::size_t j = t; j < runs.size(); ++j) {
    std::int64_t cnt = counts[j + 1] - std::max(k64, counts[j]);
    if (cnt > 0)
      tail += cnt * std::min<std::int64_t>(k64, runs[j].first);
  }
  return k64 * (k64 - 1) + tail - head;
}

bool is_graphic_full(const DegreeSequence& s) {
  if (s.sigma() % 2 != 0) return false;
  for (int k = 1; k <= s.length(); ++k)
    if (delta(s, k) < 0) return false;
  return true;
}

int strong_index(const DegreeSequence& s) {
  const auto& counts = s.count_prefix();
  const auto& runs = s.runs();
  int best = 1;  // a_1 >= 1 > 0 always holds
  for (std::size_t j = 0; j < runs.size(); ++j) {
    // within run j, positions counts[j]+1 .. counts[j+1] all have value v;
    // a_t >= t-1 there means t <= v+1
    auto lo = counts[j] + 1;
    auto v1 = static_cast<std::int64_t>(runs[j].first) + 1;
    if (lo > v1) break;
    best = static_cast<int>(std::max<std::int64_t>(
        best, std::min(counts[j + 1], v1)));
  }
  return best;
}

bool is_graphic_refined(const DegreeSequence& s) {
  if (s.sigma() % 2 != 0) return false;
  const int t = strong_index(s);
  for (int b : s.breakpoints()) {
    if (b > t) break;
    if (delta(s, b) < 0) return false;
  }
  return true;
}

std::optional<std::pair<int, std::int64_t>> first_violation(
    const DegreeSequence& s) {
  for (int b : s.breakpoints()) {
    std::int64_t d = delta(s, b);
    if (d < 0) return std::make_pair(b, d);
  }
  return std::nullopt;
}

}  // namespace degset
