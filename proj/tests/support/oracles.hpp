#pragma once

// Test-only ground truth helpers. These stay independent of the library's
// deciders and search paths: graphicality is established by enumerating
// every labeled simple graph, nothing else.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace testsupport {

// Degree sequences (sorted nonincreasing, all entries positive) realized by
// some simple graph on exactly p labeled vertices, found by enumerating
// every edge subset of K_p. Sequences containing a zero-degree vertex are
// dropped, since the library rejects them at the type level.
inline std::set<std::vector<int>> graphic_sequences_by_enumeration(int p) {
  std::set<std::vector<int>> out;
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < p; ++u)
    for (int v = u + 1; v < p; ++v) slots.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<int> deg(static_cast<std::size_t>(p));
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
      const auto& [u, v] = slots[static_cast<std::size_t>(
          __builtin_ctzll(bits))];
      ++deg[static_cast<std::size_t>(u)];
      ++deg[static_cast<std::size_t>(v)];
    }
    bool positive = true;
    for (int d : deg)
      if (d == 0) { positive = false; break; }
    if (!positive) continue;
    std::vector<int> sorted = deg;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    out.insert(std::move(sorted));
  }
  return out;
}

// All nonincreasing positive sequences with length in [1, max_p] and values
// in [1, max_v].
inline std::vector<std::vector<int>> all_sequences(int max_p, int max_v) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int highest) -> void {
    if (!current.empty()) out.push_back(current);
    if (static_cast<int>(current.size()) == max_p) return;
    for (int v = highest; v >= 1; --v) {
      current.push_back(v);
      self(self, v);
      current.pop_back();
    }
  };
  recurse(recurse, max_v);
  return out;
}

// All nonempty subsets of {1..max_d}, each as a decreasing degree vector,
// optionally capped at max_size elements.
inline std::vector<std::vector<int>> all_degree_sets(int max_d,
                                                     int max_size = -1) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << max_d); ++mask) {
    std::vector<int> degrees;
    for (int d = max_d; d >= 1; --d)
      if (mask & (std::uint32_t{1} << (d - 1))) degrees.push_back(d);
    if (max_size >= 0 && static_cast<int>(degrees.size()) > max_size)
      continue;
    out.push_back(std::move(degrees));
  }
  return out;
}

}  // namespace testsupport
