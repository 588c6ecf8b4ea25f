#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "degset/types.hpp"

namespace degset {

/// Slack of the k-th Erdos-Gallai inequality,
///   delta(s, k) = k(k-1) + sum_{i>k} min(k, a_i) - sum_{i<=k} a_i,
/// computed over the run-length form in O(run count). The sequence is
/// graphic iff sigma is even and the slack is nonnegative wherever required.
std::int64_t delta(const DegreeSequence& s, int k);

/// Full Erdos-Gallai test: even sum and delta(s, k) >= 0 for all 1 <= k <= p.
bool is_graphic_full(const DegreeSequence& s);

/// Largest t with a_t >= t - 1. The Erdos-Gallai inequalities need only be
/// checked for k <= t.
int strong_index(const DegreeSequence& s);

/// Refined test: evaluates the slack only at breakpoints not exceeding
/// strong_index(s). Agrees with is_graphic_full on every input.
bool is_graphic_refined(const DegreeSequence& s);

/// First breakpoint k with delta(s, k) < 0, together with the slack value,
/// or nullopt when no breakpoint inequality is violated. Diagnostic aid;
/// an odd sum is not reported here.
std::optional<std::pair<int, std::int64_t>> first_violation(
    const DegreeSequence& s);

}  // namespace degset
