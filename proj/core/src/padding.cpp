#include "degset/padding.hpp"

#include <algorithm>

#include "degset/graphicality.hpp"

namespace degset {
namespace {

// ceil(a / b) for b > 0
std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

void check_padded(const PaddingResult& r, std::int64_t slack_bound) {
  if (r.padded.sigma() % 2 != 0)
    throw std::logic_error("padded sequence has odd sum");
  if (!is_graphic_full(r.padded))
    throw std::logic_error("padded sequence failed the Erdos-Gallai test");
  if (delta(r.padded, r.k_star) >= slack_bound)
    throw std::logic_error("padded slack bound violated at k*");
}

}  // namespace

std::string to_string(PaddingCase c) {
  switch (c) {
    case PaddingCase::a_even_sum: return "a-even-sum";
    case PaddingCase::a_odd_min: return "a-odd-min";
    case PaddingCase::b_odd_sum_even_min: return "b-odd-sum-even-min";
    case PaddingCase::singleton: return "singleton";
  }
  return "unknown";
}

std::pair<std::int64_t, int> compute_c(const DegreeSequence& base,
                                       int k_range) {
  if (k_range < 1 || k_range > base.length())
    throw IndexOutOfRange("k_range out of range");
  const int dn = base.runs().back().first;
  std::int64_t raw_max = 0;
  int k_star = 1;
  bool have = false;
  for (int k = 1; k <= k_range; ++k) {
    std::int64_t v =
        ceil_div(-delta(base, k), std::min<std::int64_t>(k, dn));
    if (!have || v > raw_max) {
      raw_max = v;
      k_star = k;
      have = true;
    }
  }
  return {std::max<std::int64_t>(raw_max, 0), k_star};
}

PaddingResult min_padding(const DegreeSet& d) {
  if (d.size() == 1) return pad_singleton(d.max());

  const int n = d.size();
  const int dn = d.min();
  const std::int64_t sum = d.sum();

  if (sum % 2 == 0 || dn % 2 == 1) {
    // case (a): one copy of each value
    std::vector<DegreeSequence::Run> runs;
    runs.reserve(static_cast<std::size_t>(n));
    for (int value : d.degrees()) runs.emplace_back(value, 1);
    DegreeSequence base(std::move(runs));

    auto [c, k_star] = compute_c(base, n - 1);
    std::int64_t C = c;
    if (dn % 2 == 1 && (sum + c * dn) % 2 == 1) C = c + 1;
    PaddingCase kase =
        sum % 2 == 0 ? PaddingCase::a_even_sum : PaddingCase::a_odd_min;
    PaddingResult result{base, c, k_star, C, kase, base.append_min(C)};
    check_padded(result, 2 * static_cast<std::int64_t>(dn));
    return result;
  }

  // case (b): sum odd, d_n even; double the smallest odd value d_r
  std::vector<DegreeSequence::Run> runs;
  for (int value : d.degrees()) runs.emplace_back(value, 1);
  int r = -1;
  for (int i = 0; i < n; ++i)
    if (d.degrees()[static_cast<std::size_t>(i)] % 2 == 1) r = i;
  // r >= 0: an odd sum forces at least one odd element
  runs[static_cast<std::size_t>(r)].second = 2;
  DegreeSequence base(std::move(runs));

  auto [c, k_star] = compute_c(base, n);
  PaddingResult result{base,
                       c,
                       k_star,
                       c,
                       PaddingCase::b_odd_sum_even_min,
                       base.append_min(c)};
  check_padded(result, dn);
  return result;
}

PaddingResult pad_singleton(int d) {
  if (d < 1) throw ParseError("degree must be positive");
  DegreeSequence base({{d, 1}});
  return PaddingResult{base,
                       d,
                       1,
                       d,
                       PaddingCase::singleton,
                       DegreeSequence({{d, d + 1}})};
}

}  // namespace degset
