#include <doctest.h>

#include "degset/graphicality.hpp"
#include "degset/padding.hpp"

#include "support/oracles.hpp"

using namespace degset;

TEST_CASE("compute_c") {
  CHECK(compute_c(DegreeSequence({{3, 1}, {2, 1}, {1, 1}}), 2) ==
        std::pair<std::int64_t, int>{2, 2});
  CHECK(compute_c(DegreeSequence({{3, 1}, {1, 1}}), 1) ==
        std::pair<std::int64_t, int>{2, 1});
  // tie between k = 1 and k = 2 breaks to the smaller k
  CHECK(compute_c(DegreeSequence({{5, 2}, {2, 1}}), 2) ==
        std::pair<std::int64_t, int>{3, 1});
}

TEST_CASE("min_padding worked sets") {
  auto r = min_padding(DegreeSet({3, 2, 1}));
  CHECK(r.C_star == 2);
  CHECK(r.padded == DegreeSequence({{3, 1}, {2, 1}, {1, 3}}));
  CHECK(r.kase == PaddingCase::a_even_sum);

  r = min_padding(DegreeSet({4, 2}));
  CHECK(r.C_star == 3);
  CHECK(r.padded == DegreeSequence({{4, 1}, {2, 4}}));
  CHECK(r.kase == PaddingCase::a_even_sum);

  r = min_padding(DegreeSet({5, 4, 3}));
  CHECK(r.c == 3);
  CHECK(r.k_star == 1);
  CHECK(r.C_star == 4);  // odd minimum and odd adjusted sum bump c by one
  CHECK(r.padded == DegreeSequence({{5, 1}, {4, 1}, {3, 5}}));

  r = min_padding(DegreeSet({5, 2}));
  CHECK(r.kase == PaddingCase::b_odd_sum_even_min);
  CHECK(r.base == DegreeSequence({{5, 2}, {2, 1}}));  // doubled d_r = 5
  CHECK(r.C_star == 3);
  CHECK(r.padded == DegreeSequence({{5, 2}, {2, 4}}));
}

TEST_CASE("pad_singleton gives the complete-graph sequence") {
  CHECK(pad_singleton(1).padded == DegreeSequence({{1, 2}}));
  CHECK(pad_singleton(2).padded == DegreeSequence({{2, 3}}));
  CHECK(pad_singleton(4).padded == DegreeSequence({{4, 5}}));
  CHECK(pad_singleton(4).C_star == 4);
  CHECK(pad_singleton(4).kase == PaddingCase::singleton);
  CHECK(min_padding(DegreeSet({3})).kase == PaddingCase::singleton);
}

TEST_CASE("padding is minimal, even, graphic, and within the slack bound") {
  for (const auto& degrees : testsupport::all_degree_sets(8)) {
    DegreeSet d(degrees);
    auto r = min_padding(d);

    CHECK(r.padded.sigma() % 2 == 0);
    CHECK(is_graphic_full(r.padded));
    CHECK(r.padded == r.base.append_min(r.C_star));
    for (std::int64_t C = 0; C < r.C_star; ++C)
      CHECK_FALSE(is_graphic_full(r.base.append_min(C)));

    const int dn = d.min();
    if (r.kase == PaddingCase::b_odd_sum_even_min) {
      CHECK(d.sum() % 2 == 1);
      CHECK(dn % 2 == 0);
      CHECK(delta(r.padded, r.k_star) < dn);
    } else if (r.kase != PaddingCase::singleton) {
      CHECK((d.sum() % 2 == 0 || dn % 2 == 1));
      CHECK(delta(r.padded, r.k_star) < 2 * dn);
    }
  }
}
