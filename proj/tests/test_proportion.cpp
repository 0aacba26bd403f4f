#include <random>

#include "doctest.h"
#include "monoprop/proportion.hpp"
#include "test_helpers.hpp"

using namespace monoprop;
using monoprop::testing::random_algebra;
using monoprop::testing::worked_example;

TEST_CASE("worked example arrow verdicts") {
  const MonounaryAlgebra a = worked_example();
  const Element e1 = 0, e2 = 1, e3 = 2, e4 = 3;

  SUBCASE("2->1 |> 4->3 is dominated by 4") {
    const ArrowVerdict v = arrow_holds(a, e2, e1, e4, e3);
    CHECK_FALSE(v.holds);
    CHECK(v.reason == ArrowReason::dominated);
    REQUIRE(v.dominator.has_value());
    CHECK(*v.dominator == e4);
    CHECK(subset(v.intersection, v.dominator_intersection));
    CHECK_FALSE(subset(v.dominator_intersection, v.intersection));
  }

  SUBCASE("4->4 |> 1->2 holds maximally") {
    const ArrowVerdict v = arrow_holds(a, e4, e4, e1, e2);
    CHECK(v.holds);
    CHECK(v.reason == ArrowReason::maximal);
    CHECK(equal(v.intersection, just_set(a, e1, e2)));
  }

  SUBCASE("full proportions") {
    CHECK(proportion_holds(a, e1, e2, e4, e4).holds);
    CHECK_FALSE(proportion_holds(a, e1, e2, e3, e4).holds);
  }
}

TEST_CASE("degenerate arrows hold when both sides are empty") {
  // two fixpoints and two islands: every cross set is empty
  const MonounaryAlgebra a({3, 2, 2, 3}, {"a", "a'", "b", "b'"});
  const ArrowVerdict v = arrow_holds(a, 0, 2, 1, 3);  // a->b |> a'->b'
  CHECK(v.holds);
  CHECK(v.reason == ArrowReason::empty_union);

  // nonempty against empty fails on the intersection
  const ArrowVerdict w = arrow_holds(a, 0, 3, 1, 0);  // a->b' vs a'->a
  CHECK_FALSE(w.holds);
  CHECK(w.reason == ArrowReason::empty_intersection);
}

TEST_CASE("solve over the worked example") {
  const MonounaryAlgebra a = worked_example();
  const Element e1 = 0, e2 = 1, e3 = 2, e4 = 3;

  // a->b = 2->1, c = 4: the documented verdicts pin d = 4 and exclude d = 3.
  CHECK(arrow_holds(a, e2, e1, e4, e4).holds);
  CHECK_FALSE(arrow_holds(a, e2, e1, e4, e3).holds);
  const auto arrow_solutions = solve_arrow(a, a, e2, e1, e4);
  CHECK(arrow_solutions == std::vector<Element>{e4});

  const auto prop_solutions = solve_proportion(a, a, e1, e2, e4);
  CHECK(std::find(prop_solutions.begin(), prop_solutions.end(), e4) !=
        prop_solutions.end());
  const auto from_three = solve_proportion(a, a, e1, e2, e3);
  CHECK(std::find(from_three.begin(), from_three.end(), e4) ==
        from_three.end());
}

TEST_CASE("solve on a single fixpoint") {
  const MonounaryAlgebra fix({0});
  CHECK(solve_arrow(fix, fix, 0, 0, 0) == std::vector<Element>{0});
  CHECK(solve_proportion(fix, fix, 0, 0, 0) == std::vector<Element>{0});
}

TEST_CASE("solve_arrow in an empty-heavy algebra") {
  // three fixpoints: Jus(a -> b) is empty, so for source c the solutions are
  // exactly the d with Jus(c -> d) empty too.
  const MonounaryAlgebra a({0, 1, 2}, {"a", "b", "c"});
  REQUIRE(just_set(a, 0, 1).empty());
  const auto solutions = solve_arrow(a, a, 0, 1, 2);
  CHECK(solutions == std::vector<Element>{0, 1});  // Jus(c->c) is nonempty
}

TEST_CASE("proportion table matches direct evaluation") {
  std::mt19937_64 rng(4321);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_algebra(rng, 1 + rng() % 5);
    const ProportionTable table(a);
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = 0; y < a.size(); ++y)
        for (Element u = 0; u < a.size(); ++u)
          for (Element v = 0; v < a.size(); ++v) {
            REQUIRE(table.arrow(x, y, u, v) == arrow_holds(a, x, y, u, v).holds);
            REQUIRE(table.proportion(x, y, u, v) ==
                    proportion_holds(a, x, y, u, v).holds);
          }
  }
}

TEST_CASE("structural properties at small sizes") {
  for (std::size_t n = 1; n <= 3; ++n) {
    AlgebraEnumerator en(n);
    while (auto a = en.next()) {
      const ProportionTable t(*a);
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
          CHECK(t.proportion(x, y, x, y));  // reflexivity
          for (Element u = 0; u < n; ++u)
            for (Element v = 0; v < n; ++v) {
              CHECK(t.proportion(x, y, u, v) == t.proportion(u, v, x, y));
              CHECK(t.proportion(x, y, u, v) == t.proportion(y, x, v, u));
            }
        }
    }
  }
}

TEST_CASE("brute force oracle agrees exhaustively at size <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    AlgebraEnumerator en(n);
    while (auto a = en.next()) {
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          for (Element u = 0; u < n; ++u)
            for (Element v = 0; v < n; ++v) {
              const ArrowVerdict fast = arrow_holds(*a, x, y, u, v);
              const ArrowVerdict slow = brute_force_arrow(*a, x, y, u, v);
              REQUIRE(fast.holds == slow.holds);
              if (fast.reason == ArrowReason::empty_union) {
                CHECK(slow.reason == ArrowReason::empty_union);
              }
            }
    }
  }
}

TEST_CASE("brute force oracle agrees on random larger algebras") {
  std::mt19937_64 rng(987654);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto a = random_algebra(rng, n);
    for (int q = 0; q < 25; ++q) {
      const Element x = rng() % n, y = rng() % n, u = rng() % n, v = rng() % n;
      REQUIRE(arrow_holds(a, x, y, u, v).holds ==
              brute_force_arrow(a, x, y, u, v).holds);
    }
  }
}

TEST_CASE("domination certificates verify") {
  std::mt19937_64 rng(13);
  int seen = 0;
  for (int trial = 0; trial < 5000 && seen < 50; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const auto a = random_algebra(rng, n);
    const Element x = rng() % n, y = rng() % n, u = rng() % n, v = rng() % n;
    const ArrowVerdict verdict = arrow_holds(a, x, y, u, v);
    if (verdict.reason != ArrowReason::dominated) continue;
    ++seen;
    REQUIRE(verdict.dominator.has_value());
    CHECK(subset(verdict.intersection, verdict.dominator_intersection));
    CHECK_FALSE(subset(verdict.dominator_intersection, verdict.intersection));
    // the certificate recomputes
    const JustSet competitor =
        intersect(just_set(a, x, y), just_set(a, u, *verdict.dominator));
    CHECK(equal(competitor, verdict.dominator_intersection));
  }
  CHECK(seen >= 20);
}

TEST_CASE("cross-algebra queries keep their direction") {
  const MonounaryAlgebra left = worked_example();
  const MonounaryAlgebra right({0}, {"p"});
  // left pair (3, 4), right pair (p, p): Jus_right(p -> p) is the full plane,
  // so the intersection equals Jus_left(3 -> 4) and stays maximal.
  const ArrowVerdict v = arrow_holds(left, right, 2, 3, 0, 0);
  CHECK(v.holds);
  CHECK(equal(v.intersection, just_set(left, 2, 3)));
  // reversed roles with the tail pair: p->p |> 4->3 is dominated by 4->4,
  // since the full plane meets Jus(4->4) in a strictly larger set.
  const ArrowVerdict w = arrow_holds(right, left, 0, 0, 3, 2);
  CHECK_FALSE(w.holds);
  CHECK(w.reason == ArrowReason::dominated);
  REQUIRE(w.dominator.has_value());
  CHECK(*w.dominator == 3);
}
