#include <random>

#include "doctest.h"
#include "monoprop/congruence.hpp"
#include "monoprop/io.hpp"
#include "monoprop/just_set.hpp"
#include "test_helpers.hpp"

using namespace monoprop;
using monoprop::testing::random_algebra;

namespace {

// a, a' feed the two fixpoints b', b; c and d are fixpoints.
MonounaryAlgebra collapse_fixture() {
  return MonounaryAlgebra({3, 2, 2, 3, 4, 5}, {"a", "a'", "b", "b'", "c", "d"});
}

// same shape but c now feeds the fixpoint d.
MonounaryAlgebra merge_fixture() {
  return MonounaryAlgebra({3, 2, 2, 3, 5, 5}, {"a", "a'", "b", "b'", "c", "d"});
}

// just the four-element part.
MonounaryAlgebra cross_fixture() {
  return MonounaryAlgebra({3, 2, 2, 3}, {"a", "a'", "b", "b'"});
}

Partition pairs_theta(const MonounaryAlgebra& a) {
  return parse_partition(a, a.size() == 4 ? "a,a'|b,b'" : "a,a'|b,b'|c|d");
}

}  // namespace

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition({{0, 1}, {1, 2}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Partition({{0}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(Partition({{0, 3}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(Partition({{}, {0}}, 1), std::invalid_argument);
  const Partition p({{1, 0}, {2}}, 3);
  CHECK(p.block_of(0) == 0);
  CHECK(p.block_of(2) == 1);
  CHECK(p.blocks()[0] == std::vector<Element>{0, 1});
}

TEST_CASE("congruence recognition on the collapse fixture") {
  const MonounaryAlgebra a = collapse_fixture();
  CHECK(is_congruence(a, pairs_theta(a)));

  // identity is always a congruence
  CHECK(is_congruence(a, Partition({{0}, {1}, {2}, {3}, {4}, {5}}, 6)));

  // grouping a with b sends images to different blocks
  CHECK_FALSE(
      is_congruence(a, parse_partition(a, "a,b|a',b'|c|d")));
}

TEST_CASE("all congruences of tiny algebras") {
  CHECK(all_congruences(MonounaryAlgebra({0})).size() == 1);

  // two-cycle: identity and everything-in-one (checked against the full
  // two-partition list by hand)
  const auto cs = all_congruences(MonounaryAlgebra({1, 0}));
  CHECK(cs.size() == 2);

  // the cross fixture admits the pairing congruence
  const MonounaryAlgebra c = cross_fixture();
  const auto list = all_congruences(c);
  bool found = false;
  for (const Partition& p : list) {
    if (p == pairs_theta(c)) found = true;
  }
  CHECK(found);
}

TEST_CASE("factor algebra of the collapse fixture") {
  const MonounaryAlgebra a = collapse_fixture();
  const FactorAlgebra f = factor(a, pairs_theta(a));
  REQUIRE(f.algebra.size() == 4);
  // {a,a'} -> {b,b'} -> itself; {c} and {d} stay fixpoints
  const Element qa = f.projection[*a.element_by_name("a")];
  const Element qb = f.projection[*a.element_by_name("b")];
  CHECK(f.algebra.succ(qa) == qb);
  CHECK(f.algebra.succ(qb) == qb);
  CHECK(f.algebra.name(qa) == "{a,a'}");
  CHECK(f.algebra.name(qb) == "{b,b'}");

  // identity congruence gives an isomorphic copy
  const FactorAlgebra id =
      factor(a, Partition({{0}, {1}, {2}, {3}, {4}, {5}}, 6));
  CHECK(id.algebra.succ_table() == a.succ_table());

  // the all-in-one congruence gives a single fixpoint
  const FactorAlgebra one = factor(a, Partition({{0, 1, 2, 3, 4, 5}}, 6));
  CHECK(one.algebra.size() == 1);
  CHECK(one.algebra.succ(0) == 0);

  // non-congruences are rejected
  CHECK_THROWS_AS(factor(a, parse_partition(a, "a,b|a',b'|c|d")),
                  std::invalid_argument);
}

TEST_CASE("factor soundness over all algebras of size <= 5") {
  for (std::size_t n = 1; n <= 5; ++n) {
    AlgebraEnumerator en(n);
    while (auto a = en.next()) {
      for (const Partition& theta : all_congruences(*a)) {
        const FactorAlgebra f = factor(*a, theta);
        for (Element x = 0; x < a->size(); ++x) {
          REQUIRE(f.projection[a->succ(x)] == f.algebra.succ(f.projection[x]));
        }
      }
    }
  }
}

TEST_CASE("collapse fixture: proportion holds below, fails in the quotient") {
  const MonounaryAlgebra a = collapse_fixture();
  const Partition theta = pairs_theta(a);
  const Element ea = *a.element_by_name("a"), eb = *a.element_by_name("b"),
                ec = *a.element_by_name("c"), ed = *a.element_by_name("d");

  // both unions empty below
  CHECK(just_set(a, ea, eb).empty());
  CHECK(just_set(a, ec, ed).empty());
  CHECK(just_set(a, eb, ea).empty());
  CHECK(just_set(a, ed, ec).empty());

  const QuotientCheck q = quotient_compat_experiment(a, theta, ea, eb, ec, ed);
  CHECK(q.in_algebra.holds);
  CHECK_FALSE(q.in_quotient.holds);

  // in the quotient the union is nonempty while the intersection is empty
  const FactorAlgebra f = factor(a, theta);
  const JustSet qab = just_set(f.algebra, f.projection[ea], f.projection[eb]);
  const JustSet qcd = just_set(f.algebra, f.projection[ec], f.projection[ed]);
  CHECK_FALSE(qab.empty());
  CHECK(qab.member(0, 1));  // contains z -> S(z)
  CHECK(intersect(qab, qcd).empty());
}

TEST_CASE("merge fixture: proportion fails below, holds in the quotient") {
  const MonounaryAlgebra a = merge_fixture();
  const Partition theta = pairs_theta(a);
  const Element ea = *a.element_by_name("a"), eb = *a.element_by_name("b"),
                ec = *a.element_by_name("c"), ed = *a.element_by_name("d");

  // union nonempty, intersection empty below
  const JustSet ab = just_set(a, ea, eb);
  const JustSet cd = just_set(a, ec, ed);
  CHECK(ab.empty());
  CHECK_FALSE(cd.empty());
  CHECK(intersect(ab, cd).empty());

  const QuotientCheck q = quotient_compat_experiment(a, theta, ea, eb, ec, ed);
  CHECK_FALSE(q.in_algebra.holds);
  CHECK(q.in_quotient.holds);
}

TEST_CASE("cross fixture: proportion fails across the pair") {
  const MonounaryAlgebra a = cross_fixture();
  const Partition theta = pairs_theta(a);
  const Element ea = *a.element_by_name("a"), eb = *a.element_by_name("b");

  const FactorAlgebra f = factor(a, theta);
  const JustSet below = just_set(a, ea, eb);
  const JustSet above = just_set(f.algebra, f.projection[ea], f.projection[eb]);
  CHECK(below.empty());
  CHECK_FALSE(above.empty());
  CHECK(intersect(below, above).empty());

  const QuotientCheck q = quotient_compat_experiment(a, theta, ea, eb, ea, eb);
  CHECK_FALSE(q.cross.holds);
}

TEST_CASE("partition parsing and printing") {
  const MonounaryAlgebra a = collapse_fixture();
  const Partition p = parse_partition(a, "a,a'|b,b'|c|d");
  CHECK(partition_to_string(a, p) == "a,a'|b,b'|c|d");
  CHECK_THROWS_AS(parse_partition(a, "a,zzz|b"), ParseError);
  CHECK_THROWS_AS(parse_partition(a, "a,a'|b,b'"), ParseError);
  CHECK_THROWS_AS(parse_partition(a, ""), ParseError);
}
