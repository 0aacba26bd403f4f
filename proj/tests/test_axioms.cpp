#include "doctest.h"
#include "monoprop/axioms.hpp"
#include "monoprop/just_set.hpp"
#include "test_helpers.hpp"

using namespace monoprop;
using monoprop::testing::worked_example;

namespace {

JustSet literal(std::initializer_list<Rect> rects) {
  JustSet js;
  for (const Rect& r : rects) js.add(r.kset, r.lset);
  return js;
}

}  // namespace

TEST_CASE("axiom names round-trip") {
  for (Axiom x : kAllAxioms) {
    CHECK(axiom_from_name(axiom_name(x)) == x);
  }
  CHECK_FALSE(axiom_from_name("nonsense").has_value());
}

TEST_CASE("positive axioms hold on small algebras") {
  for (std::size_t n = 1; n <= 3; ++n) {
    AlgebraEnumerator en(n);
    while (auto a = en.next()) {
      const ProportionTable t(*a);
      for (Axiom x : {Axiom::symmetry, Axiom::inner_symmetry,
                      Axiom::reflexivity, Axiom::determinism}) {
        CHECK(check_axiom(t, x).holds);
      }
    }
  }
  CHECK(check_axiom(worked_example(), Axiom::reflexivity).holds);
}

TEST_CASE("every fixture defeats its axiom except the central-transitivity one") {
  for (const Fixture& f : fixtures()) {
    const AxiomReport r = check_axiom(f.algebra, f.axiom);
    CAPTURE(f.name);
    if (f.axiom == Axiom::central_transitivity) {
      // The documented failure in this algebra is the arrow level (checked
      // below); the schema itself has no violating tuple here.
      CHECK(r.holds);
    } else {
      CHECK_FALSE(r.holds);
      CHECK(violates_axiom(f.algebra, f.axiom, r.counterexample));
      CHECK_FALSE(r.detail.empty());
    }
  }
}

TEST_CASE("central permutation fixture details") {
  const Fixture& f = fixture(Axiom::central_permutation);
  const Element a = f.label.at("a"), b = f.label.at("b"), c = f.label.at("c"),
                d = f.label.at("d");
  CHECK(proportion_holds(f.algebra, a, b, c, d).holds);
  CHECK_FALSE(proportion_holds(f.algebra, a, c, b, d).holds);
  CHECK(violates_axiom(f.algebra, Axiom::central_permutation, {a, b, c, d}));
}

TEST_CASE("strong inner reflexivity fixture details") {
  const Fixture& f = fixture(Axiom::strong_inner_reflexivity);
  const Element a = f.label.at("a"), c = f.label.at("c"), d = f.label.at("d");
  CHECK(proportion_holds(f.algebra, a, a, c, d).holds);
  CHECK(violates_axiom(f.algebra, Axiom::strong_inner_reflexivity, {a, c, d}));
}

TEST_CASE("strong reflexivity fixture details") {
  const Fixture& f = fixture(Axiom::strong_reflexivity);
  const Element a = f.label.at("a"), b = f.label.at("b"), d = f.label.at("d");
  CHECK(proportion_holds(f.algebra, a, b, a, d).holds);
  CHECK(violates_axiom(f.algebra, Axiom::strong_reflexivity, {a, b, d}));
}

TEST_CASE("commutativity fixture details") {
  const Fixture& f = fixture(Axiom::commutativity);
  const Element a = f.label.at("a"), b = f.label.at("b");
  CHECK_FALSE(proportion_holds(f.algebra, a, b, b, a).holds);
  CHECK(violates_axiom(f.algebra, Axiom::commutativity, {a, b}));
}

TEST_CASE("transitivity fixture reproduces the documented facts") {
  const Fixture& f = fixture(Axiom::transitivity);
  const MonounaryAlgebra& alg = f.algebra;
  const Element a = f.label.at("a"), b = f.label.at("b"), c = f.label.at("c"),
                d = f.label.at("d"), e = f.label.at("e"), ef = f.label.at("f"),
                ef1 = f.label.at("f'");

  // Jus(a->b |> e->f) = {(k,0) : k >= 1}
  const ArrowVerdict v = arrow_holds(alg, a, b, e, ef);
  const JustSet tail_only =
      literal({{IndexSet::progression(1, 1), IndexSet::single(0)}});
  CHECK(equal(v.intersection, tail_only));

  // strictly below Jus(a->b |> e->f') = {(k,0):k>=1} u {(k,1):k>=2}
  const JustSet wider =
      intersect(just_set(alg, a, b), just_set(alg, e, ef1));
  const JustSet expected_wider =
      literal({{IndexSet::progression(1, 1), IndexSet::single(0)},
               {IndexSet::progression(2, 1), IndexSet::single(1)}});
  CHECK(equal(wider, expected_wider));
  CHECK(subset(v.intersection, wider));
  CHECK_FALSE(subset(wider, v.intersection));

  // hence the arrow fails while c->d |> e->f holds
  CHECK_FALSE(v.holds);
  CHECK(v.reason == ArrowReason::dominated);
  CHECK(arrow_holds(alg, c, d, e, ef).holds);

  // and a violation of the schema pins the same failing conclusion
  CHECK(violates_axiom(alg, Axiom::transitivity, {a, b, b, f.label.at("b*"),
                                                  e, ef}));
}

TEST_CASE("inner transitivity fixture uses its own labels") {
  const Fixture& f = fixture(Axiom::inner_transitivity);
  const Element a = f.label.at("a"), b = f.label.at("b"), c = f.label.at("c"),
                d = f.label.at("d"), e = f.label.at("e"), ff = f.label.at("f");
  CHECK(proportion_holds(f.algebra, a, b, c, d).holds);
  CHECK(proportion_holds(f.algebra, b, e, d, ff).holds);
  CHECK_FALSE(proportion_holds(f.algebra, a, e, c, ff).holds);
  CHECK(violates_axiom(f.algebra, Axiom::inner_transitivity,
                       {a, b, c, d, e, ff}));
}

TEST_CASE("central transitivity fixture reproduces the documented facts") {
  const Fixture& f = fixture(Axiom::central_transitivity);
  const MonounaryAlgebra& alg = f.algebra;
  const Element a = f.label.at("a"), b = f.label.at("b"), c = f.label.at("c"),
                d = f.label.at("d"), d1 = f.label.at("d'");

  // Jus(a->b |> c->d) = {S(z) -> z}
  const ArrowVerdict v = arrow_holds(alg, a, b, c, d);
  CHECK(equal(v.intersection,
              literal({{IndexSet::single(1), IndexSet::single(0)}})));

  // strictly inside Jus(a->b |> c->d') = {S(z)->z, S^2(z)->S(z)}
  const JustSet wider = intersect(just_set(alg, a, b), just_set(alg, c, d1));
  CHECK(equal(wider, literal({{IndexSet::single(1), IndexSet::single(0)},
                              {IndexSet::single(2), IndexSet::single(1)}})));
  CHECK(subset(v.intersection, wider));
  CHECK_FALSE(subset(wider, v.intersection));

  // so the arrow and the full proportion both fail
  CHECK_FALSE(v.holds);
  CHECK(v.reason == ArrowReason::dominated);
  CHECK_FALSE(proportion_holds(alg, a, b, c, d).holds);

  // The first premise of the schema instance on these labels holds, the
  // second fails by the same domination, so this tuple is not a schema
  // violation; the exhaustive scan in the fixture suite confirms none exists.
  CHECK(proportion_holds(alg, a, b, b, c).holds);
  CHECK_FALSE(proportion_holds(alg, b, c, c, d).holds);
}

TEST_CASE("search finds the smallest commutativity counterexample") {
  const auto hits = search_counterexamples(3, Axiom::commutativity, false, 1);
  REQUIRE_FALSE(hits.empty());
  CHECK(hits[0].size == 2);
  CHECK(hits[0].succ == std::vector<Element>{0, 0});
  CHECK(violates_axiom(MonounaryAlgebra(hits[0].succ), Axiom::commutativity,
                       hits[0].tuple));
}

TEST_CASE("search respects limits and produces verifiable hits") {
  const auto hits =
      search_counterexamples(3, Axiom::strong_reflexivity, false, 5);
  CHECK(hits.size() == 5);
  for (const SearchHit& hit : hits) {
    CHECK(violates_axiom(MonounaryAlgebra(hit.succ), Axiom::strong_reflexivity,
                         hit.tuple));
  }
}

TEST_CASE("reflexivity has no counterexamples at size <= 4") {
  CHECK(search_counterexamples(4, Axiom::reflexivity, false, 1).empty());
}

TEST_CASE("transitivity classification at tiny sizes") {
  const ClassifyReport one = classify_transitivity(1);
  CHECK(one.total == 1);
  CHECK(one.satisfying == 1);
  CHECK(one.violating == 0);

  // all four two-element algebras satisfy transitivity
  const ClassifyReport two = classify_transitivity(2);
  CHECK(two.total == 4);
  CHECK(two.satisfying == 4);
  CHECK(two.violating == 0);

  // recount independently via check_axiom
  const ClassifyReport three = classify_transitivity(3);
  std::uint64_t sat = 0, vio = 0;
  AlgebraEnumerator en(3);
  while (auto a = en.next()) {
    (check_axiom(*a, Axiom::transitivity).holds ? sat : vio) += 1;
  }
  CHECK(three.total == 27);
  CHECK(three.satisfying == sat);
  CHECK(three.violating == vio);
  CHECK(vio > 0);  // the two-step chain into a fixpoint violates it
  for (const SearchHit& hit : three.violating_examples) {
    CHECK(violates_axiom(MonounaryAlgebra(hit.succ), Axiom::transitivity,
                         hit.tuple));
  }
}
