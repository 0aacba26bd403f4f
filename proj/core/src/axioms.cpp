#include "monoprop/axioms.hpp"

#include <stdexcept>

namespace monoprop {

std::string_view axiom_name(Axiom x) {
  switch (x) {
    case Axiom::symmetry: return "symmetry";
    case Axiom::inner_symmetry: return "inner-symmetry";
    case Axiom::reflexivity: return "reflexivity";
    case Axiom::determinism: return "determinism";
    case Axiom::central_permutation: return "central-permutation";
    case Axiom::strong_inner_reflexivity: return "strong-inner-reflexivity";
    case Axiom::strong_reflexivity: return "strong-reflexivity";
    case Axiom::commutativity: return "commutativity";
    case Axiom::transitivity: return "transitivity";
    case Axiom::inner_transitivity: return "inner-transitivity";
    case Axiom::central_transitivity: return "central-transitivity";
  }
  return "?";
}

std::optional<Axiom> axiom_from_name(std::string_view name) {
  for (Axiom x : kAllAxioms) {
    if (axiom_name(x) == name) return x;
  }
  return std::nullopt;
}

std::size_t axiom_arity(Axiom x) {
  switch (x) {
    case Axiom::reflexivity:
    case Axiom::determinism:
    case Axiom::commutativity:
      return 2;
    case Axiom::strong_inner_reflexivity:
    case Axiom::strong_reflexivity:
      return 3;
    case Axiom::transitivity:
    case Axiom::inner_transitivity:
      return 6;
    default:
      return 4;
  }
}

namespace {

std::string prop_text(const MonounaryAlgebra& alg, Element a, Element b,
                      Element c, Element d) {
  return alg.name(a) + " : " + alg.name(b) + " :: " + alg.name(c) + " : " +
         alg.name(d);
}

// Evaluates one axiom schema against a proportion predicate. The predicate
// must behave like ProportionTable::proportion.
template <typename Prop>
AxiomReport run_schema(const MonounaryAlgebra& alg, Axiom x, std::size_t n,
                       Prop&& p) {
  AxiomReport report;
  report.axiom = x;
  report.holds = true;

  auto fail = [&](std::vector<Element> tuple, std::string detail) {
    report.holds = false;
    report.counterexample = std::move(tuple);
    report.detail = std::move(detail);
  };

  switch (x) {
    case Axiom::symmetry:
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          for (Element c = 0; c < n; ++c)
            for (Element d = 0; d < n; ++d)
              if (p(a, b, c, d) && !p(c, d, a, b)) {
                fail({a, b, c, d},
                     prop_text(alg, a, b, c, d) + " holds but " +
                         prop_text(alg, c, d, a, b) + " fails");
                return report;
              }
      break;
    case Axiom::inner_symmetry:
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          for (Element c = 0; c < n; ++c)
            for (Element d = 0; d < n; ++d)
              if (p(a, b, c, d) && !p(b, a, d, c)) {
                fail({a, b, c, d},
                     prop_text(alg, a, b, c, d) + " holds but " +
                         prop_text(alg, b, a, d, c) + " fails");
                return report;
              }
      break;
    case Axiom::reflexivity:
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          if (!p(a, b, a, b)) {
            fail({a, b}, prop_text(alg, a, b, a, b) + " fails");
            return report;
          }
      break;
    case Axiom::determinism:
      for (Element a = 0; a < n; ++a)
        for (Element d = 0; d < n; ++d)
          if (d != a && p(a, a, a, d)) {
            fail({a, d}, prop_text(alg, a, a, a, d) + " holds with " +
                             alg.name(d) + " != " + alg.name(a));
            return report;
          }
      break;
    case Axiom::central_permutation:
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          for (Element c = 0; c < n; ++c)
            for (Element d = 0; d < n; ++d)
              if (p(a, b, c, d) && !p(a, c, b, d)) {
                fail({a, b, c, d},
                     prop_text(alg, a, b, c, d) + " holds but " +
                         prop_text(alg, a, c, b, d) + " fails");
                return report;
              }
      break;
    case Axiom::strong_inner_reflexivity:
      for (Element a = 0; a < n; ++a)
        for (Element c = 0; c < n; ++c)
          for (Element d = 0; d < n; ++d)
            if (d != c && p(a, a, c, d)) {
              fail({a, c, d}, prop_text(alg, a, a, c, d) + " holds with " +
                                  alg.name(d) + " != " + alg.name(c));
              return report;
            }
      break;
    case Axiom::strong_reflexivity:
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          for (Element d = 0; d < n; ++d)
            if (d != b && p(a, b, a, d)) {
              fail({a, b, d}, prop_text(alg, a, b, a, d) + " holds with " +
                                  alg.name(d) + " != " + alg.name(b));
              return report;
            }
      break;
    case Axiom::commutativity:
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          if (!p(a, b, b, a)) {
            fail({a, b}, prop_text(alg, a, b, b, a) + " fails");
            return report;
          }
      break;
    case Axiom::transitivity:
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          for (Element c = 0; c < n; ++c)
            for (Element d = 0; d < n; ++d) {
              if (!p(a, b, c, d)) continue;
              for (Element e = 0; e < n; ++e)
                for (Element f = 0; f < n; ++f)
                  if (p(c, d, e, f) && !p(a, b, e, f)) {
                    fail({a, b, c, d, e, f},
                         prop_text(alg, a, b, c, d) + " and " +
                             prop_text(alg, c, d, e, f) + " hold but " +
                             prop_text(alg, a, b, e, f) + " fails");
                    return report;
                  }
            }
      break;
    case Axiom::inner_transitivity:
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          for (Element c = 0; c < n; ++c)
            for (Element d = 0; d < n; ++d) {
              if (!p(a, b, c, d)) continue;
              for (Element e = 0; e < n; ++e)
                for (Element f = 0; f < n; ++f)
                  if (p(b, e, d, f) && !p(a, e, c, f)) {
                    fail({a, b, c, d, e, f},
                         prop_text(alg, a, b, c, d) + " and " +
                             prop_text(alg, b, e, d, f) + " hold but " +
                             prop_text(alg, a, e, c, f) + " fails");
                    return report;
                  }
            }
      break;
    case Axiom::central_transitivity:
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          for (Element c = 0; c < n; ++c) {
            if (!p(a, b, b, c)) continue;
            for (Element d = 0; d < n; ++d)
              if (p(b, c, c, d) && !p(a, b, c, d)) {
                fail({a, b, c, d},
                     prop_text(alg, a, b, b, c) + " and " +
                         prop_text(alg, b, c, c, d) + " hold but " +
                         prop_text(alg, a, b, c, d) + " fails");
                return report;
              }
          }
      break;
  }
  return report;
}

}  // namespace

AxiomReport check_axiom(const ProportionTable& table, Axiom x) {
  const MonounaryAlgebra& alg = table.algebra();
  return run_schema(alg, x, alg.size(),
                    [&](Element a, Element b, Element c, Element d) {
                      return table.proportion(a, b, c, d);
                    });
}

AxiomReport check_axiom(const MonounaryAlgebra& a, Axiom x) {
  ProportionTable table(a);
  return check_axiom(table, x);
}

bool violates_axiom(const MonounaryAlgebra& a, Axiom x,
                    const std::vector<Element>& t) {
  if (t.size() != axiom_arity(x)) {
    throw std::invalid_argument("counterexample tuple has wrong arity");
  }
  auto p = [&](Element w, Element xx, Element y, Element z) {
    return proportion_holds(a, w, xx, y, z).holds;
  };
  switch (x) {
    case Axiom::symmetry:
      return p(t[0], t[1], t[2], t[3]) && !p(t[2], t[3], t[0], t[1]);
    case Axiom::inner_symmetry:
      return p(t[0], t[1], t[2], t[3]) && !p(t[1], t[0], t[3], t[2]);
    case Axiom::reflexivity:
      return !p(t[0], t[1], t[0], t[1]);
    case Axiom::determinism:
      return t[1] != t[0] && p(t[0], t[0], t[0], t[1]);
    case Axiom::central_permutation:
      return p(t[0], t[1], t[2], t[3]) && !p(t[0], t[2], t[1], t[3]);
    case Axiom::strong_inner_reflexivity:
      return t[2] != t[1] && p(t[0], t[0], t[1], t[2]);
    case Axiom::strong_reflexivity:
      return t[2] != t[1] && p(t[0], t[1], t[0], t[2]);
    case Axiom::commutativity:
      return !p(t[0], t[1], t[1], t[0]);
    case Axiom::transitivity:
      return p(t[0], t[1], t[2], t[3]) && p(t[2], t[3], t[4], t[5]) &&
             !p(t[0], t[1], t[4], t[5]);
    case Axiom::inner_transitivity:
      return p(t[0], t[1], t[2], t[3]) && p(t[1], t[4], t[3], t[5]) &&
             !p(t[0], t[4], t[2], t[5]);
    case Axiom::central_transitivity:
      return p(t[0], t[1], t[1], t[2]) && p(t[1], t[2], t[2], t[3]) &&
             !p(t[0], t[1], t[2], t[3]);
  }
  return false;
}

namespace {

Fixture make_fixture(std::string name, Axiom x, std::vector<Element> succ,
                     std::vector<std::string> names) {
  Fixture f{std::move(name), x, MonounaryAlgebra(std::move(succ), names), {}};
  for (Element e = 0; e < names.size(); ++e) f.label[names[e]] = e;
  return f;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> fs;
    // a feeds c; b, c, d are fixpoints.
    fs.push_back(make_fixture("central-permutation", Axiom::central_permutation,
                              {2, 1, 2, 3}, {"a", "b", "c", "d"}));
    // a is a fixpoint, c and d swap.
    fs.push_back(make_fixture("strong-inner-reflexivity",
                              Axiom::strong_inner_reflexivity, {0, 2, 1},
                              {"a", "c", "d"}));
    // three fixpoints.
    fs.push_back(make_fixture("strong-reflexivity", Axiom::strong_reflexivity,
                              {0, 1, 2}, {"a", "b", "d"}));
    // smallest commutativity failure: b feeds the fixpoint a.
    fs.push_back(make_fixture("commutativity", Axiom::commutativity, {0, 0},
                              {"a", "b"}));
    // three components: chain of depth 2 into a fixpoint, depth 1, and a
    // fixpoint with a two-branch tree (one branch of depth 2).
    fs.push_back(make_fixture(
        "transitivity", Axiom::transitivity, {0, 0, 1, 3, 3, 5, 5, 5, 7},
        {"a", "b", "b*", "c", "d", "e", "f", "f'", "f*"}));
    // a feeds e; b, e, c, d, f are fixpoints.
    fs.push_back(make_fixture("inner-transitivity", Axiom::inner_transitivity,
                              {2, 1, 2, 3, 4, 5},
                              {"a", "b", "e", "c", "d", "f"}));
    // chain d -> c -> b -> a (fixpoint) with a side branch d' -> c fed by d*.
    fs.push_back(make_fixture("central-transitivity",
                              Axiom::central_transitivity, {0, 0, 1, 2, 2, 4},
                              {"a", "b", "c", "d", "d'", "d*"}));
    return fs;
  }();
  return all;
}

const Fixture& fixture(Axiom x) {
  for (const Fixture& f : fixtures()) {
    if (f.axiom == x) return f;
  }
  throw std::invalid_argument("no fixture for axiom " +
                              std::string(axiom_name(x)));
}

std::vector<SearchHit> search_counterexamples(std::size_t n_max, Axiom x,
                                              bool canonical,
                                              std::size_t limit) {
  std::vector<SearchHit> hits;
  for (std::size_t n = 1; n <= n_max; ++n) {
    AlgebraEnumerator en(n, canonical);
    while (auto a = en.next()) {
      AxiomReport report = check_axiom(*a, x);
      if (!report.holds) {
        hits.push_back(SearchHit{n, a->succ_table(), report.counterexample});
        if (limit != 0 && hits.size() >= limit) return hits;
      }
    }
  }
  return hits;
}

ClassifyReport classify_transitivity(std::size_t n, bool canonical,
                                     std::size_t example_cap) {
  ClassifyReport report;
  report.size = n;
  report.canonical = canonical;
  AlgebraEnumerator en(n, canonical);
  while (auto a = en.next()) {
    ++report.total;
    AxiomReport check = check_axiom(*a, Axiom::transitivity);
    if (check.holds) {
      ++report.satisfying;
      if (report.satisfying_examples.size() < example_cap) {
        report.satisfying_examples.push_back(a->succ_table());
      }
    } else {
      ++report.violating;
      if (report.violating_examples.size() < example_cap) {
        report.violating_examples.push_back(
            SearchHit{n, a->succ_table(), check.counterexample});
      }
    }
  }
  return report;
}

}  // namespace monoprop
