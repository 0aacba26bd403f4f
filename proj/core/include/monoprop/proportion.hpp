#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "monoprop/algebra.hpp"
#include "monoprop/just_set.hpp"

namespace monoprop {

enum class ArrowReason {
  empty_union,         // both justification sets empty: holds degenerately
  maximal,             // nonempty shared set, no strictly larger competitor
  empty_intersection,  // nothing shared although something exists: fails
  dominated,           // a competitor right endpoint strictly dominates: fails
};

/// Decision for one directed query a -> b |> c -> d, with the shared
/// justification set and, on domination, the smallest competitor endpoint
/// together with its strictly larger set.
struct ArrowVerdict {
  bool holds = false;
  ArrowReason reason = ArrowReason::empty_intersection;
  JustSet intersection;
  std::optional<Element> dominator;
  JustSet dominator_intersection;
};

/// a -> b |> c -> d with (a, b) in `left` and (c, d) in `right`: holds when
/// both justification sets are empty, or when their intersection is nonempty
/// and no d' in `right` yields a strictly larger intersection.
ArrowVerdict arrow_holds(const MonounaryAlgebra& left,
                         const MonounaryAlgebra& right, Element a, Element b,
                         Element c, Element d);
ArrowVerdict arrow_holds(const MonounaryAlgebra& a4, Element a, Element b,
                         Element c, Element d);

/// The four directed queries making up a : b :: c : d, in the order
/// a->b |> c->d,  b->a |> d->c,  c->d |> a->b,  d->c |> b->a.
struct ProportionVerdict {
  bool holds = false;
  std::array<ArrowVerdict, 4> directions;
};

ProportionVerdict proportion_holds(const MonounaryAlgebra& left,
                                   const MonounaryAlgebra& right, Element a,
                                   Element b, Element c, Element d);
ProportionVerdict proportion_holds(const MonounaryAlgebra& a4, Element a,
                                   Element b, Element c, Element d);

/// All d in `right` for which a -> b |> c -> d holds.
std::vector<Element> solve_arrow(const MonounaryAlgebra& left,
                                 const MonounaryAlgebra& right, Element a,
                                 Element b, Element c);
/// All d in `right` for which a : b :: c : d holds.
std::vector<Element> solve_proportion(const MonounaryAlgebra& left,
                                      const MonounaryAlgebra& right, Element a,
                                      Element b, Element c);

/// Independent oracle: materializes all justification pairs below the window
/// bound by directly stepping the successor map (no symbolic exponent sets)
/// and runs the same emptiness/maximality logic on the explicit finite sets.
/// Agrees with arrow_holds on .holds for every query.
ArrowVerdict brute_force_arrow(const MonounaryAlgebra& left,
                               const MonounaryAlgebra& right, Element a,
                               Element b, Element c, Element d);
ArrowVerdict brute_force_arrow(const MonounaryAlgebra& a4, Element a,
                               Element b, Element c, Element d);

/// Memoized arrow and proportion bits for one algebra; the 6-variable axiom
/// scans need every quadruple, so all |A|^4 arrow decisions are precomputed
/// with shared windows per (a, b, c) group.
class ProportionTable {
 public:
  explicit ProportionTable(const MonounaryAlgebra& a);

  const MonounaryAlgebra& algebra() const { return *algebra_; }
  bool arrow(Element a, Element b, Element c, Element d) const {
    return arrows_[((a * n_ + b) * n_ + c) * n_ + d];
  }
  bool proportion(Element a, Element b, Element c, Element d) const {
    return arrow(a, b, c, d) && arrow(b, a, d, c) && arrow(c, d, a, b) &&
           arrow(d, c, b, a);
  }

 private:
  const MonounaryAlgebra* algebra_;
  std::size_t n_;
  std::vector<bool> arrows_;
};

}  // namespace monoprop
