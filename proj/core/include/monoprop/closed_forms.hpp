#pragma once

#include <cstdint>

#include "monoprop/algebra.hpp"
#include "monoprop/just_set.hpp"
#include "monoprop/proportion.hpp"

namespace monoprop {

/// a : b :: c : d over the naturals with successor reduces to equality of
/// signed differences.
bool nat_difference_holds(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                          std::uint64_t d);

/// Justifications of a -> b over the naturals with successor: the finite set
/// {(k, k + b - a) : max(0, a - b) <= k <= a}, stored as single-point rects.
JustSet nat_just_set(std::uint64_t a, std::uint64_t b);

/// Arrow decision over the infinite algebra. Justification sets over the
/// naturals are never empty, so the degenerate clause never applies; the
/// maximality scan is finite because a competitor intersection is nonempty
/// only for the single right endpoint at distance b - a from c.
ArrowVerdict nat_arrow_holds(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                             std::uint64_t d);

/// Four-directional composition of nat_arrow_holds.
ProportionVerdict nat_proportion_holds(std::uint64_t a, std::uint64_t b,
                                       std::uint64_t c, std::uint64_t d);

/// The two-element negation algebra 0 <-> 1.
const MonounaryAlgebra& bool_algebra();

/// Closed form for proportions across the ordered pair (naturals, booleans):
/// (c = d and b - a even) or (c != d and b - a odd). c, d must be 0 or 1.
bool parity_holds(std::uint64_t a, std::uint64_t b, Element c, Element d);

/// Structural arrow decision for naturals-pair |> boolean-pair: the finite
/// justification set of a -> b meets the symbolic one of c -> d, with the
/// maximality scan over both boolean endpoints.
ArrowVerdict parity_arrow_holds(std::uint64_t a, std::uint64_t b, Element c,
                                Element d);

/// The flipped direction boolean-pair |> naturals-pair. Competitor right
/// endpoints other than b itself give intersections with a different slope
/// l - k, hence disjoint from the shared set and never dominating, so the
/// scan over the infinite algebra collapses to {b}.
ArrowVerdict parity_arrow_holds_flipped(Element c, Element d, std::uint64_t a,
                                        std::uint64_t b);

/// Four-directional decision across the ordered pair; agrees with
/// parity_holds.
ProportionVerdict parity_proportion_holds(std::uint64_t a, std::uint64_t b,
                                          Element c, Element d);

}  // namespace monoprop
