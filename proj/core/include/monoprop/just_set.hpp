#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "monoprop/algebra.hpp"
#include "monoprop/index_set.hpp"

namespace monoprop {

/// Product of two exponent sets, denoting kset x lset as a subset of N^2.
/// Rects with an empty side are never stored.
struct Rect {
  IndexSet kset;
  IndexSet lset;

  friend bool operator==(const Rect&, const Rect&) = default;
};

/// A finite union of rects, exactly representing the (possibly infinite) set
/// of justifications {(k, l) : S^k(z) -> S^l(z) justifies a -> b}. The
/// representation is not minimized; all queries go through membership.
class JustSet {
 public:
  JustSet() = default;

  /// Adds kset x lset, dropping it when either side is empty.
  void add(IndexSet kset, IndexSet lset);

  bool member(std::uint64_t k, std::uint64_t l) const;
  bool empty() const { return rects_.empty(); }
  const std::vector<Rect>& rects() const { return rects_; }

  /// True when the denotation is a finite set (every rect is single x single).
  bool finite() const;
  /// The denotation as explicit pairs; valid only when finite().
  std::vector<std::pair<std::uint64_t, std::uint64_t>> explicit_pairs() const;

 private:
  std::vector<Rect> rects_;
};

/// All justifications of a -> b in A: for every origin o the rect
/// {k : S^k(o) = a} x {l : S^l(o) = b}.
JustSet just_set(const MonounaryAlgebra& a, Element from, Element to);

/// Exact intersection by pairwise rect intersection.
JustSet intersect(const JustSet& lhs, const JustSet& rhs);

/// Finitization bound for a family of justification sets: every coordinate
/// IndexSet P involved satisfies, whenever k - modulus > bound,
/// k in P  iff  k - modulus in P. Membership questions about the plane thus
/// reduce into the window [0, bound + modulus]^2; the closed upper edge
/// matters when a single value sits exactly at the bound.
struct Window {
  std::uint64_t bound = 0;    // max offset / single value seen
  std::uint64_t modulus = 1;  // lcm of progression periods (1 when none)
  std::uint64_t extent() const { return bound + modulus; }
};

Window window_bound(const std::vector<const JustSet*>& sets);
Window window_bound(const JustSet& a, const JustSet& b);

/// Denotation-level subset test, sound and complete: finite sets are compared
/// pointwise, otherwise membership is compared on the shared window.
bool subset(const JustSet& lhs, const JustSet& rhs);

/// Denotation equality (subset both ways).
bool equal(const JustSet& lhs, const JustSet& rhs);

/// Rendering in rewrite form, e.g. "{ S^(1+m)(z) -> z }"; the two coordinates
/// use independent variables m and n.
std::string render(const JustSet& set);
std::string render(const Rect& rect);

}  // namespace monoprop
