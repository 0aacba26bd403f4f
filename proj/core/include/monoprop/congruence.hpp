#pragma once

#include <cstdint>
#include <vector>

#include "monoprop/algebra.hpp"
#include "monoprop/proportion.hpp"

namespace monoprop {

/// Disjoint nonempty blocks covering {0, ..., universe-1}. Blocks keep the
/// order of their smallest members; members inside a block are sorted.
class Partition {
 public:
  /// Throws std::invalid_argument unless the blocks partition the universe.
  Partition(std::vector<std::vector<Element>> blocks, std::size_t universe);

  const std::vector<std::vector<Element>>& blocks() const { return blocks_; }
  std::size_t block_of(Element e) const { return block_of_[e]; }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t universe() const { return block_of_.size(); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::vector<Element>> blocks_;
  std::vector<std::size_t> block_of_;
};

/// Compatibility with the successor map: related elements have related
/// successors, i.e. each block's image lands inside one block.
bool is_congruence(const MonounaryAlgebra& a, const Partition& p);

/// Every congruence of the algebra exactly once, generated by
/// restricted-growth-string partition enumeration and filtered by
/// is_congruence. Exponential in the size; intended for small algebras.
std::vector<Partition> all_congruences(const MonounaryAlgebra& a);

/// The quotient algebra: one element per block, successor induced by the
/// original map, block names assembled from member names as "{x,y}".
struct FactorAlgebra {
  MonounaryAlgebra algebra;
  std::vector<std::size_t> projection;  // element -> block element
};

/// Throws std::invalid_argument when the partition is not a congruence.
FactorAlgebra factor(const MonounaryAlgebra& a, const Partition& theta);

/// The three-way compatibility experiment between a proportion and a
/// quotient: the quadruple inside the algebra, its projection inside the
/// factor algebra, and the pair (a, b) against its own projection across the
/// ordered pair (algebra, factor algebra).
struct QuotientCheck {
  ProportionVerdict in_algebra;
  ProportionVerdict in_quotient;
  ProportionVerdict cross;
};

QuotientCheck quotient_compat_experiment(const MonounaryAlgebra& a,
                                         const Partition& theta, Element ea,
                                         Element eb, Element ec, Element ed);

}  // namespace monoprop
