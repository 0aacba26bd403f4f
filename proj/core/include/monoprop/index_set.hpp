#pragma once

#include <cstdint>
#include <string>

namespace monoprop {

/// A set of natural-number exponents in one of three shapes: empty, a single
/// value, or an upward-infinite arithmetic progression {offset, offset+period,
/// offset+2*period, ...}. These are exactly the shapes the set
/// {k : S^k(o) = x} can take in a functional graph, so no other shape is
/// representable on purpose.
class IndexSet {
 public:
  enum class Kind { empty, single, progression };

  IndexSet() = default;  // empty

  static IndexSet none() { return IndexSet{}; }
  static IndexSet single(std::uint64_t value);
  /// Progression {offset + i*period : i >= 0}. Throws std::invalid_argument
  /// on period == 0; a would-be degenerate progression must be encoded as
  /// single().
  static IndexSet progression(std::uint64_t offset, std::uint64_t period);

  Kind kind() const { return kind_; }
  bool is_empty() const { return kind_ == Kind::empty; }
  bool is_single() const { return kind_ == Kind::single; }
  bool is_progression() const { return kind_ == Kind::progression; }

  /// Single value; valid only for Kind::single.
  std::uint64_t value() const { return offset_; }
  /// First element of a progression; valid only for Kind::progression.
  std::uint64_t offset() const { return offset_; }
  /// Step of a progression; valid only for Kind::progression.
  std::uint64_t period() const { return period_; }

  bool contains(std::uint64_t k) const;

  /// Least element (single value or progression offset). Valid when nonempty.
  std::uint64_t least() const { return offset_; }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  Kind kind_ = Kind::empty;
  std::uint64_t offset_ = 0;
  std::uint64_t period_ = 0;
};

/// Exact intersection. Progressions are intersected by solving the pair of
/// congruences k = o1 (mod p1), k = o2 (mod p2): solvable iff the offsets
/// agree modulo gcd(p1, p2), and then the result is the progression with
/// period lcm(p1, p2) starting at the least common element.
IndexSet intersect(const IndexSet& lhs, const IndexSet& rhs);

/// Renders the exponent as "3", "m", "1+m", "2m" or "1+2m", with `var` as the
/// free variable name.
std::string render_exponent(const IndexSet& set, char var);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace monoprop
