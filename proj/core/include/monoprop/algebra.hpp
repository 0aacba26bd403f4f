#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoprop/index_set.hpp"

namespace monoprop {

/// Elements are dense 0-based indices into the universe; display names are
/// cosmetic and live in the algebra.
using Element = std::size_t;

/// Rho-shape of a forward orbit: `tail` steps lead from the start to the
/// first element on a cycle of length `cycle`.
struct OrbitInfo {
  std::size_t tail = 0;
  std::size_t cycle = 1;
  Element entry = 0;

  friend bool operator==(const OrbitInfo&, const OrbitInfo&) = default;
};

/// A finite algebra with one total unary operation, i.e. a functional graph.
/// Immutable after construction and safe to share across threads.
class MonounaryAlgebra {
 public:
  /// Throws std::invalid_argument on an empty universe, an out-of-range
  /// successor entry, a name table of the wrong length, or duplicate names.
  explicit MonounaryAlgebra(std::vector<Element> succ,
                            std::vector<std::string> names = {});

  std::size_t size() const { return succ_.size(); }
  Element succ(Element e) const { return succ_[e]; }
  const std::vector<Element>& succ_table() const { return succ_; }

  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  /// Display name: the stored name, or the decimal index when unnamed.
  std::string name(Element e) const;
  /// Resolves a display name, falling back to a decimal index.
  std::optional<Element> element_by_name(const std::string& token) const;

  /// Minimal tail/cycle decomposition of the forward orbit of `o`.
  OrbitInfo orbit(Element o) const;

  /// S^k(o); k may be astronomically large, the walk is reduced modulo the
  /// cycle length once past the tail.
  Element iterate(Element o, std::uint64_t k) const;

  /// Exactly {k : S^k(o) = x}: empty, a single tail position, or an
  /// arithmetic progression with period equal to the cycle length of o.
  IndexSet exponents(Element o, Element x) const;

  friend bool operator==(const MonounaryAlgebra&, const MonounaryAlgebra&) = default;

 private:
  std::vector<Element> succ_;
  std::vector<std::string> names_;
};

/// Streams all n^n successor tables of size `n` in lexicographic order;
/// with `canonical_only` set, only the least table of each isomorphism class
/// (under relabeling) is produced.
class AlgebraEnumerator {
 public:
  explicit AlgebraEnumerator(std::size_t n, bool canonical_only = false);
  std::optional<MonounaryAlgebra> next();

 private:
  bool advance();

  std::size_t n_;
  bool canonical_;
  bool fresh_ = true;
  bool done_ = false;
  std::vector<Element> succ_;
};

/// Lexicographically least successor table obtainable by relabeling the
/// universe. Exact but factorial in the size; intended for small algebras.
std::vector<Element> canonical_form(const MonounaryAlgebra& a);
bool is_canonical(const MonounaryAlgebra& a);

std::uint64_t total_algebras(std::size_t n);  // n^n

}  // namespace monoprop
