#pragma once

#include <stdexcept>
#include <string>

#include "monoprop/algebra.hpp"
#include "monoprop/congruence.hpp"

namespace monoprop {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Algebra file format: a JSON object with a mandatory "succ" array of
/// naturals below the size and an optional "names" array of the same length.
/// Throws ParseError on malformed input.
MonounaryAlgebra parse_algebra(const std::string& text);

/// Reads and parses an algebra file; throws ParseError when unreadable.
MonounaryAlgebra load_algebra(const std::string& path);

/// Compact JSON in the algebra file format; round-trips through
/// parse_algebra.
std::string algebra_to_json(const MonounaryAlgebra& a);

/// DOT digraph with one successor edge per element.
std::string to_dot(const MonounaryAlgebra& a);

/// Parses a partition given as blocks of element names separated by '|',
/// members separated by ',', e.g. "a,a'|b,b'|c|d". Throws ParseError on
/// unknown elements or a malformed block structure.
Partition parse_partition(const MonounaryAlgebra& a, const std::string& text);

std::string partition_to_string(const MonounaryAlgebra& a, const Partition& p);

}  // namespace monoprop
