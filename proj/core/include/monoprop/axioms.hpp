#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monoprop/algebra.hpp"
#include "monoprop/proportion.hpp"

namespace monoprop {

enum class Axiom {
  symmetry,
  inner_symmetry,
  reflexivity,
  determinism,
  central_permutation,
  strong_inner_reflexivity,
  strong_reflexivity,
  commutativity,
  transitivity,
  inner_transitivity,
  central_transitivity,
};

inline constexpr std::array<Axiom, 11> kAllAxioms = {
    Axiom::symmetry,           Axiom::inner_symmetry,
    Axiom::reflexivity,        Axiom::determinism,
    Axiom::central_permutation, Axiom::strong_inner_reflexivity,
    Axiom::strong_reflexivity, Axiom::commutativity,
    Axiom::transitivity,       Axiom::inner_transitivity,
    Axiom::central_transitivity,
};

std::string_view axiom_name(Axiom x);
std::optional<Axiom> axiom_from_name(std::string_view name);

/// Schema arity (length of the counterexample tuple): 2 for reflexivity,
/// determinism and commutativity; 3 for the strong reflexivity forms; 6 for
/// transitivity and inner transitivity; 4 otherwise.
std::size_t axiom_arity(Axiom x);

struct AxiomReport {
  Axiom axiom = Axiom::symmetry;
  bool holds = true;
  std::vector<Element> counterexample;  // schema-ordered; empty when holds
  std::string detail;                   // human-readable violation
};

/// Exhaustive quantifier evaluation of the schema over the algebra, scanning
/// tuples in lexicographic order; the first violation is reported.
AxiomReport check_axiom(const MonounaryAlgebra& a, Axiom x);
AxiomReport check_axiom(const ProportionTable& table, Axiom x);

/// Re-evaluates the schema on one tuple from scratch (no memo table): true
/// when the tuple genuinely violates the axiom.
bool violates_axiom(const MonounaryAlgebra& a, Axiom x,
                    const std::vector<Element>& tuple);

/// A counterexample algebra with labeled elements and the axiom it defeats.
struct Fixture {
  std::string name;
  Axiom axiom;
  MonounaryAlgebra algebra;
  std::map<std::string, Element> label;
};

/// The seven counterexample fixtures, one per failing axiom.
const std::vector<Fixture>& fixtures();
const Fixture& fixture(Axiom x);

struct SearchHit {
  std::size_t size = 0;
  std::vector<Element> succ;
  std::vector<Element> tuple;
};

/// Scans all algebras of size 1..n_max (canonical representatives only when
/// requested) in enumeration order and returns violations; `limit` of zero
/// collects everything.
std::vector<SearchHit> search_counterexamples(std::size_t n_max, Axiom x,
                                              bool canonical = false,
                                              std::size_t limit = 0);

struct ClassifyReport {
  std::size_t size = 0;
  bool canonical = false;
  std::uint64_t total = 0;
  std::uint64_t satisfying = 0;
  std::uint64_t violating = 0;
  std::vector<std::vector<Element>> satisfying_examples;
  std::vector<SearchHit> violating_examples;
};

/// Partitions the algebras of one size by whether transitivity holds.
ClassifyReport classify_transitivity(std::size_t n, bool canonical = false,
                                     std::size_t example_cap = 3);

}  // namespace monoprop
