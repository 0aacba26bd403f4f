#include "monoprop/just_set.hpp"

#include <stdexcept>

namespace monoprop {

void JustSet::add(IndexSet kset, IndexSet lset) {
  if (kset.is_empty() || lset.is_empty()) return;
  rects_.push_back(Rect{kset, lset});
}

bool JustSet::member(std::uint64_t k, std::uint64_t l) const {
  for (const Rect& r : rects_) {
    if (r.kset.contains(k) && r.lset.contains(l)) return true;
  }
  return false;
}

bool JustSet::finite() const {
  for (const Rect& r : rects_) {
    if (!r.kset.is_single() || !r.lset.is_single()) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> JustSet::explicit_pairs()
    const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (const Rect& r : rects_) {
    if (!r.kset.is_single() || !r.lset.is_single()) {
      throw std::logic_error("explicit_pairs on an infinite justification set");
    }
    pairs.emplace_back(r.kset.value(), r.lset.value());
  }
  return pairs;
}

JustSet just_set(const MonounaryAlgebra& a, Element from, Element to) {
  JustSet js;
  for (Element o = 0; o < a.size(); ++o) {
    js.add(a.exponents(o, from), a.exponents(o, to));
  }
  return js;
}

JustSet intersect(const JustSet& lhs, const JustSet& rhs) {
  JustSet result;
  for (const Rect& r1 : lhs.rects()) {
    for (const Rect& r2 : rhs.rects()) {
      result.add(intersect(r1.kset, r2.kset), intersect(r1.lset, r2.lset));
    }
  }
  return result;
}

namespace {

void absorb(Window& w, const IndexSet& s) {
  switch (s.kind()) {
    case IndexSet::Kind::empty:
      break;
    case IndexSet::Kind::single:
      w.bound = std::max(w.bound, s.value());
      break;
    case IndexSet::Kind::progression:
      w.bound = std::max(w.bound, s.offset());
      w.modulus = lcm_u64(w.modulus, s.period());
      break;
  }
}

}  // namespace

Window window_bound(const std::vector<const JustSet*>& sets) {
  Window w;
  for (const JustSet* js : sets) {
    for (const Rect& r : js->rects()) {
      absorb(w, r.kset);
      absorb(w, r.lset);
    }
  }
  return w;
}

Window window_bound(const JustSet& a, const JustSet& b) {
  return window_bound({&a, &b});
}

bool subset(const JustSet& lhs, const JustSet& rhs) {
  if (lhs.empty()) return true;
  if (lhs.finite()) {
    for (const auto& [k, l] : lhs.explicit_pairs()) {
      if (!rhs.member(k, l)) return false;
    }
    return true;
  }
  if (rhs.finite()) return false;  // lhs is infinite
  const Window w = window_bound(lhs, rhs);
  // One past the nominal bound: a single value sitting exactly at the bound
  // is only cleared by the shift k -> k - modulus once k - modulus > bound.
  const std::uint64_t extent = w.extent() + 1;
  if (extent > 10000) {
    throw std::runtime_error("justification window too large to compare");
  }
  for (std::uint64_t k = 0; k < extent; ++k) {
    for (std::uint64_t l = 0; l < extent; ++l) {
      if (lhs.member(k, l) && !rhs.member(k, l)) return false;
    }
  }
  return true;
}

bool equal(const JustSet& lhs, const JustSet& rhs) {
  return subset(lhs, rhs) && subset(rhs, lhs);
}

namespace {

std::string render_side(const IndexSet& s, char var) {
  if (s.is_single()) {
    if (s.value() == 0) return "z";
    if (s.value() == 1) return "S(z)";
    return "S^" + std::to_string(s.value()) + "(z)";
  }
  std::string e = render_exponent(s, var);
  if (s.is_progression() && s.offset() == 0 && s.period() == 1) {
    return "S^" + e + "(z)";
  }
  return "S^(" + e + ")(z)";
}

}  // namespace

std::string render(const Rect& rect) {
  return render_side(rect.kset, 'm') + " -> " + render_side(rect.lset, 'n');
}

std::string render(const JustSet& set) {
  if (set.empty()) return "{}";
  std::string out = "{ ";
  bool first = true;
  for (const Rect& r : set.rects()) {
    if (!first) out += ", ";
    first = false;
    out += render(r);
  }
  out += " }";
  return out;
}

}  // namespace monoprop
