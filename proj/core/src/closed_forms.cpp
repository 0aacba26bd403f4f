#include "monoprop/closed_forms.hpp"

#include <stdexcept>

namespace monoprop {

namespace {

std::int64_t diff(std::uint64_t x, std::uint64_t y) {
  return static_cast<std::int64_t>(x) - static_cast<std::int64_t>(y);
}

void require_bool(Element e) {
  if (e > 1) throw std::invalid_argument("boolean element must be 0 or 1");
}

ArrowVerdict decide_from_sets(const JustSet& u,
                              const std::vector<JustSet>& competitors,
                              std::size_t d_index) {
  ArrowVerdict v;
  const JustSet& vd = competitors[d_index];
  v.intersection = intersect(u, vd);
  if (u.empty() && vd.empty()) {
    v.holds = true;
    v.reason = ArrowReason::empty_union;
    return v;
  }
  if (v.intersection.empty()) {
    v.holds = false;
    v.reason = ArrowReason::empty_intersection;
    return v;
  }
  for (std::size_t i = 0; i < competitors.size(); ++i) {
    JustSet x = intersect(u, competitors[i]);
    if (subset(v.intersection, x) && !subset(x, v.intersection)) {
      v.holds = false;
      v.reason = ArrowReason::dominated;
      v.dominator = i;
      v.dominator_intersection = std::move(x);
      return v;
    }
  }
  v.holds = true;
  v.reason = ArrowReason::maximal;
  return v;
}

}  // namespace

bool nat_difference_holds(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                          std::uint64_t d) {
  return diff(a, b) == diff(c, d);
}

JustSet nat_just_set(std::uint64_t a, std::uint64_t b) {
  JustSet js;
  const std::uint64_t lo = a > b ? a - b : 0;
  for (std::uint64_t k = lo; k <= a; ++k) {
    js.add(IndexSet::single(k), IndexSet::single(k + b - a));
  }
  return js;
}

ArrowVerdict nat_arrow_holds(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                             std::uint64_t d) {
  const JustSet u = nat_just_set(a, b);
  // The only competitor whose intersection with u can be nonempty sits at
  // slope b - a from c; scan it together with d itself. Verdict dominator
  // indices refer to this candidate list.
  const std::int64_t forced = diff(c + b, a);
  const std::uint64_t cand =
      forced > 0 ? static_cast<std::uint64_t>(forced) : 0;
  std::vector<JustSet> competitors;
  competitors.push_back(nat_just_set(c, d));
  competitors.push_back(nat_just_set(c, cand));
  ArrowVerdict v = decide_from_sets(u, competitors, 0);
  if (v.dominator) *v.dominator = cand;
  return v;
}

ProportionVerdict nat_proportion_holds(std::uint64_t a, std::uint64_t b,
                                       std::uint64_t c, std::uint64_t d) {
  ProportionVerdict p;
  p.directions[0] = nat_arrow_holds(a, b, c, d);
  p.directions[1] = nat_arrow_holds(b, a, d, c);
  p.directions[2] = nat_arrow_holds(c, d, a, b);
  p.directions[3] = nat_arrow_holds(d, c, b, a);
  p.holds = p.directions[0].holds && p.directions[1].holds &&
            p.directions[2].holds && p.directions[3].holds;
  return p;
}

const MonounaryAlgebra& bool_algebra() {
  static const MonounaryAlgebra alg({1, 0}, {"0", "1"});
  return alg;
}

bool parity_holds(std::uint64_t a, std::uint64_t b, Element c, Element d) {
  require_bool(c);
  require_bool(d);
  const bool even_gap = (a % 2) == (b % 2);
  return (c == d) == even_gap;
}

ArrowVerdict parity_arrow_holds(std::uint64_t a, std::uint64_t b, Element c,
                                Element d) {
  require_bool(c);
  require_bool(d);
  const JustSet u = nat_just_set(a, b);
  std::vector<JustSet> competitors;
  competitors.push_back(just_set(bool_algebra(), c, 0));
  competitors.push_back(just_set(bool_algebra(), c, 1));
  return decide_from_sets(u, competitors, d);
}

ArrowVerdict parity_arrow_holds_flipped(Element c, Element d, std::uint64_t a,
                                        std::uint64_t b) {
  require_bool(c);
  require_bool(d);
  const JustSet u = just_set(bool_algebra(), c, d);
  std::vector<JustSet> competitors;
  competitors.push_back(nat_just_set(a, b));
  ArrowVerdict v = decide_from_sets(u, competitors, 0);
  if (v.dominator) *v.dominator = b;
  return v;
}

ProportionVerdict parity_proportion_holds(std::uint64_t a, std::uint64_t b,
                                          Element c, Element d) {
  ProportionVerdict p;
  p.directions[0] = parity_arrow_holds(a, b, c, d);
  p.directions[1] = parity_arrow_holds(b, a, d, c);
  p.directions[2] = parity_arrow_holds_flipped(c, d, a, b);
  p.directions[3] = parity_arrow_holds_flipped(d, c, b, a);
  p.holds = p.directions[0].holds && p.directions[1].holds &&
            p.directions[2].holds && p.directions[3].holds;
  return p;
}

}  // namespace monoprop
