#include "monoprop/proportion.hpp"

#include <numeric>

namespace monoprop {

namespace {

ArrowVerdict decide_arrow(const JustSet& u, const MonounaryAlgebra& right,
                          Element c, Element d) {
  ArrowVerdict v;
  const JustSet vd = just_set(right, c, d);
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
  for (Element cand = 0; cand < right.size(); ++cand) {
    JustSet competitor = intersect(u, just_set(right, c, cand));
    if (subset(v.intersection, competitor) &&
        !subset(competitor, v.intersection)) {
      v.holds = false;
      v.reason = ArrowReason::dominated;
      v.dominator = cand;
      v.dominator_intersection = std::move(competitor);
      return v;
    }
  }
  v.holds = true;
  v.reason = ArrowReason::maximal;
  return v;
}

}  // namespace

ArrowVerdict arrow_holds(const MonounaryAlgebra& left,
                         const MonounaryAlgebra& right, Element a, Element b,
                         Element c, Element d) {
  return decide_arrow(just_set(left, a, b), right, c, d);
}

ArrowVerdict arrow_holds(const MonounaryAlgebra& a4, Element a, Element b,
                         Element c, Element d) {
  return arrow_holds(a4, a4, a, b, c, d);
}

ProportionVerdict proportion_holds(const MonounaryAlgebra& left,
                                   const MonounaryAlgebra& right, Element a,
                                   Element b, Element c, Element d) {
  ProportionVerdict p;
  p.directions[0] = arrow_holds(left, right, a, b, c, d);
  p.directions[1] = arrow_holds(left, right, b, a, d, c);
  p.directions[2] = arrow_holds(right, left, c, d, a, b);
  p.directions[3] = arrow_holds(right, left, d, c, b, a);
  p.holds = p.directions[0].holds && p.directions[1].holds &&
            p.directions[2].holds && p.directions[3].holds;
  return p;
}

ProportionVerdict proportion_holds(const MonounaryAlgebra& a4, Element a,
                                   Element b, Element c, Element d) {
  return proportion_holds(a4, a4, a, b, c, d);
}

std::vector<Element> solve_arrow(const MonounaryAlgebra& left,
                                 const MonounaryAlgebra& right, Element a,
                                 Element b, Element c) {
  std::vector<Element> out;
  const JustSet u = just_set(left, a, b);
  for (Element d = 0; d < right.size(); ++d) {
    if (decide_arrow(u, right, c, d).holds) out.push_back(d);
  }
  return out;
}

std::vector<Element> solve_proportion(const MonounaryAlgebra& left,
                                      const MonounaryAlgebra& right, Element a,
                                      Element b, Element c) {
  std::vector<Element> out;
  for (Element d = 0; d < right.size(); ++d) {
    if (proportion_holds(left, right, a, b, c, d).holds) out.push_back(d);
  }
  return out;
}

namespace {

// Explicit square bit grid over [0, extent)^2.
struct Grid {
  std::uint64_t extent = 0;
  std::vector<char> bits;

  explicit Grid(std::uint64_t e) : extent(e), bits(e * e, 0) {}
  void set(std::uint64_t k, std::uint64_t l) { bits[k * extent + l] = 1; }
  bool any() const {
    for (char b : bits)
      if (b) return true;
    return false;
  }
};

Grid intersect_grids(const Grid& a, const Grid& b) {
  Grid out(a.extent);
  for (std::size_t i = 0; i < out.bits.size(); ++i) {
    out.bits[i] = a.bits[i] && b.bits[i];
  }
  return out;
}

bool grid_subset(const Grid& a, const Grid& b) {
  for (std::size_t i = 0; i < a.bits.size(); ++i) {
    if (a.bits[i] && !b.bits[i]) return false;
  }
  return true;
}

// Justification pairs of from -> to with both exponents < extent, found by
// plain stepping from every origin.
Grid materialize(const MonounaryAlgebra& alg, Element from, Element to,
                 std::uint64_t extent) {
  Grid g(extent);
  std::vector<std::uint64_t> hits_from, hits_to;
  for (Element o = 0; o < alg.size(); ++o) {
    hits_from.clear();
    hits_to.clear();
    Element cur = o;
    for (std::uint64_t step = 0; step < extent; ++step) {
      if (cur == from) hits_from.push_back(step);
      if (cur == to) hits_to.push_back(step);
      cur = alg.succ(cur);
    }
    for (std::uint64_t k : hits_from) {
      for (std::uint64_t l : hits_to) g.set(k, l);
    }
  }
  return g;
}

// lcm of all cycle lengths, measured by stepping (size steps land on the
// cycle, then walk once around).
std::uint64_t cycle_modulus(const MonounaryAlgebra& alg) {
  std::uint64_t m = 1;
  for (Element o = 0; o < alg.size(); ++o) {
    Element cur = o;
    for (std::size_t i = 0; i < alg.size(); ++i) cur = alg.succ(cur);
    std::uint64_t period = 1;
    for (Element walk = alg.succ(cur); walk != cur; walk = alg.succ(walk)) {
      ++period;
    }
    m = std::lcm(m, period);
  }
  return m;
}

}  // namespace

ArrowVerdict brute_force_arrow(const MonounaryAlgebra& left,
                               const MonounaryAlgebra& right, Element a,
                               Element b, Element c, Element d) {
  // Window covering every set compared below: offsets of the symbolic
  // exponent sets stay below the algebra size, periods divide the cycle
  // lcm, and intersections shift offsets by less than one extra modulus.
  const std::uint64_t modulus =
      std::lcm(cycle_modulus(left), cycle_modulus(right));
  const std::uint64_t extent =
      std::max(left.size(), right.size()) + 2 * modulus;

  const Grid u = materialize(left, a, b, extent);
  const Grid vd = materialize(right, c, d, extent);
  const Grid w = intersect_grids(u, vd);

  ArrowVerdict verdict;
  if (!u.any() && !vd.any()) {
    verdict.holds = true;
    verdict.reason = ArrowReason::empty_union;
    return verdict;
  }
  if (!w.any()) {
    verdict.holds = false;
    verdict.reason = ArrowReason::empty_intersection;
    return verdict;
  }
  for (Element cand = 0; cand < right.size(); ++cand) {
    const Grid x = intersect_grids(u, materialize(right, c, cand, extent));
    if (grid_subset(w, x) && !grid_subset(x, w)) {
      verdict.holds = false;
      verdict.reason = ArrowReason::dominated;
      verdict.dominator = cand;
      return verdict;
    }
  }
  verdict.holds = true;
  verdict.reason = ArrowReason::maximal;
  return verdict;
}

ArrowVerdict brute_force_arrow(const MonounaryAlgebra& a4, Element a,
                               Element b, Element c, Element d) {
  return brute_force_arrow(a4, a4, a, b, c, d);
}

namespace {

// Bitset view of a justification set on the window [0, extent)^2.
std::vector<std::uint64_t> window_bits(const JustSet& js,
                                       std::uint64_t extent) {
  std::vector<std::uint64_t> bits((extent * extent + 63) / 64, 0);
  std::size_t pos = 0;
  for (std::uint64_t k = 0; k < extent; ++k) {
    for (std::uint64_t l = 0; l < extent; ++l, ++pos) {
      if (js.member(k, l)) bits[pos >> 6] |= std::uint64_t{1} << (pos & 63);
    }
  }
  return bits;
}

bool bits_subset(const std::vector<std::uint64_t>& a,
                 const std::vector<std::uint64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

}  // namespace

ProportionTable::ProportionTable(const MonounaryAlgebra& a)
    : algebra_(&a), n_(a.size()), arrows_(n_ * n_ * n_ * n_, false) {
  std::vector<JustSet> sets(n_ * n_);
  for (Element x = 0; x < n_; ++x) {
    for (Element y = 0; y < n_; ++y) {
      sets[x * n_ + y] = just_set(a, x, y);
    }
  }

  std::vector<JustSet> xs(n_);
  std::vector<std::vector<std::uint64_t>> mats(n_);
  for (Element ea = 0; ea < n_; ++ea) {
    for (Element eb = 0; eb < n_; ++eb) {
      const JustSet& u = sets[ea * n_ + eb];
      for (Element ec = 0; ec < n_; ++ec) {
        std::vector<const JustSet*> family;
        family.reserve(n_);
        for (Element cand = 0; cand < n_; ++cand) {
          xs[cand] = intersect(u, sets[ec * n_ + cand]);
          family.push_back(&xs[cand]);
        }
        // one past the bound, matching the subset window
        const std::uint64_t extent = window_bound(family).extent() + 1;
        for (Element cand = 0; cand < n_; ++cand) {
          mats[cand] = window_bits(xs[cand], extent);
        }
        for (Element ed = 0; ed < n_; ++ed) {
          bool holds;
          if (u.empty() && sets[ec * n_ + ed].empty()) {
            holds = true;
          } else if (xs[ed].empty()) {
            holds = false;
          } else {
            holds = true;
            for (Element cand = 0; cand < n_; ++cand) {
              if (bits_subset(mats[ed], mats[cand]) &&
                  !bits_subset(mats[cand], mats[ed])) {
                holds = false;
                break;
              }
            }
          }
          arrows_[((ea * n_ + eb) * n_ + ec) * n_ + ed] = holds;
        }
      }
    }
  }
}

}  // namespace monoprop
