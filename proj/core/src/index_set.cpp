#include "monoprop/index_set.hpp"

#include <numeric>
#include <stdexcept>

namespace monoprop {

IndexSet IndexSet::single(std::uint64_t value) {
  IndexSet s;
  s.kind_ = Kind::single;
  s.offset_ = value;
  return s;
}

IndexSet IndexSet::progression(std::uint64_t offset, std::uint64_t period) {
  if (period == 0) {
    throw std::invalid_argument("IndexSet progression requires period >= 1");
  }
  IndexSet s;
  s.kind_ = Kind::progression;
  s.offset_ = offset;
  s.period_ = period;
  return s;
}

bool IndexSet::contains(std::uint64_t k) const {
  switch (kind_) {
    case Kind::empty:
      return false;
    case Kind::single:
      return k == offset_;
    case Kind::progression:
      return k >= offset_ && (k - offset_) % period_ == 0;
  }
  return false;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

namespace {

// Least k >= lo with k = target (mod m), where target < m.
std::uint64_t raise_to(std::uint64_t target, std::uint64_t m, std::uint64_t lo) {
  if (target >= lo) return target;
  std::uint64_t steps = (lo - target + m - 1) / m;
  return target + steps * m;
}

IndexSet intersect_progressions(const IndexSet& a, const IndexSet& b) {
  const std::uint64_t p1 = a.period(), p2 = b.period();
  const std::uint64_t t1 = a.offset(), t2 = b.offset();
  const std::uint64_t g = std::gcd(p1, p2);
  const std::uint64_t hi = t1 > t2 ? t1 : t2;
  const std::uint64_t lo = t1 > t2 ? t2 : t1;
  if ((hi - lo) % g != 0) return IndexSet::none();
  const std::uint64_t l = std::lcm(p1, p2);
  // Walk lhs's residue class from its first element past max(t1, t2); the
  // common class shows up within one lcm window when the offsets are
  // compatible.
  std::uint64_t k = raise_to(t1 % p1, p1, hi);
  for (std::uint64_t i = 0; i <= l / p1; ++i, k += p1) {
    if (b.contains(k) && a.contains(k)) {
      return IndexSet::progression(k, l);
    }
  }
  return IndexSet::none();
}

}  // namespace

IndexSet intersect(const IndexSet& lhs, const IndexSet& rhs) {
  if (lhs.is_empty() || rhs.is_empty()) return IndexSet::none();
  if (lhs.is_single()) {
    return rhs.contains(lhs.value()) ? lhs : IndexSet::none();
  }
  if (rhs.is_single()) {
    return lhs.contains(rhs.value()) ? rhs : IndexSet::none();
  }
  return intersect_progressions(lhs, rhs);
}

std::string render_exponent(const IndexSet& set, char var) {
  switch (set.kind()) {
    case IndexSet::Kind::empty:
      return "<empty>";
    case IndexSet::Kind::single:
      return std::to_string(set.value());
    case IndexSet::Kind::progression: {
      std::string step =
          set.period() == 1 ? std::string(1, var)
                            : std::to_string(set.period()) + std::string(1, var);
      if (set.offset() == 0) return step;
      return std::to_string(set.offset()) + "+" + step;
    }
  }
  return "<empty>";
}

}  // namespace monoprop
