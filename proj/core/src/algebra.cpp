#include "monoprop/algebra.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace monoprop {

MonounaryAlgebra::MonounaryAlgebra(std::vector<Element> succ,
                                   std::vector<std::string> names)
    : succ_(std::move(succ)), names_(std::move(names)) {
  if (succ_.empty()) {
    throw std::invalid_argument("algebra needs at least one element");
  }
  for (Element e : succ_) {
    if (e >= succ_.size()) {
      throw std::invalid_argument("successor entry " + std::to_string(e) +
                                  " out of range for size " +
                                  std::to_string(succ_.size()));
    }
  }
  if (!names_.empty()) {
    if (names_.size() != succ_.size()) {
      throw std::invalid_argument("name table length does not match size");
    }
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
      if (!seen.insert(n).second) {
        throw std::invalid_argument("duplicate element name: " + n);
      }
    }
  }
}

std::string MonounaryAlgebra::name(Element e) const {
  if (e < names_.size()) return names_[e];
  return std::to_string(e);
}

std::optional<Element> MonounaryAlgebra::element_by_name(
    const std::string& token) const {
  for (Element e = 0; e < names_.size(); ++e) {
    if (names_[e] == token) return e;
  }
  if (token.empty()) return std::nullopt;
  Element value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + static_cast<Element>(c - '0');
    if (value >= size()) return std::nullopt;
  }
  return value;
}

OrbitInfo MonounaryAlgebra::orbit(Element o) const {
  constexpr auto unseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> step_seen(size(), unseen);
  Element cur = o;
  std::size_t step = 0;
  while (step_seen[cur] == unseen) {
    step_seen[cur] = step++;
    cur = succ_[cur];
  }
  OrbitInfo info;
  info.tail = step_seen[cur];
  info.cycle = step - step_seen[cur];
  info.entry = cur;
  return info;
}

Element MonounaryAlgebra::iterate(Element o, std::uint64_t k) const {
  std::uint64_t steps = k;
  if (k > size()) {
    const OrbitInfo info = orbit(o);
    if (k > info.tail) {
      steps = info.tail + (k - info.tail) % info.cycle;
    }
  }
  Element cur = o;
  for (std::uint64_t i = 0; i < steps; ++i) cur = succ_[cur];
  return cur;
}

IndexSet MonounaryAlgebra::exponents(Element o, Element x) const {
  const OrbitInfo info = orbit(o);
  Element cur = o;
  for (std::size_t step = 0; step < info.tail + info.cycle; ++step) {
    if (cur == x) {
      return step < info.tail ? IndexSet::single(step)
                              : IndexSet::progression(step, info.cycle);
    }
    cur = succ_[cur];
  }
  return IndexSet::none();
}

AlgebraEnumerator::AlgebraEnumerator(std::size_t n, bool canonical_only)
    : n_(n), canonical_(canonical_only), succ_(n, 0) {
  if (n == 0) throw std::invalid_argument("enumeration needs size >= 1");
}

bool AlgebraEnumerator::advance() {
  std::size_t pos = n_;
  while (pos > 0) {
    --pos;
    if (++succ_[pos] < n_) return true;
    succ_[pos] = 0;
  }
  return false;
}

std::optional<MonounaryAlgebra> AlgebraEnumerator::next() {
  if (done_) return std::nullopt;
  for (;;) {
    if (fresh_) {
      fresh_ = false;
    } else if (!advance()) {
      done_ = true;
      return std::nullopt;
    }
    MonounaryAlgebra a(succ_);
    if (!canonical_ || is_canonical(a)) return a;
  }
}

std::vector<Element> canonical_form(const MonounaryAlgebra& a) {
  const std::size_t n = a.size();
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Element> best = a.succ_table();
  std::vector<Element> relabeled(n);
  do {
    for (std::size_t i = 0; i < n; ++i) {
      relabeled[perm[i]] = perm[a.succ(i)];
    }
    if (relabeled < best) best = relabeled;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool is_canonical(const MonounaryAlgebra& a) {
  return canonical_form(a) == a.succ_table();
}

std::uint64_t total_algebras(std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= n;
  return total;
}

}  // namespace monoprop
