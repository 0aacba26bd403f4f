#include "monoprop/congruence.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace monoprop {

Partition::Partition(std::vector<std::vector<Element>> blocks,
                     std::size_t universe)
    : blocks_(std::move(blocks)),
      block_of_(universe, std::numeric_limits<std::size_t>::max()) {
  constexpr auto unassigned = std::numeric_limits<std::size_t>::max();
  for (auto& block : blocks_) {
    if (block.empty()) throw std::invalid_argument("empty partition block");
    std::sort(block.begin(), block.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (Element e : blocks_[b]) {
      if (e >= universe) {
        throw std::invalid_argument("partition element out of range");
      }
      if (block_of_[e] != unassigned) {
        throw std::invalid_argument("partition blocks overlap");
      }
      block_of_[e] = b;
    }
  }
  for (std::size_t e = 0; e < universe; ++e) {
    if (block_of_[e] == unassigned) {
      throw std::invalid_argument("partition does not cover the universe");
    }
  }
}

bool is_congruence(const MonounaryAlgebra& a, const Partition& p) {
  if (p.universe() != a.size()) {
    throw std::invalid_argument("partition universe does not match algebra");
  }
  for (const auto& block : p.blocks()) {
    const std::size_t image = p.block_of(a.succ(block.front()));
    for (Element e : block) {
      if (p.block_of(a.succ(e)) != image) return false;
    }
  }
  return true;
}

std::vector<Partition> all_congruences(const MonounaryAlgebra& a) {
  const std::size_t n = a.size();
  std::vector<Partition> result;
  // Restricted growth strings: rgs[0] = 0 and rgs[i] <= max(rgs[0..i-1]) + 1.
  std::vector<std::size_t> rgs(n, 0);
  for (;;) {
    std::size_t block_count = 0;
    for (std::size_t v : rgs) block_count = std::max(block_count, v + 1);
    std::vector<std::vector<Element>> blocks(block_count);
    for (Element e = 0; e < n; ++e) blocks[rgs[e]].push_back(e);
    Partition p(std::move(blocks), n);
    if (is_congruence(a, p)) result.push_back(std::move(p));

    // Advance to the next restricted growth string.
    bool advanced = false;
    std::size_t pos = n;
    while (pos > 1) {
      --pos;
      std::size_t cap = 0;
      for (std::size_t i = 0; i < pos; ++i) cap = std::max(cap, rgs[i]);
      if (rgs[pos] <= cap) {
        ++rgs[pos];
        std::fill(rgs.begin() + pos + 1, rgs.end(), 0);
        advanced = true;
        break;
      }
      rgs[pos] = 0;
    }
    if (!advanced) break;
  }
  return result;
}

FactorAlgebra factor(const MonounaryAlgebra& a, const Partition& theta) {
  if (!is_congruence(a, theta)) {
    throw std::invalid_argument("partition is not a congruence");
  }
  const std::size_t blocks = theta.block_count();
  std::vector<Element> succ(blocks);
  std::vector<std::string> names(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    succ[b] = theta.block_of(a.succ(theta.blocks()[b].front()));
    std::string label = "{";
    for (std::size_t i = 0; i < theta.blocks()[b].size(); ++i) {
      if (i) label += ",";
      label += a.name(theta.blocks()[b][i]);
    }
    label += "}";
    names[b] = label;
  }
  FactorAlgebra f{MonounaryAlgebra(std::move(succ), std::move(names)), {}};
  f.projection.resize(a.size());
  for (Element e = 0; e < a.size(); ++e) f.projection[e] = theta.block_of(e);
  return f;
}

QuotientCheck quotient_compat_experiment(const MonounaryAlgebra& a,
                                         const Partition& theta, Element ea,
                                         Element eb, Element ec, Element ed) {
  const FactorAlgebra f = factor(a, theta);
  QuotientCheck out;
  out.in_algebra = proportion_holds(a, ea, eb, ec, ed);
  out.in_quotient =
      proportion_holds(f.algebra, f.projection[ea], f.projection[eb],
                       f.projection[ec], f.projection[ed]);
  out.cross = proportion_holds(a, f.algebra, ea, eb, f.projection[ea],
                               f.projection[eb]);
  return out;
}

}  // namespace monoprop
