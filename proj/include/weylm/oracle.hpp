#pragma once

// Brute-force reference implementations for differential testing.
//
// Only element arithmetic (identity, simple reflections, general multiplication) is shared
// with the main modules. Lengths are Cayley-graph distances, inverses come from reversed
// words, and the Bruhat order is the transitive closure of covering relations by reflections.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <vector>

#include "weylm/error.hpp"
#include "weylm/weyl.hpp"

namespace weylm::oracle {

struct OracleLimits {
  std::size_t max_elements = 100'000;
  /// The Bruhat relation is |W|^2 bits.
  std::size_t max_relation_elements = 10'000;
};

/// Breadth-first enumeration of the Cayley graph. elements[k] has length depth[k] and word
/// words[k]; elements appear in non-decreasing depth.
struct CayleyEnumeration {
  std::vector<WeylElement> elements;
  std::vector<int> depth;
  std::vector<Word> words;
  std::unordered_map<WeylElement, std::size_t> index;

  std::size_t size() const noexcept { return elements.size(); }
};

inline CayleyEnumeration enumerate_group(const RootSystem& rs, const OracleLimits& limits = {}) {
  CayleyEnumeration g;
  std::vector<WeylElement> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(simple_reflection(rs, i));
  g.elements.push_back(identity(rs));
  g.depth.push_back(0);
  g.words.emplace_back();
  g.index.emplace(g.elements.front(), 0);
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    for (int i = 0; i < rs.rank(); ++i) {
      WeylElement next = multiply(rs, g.elements[head], gens[i]);
      if (g.index.contains(next)) continue;
      if (g.elements.size() >= limits.max_elements) throw EnumerationCapExceeded(limits.max_elements, g.elements.size() + 1);
      g.index.emplace(next, g.elements.size());
      g.elements.push_back(next);
      g.depth.push_back(g.depth[head] + 1);
      Word w = g.words[head];
      w.push_back(i);
      g.words.push_back(std::move(w));
    }
  }
  return g;
}

namespace detail {

inline WeylElement product_of(const RootSystem& rs, const Word& word) {
  WeylElement w = identity(rs);
  for (int i : word) w = multiply(rs, w, simple_reflection(rs, i));
  return w;
}

inline WeylElement inverse_by_word(const RootSystem& rs, const Word& word) {
  Word reversed(word.rbegin(), word.rend());
  return product_of(rs, reversed);
}

}  // namespace detail

/// The full Bruhat relation: leq(u, v) for element indices of the enumeration.
class BruhatRelation {
 public:
  BruhatRelation(CayleyEnumeration group, std::vector<std::uint64_t> bits)
      : group_(std::move(group)), words_((group_.size() + 63) / 64), bits_(std::move(bits)) {}

  const CayleyEnumeration& group() const noexcept { return group_; }
  bool leq(std::size_t u, std::size_t v) const { return (bits_[v * words_ + u / 64] >> (u % 64)) & 1u; }
  bool leq(const WeylElement& u, const WeylElement& v) const { return leq(group_.index.at(u), group_.index.at(v)); }

 private:
  CayleyEnumeration group_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Covering relations u < ut (t a reflection, depth one more), closed transitively.
inline BruhatRelation bruhat_oracle(const RootSystem& rs, const OracleLimits& limits = {}) {
  OracleLimits relation_limits = limits;
  relation_limits.max_elements = std::min(limits.max_elements, limits.max_relation_elements);
  CayleyEnumeration g = enumerate_group(rs, relation_limits);
  const std::size_t n = g.size();

  // Reflections: w s w^{-1} over all (w, s), deduplicated.
  std::set<WeylElement> reflection_set;
  for (std::size_t k = 0; k < n; ++k) {
    const WeylElement w_inv = detail::inverse_by_word(rs, g.words[k]);
    for (int i = 0; i < rs.rank(); ++i) {
      reflection_set.insert(multiply(rs, multiply(rs, g.elements[k], simple_reflection(rs, i)), w_inv));
    }
  }
  const std::vector<WeylElement> reflections(reflection_set.begin(), reflection_set.end());

  std::vector<std::vector<std::size_t>> covered_by(n);  // v -> {u : u covered by v}
  for (std::size_t u = 0; u < n; ++u) {
    for (const auto& t : reflections) {
      const std::size_t v = g.index.at(multiply(rs, g.elements[u], t));
      if (g.depth[v] == g.depth[u] + 1) covered_by[v].push_back(u);
    }
  }

  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> bits(n * words, 0);
  for (std::size_t v = 0; v < n; ++v) {  // BFS order is depth order
    bits[v * words + v / 64] |= std::uint64_t{1} << (v % 64);
    for (std::size_t u : covered_by[v]) {
      for (std::size_t w = 0; w < words; ++w) bits[v * words + w] |= bits[u * words + w];
    }
  }
  return BruhatRelation(std::move(g), std::move(bits));
}

/// Conjugacy classes by conjugating each unassigned element by every group element.
/// Each class is sorted by element order; classes are sorted by their first element.
inline std::vector<std::vector<WeylElement>> classes_oracle(const RootSystem& rs, const OracleLimits& limits = {}) {
  const CayleyEnumeration g = enumerate_group(rs, limits);
  std::vector<WeylElement> inverses;
  inverses.reserve(g.size());
  for (const auto& w : g.words) inverses.push_back(detail::inverse_by_word(rs, w));
  std::vector<bool> assigned(g.size(), false);
  std::vector<std::vector<WeylElement>> classes;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (assigned[x]) continue;
    std::set<WeylElement> orbit;
    for (std::size_t k = 0; k < g.size(); ++k) {
      orbit.insert(multiply(rs, multiply(rs, g.elements[k], g.elements[x]), inverses[k]));
    }
    for (const auto& y : orbit) assigned[g.index.at(y)] = true;
    classes.emplace_back(orbit.begin(), orbit.end());
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

}  // namespace weylm::oracle
