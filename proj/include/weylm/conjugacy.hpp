#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "weylm/weyl.hpp"

namespace weylm {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Throws EnumerationCapExceeded when |W| (from the classical formula) exceeds `cap`.
inline void check_enumeration_cap(const RootSystem& rs, std::uint64_t cap) {
  const std::uint64_t order = classical_order(rs.type());
  if (order > cap) throw EnumerationCapExceeded(cap, order);
}

/// Every element of W, by breadth-first search over left multiplication by generators.
/// Elements come out in non-decreasing length order.
inline std::vector<WeylElement> enumerate_elements(const RootSystem& rs, std::uint64_t cap = kDefaultEnumerationCap) {
  check_enumeration_cap(rs, cap);
  std::vector<WeylElement> elements{identity(rs)};
  std::unordered_set<WeylElement> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (int i = 0; i < rs.rank(); ++i) {
      WeylElement next = left_multiply_simple(rs, i, elements[head]);
      if (seen.insert(next).second) {
        if (elements.size() >= cap) throw EnumerationCapExceeded(cap, elements.size() + 1);
        elements.push_back(next);
      }
    }
  }
  return elements;
}

/// A conjugacy class with its length strata.
struct ConjClass {
  /// Sorted by (length, reduced word): shortlex on canonical words.
  std::vector<WeylElement> elements;
  std::vector<int> lengths;  ///< parallel to elements
  int min_length = 0;
  int max_length = 0;
  std::vector<WeylElement> min_elements;
  std::vector<WeylElement> max_elements;
  bool is_involution_class = false;
  /// Shortlex-smallest element; always in the minimal-length stratum.
  WeylElement representative;
  Word representative_word;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(const WeylElement& w) const { return std::find(elements.begin(), elements.end(), w) != elements.end(); }
  int length_of(const WeylElement& w) const {
    const auto it = std::find(elements.begin(), elements.end(), w);
    return it == elements.end() ? -1 : lengths[static_cast<std::size_t>(it - elements.begin())];
  }
};

namespace detail {

inline ConjClass finalize_class(const RootSystem& rs, std::vector<WeylElement> members) {
  struct Keyed {
    int length;
    Word word;
    WeylElement element;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(members.size());
  for (const auto& w : members) {
    Word word = reduced_word(rs, w);
    const int l = static_cast<int>(word.size());
    keyed.push_back({l, std::move(word), w});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return a.length != b.length ? a.length < b.length : a.word < b.word;
  });
  ConjClass c;
  for (auto& k : keyed) {
    c.elements.push_back(k.element);
    c.lengths.push_back(k.length);
  }
  c.min_length = keyed.front().length;
  c.max_length = keyed.back().length;
  for (const auto& k : keyed) {
    if (k.length == c.min_length) c.min_elements.push_back(k.element);
    if (k.length == c.max_length) c.max_elements.push_back(k.element);
  }
  c.representative = keyed.front().element;
  c.representative_word = keyed.front().word;
  c.is_involution_class = is_involution(rs, c.representative);
  return c;
}

inline std::vector<WeylElement> conjugation_orbit(const RootSystem& rs, const WeylElement& w) {
  std::vector<WeylElement> orbit{w};
  std::unordered_set<WeylElement> seen{w};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (int i = 0; i < rs.rank(); ++i) {
      WeylElement next = conjugate_by_simple(rs, i, orbit[head]);
      if (seen.insert(next).second) orbit.push_back(next);
    }
  }
  return orbit;
}

inline bool class_order(const ConjClass& a, const ConjClass& b) {
  return a.min_length != b.min_length ? a.min_length < b.min_length : a.representative_word < b.representative_word;
}

}  // namespace detail

/// The conjugacy class of w: orbit under conjugation by the simple reflections.
inline ConjClass class_of(const RootSystem& rs, const WeylElement& w) {
  detail::require_system(rs, w);
  return detail::finalize_class(rs, detail::conjugation_orbit(rs, w));
}

/// Partition of W into conjugacy classes, ordered by (min_length, representative word).
inline std::vector<ConjClass> all_classes(const RootSystem& rs, std::uint64_t cap = kDefaultEnumerationCap) {
  const auto group = enumerate_elements(rs, cap);
  std::unordered_set<WeylElement> assigned;
  assigned.reserve(group.size());
  std::vector<ConjClass> classes;
  for (const auto& w : group) {
    if (assigned.contains(w)) continue;
    auto orbit = detail::conjugation_orbit(rs, w);
    assigned.insert(orbit.begin(), orbit.end());
    classes.push_back(detail::finalize_class(rs, std::move(orbit)));
  }
  std::sort(classes.begin(), classes.end(), detail::class_order);
  return classes;
}

inline std::vector<ConjClass> involution_classes(const RootSystem& rs, std::uint64_t cap = kDefaultEnumerationCap) {
  auto classes = all_classes(rs, cap);
  std::erase_if(classes, [](const ConjClass& c) { return !c.is_involution_class; });
  return classes;
}

/// Maps each element to the index of its class in `classes`.
inline std::unordered_map<WeylElement, std::size_t> class_index(const std::vector<ConjClass>& classes) {
  std::unordered_map<WeylElement, std::size_t> index;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (const auto& w : classes[k].elements) index.emplace(w, k);
  }
  return index;
}

}  // namespace weylm
