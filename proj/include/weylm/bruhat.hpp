#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <list>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "weylm/report.hpp"
#include "weylm/weyl.hpp"

namespace weylm {

inline constexpr std::size_t kDefaultBruhatCacheEntries = std::size_t{1} << 20;

/// Bruhat comparisons over one root system, memoised in a bounded LRU cache.
///
/// u <= v is decided by the lifting property on the smallest left descent s of v:
/// if su < u then u <= v iff su <= sv, otherwise u <= v iff u <= sv. Safe for concurrent
/// use; workers may also hold their own instances.
class BruhatOrder {
 public:
  explicit BruhatOrder(const RootSystem& rs, std::size_t cache_capacity = kDefaultBruhatCacheEntries)
      : rs_(&rs), capacity_(cache_capacity) {}

  BruhatOrder(const BruhatOrder&) = delete;
  BruhatOrder& operator=(const BruhatOrder&) = delete;

  const RootSystem& root_system() const noexcept { return *rs_; }

  bool leq(const WeylElement& u, const WeylElement& v) const {
    detail::require_system(*rs_, u);
    detail::require_system(*rs_, v);
    return leq_impl(u, length(*rs_, u), v, length(*rs_, v));
  }

  std::size_t cache_size() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
  }

 private:
  struct Key {
    std::uint64_t u, v;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.u * 0x9e3779b97f4a7c15ULL ^ k.v);
    }
  };
  using Recency = std::list<Key>;

  std::optional<bool> lookup(const Key& k) const {
    std::lock_guard lock(mutex_);
    const auto it = cache_.find(k);
    if (it == cache_.end()) return std::nullopt;
    recency_.splice(recency_.begin(), recency_, it->second.second);
    return it->second.first;
  }

  void store(const Key& k, bool value) const {
    if (capacity_ == 0) return;
    std::lock_guard lock(mutex_);
    if (cache_.contains(k)) return;
    recency_.push_front(k);
    cache_.emplace(k, std::make_pair(value, recency_.begin()));
    if (cache_.size() > capacity_) {
      cache_.erase(recency_.back());
      recency_.pop_back();
    }
  }

  bool leq_impl(const WeylElement& u, int lu, const WeylElement& v, int lv) const {
    if (lu > lv) return false;
    if (lu == lv) return u == v;
    if (lu == 0) return true;
    const Key key{u.code(), v.code()};
    if (auto hit = lookup(key)) return *hit;

    const WeylElement v_inv = inverse(*rs_, v);
    int s = 0;
    while (rs_->is_positive(v_inv.image(s))) ++s;
    const WeylElement sv = left_multiply_simple(*rs_, s, v);
    const bool s_descends_u = !rs_->is_positive(inverse(*rs_, u).image(s));
    const bool result = s_descends_u ? leq_impl(left_multiply_simple(*rs_, s, u), lu - 1, sv, lv - 1)
                                     : leq_impl(u, lu, sv, lv - 1);
    store(key, result);
    return result;
  }

  const RootSystem* rs_;
  std::size_t capacity_;
  mutable std::mutex mutex_;
  mutable Recency recency_;
  mutable std::unordered_map<Key, std::pair<bool, Recency::iterator>, KeyHash> cache_;
};

/// One-off comparison with a private cache.
inline bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
  BruhatOrder order(rs, 4096);
  return order.leq(u, v);
}

/// The Bruhat maximum of a finite set, if it has one.
///
/// Only elements of maximal length can be a maximum, and u <= v with l(u) = l(v) forces
/// u = v, so two or more elements of maximal length rule a maximum out.
inline std::optional<WeylElement> bruhat_maximum(const BruhatOrder& order, std::span<const WeylElement> set) {
  if (set.empty()) throw EmptySet("bruhat_maximum of an empty set");
  const RootSystem& rs = order.root_system();
  int best = -1;
  std::optional<WeylElement> candidate;
  bool unique = false;
  for (const auto& x : set) {
    const int l = length(rs, x);
    if (l > best) {
      best = l;
      candidate = x;
      unique = true;
    } else if (l == best && x != *candidate) {
      unique = false;
    }
  }
  if (!unique) return std::nullopt;
  for (const auto& x : set) {
    if (!order.leq(x, *candidate)) return std::nullopt;
  }
  return candidate;
}

inline std::optional<WeylElement> bruhat_maximum(const RootSystem& rs, std::span<const WeylElement> set) {
  BruhatOrder order(rs);
  return bruhat_maximum(order, set);
}

/// The full Bruhat relation of a small group as one lower-ideal bitset per element.
///
/// Built by [e, v] = [e, vs] u [e, vs]s for a right descent s of v, processing elements by
/// length. Independent of BruhatOrder's recursion; intended for exhaustive sweeps.
class BruhatIdealTable {
 public:
  static constexpr std::size_t kMaxElements = std::size_t{1} << 15;

  BruhatIdealTable(const RootSystem& rs, std::span<const WeylElement> group) : rs_(&rs) {
    if (group.size() > kMaxElements) throw EnumerationCapExceeded(kMaxElements, group.size());
    elements_.assign(group.begin(), group.end());
    lengths_.resize(elements_.size());
    for (std::size_t k = 0; k < elements_.size(); ++k) lengths_[k] = length(rs, elements_[k]);
    std::vector<std::size_t> order(elements_.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return lengths_[a] < lengths_[b]; });
    {
      std::vector<WeylElement> sorted;
      std::vector<int> sorted_len;
      for (auto k : order) {
        sorted.push_back(elements_[k]);
        sorted_len.push_back(lengths_[k]);
      }
      elements_ = std::move(sorted);
      lengths_ = std::move(sorted_len);
    }
    for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k], k);

    const std::size_t n = elements_.size();
    const int r = rs.rank();
    words_ = (n + 63) / 64;
    bits_.assign(n * words_, 0);
    std::vector<std::size_t> right(n * r);
    for (std::size_t k = 0; k < n; ++k) {
      for (int s = 0; s < r; ++s) right[k * r + s] = index_of(right_multiply_simple(rs, elements_[k], s));
    }
    for (std::size_t v = 0; v < n; ++v) {
      set(v, v);
      if (lengths_[v] == 0) continue;
      int s = 0;
      while (rs.is_positive(elements_[v].image(s))) ++s;
      const std::size_t below = right[v * r + s];
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t chunk = bits_[below * words_ + w];
        while (chunk) {
          const std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(chunk));
          chunk &= chunk - 1;
          set(v, u);
          set(v, right[u * r + s]);
        }
      }
    }
  }

  std::size_t size() const noexcept { return elements_.size(); }
  const WeylElement& element(std::size_t k) const { return elements_[k]; }
  int length_of(std::size_t k) const { return lengths_[k]; }
  std::size_t index_of(const WeylElement& w) const { return index_.at(w); }
  const RootSystem& root_system() const noexcept { return *rs_; }

  bool leq(std::size_t u, std::size_t v) const { return (bits_[v * words_ + u / 64] >> (u % 64)) & 1u; }

 private:
  void set(std::size_t v, std::size_t u) { bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64); }

  const RootSystem* rs_;
  std::vector<WeylElement> elements_;
  std::vector<int> lengths_;
  std::unordered_map<WeylElement, std::size_t> index_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// For every pair u <= v: l(u) + rk(1-u) <= l(v) + rk(1-v).
inline Report dimension_monotonicity_check(const BruhatIdealTable& table) {
  const RootSystem& rs = table.root_system();
  Report report;
  report.type = rs.type();
  report.suite = "monotonicity";
  std::vector<int> value(table.size());
  for (std::size_t k = 0; k < table.size(); ++k) {
    value[k] = table.length_of(k) + rank_one_minus(rs, table.element(k));
  }
  for (std::size_t v = 0; v < table.size(); ++v) {
    for (std::size_t u = 0; u < table.size(); ++u) {
      if (!table.leq(u, v)) continue;
      const bool ok = value[u] <= value[v];
      if (ok) {
        ++report.n_checked;
        ++report.n_passed;
      } else {
        report.record(false, "l(u)+rk(1-u) <= l(v)+rk(1-v)",
                      {format_word(reduced_word(rs, table.element(u))),
                       format_word(reduced_word(rs, table.element(v)))});
      }
    }
  }
  return report;
}

}  // namespace weylm
