#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "weylm/cartan_type.hpp"

namespace weylm {

/// Coordinates of a vector in the simple-root basis. Entries past rank() are zero.
using Coords = std::array<std::int8_t, kMaxRank>;

namespace detail {

inline std::uint64_t pack_coords(const Coords& c) {
  std::uint64_t key = 0;
  for (int k = 0; k < kMaxRank; ++k) {
    key |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(c[k])) << (8 * k);
  }
  return key;
}

}  // namespace detail

/// A crystallographic root system, stored exactly.
///
/// Roots are indexed 0 .. 2N-1: positive roots first (simple roots 0 .. rank-1 in
/// Bourbaki order, then the rest sorted lexicographically by coordinates), and the
/// negative of root r at index r + N. Immutable after construction.
class RootSystem {
 public:
  explicit RootSystem(CartanType t) : type_(t), cartan_(cartan_matrix(t)), sym_(symmetrizer(t)) {
    build();
  }

  CartanType type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank; }
  const CartanMatrix& cartan() const noexcept { return cartan_; }
  const std::vector<int>& symmetrizer_weights() const noexcept { return sym_; }

  int num_positive() const noexcept { return num_positive_; }
  int num_roots() const noexcept { return 2 * num_positive_; }

  const Coords& coords(int root) const { return coords_[root]; }
  bool is_positive(int root) const noexcept { return root < num_positive_; }
  int negate(int root) const noexcept {
    return root < num_positive_ ? root + num_positive_ : root - num_positive_;
  }
  /// Index of the positive root among {root, -root}.
  int positive_part(int root) const noexcept {
    return root < num_positive_ ? root : root - num_positive_;
  }
  int height(int root) const { return heights_[root]; }

  /// s_i(root), from the precomputed reflection table.
  int simple_reflect(int i, int root) const {
    return simple_table_[static_cast<std::size_t>(i) * num_roots() + root];
  }
  /// s_beta(root) for an arbitrary root beta (s_beta = s_{-beta}).
  int reflect(int beta, int root) const {
    return root_table_[static_cast<std::size_t>(positive_part(beta)) * num_roots() + root];
  }

  /// Index of the root with the given coordinates, or -1.
  int index_of(const Coords& c) const {
    const auto it = lookup_.find(detail::pack_coords(c));
    return it == lookup_.end() ? -1 : it->second;
  }

  /// <v, alpha_i^vee> = sum_j v_j A[i][j].
  int pairing(const Coords& v, int i) const {
    int s = 0;
    for (int j = 0; j < rank(); ++j) s += v[j] * cartan_[i][j];
    return s;
  }

  /// Non-simple positive roots in non-decreasing height order.
  std::span<const int> height_order() const noexcept { return height_order_; }

  /// For a non-simple positive root beta: (i, gamma) with beta = s_i(gamma) and
  /// gamma positive of smaller height.
  std::pair<int, int> descent_parent(int beta) const { return parents_[beta]; }

 private:
  void build();

  CartanType type_;
  CartanMatrix cartan_;
  std::vector<int> sym_;
  int num_positive_ = 0;
  std::vector<Coords> coords_;
  std::vector<int> heights_;
  std::vector<int> height_order_;
  std::vector<std::pair<int, int>> parents_;
  std::vector<int> simple_table_;
  std::vector<int> root_table_;
  std::unordered_map<std::uint64_t, int> lookup_;
};

inline void RootSystem::build() {
  const int n = rank();
  auto simple = [](int i) {
    Coords c{};
    c[i] = 1;
    return c;
  };
  auto reflect_coords = [&](const Coords& v, int i) {
    Coords r = v;
    r[i] = static_cast<std::int8_t>(r[i] - pairing(v, i));
    return r;
  };

  // Closure of the simple roots under simple reflections, keeping positive results.
  std::vector<Coords> positive;
  std::unordered_map<std::uint64_t, int> seen;
  std::deque<Coords> queue;
  for (int i = 0; i < n; ++i) {
    positive.push_back(simple(i));
    seen.emplace(detail::pack_coords(simple(i)), i);
    queue.push_back(simple(i));
  }
  while (!queue.empty()) {
    const Coords v = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      const Coords w = reflect_coords(v, i);
      if (!std::all_of(w.begin(), w.end(), [](std::int8_t x) { return x >= 0; })) continue;
      if (seen.emplace(detail::pack_coords(w), 0).second) {
        positive.push_back(w);
        queue.push_back(w);
      }
    }
  }
  std::sort(positive.begin() + n, positive.end());

  num_positive_ = static_cast<int>(positive.size());
  const int total = num_roots();
  coords_.resize(total);
  heights_.resize(total);
  for (int r = 0; r < num_positive_; ++r) {
    coords_[r] = positive[r];
    Coords neg{};
    int h = 0;
    for (int k = 0; k < n; ++k) {
      neg[k] = static_cast<std::int8_t>(-positive[r][k]);
      h += positive[r][k];
    }
    coords_[r + num_positive_] = neg;
    heights_[r] = h;
    heights_[r + num_positive_] = -h;
  }
  for (int r = 0; r < total; ++r) lookup_.emplace(detail::pack_coords(coords_[r]), r);

  simple_table_.resize(static_cast<std::size_t>(n) * total);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < total; ++r) {
      const int image = index_of(reflect_coords(coords_[r], i));
      if (image < 0) throw std::logic_error("root system not closed under reflection");
      simple_table_[static_cast<std::size_t>(i) * total + r] = image;
    }
  }

  // (u, v) = sum_ij u_i d_i A[i][j] v_j
  auto form = [&](const Coords& u, const Coords& v) {
    long s = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) s += static_cast<long>(u[i]) * sym_[i] * cartan_[i][j] * v[j];
    }
    return s;
  };
  root_table_.resize(static_cast<std::size_t>(num_positive_) * total);
  for (int b = 0; b < num_positive_; ++b) {
    const long bb = form(coords_[b], coords_[b]);
    for (int r = 0; r < total; ++r) {
      const long c = 2 * form(coords_[r], coords_[b]) / bb;
      Coords image{};
      for (int k = 0; k < n; ++k) image[k] = static_cast<std::int8_t>(coords_[r][k] - c * coords_[b][k]);
      const int idx = index_of(image);
      if (idx < 0) throw std::logic_error("root system not closed under reflection");
      root_table_[static_cast<std::size_t>(b) * total + r] = idx;
    }
  }

  parents_.assign(num_positive_, {-1, -1});
  for (int b = n; b < num_positive_; ++b) {
    height_order_.push_back(b);
    for (int i = 0; i < n; ++i) {
      if (pairing(coords_[b], i) > 0) {
        parents_[b] = {i, simple_reflect(i, b)};
        break;
      }
    }
  }
  std::stable_sort(height_order_.begin(), height_order_.end(),
                   [&](int a, int b) { return heights_[a] < heights_[b]; });
}

inline RootSystem build_root_system(CartanType t) { return RootSystem(t); }

/// s_i(v) = v - <v, alpha_i^vee> alpha_i on an arbitrary coordinate vector.
inline Coords simple_reflection_action(const RootSystem& rs, int i, const Coords& v) {
  if (i < 0 || i >= rs.rank()) throw std::out_of_range("simple index out of range");
  Coords r = v;
  r[i] = static_cast<std::int8_t>(r[i] - rs.pairing(v, i));
  return r;
}

}  // namespace weylm
