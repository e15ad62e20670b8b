#pragma once

#include <stdexcept>
#include <vector>

#include "weylm/detail/exact_rank.hpp"
#include "weylm/element.hpp"
#include "weylm/root_system.hpp"

namespace weylm {

namespace detail {

inline void require_system(const RootSystem& rs, const WeylElement& w) {
  if (w.type() != rs.type()) {
    throw RootSystemMismatch("element of type " + to_string(w.type()) + " used with root system " +
                             to_string(rs.type()));
  }
}

}  // namespace detail

inline WeylElement identity(const RootSystem& rs) {
  WeylElement::Images img{};
  for (int j = 0; j < rs.rank(); ++j) img[j] = static_cast<std::uint8_t>(j);
  return {rs.type(), img};
}

inline WeylElement simple_reflection(const RootSystem& rs, int i) {
  WeylElement::Images img{};
  for (int j = 0; j < rs.rank(); ++j) img[j] = static_cast<std::uint8_t>(rs.simple_reflect(i, j));
  return {rs.type(), img};
}

/// s_i w
inline WeylElement left_multiply_simple(const RootSystem& rs, int i, const WeylElement& w) {
  WeylElement::Images img{};
  for (int j = 0; j < rs.rank(); ++j) img[j] = static_cast<std::uint8_t>(rs.simple_reflect(i, w.image(j)));
  return {rs.type(), img};
}

/// w s_i, using w s_i = s_{w(alpha_i)} w.
inline WeylElement right_multiply_simple(const RootSystem& rs, const WeylElement& w, int i) {
  WeylElement::Images img{};
  const int beta = w.image(i);
  for (int j = 0; j < rs.rank(); ++j) img[j] = static_cast<std::uint8_t>(rs.reflect(beta, w.image(j)));
  return {rs.type(), img};
}

/// s_i w s_i
inline WeylElement conjugate_by_simple(const RootSystem& rs, int i, const WeylElement& w) {
  return right_multiply_simple(rs, left_multiply_simple(rs, i, w), i);
}

/// w(root) for an arbitrary root index.
inline int apply(const RootSystem& rs, const WeylElement& w, int root) {
  if (!rs.is_positive(root)) return rs.negate(apply(rs, w, rs.negate(root)));
  if (root < rs.rank()) return w.image(root);
  // root = s_i(gamma)  =>  w(root) = s_{w(alpha_i)}(w(gamma))
  const auto [i, gamma] = rs.descent_parent(root);
  return rs.reflect(w.image(i), apply(rs, w, gamma));
}

/// w(beta) for every positive root beta, indexed by beta.
inline std::vector<int> positive_root_images(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> out(rs.num_positive());
  for (int j = 0; j < rs.rank(); ++j) out[j] = w.image(j);
  for (int beta : rs.height_order()) {
    const auto [i, gamma] = rs.descent_parent(beta);
    out[beta] = rs.reflect(w.image(i), out[gamma]);
  }
  return out;
}

inline WeylElement multiply(const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
  detail::require_system(rs, u);
  detail::require_system(rs, v);
  const auto u_images = positive_root_images(rs, u);
  WeylElement::Images img{};
  for (int j = 0; j < rs.rank(); ++j) {
    const int r = v.image(j);
    img[j] = static_cast<std::uint8_t>(rs.is_positive(r) ? u_images[r] : rs.negate(u_images[rs.negate(r)]));
  }
  return {rs.type(), img};
}

inline WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  const auto images = positive_root_images(rs, w);
  WeylElement::Images img{};
  for (int beta = 0; beta < rs.num_positive(); ++beta) {
    const int r = images[beta];
    if (r < rs.rank()) {
      img[r] = static_cast<std::uint8_t>(beta);
    } else if (!rs.is_positive(r) && rs.negate(r) < rs.rank()) {
      img[rs.negate(r)] = static_cast<std::uint8_t>(rs.negate(beta));
    }
  }
  return {rs.type(), img};
}

/// Number of positive roots sent to negative roots.
inline int length(const RootSystem& rs, const WeylElement& w) {
  detail::require_system(rs, w);
  int count = 0;
  for (int r : positive_root_images(rs, w)) count += rs.is_positive(r) ? 0 : 1;
  return count;
}

/// {i : l(w s_i) < l(w)} = {i : w(alpha_i) < 0}
inline SimpleSubset right_descents(const RootSystem& rs, const WeylElement& w) {
  SimpleSubset s;
  for (int i = 0; i < rs.rank(); ++i) {
    if (!rs.is_positive(w.image(i))) s.insert(i);
  }
  return s;
}

/// {i : l(s_i w) < l(w)}
inline SimpleSubset left_descents(const RootSystem& rs, const WeylElement& w) {
  return right_descents(rs, inverse(rs, w));
}

inline bool is_identity(const RootSystem& rs, const WeylElement& w) {
  for (int j = 0; j < rs.rank(); ++j) {
    if (w.image(j) != j) return false;
  }
  return true;
}

/// The lexicographically smallest reduced word: repeatedly strip the smallest left descent.
inline Word reduced_word(const RootSystem& rs, const WeylElement& w) {
  detail::require_system(rs, w);
  // s_i w = (w^{-1} s_i)^{-1}, so left descents of w are right descents of x = w^{-1}.
  WeylElement x = inverse(rs, w);
  Word word;
  for (;;) {
    int descent = -1;
    for (int i = 0; i < rs.rank(); ++i) {
      if (!rs.is_positive(x.image(i))) {
        descent = i;
        break;
      }
    }
    if (descent < 0) break;
    word.push_back(descent);
    x = right_multiply_simple(rs, x, descent);
  }
  return word;
}

inline WeylElement from_word(const RootSystem& rs, const Word& word) {
  WeylElement w = identity(rs);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= rs.rank()) throw std::out_of_range("simple index out of range");
    w = left_multiply_simple(rs, *it, w);
  }
  return w;
}

/// Longest element of the parabolic subgroup generated by the simple reflections in sigma.
inline WeylElement parabolic_longest(const RootSystem& rs, SimpleSubset sigma) {
  if (!sigma.is_subset_of(SimpleSubset::full(rs.rank()))) throw std::out_of_range("subset index out of range");
  WeylElement w = identity(rs);
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : sigma.indices()) {
      if (rs.is_positive(w.image(i))) {
        w = right_multiply_simple(rs, w, i);
        grew = true;
        break;
      }
    }
  }
  return w;
}

inline WeylElement longest_element(const RootSystem& rs) {
  return parabolic_longest(rs, SimpleSubset::full(rs.rank()));
}

/// Simple indices occurring in a (any) reduced word of w.
inline SimpleSubset support(const RootSystem& rs, const WeylElement& w) {
  SimpleSubset s;
  for (int i : reduced_word(rs, w)) s.insert(i);
  return s;
}

/// Integer matrix of w in the simple-root basis; column j holds w(alpha_j).
inline detail::IntMatrix matrix_of(const RootSystem& rs, const WeylElement& w) {
  const int n = rs.rank();
  detail::IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (int j = 0; j < n; ++j) {
    const Coords& c = rs.coords(w.image(j));
    for (int i = 0; i < n; ++i) m[i][j] = c[i];
  }
  return m;
}

/// rk(1 - w) on the geometric representation, computed exactly.
inline int rank_one_minus(const RootSystem& rs, const WeylElement& w) {
  auto m = matrix_of(rs, w);
  for (int i = 0; i < rs.rank(); ++i) {
    for (int j = 0; j < rs.rank(); ++j) m[i][j] = (i == j ? 1 : 0) - m[i][j];
  }
  return detail::exact_rank(std::move(m));
}

/// dim of the 1-eigenspace of w.
inline int fixed_space_dim(const RootSystem& rs, const WeylElement& w) {
  return rs.rank() - rank_one_minus(rs, w);
}

inline bool is_involution(const RootSystem& rs, const WeylElement& w) {
  for (int j = 0; j < rs.rank(); ++j) {
    if (apply(rs, w, w.image(j)) != j) return false;
  }
  return true;
}

/// The diagram automorphism i -> j with w0(alpha_i) = -alpha_j.
inline std::vector<int> minus_w0_on_simples(const RootSystem& rs) {
  const WeylElement w0 = longest_element(rs);
  std::vector<int> perm(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) perm[i] = rs.negate(w0.image(i));
  return perm;
}

}  // namespace weylm
