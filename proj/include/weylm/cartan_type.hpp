#pragma once

// Cartan data for the irreducible crystallographic types, Bourbaki numbering.
//
// Convention: A[i][j] = <alpha_j, alpha_i^vee> = 2(alpha_i, alpha_j) / (alpha_i, alpha_i),
// so s_i(alpha_j) = alpha_j - A[i][j] alpha_i. With 1-based labels:
//
//   A_n  1 - 2 - ... - n
//   B_n  1 - ... - (n-1) => n      alpha_n short: A[n-1][n] = -1, A[n][n-1] = -2
//   C_n  1 - ... - (n-1) <= n      alpha_n long:  A[n-1][n] = -2, A[n][n-1] = -1
//   D_n  1 - ... - (n-2) - (n-1), (n-2) - n
//   E_n  1 - 3 - 4 - 5 - ... - n, 2 - 4
//   F4   1 - 2 => 3 - 4            alpha_1, alpha_2 long: A[2][3] = -1, A[3][2] = -2
//   G2   1 <= 2                    alpha_1 short:        A[1][2] = -3, A[2][1] = -1
//
// The symmetrizer d_i = (alpha_i, alpha_i) / 2 is normalised so short roots have d = 1;
// (alpha_i, alpha_j) = d_i A[i][j] is then a symmetric integer form.

#include <array>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "weylm/error.hpp"

namespace weylm {

inline constexpr int kMaxRank = 8;

enum class Family : std::uint8_t { A, B, C, D, E, F, G };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const CartanType&, const CartanType&) = default;
  friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

using CartanMatrix = std::vector<std::vector<int>>;

inline char family_letter(Family f) { return static_cast<char>('A' + static_cast<int>(f)); }

inline std::string to_string(CartanType t) {
  return std::string(1, family_letter(t.family)) + std::to_string(t.rank);
}

/// Throws InadmissibleType naming the violated bound.
inline void check_admissible(CartanType t) {
  const std::string name = to_string(t);
  auto fail = [&](const std::string& bound) {
    throw InadmissibleType("type " + name + ": rank must be " + bound);
  };
  switch (t.family) {
    case Family::A:
      if (t.rank < 1 || t.rank > kMaxRank) fail(">= 1 and <= " + std::to_string(kMaxRank));
      break;
    case Family::B:
    case Family::C:
      if (t.rank < 2 || t.rank > kMaxRank) fail(">= 2 and <= " + std::to_string(kMaxRank));
      break;
    case Family::D:
      if (t.rank < 4 || t.rank > kMaxRank) fail(">= 4 and <= " + std::to_string(kMaxRank));
      break;
    case Family::E:
      if (t.rank < 6 || t.rank > 8) fail("one of 6, 7, 8");
      break;
    case Family::F:
      if (t.rank != 4) fail("4");
      break;
    case Family::G:
      if (t.rank != 2) fail("2");
      break;
  }
}

/// Parses "A3", "E6", ... (letter + rank). Case-insensitive letter.
inline CartanType parse_cartan_type(std::string_view text) {
  if (text.size() < 2) throw ParseError("malformed type '" + std::string(text) + "'", std::string(text));
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  if (letter < 'A' || letter > 'G') {
    throw ParseError("unknown family in type '" + std::string(text) + "'", std::string(text));
  }
  int rank = 0;
  const auto digits = text.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError("malformed rank in type '" + std::string(text) + "'", std::string(text));
  }
  CartanType t{static_cast<Family>(letter - 'A'), rank};
  check_admissible(t);
  return t;
}

inline CartanMatrix cartan_matrix(CartanType t) {
  check_admissible(t);
  const int n = t.rank;
  CartanMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j, int a_ij, int a_ji) {
    a[i][j] = a_ij;
    a[j][i] = a_ji;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 2, n - 1, -1, -2);
      break;
    case Family::C:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 2, n - 1, -2, -1);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 3, n - 1, -1, -1);
      break;
    case Family::E:
      bond(0, 2, -1, -1);
      bond(1, 3, -1, -1);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case Family::F:
      bond(0, 1, -1, -1);
      bond(1, 2, -1, -2);
      bond(2, 3, -1, -1);
      break;
    case Family::G:
      bond(0, 1, -3, -1);
      break;
  }
  return a;
}

inline std::vector<int> symmetrizer(CartanType t) {
  check_admissible(t);
  const int n = t.rank;
  std::vector<int> d(n, 1);
  switch (t.family) {
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case Family::C:
      d[n - 1] = 2;
      break;
    case Family::F:
      d[0] = d[1] = 2;
      break;
    case Family::G:
      d[1] = 3;
      break;
    default:
      break;
  }
  return d;
}

/// |W| from the classical formulas. Used for cap pre-checks and as a test oracle target.
inline std::uint64_t classical_order(CartanType t) {
  check_admissible(t);
  auto factorial = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E:
      return n == 6 ? 51840u : n == 7 ? 2903040u : 696729600u;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

inline int classical_positive_root_count(CartanType t) {
  check_admissible(t);
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace weylm
