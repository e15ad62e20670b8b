#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "weylm/cartan_type.hpp"
#include "weylm/error.hpp"

namespace weylm {

/// A Weyl group element, stored as the root indices of w(alpha_j) for each simple j.
///
/// This is a canonical form: two elements are equal iff their image arrays agree.
/// The element carries its Cartan type so that mixing systems can be detected.
class WeylElement {
 public:
  using Images = std::array<std::uint8_t, kMaxRank>;

  WeylElement() = default;
  WeylElement(CartanType type, const Images& images) : images_(images), type_(type) {}

  CartanType type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank; }
  int image(int j) const noexcept { return images_[j]; }
  const Images& images() const noexcept { return images_; }

  /// Packed images; unique per element within one root system.
  std::uint64_t code() const noexcept {
    std::uint64_t c = 0;
    for (int k = 0; k < kMaxRank; ++k) c |= static_cast<std::uint64_t>(images_[k]) << (8 * k);
    return c;
  }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

 private:
  Images images_{};
  CartanType type_{};
};

/// A subset of the simple indices, as a bitmask. Indices are 0-based internally.
class SimpleSubset {
 public:
  constexpr SimpleSubset() = default;
  constexpr explicit SimpleSubset(std::uint32_t mask) : mask_(mask) {}

  static SimpleSubset full(int rank) { return SimpleSubset((1u << rank) - 1u); }
  static SimpleSubset of(std::initializer_list<int> indices) {
    SimpleSubset s;
    for (int i : indices) s.insert(i);
    return s;
  }

  std::uint32_t mask() const noexcept { return mask_; }
  bool contains(int i) const noexcept { return (mask_ >> i) & 1u; }
  void insert(int i) noexcept { mask_ |= 1u << i; }
  void erase(int i) noexcept { mask_ &= ~(1u << i); }
  bool empty() const noexcept { return mask_ == 0; }
  int size() const noexcept { return std::popcount(mask_); }
  bool is_subset_of(SimpleSubset other) const noexcept { return (mask_ & ~other.mask_) == 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i) {
      if (contains(i)) out.push_back(i);
    }
    return out;
  }

  friend SimpleSubset operator|(SimpleSubset a, SimpleSubset b) { return SimpleSubset(a.mask_ | b.mask_); }
  friend SimpleSubset operator&(SimpleSubset a, SimpleSubset b) { return SimpleSubset(a.mask_ & b.mask_); }
  friend bool operator==(SimpleSubset, SimpleSubset) = default;
  friend auto operator<=>(SimpleSubset, SimpleSubset) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// "{1,3}" with 1-based indices; "{}" when empty.
inline std::string to_string(SimpleSubset s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

/// A word in the simple reflections, 0-based indices.
using Word = std::vector<int>;

/// Space-separated 1-based indices; the empty word prints as "e".
inline std::string format_word(const Word& word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(word[k] + 1);
  }
  return out;
}

/// Parses 1-based indices separated by whitespace. "e" or blank is the empty word.
inline Word parse_word(std::string_view text, int rank) {
  std::istringstream in{std::string(text)};
  std::string token;
  Word word;
  std::vector<std::string> tokens;
  while (in >> token) tokens.push_back(token);
  if (tokens.size() == 1 && tokens[0] == "e") return word;
  for (const auto& tok : tokens) {
    int value = 0;
    bool ok = !tok.empty() && tok.size() <= 3;
    for (char ch : tok) {
      if (ch < '0' || ch > '9') {
        ok = false;
        break;
      }
      value = value * 10 + (ch - '0');
    }
    if (!ok || value < 1 || value > rank) {
      throw ParseError("bad simple index '" + tok + "' (expected 1.." + std::to_string(rank) + ")", tok);
    }
    word.push_back(value - 1);
  }
  return word;
}

}  // namespace weylm

template <>
struct std::hash<weylm::WeylElement> {
  std::size_t operator()(const weylm::WeylElement& w) const noexcept {
    std::uint64_t x = w.code() ^ (static_cast<std::uint64_t>(w.type().rank) << 59) ^
                      (static_cast<std::uint64_t>(w.type().family) << 61);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};
