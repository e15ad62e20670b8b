#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "weylm/cartan_type.hpp"

namespace weylm {

struct Counterexample {
  std::string check;
  std::vector<std::string> words;  ///< elements involved, as reduced words

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Outcome of one verification suite on one type.
struct Report {
  CartanType type{};
  std::string suite;
  std::size_t n_checked = 0;
  std::size_t n_passed = 0;
  std::vector<Counterexample> counterexamples;

  static constexpr std::size_t kMaxStoredCounterexamples = 64;

  bool passed() const noexcept { return n_checked == n_passed; }

  void record(bool ok, std::string_view check, std::vector<std::string> words = {}) {
    ++n_checked;
    if (ok) {
      ++n_passed;
    } else if (counterexamples.size() < kMaxStoredCounterexamples) {
      counterexamples.push_back({std::string(check), std::move(words)});
    }
  }

  /// Associative; used to combine shards.
  void merge(const Report& other) {
    n_checked += other.n_checked;
    n_passed += other.n_passed;
    for (const auto& c : other.counterexamples) {
      if (counterexamples.size() >= kMaxStoredCounterexamples) break;
      counterexamples.push_back(c);
    }
  }
};

}  // namespace weylm
