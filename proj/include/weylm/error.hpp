#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace weylm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A family/rank pair outside the admissible range (e.g. D3, E9).
class InadmissibleType : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input: type strings, words.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string token)
      : Error(message), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// Elements from two different root systems were combined.
class RootSystemMismatch : public Error {
 public:
  using Error::Error;
};

/// Full enumeration of a group larger than the configured cap was requested.
class EnumerationCapExceeded : public Error {
 public:
  EnumerationCapExceeded(std::uint64_t cap, std::uint64_t order)
      : Error("group order " + std::to_string(order) + " exceeds enumeration cap " +
              std::to_string(cap)),
        cap_(cap),
        order_(order) {}
  std::uint64_t cap() const noexcept { return cap_; }
  std::uint64_t order() const noexcept { return order_; }

 private:
  std::uint64_t cap_;
  std::uint64_t order_;
};

class EmptySet : public Error {
 public:
  using Error::Error;
};

/// No non-increasing conjugation chain reaches the requested element.
/// Never expected to fire; treat as a bug signal.
class ChainNotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace weylm
