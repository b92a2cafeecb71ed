#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freeaut {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word or automorphism text. `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Generator index out of range, or operands of different rank.
class RankError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the mathematical input was violated (non-minimal word,
/// ill-formed Whitehead pair, parameter outside a formula's stated domain).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A search hit its member or frontier limit. The partial count is a lower
/// bound for the true size.
class LimitExceeded : public Error {
 public:
  LimitExceeded(const std::string& what, std::size_t partial_size)
      : Error(what), partial_size_(partial_size) {}

  std::size_t partial_size() const noexcept { return partial_size_; }

 private:
  std::size_t partial_size_;
};

}  // namespace freeaut
