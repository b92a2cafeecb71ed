#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "freeaut/letter.hpp"

namespace freeaut {

/// A cyclically reduced word of F_n stored in its least rotation.
///
/// Two CyclicWords compare equal exactly when they denote the same cyclically
/// ordered letter set. Exponents are expanded: x1^3 stores three letters.
class CyclicWord {
 public:
  /// The empty word of rank 1.
  CyclicWord() = default;
  /// The empty word of the given rank.
  explicit CyclicWord(int rank);

  /// Cyclically reduces and canonicalizes an arbitrary letter sequence.
  static CyclicWord from_letters(int rank, std::span<const Letter> letters);

  /// Wraps letters that are already cyclically reduced and in least rotation.
  /// Only checked in debug builds.
  static CyclicWord from_canonical(int rank, std::vector<Letter> letters);

  int rank() const noexcept { return rank_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }

  /// The inverse cyclic word, canonicalized.
  CyclicWord inverse() const;

  /// Raw byte view of the letter codes, for hashing.
  std::string_view bytes() const noexcept {
    return {reinterpret_cast<const char*>(letters_.data()), letters_.size()};
  }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b);

 private:
  int rank_ = 1;
  std::vector<Letter> letters_;
};

struct CyclicWordHash {
  std::size_t operator()(const CyclicWord& w) const noexcept;
};

/// Occurrence counts of x_i^{±1}; entry i-1 belongs to generator i.
using LetterCounts = std::vector<std::size_t>;

/// Parses the word grammar:
///   word := term (sep term)* | ""     sep := spaces | "*"
///   term := "x" index ("^" exponent)?
/// then cyclically reduces. Throws ParseError or RankError.
CyclicWord parse_word(std::string_view text, int rank);

/// Canonical rotation with exponents collapsed, e.g. "x1^2 x2^-3".
std::string format_word(const CyclicWord& w);

/// Removes adjacent inverse pairs, including across the wrap-around.
CyclicWord cyclic_reduce(std::span<const Letter> letters, int rank);

/// Least rotation of an already cyclically reduced sequence. Throws
/// DomainError if the input still has an adjacent inverse pair.
CyclicWord canonical_form(std::span<const Letter> letters, int rank);

LetterCounts letter_counts(const CyclicWord& w);

/// Start offset of the lexicographically least rotation. Linear time.
std::size_t least_rotation(std::span<const Letter> s) noexcept;

/// Free reduction of a linear sequence followed by trimming of the ends
/// until the first and last letters are not mutually inverse. Works in place.
void cyclically_reduce_in_place(std::vector<Letter>& letters);

/// Rotates `letters` in place to its least rotation.
void canonicalize_in_place(std::vector<Letter>& letters);

/// Checks that every letter lies in the rank and the cyclic order has no
/// adjacent inverse pair.
bool is_cyclically_reduced(std::span<const Letter> letters) noexcept;

}  // namespace freeaut
