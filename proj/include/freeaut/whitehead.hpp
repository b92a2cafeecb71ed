#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "freeaut/cyclic_word.hpp"
#include "freeaut/letter.hpp"

namespace freeaut {

/// Whitehead automorphism of the first kind: x_i -> x_{perm(i)}^{±1}.
/// Commutes with inversion, so it permutes the letter set.
class SignedPermutation {
 public:
  /// Identity of the given rank.
  explicit SignedPermutation(int rank = 1);

  /// `images[i-1]` is the image of x_i. Throws DomainError unless the
  /// underlying generator map is a bijection of 1..rank.
  static SignedPermutation from_images(int rank, std::vector<Letter> images);

  int rank() const noexcept { return static_cast<int>(images_.size()); }
  Letter operator()(Letter l) const noexcept {
    const Letter img = images_[static_cast<std::size_t>(l.index() - 1)];
    return l.inverted() ? img.inverse() : img;
  }
  std::span<const Letter> images() const noexcept { return images_; }

  /// (*this) after `first`.
  SignedPermutation compose(const SignedPermutation& first) const;
  SignedPermutation inverse() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<Letter> images_;
};

/// Whitehead automorphism of the second kind, (A, a): for x in A with
/// x^-1 not in A, x -> x a; for x, x^-1 both in A, x -> a^-1 x a; all other
/// letters are fixed. Neither a nor a^-1 lies in A.
class CutAutomorphism {
 public:
  /// Throws DomainError if a or a^-1 is in `cut`, RankError on out of range
  /// letters.
  static CutAutomorphism make(int rank, std::span<const Letter> cut, Letter multiplier);
  /// Same contract, with the cut given as a mask over letter codes.
  static CutAutomorphism from_mask(int rank, std::uint64_t cut_mask, Letter multiplier);

  int rank() const noexcept { return rank_; }
  Letter multiplier() const noexcept { return multiplier_; }
  std::uint64_t cut_mask() const noexcept { return cut_; }
  bool in_cut(Letter l) const noexcept { return ((cut_ >> l.code()) & 1U) != 0; }
  std::vector<Letter> cut() const;

  /// Largest i with exactly one of x_i, x_i^-1 in the cut; 0 if none.
  int degree() const noexcept;

  /// (Σ - A - {a, a^-1}, a^-1). Acts identically on cyclic words.
  CutAutomorphism complement() const noexcept;
  /// (A, a^-1), the inverse automorphism.
  CutAutomorphism inverse() const noexcept;

  /// True when the action on every cyclic word is the identity: A empty or
  /// A = Σ - {a, a^-1}.
  bool trivial_on_cyclic_words() const noexcept;

  friend bool operator==(const CutAutomorphism&, const CutAutomorphism&) = default;

 private:
  CutAutomorphism(int rank, std::uint64_t cut, Letter multiplier)
      : rank_(rank), cut_(cut), multiplier_(multiplier) {}

  int rank_ = 1;
  std::uint64_t cut_ = 0;
  Letter multiplier_;
};

using WhiteheadAut = std::variant<SignedPermutation, CutAutomorphism>;

/// Applied front to back: chain[0] acts first.
using AutChain = std::vector<WhiteheadAut>;

int rank_of(const WhiteheadAut& aut) noexcept;

// WhiteheadAut and AutChain are std types, so unqualified calls with them can
// find std::apply through ADL. Spell these as freeaut::apply.
CyclicWord apply(const SignedPermutation& aut, const CyclicWord& w);
CyclicWord apply(const CutAutomorphism& aut, const CyclicWord& w);
CyclicWord apply(const WhiteheadAut& aut, const CyclicWord& w);
CyclicWord apply(const AutChain& chain, const CyclicWord& w);

/// Substitutes the image of every letter and appends it to `out` without
/// any reduction.
void substitute(const CutAutomorphism& aut, std::span<const Letter> w, std::vector<Letter>& out);

/// p (A, a) p^-1 = (p(A), p(a)).
CutAutomorphism conjugate(const SignedPermutation& p, const CutAutomorphism& aut);

/// Degree of a W2 automorphism; throws DomainError for W1.
int degree(const WhiteheadAut& aut);

struct W2Enumeration {
  bool skip_empty = false;  ///< drop (∅, a)
  bool skip_full = false;   ///< drop (Σ - {a, a^-1}, a), a conjugation
};

/// All (A, a): a in letter order, then A over subsets of Σ - {a, a^-1} in
/// binary counter order (bit j = j-th remaining letter in letter order).
std::vector<CutAutomorphism> enumerate_w2(int rank, W2Enumeration options = {});

/// All 2^n n! signed permutations. Permutations in lexicographic order, sign
/// patterns in binary counter order within each.
std::vector<SignedPermutation> enumerate_w1(int rank);

/// Cyclic adjacency statistics of a word: occurrences per letter and the
/// multiset of cyclically consecutive pairs (x, y).
class AdjacencyProfile {
 public:
  struct Pair {
    Letter first;
    Letter second;
    std::uint32_t count;
  };

  AdjacencyProfile() = default;
  explicit AdjacencyProfile(std::span<const Letter> cyclic_word) { assign(cyclic_word); }
  void assign(std::span<const Letter> cyclic_word);

  std::span<const std::uint32_t> occurrences() const noexcept { return occurrences_; }
  std::span<const Pair> pairs() const noexcept { return pairs_; }

 private:
  std::vector<std::uint32_t> occurrences_;
  std::vector<Pair> pairs_;
  std::vector<std::uint32_t> scratch_;
};

/// |(A, a)(w)| - |w| computed from the adjacency profile of w alone, in time
/// proportional to the number of distinct adjacent pairs.
long length_change(const CutAutomorphism& aut, const AdjacencyProfile& profile) noexcept;

/// "({x1, x2^-1}, x3)" and "perm(1→2+, 2→1-)".
std::string to_string(const CutAutomorphism& aut);
std::string to_string(const SignedPermutation& aut);
std::string to_string(const WhiteheadAut& aut);

/// Inverse of to_string. Also accepts "->" for the arrow. Throws ParseError,
/// RankError or DomainError.
WhiteheadAut parse_automorphism(std::string_view text, int rank);

}  // namespace freeaut
