#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "freeaut/cyclic_word.hpp"
#include "freeaut/detail/word_store.hpp"
#include "freeaut/whitehead.hpp"

namespace freeaut {

/// Bounds on a breadth-first search. Exceeding either raises LimitExceeded.
struct SearchLimits {
  std::size_t max_members = 10'000'000;
  std::size_t max_frontier = 1'000'000;

  /// Throws DomainError unless both limits are at least 1.
  void validate() const;
};

struct Minimization {
  CyclicWord word;
  AutChain chain;
};

/// Greedy Whitehead descent: repeatedly applies the first W2 automorphism in
/// enumeration order that strictly shortens the word.
Minimization minimize(const CyclicWord& w);

/// True iff no W2 automorphism strictly shortens `w`.
bool is_minimal(const CyclicWord& w);

/// The minimal-length automorphic level set {v in Orb(u) : |v| = |u|} of a
/// minimal word u, closed under every W1 automorphism and every length
/// preserving W2 automorphism.
class LevelSet {
 public:
  const CyclicWord& base() const noexcept { return base_; }
  int rank() const noexcept { return base_.rank(); }
  std::size_t word_length() const noexcept { return store_.word_length(); }
  std::size_t size() const noexcept { return store_.size(); }

  bool contains(const CyclicWord& w) const noexcept;

  /// i-th member in discovery order.
  CyclicWord member(std::size_t i) const;
  /// All members, ascending under the letter order.
  std::vector<CyclicWord> members() const;
  /// Formatted members sorted as strings; the dump format, one per line.
  std::vector<std::string> sorted_strings() const;

  /// True for level_set results; false for cut_component results.
  bool closed_under_w1() const noexcept { return closed_under_w1_; }

  /// Indices (into discovery order) of one member per W1 class: every member
  /// is a W1 image of exactly one representative. Without W1 closure every
  /// member represents itself.
  const std::vector<std::size_t>& class_representatives() const noexcept { return reps_; }

 private:
  friend LevelSet level_set(const CyclicWord&, const SearchLimits&, unsigned);
  friend LevelSet cut_component(const CyclicWord&, const SearchLimits&, unsigned);

  LevelSet(CyclicWord base, detail::WordStore store, std::vector<std::size_t> reps, bool w1)
      : base_(std::move(base)),
        store_(std::move(store)),
        reps_(std::move(reps)),
        closed_under_w1_(w1) {}

  CyclicWord base_;
  detail::WordStore store_;
  std::vector<std::size_t> reps_;
  bool closed_under_w1_;
};

/// Breadth-first closure of `u` under W1 moves and length preserving W2
/// moves. `threads` > 1 expands each frontier block concurrently; the member
/// set does not depend on it.
///
/// Throws DomainError if `u` is not minimal and LimitExceeded (carrying the
/// partial size, a lower bound for N) when a limit is hit.
LevelSet level_set(const CyclicWord& u, const SearchLimits& limits = {}, unsigned threads = 1);

/// The words reachable from the minimal word `u` through length preserving
/// W2 moves alone. This is the range of the existential quantifier in the
/// dependence relation; it is not closed under W1.
LevelSet cut_component(const CyclicWord& u, const SearchLimits& limits = {},
                       unsigned threads = 1);

/// N(minimize(u)).
std::size_t count_minimal(const CyclicWord& u, const SearchLimits& limits = {},
                          unsigned threads = 1);

/// Whitehead's decision procedure: minimize both words, then test membership
/// of one in the other's level set.
bool same_orbit(const CyclicWord& u, const CyclicWord& v, const SearchLimits& limits = {},
                unsigned threads = 1);

/// Whether a degree-monotone chain may be empty.
enum class ChainConvention {
  kNonEmpty,    ///< t >= 1; the default
  kAllowEmpty,  ///< t >= 0; puts v itself into every Ω_k
};

/// Words reachable from v by non-empty chains of length preserving W2
/// automorphisms with non-decreasing degrees ending at degree exactly k, where
/// every automorphism of degree i has a multiplier x_j^{±1} with j > i.
/// Sorted ascending. Requires minimal v and 0 <= k < rank.
std::vector<CyclicWord> omega_set(const CyclicWord& v, int k, const SearchLimits& limits = {},
                                  ChainConvention convention = ChainConvention::kNonEmpty);

/// |Ω_k(v)|.
std::size_t m_k(const CyclicWord& v, int k, const SearchLimits& limits = {},
                ChainConvention convention = ChainConvention::kNonEmpty);

}  // namespace freeaut
