#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "freeaut/cyclic_word.hpp"
#include "freeaut/orbit.hpp"
#include "freeaut/whitehead.hpp"

namespace freeaut {

/// The W2 automorphisms (full enumeration, trivial ones included) that
/// preserve the length of at least one member of a level set.
class AdmissibleSet {
 public:
  AdmissibleSet(int rank, std::vector<CutAutomorphism> auts);

  int rank() const noexcept { return rank_; }
  /// In enumeration order.
  const std::vector<CutAutomorphism>& automorphisms() const noexcept { return auts_; }
  bool contains(const CutAutomorphism& aut) const;
  std::size_t size() const noexcept { return auts_.size(); }

 private:
  int rank_;
  std::vector<CutAutomorphism> auts_;
};

/// Level sets are never truncated (the searches throw instead), so any
/// LevelSet is a valid input. The dependence graph uses the cut component of
/// a word; passing a full level set gives the W1-symmetric variant.
AdmissibleSet admissible_auts(const LevelSet& level_set);

/// x depends on y: every admissible (A, a) with a not in {x^±1, y^±1} and
/// A meeting {y^±1} contains both x and x^-1. Vacuously true when no such
/// automorphism exists. Throws DomainError if x is y or y^-1.
bool depends_on(Letter x, Letter y, const AdmissibleSet& admissible);

/// Partition of the letters into connected components of the dependence
/// graph. Component ids are numbered by smallest member letter.
struct DependenceGraph {
  int rank = 1;
  std::vector<int> component_of;  ///< indexed by letter code

  int component_count() const;
  int component(Letter l) const { return component_of[l.code()]; }
  /// Component of x_i, 1-based i.
  int component_of_generator(int i) const { return component(Letter::make(i)); }
  /// Members of each component, ascending.
  std::vector<std::vector<Letter>> components() const;
};

DependenceGraph dependence_graph(const AdmissibleSet& admissible);
/// Builds the cut component of the minimal word `u` first: the admissible
/// automorphisms are those preserving the length of some word reachable
/// from `u` by length preserving W2 moves.
DependenceGraph dependence_graph(const CyclicWord& u, const SearchLimits& limits = {},
                                 unsigned threads = 1);

struct Syllable {
  int component;
  std::vector<Letter> letters;
};

struct SyllableProfile {
  std::vector<std::size_t> per_generator;  ///< entry k-1 holds |w|_{C_k}
  std::size_t total = 0;                   ///< |w|_s
  std::vector<Syllable> syllables;         ///< cyclic factorization w = v_1 ... v_t
};

/// Factors w into maximal cyclic runs of letters from one component. The
/// factorization starts at the first component boundary at or after position
/// 0 of the canonical rotation. Throws DomainError on the empty word and
/// RankError on rank mismatch.
SyllableProfile syllable_profile(const CyclicWord& w, const DependenceGraph& graph);

/// |w|_{C_k} for each k, without materializing the syllables.
std::vector<std::size_t> syllable_counts(std::span<const Letter> w, const DependenceGraph& graph);

struct HypothesisReport {
  bool minimal = false;
  /// Occurrence counts strictly increase with the generator index, among
  /// generators that occur.
  bool counts_strict = false;
  /// Occurrence counts of occurring generators are pairwise distinct; the
  /// relabeling-invariant form of the same condition.
  bool counts_distinct = false;
  /// Generator pairs (i < j) that both occur with equal counts.
  std::vector<std::pair<int, int>> violating_pairs;

  /// The syllable conditions are only evaluated for non-empty minimal words.
  /// Components are those of the dependence graph of u; minima range over the
  /// full level set.
  std::optional<bool> syllable_condition_i;
  /// (j, holds) for each j < n whose component differs from those of all
  /// x_k with k > j.
  std::vector<std::pair<int, bool>> syllable_condition_ii;

  bool hypothesis_holds() const noexcept { return minimal && counts_strict; }
};

HypothesisReport check_hypothesis(const CyclicWord& u, const SearchLimits& limits = {},
                                  unsigned threads = 1);

/// Relabels generators (a W1 move) so occurrence counts are non-decreasing in
/// the index; generators that do not occur come first.
struct Relabeling {
  CyclicWord word;
  SignedPermutation permutation;
};
Relabeling relabel_by_counts(const CyclicWord& w);

}  // namespace freeaut
