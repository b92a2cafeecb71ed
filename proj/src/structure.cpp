#include "freeaut/structure.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "freeaut/error.hpp"

namespace freeaut {

namespace {

std::uint64_t key_of(const CutAutomorphism& aut) {
  return aut.cut_mask() * 64 + aut.multiplier().code();
}

}  // namespace

AdmissibleSet::AdmissibleSet(int rank, std::vector<CutAutomorphism> auts)
    : rank_(rank), auts_(std::move(auts)) {}

bool AdmissibleSet::contains(const CutAutomorphism& aut) const {
  return std::find(auts_.begin(), auts_.end(), aut) != auts_.end();
}

AdmissibleSet admissible_auts(const LevelSet& level_set) {
  const int rank = level_set.rank();
  const auto all = enumerate_w2(rank);
  std::vector<bool> hit(all.size(), false);

  // An automorphism preserves the length of p(r) iff its conjugate by p^-1
  // preserves the length of r, so for a W1-closed set scanning one member
  // per class and closing under conjugation covers every member.
  AdjacencyProfile profile;
  for (std::size_t r : level_set.class_representatives()) {
    profile.assign(level_set.member(r).letters());
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!hit[i] && length_change(all[i], profile) == 0) hit[i] = true;
    }
  }

  std::unordered_set<std::uint64_t> closed;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (hit[i]) closed.insert(key_of(all[i]));
  }
  const auto w1 = level_set.closed_under_w1() ? enumerate_w1(rank) : std::vector<SignedPermutation>{};
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!hit[i]) continue;
    for (const auto& p : w1) closed.insert(key_of(conjugate(p, all[i])));
  }

  std::vector<CutAutomorphism> out;
  for (const auto& aut : all) {
    if (closed.contains(key_of(aut))) out.push_back(aut);
  }
  return AdmissibleSet(rank, std::move(out));
}

bool depends_on(Letter x, Letter y, const AdmissibleSet& admissible) {
  if (x == y || x == y.inverse()) {
    throw DomainError("dependence is defined for letters that are not equal or mutually inverse");
  }
  for (const auto& aut : admissible.automorphisms()) {
    const int m = aut.multiplier().index();
    if (m == x.index() || m == y.index()) continue;
    if (!aut.in_cut(y) && !aut.in_cut(y.inverse())) continue;
    if (!aut.in_cut(x) || !aut.in_cut(x.inverse())) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

int DependenceGraph::component_count() const {
  return component_of.empty() ? 0 : *std::max_element(component_of.begin(), component_of.end()) + 1;
}

std::vector<std::vector<Letter>> DependenceGraph::components() const {
  std::vector<std::vector<Letter>> out(static_cast<std::size_t>(component_count()));
  for (std::size_t c = 0; c < component_of.size(); ++c) {
    out[static_cast<std::size_t>(component_of[c])].push_back(
        Letter::from_code(static_cast<std::uint8_t>(c)));
  }
  return out;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

DependenceGraph dependence_graph(const AdmissibleSet& admissible) {
  const int rank = admissible.rank();
  const auto letters = static_cast<std::size_t>(2 * rank);
  DisjointSets sets(letters);
  for (std::size_t c = 0; c < letters; c += 2) sets.unite(c, c + 1);
  // Dependence ignores signs on both sides, so generators suffice.
  for (int i = 1; i <= rank; ++i) {
    for (int j = i + 1; j <= rank; ++j) {
      const Letter x = Letter::make(i);
      const Letter y = Letter::make(j);
      if (depends_on(x, y, admissible) || depends_on(y, x, admissible)) {
        sets.unite(x.code(), y.code());
      }
    }
  }
  DependenceGraph g;
  g.rank = rank;
  g.component_of.assign(letters, -1);
  std::vector<int> id_of_root(letters, -1);
  int next = 0;
  for (std::size_t c = 0; c < letters; ++c) {
    auto& id = id_of_root[sets.find(c)];
    if (id < 0) id = next++;
    g.component_of[c] = id;
  }
  return g;
}

DependenceGraph dependence_graph(const CyclicWord& u, const SearchLimits& limits,
                                 unsigned threads) {
  return dependence_graph(admissible_auts(cut_component(u, limits, threads)));
}

// ---------------------------------------------------------------------------

namespace {

// Start of the first syllable: the first i with a component change between
// positions i-1 and i, or 0 if the word lies in one component.
std::size_t first_boundary(std::span<const Letter> w, const DependenceGraph& g) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (g.component(w[i]) != g.component(w[(i + n - 1) % n])) return i;
  }
  return 0;
}

}  // namespace

std::vector<std::size_t> syllable_counts(std::span<const Letter> w, const DependenceGraph& g) {
  std::vector<std::size_t> runs(static_cast<std::size_t>(g.component_count()), 0);
  const std::size_t n = w.size();
  bool any_boundary = false;
  for (std::size_t i = 0; i < n; ++i) {
    const int c = g.component(w[i]);
    if (c != g.component(w[(i + n - 1) % n])) {
      ++runs[static_cast<std::size_t>(c)];
      any_boundary = true;
    }
  }
  if (!any_boundary && n > 0) runs[static_cast<std::size_t>(g.component(w[0]))] = 1;
  std::vector<std::size_t> per_generator(static_cast<std::size_t>(g.rank));
  for (int k = 1; k <= g.rank; ++k) {
    per_generator[static_cast<std::size_t>(k - 1)] =
        runs[static_cast<std::size_t>(g.component_of_generator(k))];
  }
  return per_generator;
}

SyllableProfile syllable_profile(const CyclicWord& w, const DependenceGraph& g) {
  if (w.rank() != g.rank) throw RankError("word and dependence graph differ in rank");
  if (w.empty()) throw DomainError("the syllable profile of the empty word is undefined");
  SyllableProfile p;
  p.per_generator = syllable_counts(w.letters(), g);
  p.total = std::accumulate(p.per_generator.begin(), p.per_generator.end(), std::size_t{0});

  const auto letters = w.letters();
  const std::size_t n = letters.size();
  const std::size_t start = first_boundary(letters, g);
  for (std::size_t k = 0; k < n; ++k) {
    const Letter l = letters[(start + k) % n];
    const int c = g.component(l);
    if (p.syllables.empty() || p.syllables.back().component != c) {
      p.syllables.push_back({c, {}});
    }
    p.syllables.back().letters.push_back(l);
  }
  return p;
}

// ---------------------------------------------------------------------------

HypothesisReport check_hypothesis(const CyclicWord& u, const SearchLimits& limits,
                                  unsigned threads) {
  HypothesisReport report;
  report.minimal = is_minimal(u);

  const auto counts = letter_counts(u);
  const int n = u.rank();
  report.counts_strict = true;
  std::size_t last = 0;
  for (int i = 1; i <= n; ++i) {
    const std::size_t ci = counts[static_cast<std::size_t>(i - 1)];
    if (ci == 0) continue;
    if (ci <= last) report.counts_strict = false;
    last = ci;
    for (int j = i + 1; j <= n; ++j) {
      if (counts[static_cast<std::size_t>(j - 1)] == ci) report.violating_pairs.emplace_back(i, j);
    }
  }
  report.counts_distinct = report.violating_pairs.empty();

  if (!report.minimal || u.empty()) return report;

  const auto graph = dependence_graph(u, limits, threads);
  const auto set = level_set(u, limits, threads);
  const auto rank = static_cast<std::size_t>(n);
  const auto own = syllable_counts(u.letters(), graph);

  std::vector<std::size_t> profiles;  // rank entries per member
  profiles.reserve(set.size() * rank);
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto p = syllable_counts(set.member(i).letters(), graph);
    profiles.insert(profiles.end(), p.begin(), p.end());
  }

  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < set.size(); ++i) best = std::min(best, profiles[i * rank + rank - 1]);
  report.syllable_condition_i = own[rank - 1] == best;

  for (std::size_t j = 1; j < rank; ++j) {  // 1-based generator j
    bool separate = true;
    for (std::size_t k = j + 1; k <= rank; ++k) {
      if (graph.component_of_generator(static_cast<int>(j)) ==
          graph.component_of_generator(static_cast<int>(k))) {
        separate = false;
      }
    }
    if (!separate) continue;
    std::size_t best_j = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < set.size(); ++i) {
      const std::size_t* p = &profiles[i * rank];
      bool same_tail = true;
      for (std::size_t k = j + 1; k <= rank; ++k) same_tail = same_tail && p[k - 1] == own[k - 1];
      if (same_tail) best_j = std::min(best_j, p[j - 1]);
    }
    report.syllable_condition_ii.emplace_back(static_cast<int>(j), own[j - 1] == best_j);
  }
  return report;
}

Relabeling relabel_by_counts(const CyclicWord& w) {
  const auto counts = letter_counts(w);
  std::vector<int> order(counts.size());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return counts[static_cast<std::size_t>(a - 1)] < counts[static_cast<std::size_t>(b - 1)];
  });
  // order[k] is the old generator that becomes x_{k+1}.
  std::vector<Letter> images(counts.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    images[static_cast<std::size_t>(order[k] - 1)] = Letter::make(static_cast<int>(k) + 1);
  }
  auto p = SignedPermutation::from_images(w.rank(), std::move(images));
  return {apply(p, w), std::move(p)};
}

}  // namespace freeaut
