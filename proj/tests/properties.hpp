#pragma once

// Randomized property checks shared by the unit tests and the acceptance
// binary. Each returns how many cases ran and how many failed.

#include <cstddef>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "freeaut/error.hpp"
#include "freeaut/orbit.hpp"
#include "freeaut/structure.hpp"
#include "freeaut/whitehead.hpp"
#include "oracle.hpp"

namespace props {

using namespace freeaut;

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first_failure = what;
  }
  bool ok(std::size_t min_cases) const { return failures == 0 && cases >= min_cases; }
};

using Rng = std::mt19937_64;

inline int random_rank(Rng& rng) { return 2 + static_cast<int>(rng() % 3); }

inline CyclicWord random_word(Rng& rng, int rank, std::size_t max_len) {
  return oracle::to_library(oracle::random_cyclic_word(rng, rank, rng() % (max_len + 1)), rank);
}

inline CutAutomorphism random_cut(Rng& rng, int rank) {
  const Letter a = Letter::make(1 + static_cast<int>(rng() % static_cast<unsigned>(rank)), rng() % 2);
  std::uint64_t mask = 0;
  for (int c = 0; c < 2 * rank; ++c) {
    if (c / 2 + 1 != a.index() && rng() % 2) mask |= std::uint64_t{1} << c;
  }
  return CutAutomorphism::from_mask(rank, mask, a);
}

inline SignedPermutation random_perm(Rng& rng, int rank) {
  std::vector<int> p(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<Letter> images;
  for (int i : p) images.push_back(Letter::make(i, rng() % 2));
  return SignedPermutation::from_images(rank, images);
}

inline std::string show(const CyclicWord& w) { return "'" + format_word(w) + "'"; }

inline Outcome complement_identity(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    const int rank = random_rank(rng);
    const auto w = random_word(rng, rank, 20);
    const auto c = random_cut(rng, rank);
    o.check(freeaut::apply(c, w) == freeaut::apply(c.complement(), w), to_string(c) + " " + show(w));
  }
  return o;
}

inline Outcome inverse_identity(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    const int rank = random_rank(rng);
    const auto w = random_word(rng, rank, 20);
    const auto c = random_cut(rng, rank);
    o.check(freeaut::apply(c.inverse(), freeaut::apply(c, w)) == w &&
                freeaut::apply(c, freeaut::apply(c.inverse(), w)) == w,
            to_string(c) + " " + show(w));
  }
  return o;
}

inline Outcome w1_length_preservation(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    const int rank = random_rank(rng);
    const auto w = random_word(rng, rank, 20);
    const auto p = random_perm(rng, rank);
    const auto img = freeaut::apply(p, w);
    o.check(img.length() == w.length() && freeaut::apply(p.inverse(), img) == w,
            to_string(p) + " " + show(w));
  }
  return o;
}

inline Outcome length_formula(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Outcome o;
  AdjacencyProfile profile;
  for (std::size_t i = 0; i < n; ++i) {
    const int rank = random_rank(rng);
    const auto raw = oracle::random_cyclic_word(rng, rank, rng() % 21);
    const auto w = oracle::to_library(raw, rank);
    const auto c = random_cut(rng, rank);
    oracle::Cut oc;
    for (Letter l : c.cut()) oc.cut.insert(l.inverted() ? -l.index() : l.index());
    oc.a = c.multiplier().inverted() ? -c.multiplier().index() : c.multiplier().index();
    profile.assign(w.letters());
    const long expected = static_cast<long>(oracle::apply(oc, raw).size()) - static_cast<long>(raw.size());
    o.check(length_change(c, profile) == expected, to_string(c) + " " + show(w));
  }
  return o;
}

inline Outcome minimize_fixed_point(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    const int rank = random_rank(rng);
    const auto w = random_word(rng, rank, 20);
    const auto m = minimize(w);
    const auto again = minimize(m.word);
    o.check(again.chain.empty() && again.word == m.word && is_minimal(m.word) &&
                freeaut::apply(m.chain, w) == m.word && m.word.length() <= w.length(),
            show(w));
  }
  return o;
}

inline Outcome orbit_invariance(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Outcome o;
  for (std::size_t i = 0; i < n; ++i) {
    const int rank = random_rank(rng);
    const auto w = random_word(rng, rank, 20);
    AutChain chain;
    for (int s = 0; s < 6; ++s) {
      if (rng() % 3 == 0) {
        chain.emplace_back(random_perm(rng, rank));
      } else {
        chain.emplace_back(random_cut(rng, rank));
      }
    }
    const auto img = freeaut::apply(chain, w);
    o.check(minimize(img).word.length() == minimize(w).word.length(), show(w) + " -> " + show(img));
  }
  return o;
}

/// Every length-preserving Whitehead image of a sampled member is a member.
inline Outcome level_set_closure(std::size_t words, std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  Outcome o;
  std::size_t done = 0;
  while (done < words) {
    const int rank = random_rank(rng);
    const std::size_t max_len = rank == 2 ? 20 : rank == 3 ? 12 : 9;
    const auto u = minimize(random_word(rng, rank, max_len)).word;
    if (u.length() < 2) continue;
    std::optional<LevelSet> ls;
    try {
      ls.emplace(level_set(u, {300'000, 300'000}));
    } catch (const LimitExceeded&) {
      continue;
    }
    ++done;
    const auto cuts = enumerate_w2(rank);
    const auto perms = enumerate_w1(rank);
    for (std::size_t s = 0; s < samples; ++s) {
      const auto m = ls->member(rng() % ls->size());
      bool ok = true;
      for (const auto& c : cuts) {
        const auto img = freeaut::apply(c, m);
        if (img.length() == m.length() && !ls->contains(img)) ok = false;
        if (img.length() < m.length()) ok = false;  // members are minimal
      }
      for (const auto& p : perms) ok = ok && ls->contains(freeaut::apply(p, m));
      o.check(ok, show(m) + " in level set of " + show(u));
    }
  }
  return o;
}

/// depends_on(x, y) == depends_on(y, x) for every pair of letters from
/// distinct generators, plus profile consistency on the word itself.
inline void dependence_symmetry_on(const CyclicWord& u, Outcome& o) {
  const auto p = admissible_auts(cut_component(u));
  const auto g = dependence_graph(p);
  const int n = u.rank();
  for (int c1 = 0; c1 < 2 * n; ++c1) {
    for (int c2 = 0; c2 < 2 * n; ++c2) {
      const Letter x = Letter::from_code(static_cast<std::uint8_t>(c1));
      const Letter y = Letter::from_code(static_cast<std::uint8_t>(c2));
      if (x.index() == y.index()) continue;
      o.check(depends_on(x, y, p) == depends_on(y, x, p),
              show(u) + " x=" + to_string(x) + " y=" + to_string(y));
    }
  }
  if (!u.empty()) {
    const auto prof = syllable_profile(u, g);
    std::size_t sum = 0;
    bool same_in_component = true;
    for (int i = 1; i <= n; ++i) {
      sum += prof.per_generator[static_cast<std::size_t>(i - 1)];
      for (int j = 1; j <= n; ++j) {
        if (g.component_of_generator(i) == g.component_of_generator(j) &&
            prof.per_generator[static_cast<std::size_t>(i - 1)] !=
                prof.per_generator[static_cast<std::size_t>(j - 1)]) {
          same_in_component = false;
        }
      }
    }
    o.check(sum == prof.total && same_in_component, "profile of " + show(u));
  }
}

inline Outcome dependence_symmetry(std::size_t random_words, std::uint64_t seed) {
  Outcome o;
  dependence_symmetry_on(parse_word("x1^2 x2^3 x3^4 x4^5", 4), o);
  dependence_symmetry_on(parse_word("x1^2 x2^3 x3^2 x4 x3^-1 x4 x3 x4^3", 4), o);
  Rng rng(seed);
  std::size_t done = 0;
  while (done < random_words) {
    const auto w = random_word(rng, 3, 12);
    if (w.empty() || !is_minimal(w)) continue;
    ++done;
    dependence_symmetry_on(w, o);
  }
  return o;
}

/// The graph of any word in the cut component equals that of u, and a
/// relabeling of u relabels its graph.
inline Outcome graph_invariance(std::size_t words, std::uint64_t seed) {
  Rng rng(seed);
  Outcome o;
  auto same_partition = [](const DependenceGraph& a, const DependenceGraph& b,
                           const SignedPermutation& p) {
    const int n = a.rank;
    for (int c1 = 0; c1 < 2 * n; ++c1) {
      for (int c2 = 0; c2 < 2 * n; ++c2) {
        const Letter x = Letter::from_code(static_cast<std::uint8_t>(c1));
        const Letter y = Letter::from_code(static_cast<std::uint8_t>(c2));
        if ((a.component(x) == a.component(y)) != (b.component(p(x)) == b.component(p(y)))) {
          return false;
        }
      }
    }
    return true;
  };
  std::size_t done = 0;
  while (done < words) {
    const auto u = random_word(rng, 3, 10);
    if (u.length() < 2 || !is_minimal(u)) continue;
    ++done;
    const auto comp = cut_component(u);
    const auto g = dependence_graph(u);
    for (int s = 0; s < 3; ++s) {
      const auto v = comp.member(rng() % comp.size());
      o.check(same_partition(g, dependence_graph(v), SignedPermutation(3)),
              show(v) + " vs " + show(u));
    }
    const auto p = random_perm(rng, 3);
    o.check(same_partition(g, dependence_graph(freeaut::apply(p, u)), p),
            to_string(p) + " on " + show(u));
  }
  return o;
}

}  // namespace props
