#include "freeaut/orbit.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <thread>
#include <unordered_map>

#include "freeaut/error.hpp"

namespace freeaut {

void SearchLimits::validate() const {
  if (max_members < 1 || max_frontier < 1) {
    throw DomainError("search limits must be at least 1");
  }
}

// ---------------------------------------------------------------------------
// Minimization

Minimization minimize(const CyclicWord& w) {
  Minimization result{w, {}};
  const auto auts = enumerate_w2(w.rank());
  AdjacencyProfile profile;
  for (bool shortened = true; shortened;) {
    shortened = false;
    profile.assign(result.word.letters());
    for (const auto& aut : auts) {
      if (length_change(aut, profile) < 0) {
        result.word = apply(aut, result.word);
        result.chain.emplace_back(aut);
        shortened = true;
        break;
      }
    }
  }
  return result;
}

bool is_minimal(const CyclicWord& w) {
  const AdjacencyProfile profile(w.letters());
  for (const auto& aut : enumerate_w2(w.rank())) {
    if (length_change(aut, profile) < 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Level sets

namespace {

// Canonical images of a word under W1 moves and under length preserving,
// non-trivial W2 moves.
class MoveExpander {
 public:
  explicit MoveExpander(int rank) {
    for (const auto& p : enumerate_w1(rank)) {
      std::array<std::uint8_t, 2 * kMaxRank> map{};
      for (int c = 0; c < 2 * rank; ++c) {
        map[static_cast<std::size_t>(c)] = p(Letter::from_code(static_cast<std::uint8_t>(c))).code();
      }
      w1_.push_back(map);
    }
    w2_ = enumerate_w2(rank, {.skip_empty = true, .skip_full = true});
  }

  template <class Emit>
  void w1_images(std::span<const Letter> w, Emit&& emit) {
    for (const auto& map : w1_) {
      scratch_.clear();
      for (Letter l : w) scratch_.push_back(Letter::from_code(map[l.code()]));
      emit_canonical(emit);
    }
  }

  template <class Emit>
  void w2_images(std::span<const Letter> w, Emit&& emit) {
    profile_.assign(w);
    for (const auto& aut : w2_) {
      if (length_change(aut, profile_) != 0) continue;
      scratch_.clear();
      substitute(aut, w, scratch_);
      cyclically_reduce_in_place(scratch_);
      emit_canonical(emit);
    }
  }

 private:
  template <class Emit>
  void emit_canonical(Emit& emit) {
    const auto start = static_cast<std::ptrdiff_t>(least_rotation(scratch_));
    rotated_.assign(scratch_.begin() + start, scratch_.end());
    rotated_.insert(rotated_.end(), scratch_.begin(), scratch_.begin() + start);
    emit(std::span<const Letter>(rotated_));
  }

  std::vector<std::array<std::uint8_t, 2 * kMaxRank>> w1_;
  std::vector<CutAutomorphism> w2_;
  AdjacencyProfile profile_;
  std::vector<Letter> scratch_;
  std::vector<Letter> rotated_;
};

// Breadth-first search over W1 classes, or over single words when W1 moves
// are excluded. W1 normalizes the set of W2 moves
// and preserves length, so the length preserving W2 neighbours of one class
// member determine those of the whole class: only one representative per
// class is expanded, while every member is stored for lookups.
class ClassSearch {
 public:
  ClassSearch(const CyclicWord& u, const SearchLimits& limits, unsigned threads, bool with_w1)
      : store_(u.length()),
        limits_(limits),
        with_w1_(with_w1),
        expanders_(threads, MoveExpander(u.rank())) {
    add_class(u.letters());
  }

  void run() {
    for (std::size_t level_begin = 0; level_begin < reps_.size();) {
      const std::size_t level_end = reps_.size();
      const std::size_t members_before = store_.size();
      if (expanders_.size() == 1) {
        expand_serial(level_begin, level_end);
      } else {
        expand_parallel(level_begin, level_end);
      }
      if (store_.size() - members_before > limits_.max_frontier) {
        throw LimitExceeded("frontier exceeded max_frontier; " + std::to_string(store_.size()) +
                                " members found so far (lower bound)",
                            store_.size());
      }
      level_begin = level_end;
    }
  }

  detail::WordStore take_store() { return std::move(store_); }
  std::vector<std::size_t> take_reps() { return std::move(reps_); }

 private:
  void add_class(std::span<const Letter> w) {
    const auto [index, fresh] = store_.insert(w);
    if (!fresh) return;
    reps_.push_back(index);
    check_members();
    if (!with_w1_) return;
    // Copy first: inserting may move the arena under `w`.
    class_seed_.assign(w.begin(), w.end());
    expanders_.front().w1_images(class_seed_, [&](std::span<const Letter> c) {
      if (store_.insert(c).second) check_members();
    });
  }

  void check_members() const {
    if (store_.size() > limits_.max_members) {
      throw LimitExceeded("level set exceeded max_members; " + std::to_string(store_.size()) +
                              " members found so far (lower bound)",
                          store_.size());
    }
  }

  void expand_serial(std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      const auto m = store_.at(reps_[r]);
      current_.assign(m.begin(), m.end());
      pending_.clear();
      expanders_.front().w2_images(current_, [&](std::span<const Letter> c) {
        if (!store_.contains(c)) pending_.insert(pending_.end(), c.begin(), c.end());
      });
      merge(pending_);
    }
  }

  void expand_parallel(std::size_t begin, std::size_t end) {
    const std::size_t threads = expanders_.size();
    const std::size_t block = 256 * threads;
    std::vector<std::vector<Letter>> found(threads);
    for (std::size_t b = begin; b < end; b += block) {
      const std::size_t e = std::min(end, b + block);
      const std::size_t per = (e - b + threads - 1) / threads;
      {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
          pool.emplace_back([&, t] {
            auto& out = found[t];
            out.clear();
            std::vector<Letter> current;
            const std::size_t lo = std::min(e, b + t * per);
            const std::size_t hi = std::min(e, lo + per);
            for (std::size_t r = lo; r < hi; ++r) {
              const auto m = store_.at(reps_[r]);
              current.assign(m.begin(), m.end());
              expanders_[t].w2_images(current, [&](std::span<const Letter> c) {
                if (!store_.contains(c)) out.insert(out.end(), c.begin(), c.end());
              });
            }
          });
        }
      }
      // Merge in thread order so discovery order is reproducible.
      for (const auto& out : found) merge(out);
    }
  }

  void merge(const std::vector<Letter>& flat) {
    const std::size_t len = store_.word_length();
    if (len == 0) return;
    for (std::size_t off = 0; off < flat.size(); off += len) {
      add_class(std::span<const Letter>(flat.data() + off, len));
    }
  }

  detail::WordStore store_;
  SearchLimits limits_;
  bool with_w1_;
  std::vector<MoveExpander> expanders_;
  std::vector<std::size_t> reps_;
  std::vector<Letter> current_;
  std::vector<Letter> pending_;
  std::vector<Letter> class_seed_;
};

}  // namespace

bool LevelSet::contains(const CyclicWord& w) const noexcept {
  return w.rank() == rank() && store_.contains(w.letters());
}

CyclicWord LevelSet::member(std::size_t i) const {
  const auto m = store_.at(i);
  return CyclicWord::from_canonical(rank(), std::vector<Letter>(m.begin(), m.end()));
}

std::vector<CyclicWord> LevelSet::members() const {
  std::vector<CyclicWord> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(member(i));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> LevelSet::sorted_strings() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(format_word(member(i)));
  std::sort(out.begin(), out.end());
  return out;
}

LevelSet level_set(const CyclicWord& u, const SearchLimits& limits, unsigned threads) {
  limits.validate();
  if (!is_minimal(u)) {
    throw DomainError("level_set requires a minimal word; " + format_word(u) +
                      " can be shortened");
  }
  ClassSearch search(u, limits, std::max(1U, threads), true);
  search.run();
  return LevelSet(u, search.take_store(), search.take_reps(), true);
}

LevelSet cut_component(const CyclicWord& u, const SearchLimits& limits, unsigned threads) {
  limits.validate();
  if (!is_minimal(u)) {
    throw DomainError("cut_component requires a minimal word; " + format_word(u) +
                      " can be shortened");
  }
  ClassSearch search(u, limits, std::max(1U, threads), false);
  search.run();
  return LevelSet(u, search.take_store(), search.take_reps(), false);
}

std::size_t count_minimal(const CyclicWord& u, const SearchLimits& limits, unsigned threads) {
  return level_set(minimize(u).word, limits, threads).size();
}

bool same_orbit(const CyclicWord& u, const CyclicWord& v, const SearchLimits& limits,
                unsigned threads) {
  if (u.rank() != v.rank()) throw RankError("same_orbit needs words of equal rank");
  const auto mu = minimize(u).word;
  const auto mv = minimize(v).word;
  if (mu.length() != mv.length()) return false;
  return level_set(mu, limits, threads).contains(mv);
}

// ---------------------------------------------------------------------------
// Degree-monotone chains

std::vector<CyclicWord> omega_set(const CyclicWord& v, int k, const SearchLimits& limits,
                                  ChainConvention convention) {
  limits.validate();
  if (k < 0 || k >= v.rank()) {
    throw DomainError("chain degree " + std::to_string(k) + " outside 0.." +
                      std::to_string(v.rank() - 1));
  }
  if (!is_minimal(v)) throw DomainError("omega_set requires a minimal word");

  // Degree-i automorphisms must have a multiplier x_j^{±1} with j > i.
  std::vector<CutAutomorphism> auts;
  for (const auto& aut : enumerate_w2(v.rank())) {
    if (aut.multiplier().index() > aut.degree()) auts.push_back(aut);
  }

  std::unordered_map<CyclicWord, std::uint32_t, CyclicWordHash> seen;  // word -> degree bits
  std::deque<std::pair<CyclicWord, int>> queue;
  AdjacencyProfile profile;
  auto expand = [&](const CyclicWord& w, int min_degree) {
    profile.assign(w.letters());
    for (const auto& aut : auts) {
      const int d = aut.degree();
      if (d < min_degree || length_change(aut, profile) != 0) continue;
      auto image = apply(aut, w);
      auto& bits = seen[image];
      if ((bits >> d) & 1U) continue;
      bits |= 1U << d;
      queue.emplace_back(std::move(image), d);
      if (queue.size() > limits.max_frontier) {
        throw LimitExceeded("chain search exceeded max_frontier", seen.size());
      }
    }
    if (seen.size() > limits.max_members) {
      throw LimitExceeded("chain search exceeded max_members", seen.size());
    }
  };

  expand(v, 0);
  while (!queue.empty()) {
    auto [w, d] = std::move(queue.front());
    queue.pop_front();
    expand(w, d);
  }

  std::vector<CyclicWord> out;
  for (const auto& [w, bits] : seen) {
    if ((bits >> k) & 1U) out.push_back(w);
  }
  if (convention == ChainConvention::kAllowEmpty && !((seen[v] >> k) & 1U)) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t m_k(const CyclicWord& v, int k, const SearchLimits& limits,
                ChainConvention convention) {
  return omega_set(v, k, limits, convention).size();
}

}  // namespace freeaut
