#include "freeaut/detail/word_store.hpp"

#include <algorithm>
#include <limits>

#include "freeaut/error.hpp"

namespace freeaut::detail {

WordStore::WordStore(std::size_t word_length) : length_(word_length), slots_(64, 0) {}

std::uint64_t WordStore::hash(std::span<const Letter> word) noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ word.size();
  for (Letter l : word) {
    h ^= l.code();
    h *= 0x100000001B3ULL;
    h ^= h >> 29;
  }
  h *= 0xBF58476D1CE4E5B9ULL;
  return h ^ (h >> 31);
}

std::size_t WordStore::probe(std::span<const Letter> word, std::uint64_t h) const noexcept {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = h & mask;; s = (s + 1) & mask) {
    const std::uint32_t v = slots_[s];
    if (v == 0) return s;
    const auto existing = at(v - 1);
    if (std::equal(existing.begin(), existing.end(), word.begin(), word.end())) return s;
  }
}

bool WordStore::contains(std::span<const Letter> word) const noexcept {
  if (word.size() != length_) return false;
  return slots_[probe(word, hash(word))] != 0;
}

std::pair<std::size_t, bool> WordStore::insert(std::span<const Letter> word) {
  if (word.size() != length_) throw DomainError("word length does not match the store");
  const std::uint64_t h = hash(word);
  std::size_t s = probe(word, h);
  if (slots_[s] != 0) return {slots_[s] - 1, false};
  if (count_ + 1 >= std::numeric_limits<std::uint32_t>::max()) {
    throw LimitExceeded("word store is full", count_);
  }
  arena_.insert(arena_.end(), word.begin(), word.end());
  ++count_;
  if (2 * count_ > slots_.size()) {
    rehash(2 * slots_.size());
    s = probe(word, h);
  }
  slots_[s] = static_cast<std::uint32_t>(count_);
  return {count_ - 1, true};
}

void WordStore::rehash(std::size_t capacity) {
  std::vector<std::uint32_t> old(capacity, 0);
  old.swap(slots_);
  const std::size_t mask = slots_.size() - 1;
  // The newest word is already in the arena but not yet in the table.
  for (std::uint32_t v : old) {
    if (v == 0) continue;
    std::size_t s = hash(at(v - 1)) & mask;
    while (slots_[s] != 0) s = (s + 1) & mask;
    slots_[s] = v;
  }
}

}  // namespace freeaut::detail
