#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "freeaut/letter.hpp"

namespace freeaut::detail {

// Insertion-ordered set of equal-length letter sequences. Words live back to
// back in one arena; an open-addressing table of indices dedups them.
class WordStore {
 public:
  explicit WordStore(std::size_t word_length = 0);

  std::size_t word_length() const noexcept { return length_; }
  std::size_t size() const noexcept { return count_; }

  std::span<const Letter> at(std::size_t i) const noexcept {
    return {arena_.data() + i * length_, length_};
  }

  // Safe to call concurrently with other const calls.
  bool contains(std::span<const Letter> word) const noexcept;

  // Returns the index of the word and whether it was newly added.
  std::pair<std::size_t, bool> insert(std::span<const Letter> word);

 private:
  static std::uint64_t hash(std::span<const Letter> word) noexcept;
  std::size_t probe(std::span<const Letter> word, std::uint64_t h) const noexcept;
  void rehash(std::size_t capacity);

  std::size_t length_;
  std::size_t count_ = 0;
  std::vector<Letter> arena_;
  std::vector<std::uint32_t> slots_;  // 0 marks an empty slot, else index + 1
};

}  // namespace freeaut::detail
