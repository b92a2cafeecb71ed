#include "freeaut/cyclic_word.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <functional>

#include "freeaut/error.hpp"

namespace freeaut {

std::string to_string(Letter l) {
  std::string s = "x" + std::to_string(l.index());
  if (l.inverted()) s += "^-1";
  return s;
}

namespace {

void check_rank(int rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw RankError("rank must lie in 1.." + std::to_string(kMaxRank) + ", got " +
                    std::to_string(rank));
  }
}

}  // namespace

CyclicWord::CyclicWord(int rank) : rank_(rank) { check_rank(rank); }

CyclicWord CyclicWord::from_letters(int rank, std::span<const Letter> letters) {
  return cyclic_reduce(letters, rank);
}

CyclicWord CyclicWord::from_canonical(int rank, std::vector<Letter> letters) {
  assert(is_cyclically_reduced(letters));
  assert(least_rotation(letters) == 0);
  CyclicWord w;
  w.rank_ = rank;
  w.letters_ = std::move(letters);
  return w;
}

CyclicWord CyclicWord::inverse() const {
  std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
  for (auto& l : inv) l = l.inverse();
  canonicalize_in_place(inv);
  return from_canonical(rank_, std::move(inv));
}

std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

std::size_t CyclicWordHash::operator()(const CyclicWord& w) const noexcept {
  return std::hash<std::string_view>{}(w.bytes()) ^ static_cast<std::size_t>(w.rank());
}

std::size_t least_rotation(std::span<const Letter> s) noexcept {
  const std::size_t n = s.size();
  if (n < 2) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Letter a = s[(i + k) % n];
    const Letter b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

void cyclically_reduce_in_place(std::vector<Letter>& letters) {
  std::size_t top = 0;
  for (Letter l : letters) {
    if (top > 0 && letters[top - 1] == l.inverse()) {
      --top;
    } else {
      letters[top++] = l;
    }
  }
  std::size_t begin = 0;
  while (top - begin >= 2 && letters[begin] == letters[top - 1].inverse()) {
    ++begin;
    --top;
  }
  letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(top), letters.end());
  letters.erase(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(begin));
}

void canonicalize_in_place(std::vector<Letter>& letters) {
  const std::size_t start = least_rotation(letters);
  std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(start),
              letters.end());
}

bool is_cyclically_reduced(std::span<const Letter> letters) noexcept {
  const std::size_t n = letters.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (letters[i] == letters[(i + 1) % n].inverse()) return false;
  }
  return true;
}

namespace {

void check_letters(std::span<const Letter> letters, int rank) {
  check_rank(rank);
  for (Letter l : letters) {
    if (l.index() > rank) {
      throw RankError("generator x" + std::to_string(l.index()) + " exceeds rank " +
                      std::to_string(rank));
    }
  }
}

}  // namespace

CyclicWord cyclic_reduce(std::span<const Letter> letters, int rank) {
  check_letters(letters, rank);
  std::vector<Letter> buf(letters.begin(), letters.end());
  cyclically_reduce_in_place(buf);
  canonicalize_in_place(buf);
  return CyclicWord::from_canonical(rank, std::move(buf));
}

CyclicWord canonical_form(std::span<const Letter> letters, int rank) {
  check_letters(letters, rank);
  if (!is_cyclically_reduced(letters)) {
    throw DomainError("canonical_form requires a cyclically reduced word");
  }
  std::vector<Letter> buf(letters.begin(), letters.end());
  canonicalize_in_place(buf);
  return CyclicWord::from_canonical(rank, std::move(buf));
}

LetterCounts letter_counts(const CyclicWord& w) {
  LetterCounts counts(static_cast<std::size_t>(w.rank()), 0);
  for (Letter l : w.letters()) ++counts[static_cast<std::size_t>(l.index() - 1)];
  return counts;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, int rank) : text_(text), rank_(rank) {}

  std::vector<Letter> parse() {
    std::vector<Letter> out;
    skip_separators();
    while (pos_ < text_.size()) {
      parse_term(out);
      const std::size_t before = pos_;
      skip_separators();
      if (pos_ < text_.size() && pos_ == before) {
        throw ParseError("expected separator", pos_);
      }
    }
    return out;
  }

 private:
  void skip_separators() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '*')) ++pos_;
  }

  long parse_integer(bool allow_sign) {
    const std::size_t start = pos_;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (!allow_sign && first != last && *first == '-') {
      throw ParseError("unexpected sign", pos_);
    }
    long value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) throw ParseError("expected integer", start);
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  void parse_term(std::vector<Letter>& out) {
    const std::size_t term_start = pos_;
    if (text_[pos_] != 'x') throw ParseError("expected 'x'", pos_);
    ++pos_;
    const std::size_t index_pos = pos_;
    const long index = parse_integer(false);
    if (index < 1) throw ParseError("generator index must be at least 1", index_pos);
    if (index > rank_) {
      throw RankError("generator x" + std::to_string(index) + " at position " +
                      std::to_string(term_start) + " exceeds rank " + std::to_string(rank_));
    }
    long exponent = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const std::size_t exp_pos = pos_;
      exponent = parse_integer(true);
      if (exponent == 0) throw ParseError("exponent must be nonzero", exp_pos);
    }
    const Letter l = Letter::make(static_cast<int>(index), exponent < 0);
    for (long e = exponent < 0 ? -exponent : exponent; e > 0; --e) out.push_back(l);
  }

  std::string_view text_;
  int rank_;
  std::size_t pos_ = 0;
};

}  // namespace

CyclicWord parse_word(std::string_view text, int rank) {
  check_rank(rank);
  auto letters = WordParser(text, rank).parse();
  return cyclic_reduce(letters, rank);
}

std::string format_word(const CyclicWord& w) {
  std::string out;
  const auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(letters[i].index());
    const long run = static_cast<long>(j - i);
    if (letters[i].inverted()) {
      out += "^-" + std::to_string(run);
    } else if (run > 1) {
      out += "^" + std::to_string(run);
    }
    i = j;
  }
  return out;
}

}  // namespace freeaut
