#include "freeaut/whitehead.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "freeaut/error.hpp"

namespace freeaut {

namespace {

void check_rank(int rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw RankError("rank must lie in 1.." + std::to_string(kMaxRank) + ", got " +
                    std::to_string(rank));
  }
}

void check_letter(Letter l, int rank) {
  if (l.index() > rank) {
    throw RankError("letter " + to_string(l) + " exceeds rank " + std::to_string(rank));
  }
}

std::uint64_t alphabet_mask(int rank) {
  const int letters = 2 * rank;
  return letters == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << letters) - 1;
}

std::uint64_t pair_mask(Letter l) {
  return (std::uint64_t{1} << l.code()) | (std::uint64_t{1} << l.inverse().code());
}

void check_same_rank(int a, int b) {
  if (a != b) {
    throw RankError("rank mismatch: automorphism of rank " + std::to_string(a) +
                    " applied to word of rank " + std::to_string(b));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// SignedPermutation

SignedPermutation::SignedPermutation(int rank) {
  check_rank(rank);
  images_.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) images_.push_back(Letter::make(i));
}

SignedPermutation SignedPermutation::from_images(int rank, std::vector<Letter> images) {
  check_rank(rank);
  if (static_cast<int>(images.size()) != rank) {
    throw DomainError("signed permutation needs exactly one image per generator");
  }
  std::vector<bool> seen(static_cast<std::size_t>(rank), false);
  for (Letter l : images) {
    check_letter(l, rank);
    const auto g = static_cast<std::size_t>(l.index() - 1);
    if (seen[g]) throw DomainError("signed permutation images are not a bijection");
    seen[g] = true;
  }
  SignedPermutation p(rank);
  p.images_ = std::move(images);
  return p;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& first) const {
  check_same_rank(rank(), first.rank());
  SignedPermutation out(rank());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = (*this)(first.images_[i]);
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation out(rank());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Letter img = images_[i];
    const Letter src = Letter::make(static_cast<int>(i) + 1, img.inverted());
    out.images_[static_cast<std::size_t>(img.index() - 1)] = src;
  }
  return out;
}

// ---------------------------------------------------------------------------
// CutAutomorphism

CutAutomorphism CutAutomorphism::make(int rank, std::span<const Letter> cut, Letter multiplier) {
  check_rank(rank);
  std::uint64_t mask = 0;
  for (Letter l : cut) {
    check_letter(l, rank);
    mask |= std::uint64_t{1} << l.code();
  }
  return from_mask(rank, mask, multiplier);
}

CutAutomorphism CutAutomorphism::from_mask(int rank, std::uint64_t cut_mask, Letter multiplier) {
  check_rank(rank);
  check_letter(multiplier, rank);
  if ((cut_mask & ~alphabet_mask(rank)) != 0) {
    throw RankError("cut set contains letters beyond rank " + std::to_string(rank));
  }
  if ((cut_mask & pair_mask(multiplier)) != 0) {
    throw DomainError("ill-formed Whitehead pair: multiplier " + to_string(multiplier) +
                      " or its inverse lies in the cut set");
  }
  return CutAutomorphism(rank, cut_mask, multiplier);
}

std::vector<Letter> CutAutomorphism::cut() const {
  std::vector<Letter> out;
  for (std::uint64_t m = cut_; m != 0; m &= m - 1) {
    out.push_back(Letter::from_code(static_cast<std::uint8_t>(std::countr_zero(m))));
  }
  return out;
}

int CutAutomorphism::degree() const noexcept {
  // Bits 2i and 2i+1 hold x_{i+1} and its inverse; XOR of the two lanes marks
  // generators with exactly one sign in the cut.
  const std::uint64_t even = cut_ & 0x5555555555555555ULL;
  const std::uint64_t odd = (cut_ >> 1) & 0x5555555555555555ULL;
  const std::uint64_t single = even ^ odd;
  if (single == 0) return 0;
  return (63 - std::countl_zero(single)) / 2 + 1;
}

CutAutomorphism CutAutomorphism::complement() const noexcept {
  const std::uint64_t rest = alphabet_mask(rank_) & ~cut_ & ~pair_mask(multiplier_);
  return CutAutomorphism(rank_, rest, multiplier_.inverse());
}

CutAutomorphism CutAutomorphism::inverse() const noexcept {
  return CutAutomorphism(rank_, cut_, multiplier_.inverse());
}

bool CutAutomorphism::trivial_on_cyclic_words() const noexcept {
  return cut_ == 0 || cut_ == (alphabet_mask(rank_) & ~pair_mask(multiplier_));
}

// ---------------------------------------------------------------------------
// Application

int rank_of(const WhiteheadAut& aut) noexcept {
  return std::visit([](const auto& a) { return a.rank(); }, aut);
}

CyclicWord apply(const SignedPermutation& aut, const CyclicWord& w) {
  check_same_rank(aut.rank(), w.rank());
  std::vector<Letter> out;
  out.reserve(w.length());
  for (Letter l : w.letters()) out.push_back(aut(l));
  canonicalize_in_place(out);
  return CyclicWord::from_canonical(w.rank(), std::move(out));
}

void substitute(const CutAutomorphism& aut, std::span<const Letter> w, std::vector<Letter>& out) {
  const Letter a = aut.multiplier();
  const Letter a_inv = a.inverse();
  for (Letter l : w) {
    if (aut.in_cut(l.inverse())) out.push_back(a_inv);
    out.push_back(l);
    if (aut.in_cut(l)) out.push_back(a);
  }
}

CyclicWord apply(const CutAutomorphism& aut, const CyclicWord& w) {
  check_same_rank(aut.rank(), w.rank());
  std::vector<Letter> out;
  out.reserve(3 * w.length());
  substitute(aut, w.letters(), out);
  cyclically_reduce_in_place(out);
  canonicalize_in_place(out);
  return CyclicWord::from_canonical(w.rank(), std::move(out));
}

CyclicWord apply(const WhiteheadAut& aut, const CyclicWord& w) {
  return std::visit([&](const auto& a) { return apply(a, w); }, aut);
}

CyclicWord apply(const AutChain& chain, const CyclicWord& w) {
  CyclicWord cur = w;
  for (const auto& aut : chain) cur = freeaut::apply(aut, cur);
  return cur;
}

CutAutomorphism conjugate(const SignedPermutation& p, const CutAutomorphism& aut) {
  check_same_rank(p.rank(), aut.rank());
  std::uint64_t mask = 0;
  for (Letter l : aut.cut()) mask |= std::uint64_t{1} << p(l).code();
  return CutAutomorphism::from_mask(aut.rank(), mask, p(aut.multiplier()));
}

int degree(const WhiteheadAut& aut) {
  if (const auto* cut = std::get_if<CutAutomorphism>(&aut)) return cut->degree();
  throw DomainError("degree is defined only for Whitehead automorphisms of the second kind");
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<CutAutomorphism> enumerate_w2(int rank, W2Enumeration options) {
  check_rank(rank);
  if (rank > 16) throw DomainError("W2 enumeration is limited to rank 16");
  std::vector<CutAutomorphism> out;
  const int letters = 2 * rank;
  const std::uint64_t subsets = std::uint64_t{1} << (letters - 2);
  out.reserve(static_cast<std::size_t>(letters) * subsets);
  for (int code = 0; code < letters; ++code) {
    const Letter a = Letter::from_code(static_cast<std::uint8_t>(code));
    std::vector<std::uint8_t> free_codes;
    for (int c = 0; c < letters; ++c) {
      if (c / 2 != code / 2) free_codes.push_back(static_cast<std::uint8_t>(c));
    }
    for (std::uint64_t s = 0; s < subsets; ++s) {
      if (options.skip_empty && s == 0) continue;
      if (options.skip_full && s == subsets - 1) continue;
      std::uint64_t mask = 0;
      for (std::size_t j = 0; j < free_codes.size(); ++j) {
        if ((s >> j) & 1U) mask |= std::uint64_t{1} << free_codes[j];
      }
      out.push_back(CutAutomorphism::from_mask(rank, mask, a));
    }
  }
  return out;
}

std::vector<SignedPermutation> enumerate_w1(int rank) {
  check_rank(rank);
  if (rank > 8) throw DomainError("W1 enumeration is limited to rank 8");
  std::vector<int> perm(static_cast<std::size_t>(rank));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    for (std::uint32_t flips = 0; flips < (1U << rank); ++flips) {
      std::vector<Letter> images;
      for (int i = 0; i < rank; ++i) {
        images.push_back(Letter::make(perm[static_cast<std::size_t>(i)], (flips >> i) & 1U));
      }
      out.push_back(SignedPermutation::from_images(rank, std::move(images)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Length change without substitution

void AdjacencyProfile::assign(std::span<const Letter> w) {
  constexpr std::size_t kCodes = 2 * kMaxRank;
  occurrences_.assign(kCodes, 0);
  if (scratch_.size() != kCodes * kCodes) scratch_.assign(kCodes * kCodes, 0);
  for (const Pair& p : pairs_) scratch_[p.first.code() * kCodes + p.second.code()] = 0;
  pairs_.clear();
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Letter x = w[i];
    const Letter y = w[(i + 1) % n];
    ++occurrences_[x.code()];
    auto& slot = scratch_[x.code() * kCodes + y.code()];
    if (slot == 0) {
      pairs_.push_back({x, y, 0});
      slot = static_cast<std::uint32_t>(pairs_.size());
    }
    ++pairs_[slot - 1].count;
  }
}

long length_change(const CutAutomorphism& aut, const AdjacencyProfile& profile) noexcept {
  // Each letter z gains a^-1 on the left when z^-1 is in A and a on the right
  // when z is in A. At a junction x|y the inserted a, a^-1 cancel in pairs;
  // the only other cancellation is against a bare multiplier letter.
  const Letter a = aut.multiplier();
  const Letter a_inv = a.inverse();
  long delta = 0;
  for (const auto& p : profile.pairs()) {
    const bool right = aut.in_cut(p.first);
    const bool left = aut.in_cut(p.second.inverse());
    long grow = (right ? 1 : 0) + (aut.in_cut(p.first.inverse()) ? 1 : 0);
    const bool cancels = (right && left) || (right && p.second == a_inv) ||
                         (left && p.first == a);
    if (cancels) grow -= 2;
    delta += grow * static_cast<long>(p.count);
  }
  return delta;
}

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const CutAutomorphism& aut) {
  std::string s = "({";
  bool first = true;
  for (Letter l : aut.cut()) {
    if (!first) s += ", ";
    s += to_string(l);
    first = false;
  }
  s += "}, " + to_string(aut.multiplier()) + ")";
  return s;
}

std::string to_string(const SignedPermutation& aut) {
  std::string s = "perm(";
  const auto images = aut.images();
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i > 0) s += ", ";
    s += std::to_string(i + 1) + "→" + std::to_string(images[i].index()) +
         (images[i].inverted() ? "-" : "+");
  }
  s += ")";
  return s;
}

std::string to_string(const WhiteheadAut& aut) {
  return std::visit([](const auto& a) { return to_string(a); }, aut);
}

namespace {

class AutParser {
 public:
  AutParser(std::string_view text, int rank) : text_(text), rank_(rank) {}

  WhiteheadAut parse() {
    skip_ws();
    WhiteheadAut out = lookahead("perm") ? WhiteheadAut(parse_perm()) : WhiteheadAut(parse_cut());
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
    return out;
  }

 private:
  bool lookahead(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  void skip_ws() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  void expect(std::string_view s) {
    skip_ws();
    if (!lookahead(s)) throw ParseError("expected '" + std::string(s) + "'", pos_);
    pos_ += s.size();
  }

  int parse_index() {
    skip_ws();
    const std::size_t start = pos_;
    int value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError("index too large", start);
      ++pos_;
    }
    if (pos_ == start || value < 1) throw ParseError("expected generator index", start);
    if (value > rank_) {
      throw RankError("generator " + std::to_string(value) + " exceeds rank " +
                      std::to_string(rank_));
    }
    return value;
  }

  Letter parse_letter() {
    expect("x");
    const int index = parse_index();
    bool inverted = false;
    if (lookahead("^-1")) {
      inverted = true;
      pos_ += 3;
    } else if (lookahead("^1")) {
      pos_ += 2;
    }
    return Letter::make(index, inverted);
  }

  CutAutomorphism parse_cut() {
    expect("(");
    expect("{");
    std::vector<Letter> cut;
    skip_ws();
    if (!lookahead("}")) {
      cut.push_back(parse_letter());
      skip_ws();
      while (lookahead(",")) {
        ++pos_;
        cut.push_back(parse_letter());
        skip_ws();
      }
    }
    expect("}");
    expect(",");
    const Letter a = parse_letter();
    expect(")");
    return CutAutomorphism::make(rank_, cut, a);
  }

  SignedPermutation parse_perm() {
    expect("perm(");
    std::vector<Letter> images(static_cast<std::size_t>(rank_));
    std::vector<bool> assigned(static_cast<std::size_t>(rank_), false);
    for (int k = 0; k < rank_; ++k) {
      if (k > 0) expect(",");
      const int from = parse_index();
      skip_ws();
      if (lookahead("→")) {
        pos_ += std::string_view("→").size();
      } else {
        expect("->");
      }
      const int to = parse_index();
      skip_ws();
      bool inverted = false;
      if (lookahead("-")) {
        inverted = true;
        ++pos_;
      } else if (lookahead("+")) {
        ++pos_;
      } else {
        throw ParseError("expected '+' or '-'", pos_);
      }
      if (assigned[static_cast<std::size_t>(from - 1)]) {
        throw ParseError("generator mapped twice", pos_);
      }
      assigned[static_cast<std::size_t>(from - 1)] = true;
      images[static_cast<std::size_t>(from - 1)] = Letter::make(to, inverted);
    }
    expect(")");
    return SignedPermutation::from_images(rank_, std::move(images));
  }

  std::string_view text_;
  int rank_;
  std::size_t pos_ = 0;
};

}  // namespace

WhiteheadAut parse_automorphism(std::string_view text, int rank) {
  check_rank(rank);
  return AutParser(text, rank).parse();
}

}  // namespace freeaut
