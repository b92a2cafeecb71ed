#include "freeaut/families.hpp"

#include <algorithm>
#include <unordered_set>

#include "freeaut/error.hpp"

namespace freeaut {

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kThm13: return "thm13";
    case FamilyKind::kSimsF3: return "sims_f3";
    case FamilyKind::kF2Max: return "f2_max";
    case FamilyKind::kF2Square: return "f2_square";
  }
  return "?";
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  for (auto k : {FamilyKind::kThm13, FamilyKind::kSimsF3, FamilyKind::kF2Max,
                 FamilyKind::kF2Square}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::kEqual: return "eq";
    case Relation::kAtLeast: return "ge";
    case Relation::kAtMost: return "le";
  }
  return "?";
}

void FamilySpec::validate() const {
  const std::string name(to_string(kind));
  switch (kind) {
    case FamilyKind::kThm13:
      if (rank < 2 || rank > kMaxRank) throw DomainError("thm13 needs rank n >= 2");
      if (ell < 1) throw DomainError("thm13 needs ell >= 1");
      return;
    case FamilyKind::kSimsF3:
      if (rank != 3) throw DomainError("sims_f3 is a rank 3 family");
      break;
    case FamilyKind::kF2Max:
    case FamilyKind::kF2Square:
      if (rank != 2) throw DomainError(name + " is a rank 2 family");
      break;
  }
  if (ell < 3) throw DomainError(name + " needs ell >= 3");
}

CyclicWord family_word(const FamilySpec& spec) {
  spec.validate();
  std::vector<Letter> w;
  auto put = [&](int index, bool inverted, int times = 1) {
    for (int t = 0; t < times; ++t) w.push_back(Letter::make(index, inverted));
  };
  switch (spec.kind) {
    case FamilyKind::kF2Square:
      put(1, false, 2);
      put(2, false, spec.ell);
      break;
    case FamilyKind::kF2Max:
      put(1, false, 2);
      put(2, false);
      put(1, true);
      put(2, false);
      put(1, false);
      put(2, false, spec.ell);
      break;
    case FamilyKind::kThm13:
    case FamilyKind::kSimsF3: {
      const int n = spec.kind == FamilyKind::kSimsF3 ? 3 : spec.rank;
      put(1, false, 2);
      for (int i = 2; i <= n - 1; ++i) {
        put(i, false);
        for (int r = 0; r < i - 1; ++r) {
          put(i, false);
          put(n, false);
          put(i, true);
          put(n, false);
        }
        put(i, false);
      }
      put(n, false, spec.ell);
      break;
    }
  }
  return cyclic_reduce(w, spec.rank);
}

bool Prediction::accepts(std::size_t computed) const {
  if (exact) return static_cast<long long>(computed) == *exact;
  return Rational(computed) >= *lower_bound;
}

long long f2_upper_bound(std::size_t length) { return 8 * static_cast<long long>(length) - 40; }

Rational thm13_lower_bound(int n, int ell) {
  if (n < 2 || ell < 1) throw DomainError("thm13 bound needs n >= 2 and ell >= 1");
  const int e = 2 * n - 3;
  const Rational base(ell, e);
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

Prediction predicted_count(const FamilySpec& spec) {
  Prediction p{family_word(spec), std::nullopt, std::nullopt, {}};
  const auto u = static_cast<long long>(p.word.length());
  switch (spec.kind) {
    case FamilyKind::kSimsF3:
      if (u < 11) throw DomainError("the F3 cubic is stated only for |u| >= 11");
      p.exact = 48 * u * u * u - 480 * u * u + 1140 * u - 672;
      p.source = "48|u|^3-480|u|^2+1140|u|-672";
      break;
    case FamilyKind::kF2Square:
      p.exact = 4 * (u - 1);
      p.source = "4(|u|-1)";
      break;
    case FamilyKind::kF2Max:
      p.exact = 8 * (u - 5);
      p.source = "8(|u|-5)";
      break;
    case FamilyKind::kThm13:
      p.lower_bound = thm13_lower_bound(spec.rank, spec.ell);
      p.source = "(l/(2n-3))^(2n-3)";
      break;
  }
  return p;
}

std::vector<CyclicWord> lambda_set(const CyclicWord& u) {
  if (u.rank() != 2) throw RankError("lambda_set is defined in rank 2");
  if (!is_minimal(u)) throw DomainError("lambda_set requires a minimal word");
  const Letter x1 = Letter::make(1);
  const Letter x2 = Letter::make(2);
  const CutAutomorphism taus[] = {CutAutomorphism::make(2, std::span(&x1, 1), x2),
                                  CutAutomorphism::make(2, std::span(&x1, 1), x2.inverse())};
  std::unordered_set<CyclicWord, CyclicWordHash> seen{u};
  for (const auto& tau : taus) {
    CyclicWord w = u;
    while (true) {
      w = apply(tau, w);
      if (w.length() != u.length() || !seen.insert(w).second) break;
    }
  }
  std::vector<CyclicWord> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

SharpGenerators sigma_tau_generators(int n, SigmaReading reading) {
  if (n < 2 || n > kMaxRank) throw DomainError("sigma/tau generators need n >= 2");
  const Letter xn_inv = Letter::make(n, true);
  auto both = [](std::vector<Letter>& cut, int i) {
    cut.push_back(Letter::make(i));
    cut.push_back(Letter::make(i, true));
  };
  SharpGenerators g;
  for (int i = 2; i <= n - 1; ++i) {
    std::vector<Letter> cut;
    switch (reading) {
      case SigmaReading::kLiteral:
        for (int k = i; k <= n; ++k) both(cut, k);
        // Raises DomainError: x_n^±1 lies in the cut of multiplier x_n^-1.
        g.sigma.push_back(CutAutomorphism::make(n, cut, xn_inv));
        break;
      case SigmaReading::kDropMultiplier:
        for (int k = i; k <= n - 1; ++k) both(cut, k);
        g.sigma.push_back(CutAutomorphism::make(n, cut, xn_inv));
        break;
      case SigmaReading::kComplement:
        for (int k = 1; k <= i - 1; ++k) both(cut, k);
        g.sigma.push_back(CutAutomorphism::make(n, cut, xn_inv.inverse()));
        break;
    }
  }
  for (int j = 1; j <= n - 1; ++j) {
    std::vector<Letter> cut{Letter::make(j)};
    for (int k = j + 1; k <= n - 1; ++k) both(cut, k);
    g.tau.push_back(CutAutomorphism::make(n, cut, xn_inv));
  }
  return g;
}

namespace {

std::optional<std::size_t> count_composition_images(const CyclicWord& u, int n, int ell) {
  const auto gens = sigma_tau_generators(n);
  // Right to left: σ_2 acts first, τ_{n-1} last.
  std::vector<CutAutomorphism> order = gens.sigma;
  order.insert(order.end(), gens.tau.begin(), gens.tau.end());
  const int top = ell / (2 * n - 3);
  if (top < 1) return 0;
  double tuples = 1;
  for (std::size_t i = 0; i < order.size(); ++i) tuples *= top;
  if (tuples > 1e6) return std::nullopt;

  std::unordered_set<CyclicWord, CyclicWordHash> images;
  std::vector<int> exps(order.size(), 1);
  while (true) {
    CyclicWord w = u;
    for (std::size_t g = 0; g < order.size(); ++g) {
      for (int e = 0; e < exps[g]; ++e) w = apply(order[g], w);
    }
    if (w.length() == u.length()) images.insert(std::move(w));
    std::size_t k = 0;
    while (k < exps.size() && ++exps[k] > top) exps[k++] = 1;
    if (k == exps.size()) break;
  }
  return images.size();
}

}  // namespace

LowerBoundReport verify_lower_bound_thm13(int n, int ell, const SearchLimits& limits,
                                          unsigned threads) {
  const FamilySpec spec{FamilyKind::kThm13, n, ell};
  const auto word = family_word(spec);
  LowerBoundReport r;
  r.rank = n;
  r.ell = ell;
  r.word_length = word.length();
  r.computed = count_minimal(word, limits, threads);
  r.bound = thm13_lower_bound(n, ell);
  r.pass = Rational(r.computed) >= r.bound;
  r.composition_images = count_composition_images(word, n, ell);
  return r;
}

}  // namespace freeaut
