#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "freeaut/cyclic_word.hpp"
#include "freeaut/orbit.hpp"
#include "freeaut/whitehead.hpp"

namespace freeaut {

using Rational = boost::multiprecision::cpp_rational;

/// Extremal word families with known or bounded level-set sizes.
///   kThm13    x1^2 Π_{i=2}^{n-1} x_i (x_i x_n x_i^-1 x_n)^{i-1} x_i  x_n^ℓ, rank n >= 2
///   kSimsF3   kThm13 at n = 3: x1^2 x2^2 x3 x2^-1 x3 x2 x3^ℓ, ℓ >= 3
///   kF2Max    x1^2 x2 x1^-1 x2 x1 x2^ℓ, ℓ >= 3
///   kF2Square x1^2 x2^ℓ, ℓ >= 3
enum class FamilyKind { kThm13, kSimsF3, kF2Max, kF2Square };

std::string_view to_string(FamilyKind kind);
/// Accepts "thm13", "sims_f3", "f2_max", "f2_square".
std::optional<FamilyKind> parse_family_kind(std::string_view name);

struct FamilySpec {
  FamilyKind kind = FamilyKind::kThm13;
  int rank = 2;
  int ell = 3;

  /// Throws DomainError when the rank or ℓ is outside the family's range.
  void validate() const;
};

CyclicWord family_word(const FamilySpec& spec);

enum class Relation { kEqual, kAtLeast, kAtMost };
std::string_view to_string(Relation r);  // "eq", "ge", "le"

/// Predicted N for a family word: an exact value or a lower bound.
struct Prediction {
  CyclicWord word;
  std::optional<long long> exact;
  std::optional<Rational> lower_bound;
  std::string source;

  Relation relation() const noexcept { return exact ? Relation::kEqual : Relation::kAtLeast; }
  /// Whether a computed N agrees with the prediction.
  bool accepts(std::size_t computed) const;
};

/// kSimsF3: 48|u|^3 - 480|u|^2 + 1140|u| - 672, only for |u| >= 11.
/// kF2Square: 4(|u| - 1). kF2Max: 8(|u| - 5). kThm13: (ℓ/(2n-3))^{2n-3} as a
/// lower bound.
Prediction predicted_count(const FamilySpec& spec);

/// Upper bound 8|u| - 40 on N(u) for rank-2 words satisfying the counting
/// hypothesis with |u| >= 9.
long long f2_upper_bound(std::size_t length);

/// (ℓ/(2n-3))^{2n-3}, exact.
Rational thm13_lower_bound(int n, int ell);

/// Λ(u): u together with every τ^k(u), τ in {({x1}, x2), ({x1}, x2^-1)},
/// as long as each intermediate power preserves |u|. Sorted ascending.
/// Requires rank 2 and a minimal word.
std::vector<CyclicWord> lambda_set(const CyclicWord& u);

/// How to read σ_i = ({x_i^±1, ..., x_n^±1}, x_n^-1), whose cut contains its
/// own multiplier.
enum class SigmaReading {
  kDropMultiplier,  ///< ({x_i^±1, ..., x_{n-1}^±1}, x_n^-1); the default
  kComplement,      ///< ({x_1^±1, ..., x_{i-1}^±1}, x_n), same action
  kLiteral,         ///< rejected with DomainError
};

struct SharpGenerators {
  std::vector<CutAutomorphism> sigma;  ///< σ_2 .. σ_{n-1}, degree 0
  std::vector<CutAutomorphism> tau;    ///< τ_1 .. τ_{n-1}, τ_j = ({x_j, x_{j+1}^±1, ..., x_{n-1}^±1}, x_n^-1)
};

SharpGenerators sigma_tau_generators(int n, SigmaReading reading = SigmaReading::kDropMultiplier);

struct LowerBoundReport {
  int rank = 0;
  int ell = 0;
  std::size_t word_length = 0;
  std::size_t computed = 0;  ///< N by breadth-first search
  Rational bound;
  bool pass = false;
  /// Distinct length-preserving images τ_{n-1}^{m_{n-1}} ... τ_1^{m_1}
  /// σ_{n-1}^{k_{n-1}} ... σ_2^{k_2}(u) over exponents 1..floor(ℓ/(2n-3)).
  /// Empty when there are more than 10^6 exponent tuples.
  std::optional<std::size_t> composition_images;
};

LowerBoundReport verify_lower_bound_thm13(int n, int ell, const SearchLimits& limits = {},
                                          unsigned threads = 1);

}  // namespace freeaut
