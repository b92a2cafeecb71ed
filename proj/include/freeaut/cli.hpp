#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freeaut/cyclic_word.hpp"
#include "freeaut/families.hpp"
#include "freeaut/orbit.hpp"

namespace freeaut::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kLimitExceeded = 3,
};

enum class OutputFormat { kText, kJson, kCsv };

std::optional<OutputFormat> parse_format(std::string_view name);

struct RunConfig {
  int rank = 0;  ///< 0: the largest generator index in the word, at least 1
  SearchLimits limits;
  OutputFormat format = OutputFormat::kText;
  unsigned threads = 1;
};

/// "auto" or a positive integer. Returns nullopt otherwise.
std::optional<unsigned> parse_threads(std::string_view text);

/// "A..B", "a,b,c" or a mix such as "3..5,9". Ascending, deduplicated.
/// Throws std::invalid_argument on malformed input or an empty range.
std::vector<int> parse_int_list(std::string_view text);

/// Parses `text` at `config.rank`, inferring the rank when it is 0.
CyclicWord read_word(std::string_view text, const RunConfig& config);

enum class Suite { kF2, kF3Sims, kThm13, kHypothesisFixtures };

std::string_view to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view name);

struct SuiteParams {
  std::vector<int> ell;  ///< empty: the suite's default range
  int n = 3;             ///< rank for thm13
};

struct SuiteRow {
  std::string label;
  int rank = 0;
  std::optional<int> ell;
  std::size_t word_length = 0;
  std::size_t computed = 0;
  std::string predicted;
  Relation relation = Relation::kEqual;
  bool pass = false;
  bool truncated = false;  ///< `computed` is then only a lower bound
  long long millis = 0;
};

struct SuiteReport {
  Suite suite = Suite::kF2;
  std::vector<SuiteRow> rows;

  bool pass() const noexcept;
  bool truncated() const noexcept;
};

/// Evaluates up to `config.threads` parameter points at once. Rows come back
/// in parameter order.
SuiteReport run_suite(Suite suite, const SuiteParams& params, const RunConfig& config);

/// Every command returns an ExitCode and writes errors to `err`.
int cmd_minimize(std::string_view word, const RunConfig& config, std::ostream& out,
                 std::ostream& err);
int cmd_count(std::string_view word, const RunConfig& config,
              const std::optional<std::string>& dump_path, std::ostream& out, std::ostream& err);
/// `extra` words are profiled against the dependence graph of `word`.
int cmd_analyze(std::string_view word, const std::vector<std::string>& extra,
                const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(Suite suite, const SuiteParams& params, const RunConfig& config,
               std::ostream& out, std::ostream& err);
int cmd_family(const FamilySpec& spec, bool count, const RunConfig& config, std::ostream& out,
               std::ostream& err);
int cmd_omega(std::string_view word, int k, bool allow_empty, const RunConfig& config,
              std::ostream& out, std::ostream& err);

/// Full argument parsing and dispatch; `argv[0]` is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace freeaut::cli
