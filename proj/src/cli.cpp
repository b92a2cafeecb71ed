#include "freeaut/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "freeaut/error.hpp"
#include "freeaut/structure.hpp"

namespace freeaut::cli {

using nlohmann::json;

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  return std::nullopt;
}

std::optional<unsigned> parse_threads(std::string_view text) {
  if (text == "auto") return std::max(1u, std::thread::hardware_concurrency());
  unsigned v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size() || v == 0) return std::nullopt;
  return v;
}

namespace {

int to_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  while (true) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    if (const auto dots = item.find(".."); dots != std::string_view::npos) {
      const int a = to_int(item.substr(0, dots));
      const int b = to_int(item.substr(dots + 2));
      if (a > b) throw std::invalid_argument("empty range: " + std::string(item));
      for (int v = a; v <= b; ++v) out.push_back(v);
    } else {
      out.push_back(to_int(item));
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CyclicWord read_word(std::string_view text, const RunConfig& config) {
  if (config.rank > 0) return parse_word(text, config.rank);
  const auto probe = parse_word(text, kMaxRank);
  int rank = 1;
  for (Letter l : probe.letters()) rank = std::max(rank, l.index());
  return parse_word(text, rank);
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::kF2: return "f2";
    case Suite::kF3Sims: return "f3-sims";
    case Suite::kThm13: return "thm13";
    case Suite::kHypothesisFixtures: return "hypothesis-fixtures";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (auto s : {Suite::kF2, Suite::kF3Sims, Suite::kThm13, Suite::kHypothesisFixtures}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

bool SuiteReport::pass() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.pass; });
}

bool SuiteReport::truncated() const noexcept {
  return std::any_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.truncated; });
}

namespace {

using Clock = std::chrono::steady_clock;

long long millis_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

SuiteRow family_row(const FamilySpec& spec, const SearchLimits& limits) {
  const auto t0 = Clock::now();
  const Prediction p = predicted_count(spec);
  SuiteRow row;
  row.label = std::string(to_string(spec.kind));
  row.rank = spec.rank;
  row.ell = spec.ell;
  row.word_length = p.word.length();
  row.relation = p.relation();
  row.predicted = p.exact ? std::to_string(*p.exact) : p.lower_bound->str();
  try {
    row.computed = count_minimal(p.word, limits);
    row.pass = p.accepts(row.computed);
  } catch (const LimitExceeded& e) {
    row.computed = e.partial_size();
    row.truncated = true;
  }
  row.millis = millis_since(t0);
  return row;
}

SuiteRow fixture_row(std::string label, const CyclicWord& u, std::size_t computed,
                     std::size_t expected) {
  SuiteRow row;
  row.label = std::move(label);
  row.rank = u.rank();
  row.word_length = u.length();
  row.computed = computed;
  row.predicted = std::to_string(expected);
  row.pass = computed == expected;
  return row;
}

// Two dependence-graph fixtures in F_4: the powers word with four singleton
// components, and the word whose x3 and x4 share a component.
std::vector<SuiteRow> fixture_rows(int which, const SearchLimits& limits) {
  const auto t0 = Clock::now();
  const bool first = which == 0;
  const std::string tag = first ? "ex-powers" : "ex-linked";
  const auto u = parse_word(first ? "x1^2 x2^3 x3^4 x4^5" : "x1^2 x2^3 x3^2 x4 x3^-1 x4 x3 x4^3", 4);
  const auto v =
      parse_word(first ? "x1 x2^3 x1 x3^4 x4^5" : "x1^2 x3^2 x2^3 x4 x3^-1 x4 x3 x4^3", 4);
  std::vector<SuiteRow> rows;
  try {
    const auto g = dependence_graph(u, limits);
    const auto pu = syllable_profile(u, g);
    const auto pv = syllable_profile(v, g);
    const auto ls = level_set(u, limits);
    rows.push_back(fixture_row(tag + " v in level set", u, ls.contains(v) ? 1 : 0, 1));
    rows.push_back(fixture_row(tag + " components", u,
                               static_cast<std::size_t>(g.component_count()), first ? 4 : 3));
    rows.push_back(fixture_row(tag + " |u|_s", u, pu.total, 4));
    if (first) {
      rows.push_back(fixture_row(tag + " |v|_C1", u, pv.per_generator[0], 2));
      rows.push_back(fixture_row(tag + " |v|_s", u, pv.total, 5));
    } else {
      const bool merged = g.component_of_generator(3) == g.component_of_generator(4);
      rows.push_back(fixture_row(tag + " C3=C4", u, merged ? 1 : 0, 1));
      rows.push_back(fixture_row(tag + " |v|_C3", u, pv.per_generator[2], 2));
      rows.push_back(fixture_row(tag + " |v|_C4", u, pv.per_generator[3], 2));
      rows.push_back(fixture_row(tag + " |v|_s", u, pv.total, 6));
    }
  } catch (const LimitExceeded& e) {
    auto row = fixture_row(tag, u, e.partial_size(), 0);
    row.pass = false;
    row.truncated = true;
    row.predicted = "-";
    rows.push_back(row);
  }
  const auto ms = millis_since(t0);
  for (auto& r : rows) r.millis = ms;
  return rows;
}

std::vector<std::vector<SuiteRow>> run_tasks(std::vector<std::function<std::vector<SuiteRow>()>> tasks,
                                             unsigned threads) {
  std::vector<std::vector<SuiteRow>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) results[i] = tasks[i]();
  };
  const unsigned n = std::min<std::size_t>(std::max(1u, threads), tasks.size());
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();  // join before handing out results
  return results;
}

std::vector<int> default_ell(Suite suite, int n) {
  switch (suite) {
    case Suite::kF2: return parse_int_list("3..30");
    case Suite::kF3Sims: return {3, 4, 5};
    case Suite::kThm13: return n == 2 ? std::vector<int>{5, 9} : std::vector<int>{3, 6};
    case Suite::kHypothesisFixtures: return {};
  }
  return {};
}

}  // namespace

SuiteReport run_suite(Suite suite, const SuiteParams& params, const RunConfig& config) {
  config.limits.validate();
  std::vector<std::function<std::vector<SuiteRow>()>> tasks;
  const auto limits = config.limits;
  if (suite == Suite::kHypothesisFixtures) {
    for (int which : {0, 1}) tasks.push_back([=] { return fixture_rows(which, limits); });
  } else {
    const auto ells = params.ell.empty() ? default_ell(suite, params.n) : params.ell;
    for (int ell : ells) {
      FamilySpec spec;
      switch (suite) {
        case Suite::kF2: spec = {FamilyKind::kF2Max, 2, ell}; break;
        case Suite::kF3Sims: spec = {FamilyKind::kSimsF3, 3, ell}; break;
        default: spec = {FamilyKind::kThm13, params.n, ell}; break;
      }
      spec.validate();  // reject bad parameters before any search starts
      tasks.push_back([=] { return std::vector<SuiteRow>{family_row(spec, limits)}; });
    }
  }
  SuiteReport report;
  report.suite = suite;
  for (auto& rows : run_tasks(std::move(tasks), config.threads)) {
    for (auto& r : rows) report.rows.push_back(std::move(r));
  }
  return report;
}

namespace {

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kLimitExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

void print_json(std::ostream& out, json j) {
  j["schema"] = 1;
  out << j.dump(2) << '\n';
}

std::string chain_text(const WhiteheadAut& aut) { return to_string(aut); }

json components_json(const DependenceGraph& g) {
  json comps = json::array();
  for (const auto& c : g.components()) {
    json members = json::array();
    for (Letter l : c) members.push_back(to_string(l));
    comps.push_back(members);
  }
  return comps;
}

json profile_json(const SyllableProfile& p) {
  json syl = json::array();
  for (const auto& s : p.syllables) {
    std::string text;
    for (Letter l : s.letters) {
      if (!text.empty()) text += ' ';
      text += to_string(l);
    }
    syl.push_back({{"component", s.component}, {"letters", text}});
  }
  return {{"per_generator", p.per_generator}, {"total", p.total}, {"syllables", syl}};
}

json hypothesis_json(const HypothesisReport& h) {
  json pairs = json::array();
  for (auto [i, j] : h.violating_pairs) pairs.push_back({i, j});
  json cond_ii = json::array();
  for (auto [j, holds] : h.syllable_condition_ii) cond_ii.push_back({{"j", j}, {"holds", holds}});
  json cond_i = nullptr;
  if (h.syllable_condition_i) cond_i = *h.syllable_condition_i;
  return {{"minimal", h.minimal},
          {"counts_strict", h.counts_strict},
          {"counts_distinct", h.counts_distinct},
          {"violating_pairs", pairs},
          {"syllable_condition_i", cond_i},
          {"syllable_condition_ii", cond_ii},
          {"holds", h.hypothesis_holds()}};
}

CyclicWord minimized_with_notice(const CyclicWord& w, std::ostream& err) {
  auto m = minimize(w);
  if (!m.chain.empty()) {
    err << "note: input is not minimal; using " << format_word(m.word) << " (length "
        << m.word.length() << ")\n";
  }
  return m.word;
}

}  // namespace

int cmd_minimize(std::string_view word, const RunConfig& config, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    const auto w = read_word(word, config);
    const auto m = minimize(w);
    switch (config.format) {
      case OutputFormat::kText:
        out << "word: " << format_word(m.word) << "\nlength: " << m.word.length()
            << "\nchain: " << m.chain.size() << " step(s), applied in order\n";
        for (const auto& aut : m.chain) out << "  " << chain_text(aut) << '\n';
        break;
      case OutputFormat::kJson: {
        json chain = json::array();
        for (const auto& aut : m.chain) chain.push_back(chain_text(aut));
        print_json(out, {{"input", format_word(w)},
                         {"word", format_word(m.word)},
                         {"length", m.word.length()},
                         {"chain", chain}});
        break;
      }
      case OutputFormat::kCsv:
        out << "input,word,length,chain_length\n"
            << format_word(w) << ',' << format_word(m.word) << ',' << m.word.length() << ','
            << m.chain.size() << '\n';
        break;
    }
    return kOk;
  });
}

int cmd_count(std::string_view word, const RunConfig& config,
              const std::optional<std::string>& dump_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    config.limits.validate();
    const auto u = minimized_with_notice(read_word(word, config), err);
    std::size_t n = 0;
    bool truncated = false;
    try {
      const auto ls = level_set(u, config.limits, config.threads);
      n = ls.size();
      if (dump_path) {
        std::ofstream f(*dump_path);
        if (!f) throw std::invalid_argument("cannot open dump file " + *dump_path);
        for (const auto& s : ls.sorted_strings()) f << s << '\n';
      }
    } catch (const LimitExceeded& e) {
      err << "warning: " << e.what() << '\n';
      if (dump_path) err << "warning: no dump written for a truncated search\n";
      n = e.partial_size();
      truncated = true;
    }
    switch (config.format) {
      case OutputFormat::kText:
        out << "word: " << format_word(u) << "\nlength: " << u.length() << '\n';
        if (truncated) {
          out << "N >= " << n << " (truncated)\n";
        } else {
          out << "N: " << n << '\n';
        }
        break;
      case OutputFormat::kJson: {
        json j{{"word", format_word(u)}, {"length", u.length()}, {"N", n}, {"truncated", truncated}};
        if (truncated) j["lower_bound"] = n;
        print_json(out, j);
        break;
      }
      case OutputFormat::kCsv:
        out << "word,length,N,truncated\n"
            << format_word(u) << ',' << u.length() << ',' << n << ','
            << (truncated ? "true" : "false") << '\n';
        break;
    }
    return truncated ? kLimitExceeded : kOk;
  });
}

int cmd_analyze(std::string_view word, const std::vector<std::string>& extra,
                const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (config.format == OutputFormat::kCsv) {
      throw std::invalid_argument("analyze writes text or json, not csv");
    }
    config.limits.validate();
    const auto input = read_word(word, config);
    const auto u = minimized_with_notice(input, err);
    const auto ls = level_set(u, config.limits, config.threads);
    const auto graph = dependence_graph(u, config.limits, config.threads);
    const auto hyp = check_hypothesis(u, config.limits, config.threads);

    json j{{"input", format_word(input)},
           {"word", format_word(u)},
           {"rank", u.rank()},
           {"length", u.length()},
           {"minimized", input != u},
           {"N", ls.size()},
           {"component_count", graph.component_count()},
           {"components", components_json(graph)},
           {"profile", u.empty() ? json(nullptr) : profile_json(syllable_profile(u, graph))},
           {"hypothesis", hypothesis_json(hyp)}};
    json others = json::array();
    for (const auto& text : extra) {
      const auto v = parse_word(text, u.rank());
      json o{{"word", format_word(v)}, {"length", v.length()}, {"in_level_set", ls.contains(v)}};
      o["profile"] = v.empty() ? json(nullptr) : profile_json(syllable_profile(v, graph));
      others.push_back(o);
    }
    j["others"] = others;

    if (config.format == OutputFormat::kJson) {
      print_json(out, j);
      return kOk;
    }
    out << "word: " << format_word(u) << " (length " << u.length() << ", rank " << u.rank()
        << ")\nN: " << ls.size() << "\ncomponents: " << graph.component_count() << '\n';
    int k = 0;
    for (const auto& c : graph.components()) {
      out << "  C" << k++ << ": {";
      for (std::size_t i = 0; i < c.size(); ++i) out << (i ? ", " : "") << to_string(c[i]);
      out << "}\n";
    }
    auto profile_line = [&](const std::string& label, const CyclicWord& w) {
      out << label << format_word(w) << ": ";
      if (w.empty()) {
        out << "empty\n";
        return;
      }
      const auto p = syllable_profile(w, graph);
      out << "|w|_s = " << p.total << ", per generator [";
      for (std::size_t i = 0; i < p.per_generator.size(); ++i) {
        out << (i ? " " : "") << p.per_generator[i];
      }
      out << "]\n";
    };
    profile_line("profile ", u);
    for (const auto& text : extra) {
      const auto v = parse_word(text, u.rank());
      profile_line(ls.contains(v) ? "profile (in level set) " : "profile (not in level set) ", v);
    }
    out << "hypothesis: " << (hyp.hypothesis_holds() ? "holds" : "fails")
        << " (minimal " << hyp.minimal << ", strict counts " << hyp.counts_strict << ")\n";
    return kOk;
  });
}

namespace {

void write_report(const SuiteReport& r, OutputFormat format, std::ostream& out) {
  const auto suite = std::string(to_string(r.suite));
  auto ell_text = [](const SuiteRow& row) {
    return row.ell ? std::to_string(*row.ell) : std::string();
  };
  switch (format) {
    case OutputFormat::kText: {
      std::size_t failed = 0;
      for (const auto& row : r.rows) {
        failed += !row.pass;
        out << (row.pass ? "PASS " : "FAIL ") << row.label << " rank=" << row.rank;
        if (row.ell) out << " ell=" << *row.ell;
        out << " |u|=" << row.word_length << " computed=" << (row.truncated ? ">=" : "")
            << row.computed << ' ' << to_string(row.relation) << ' ' << row.predicted << " ("
            << row.millis << " ms)\n";
      }
      out << suite << ": " << (r.rows.size() - failed) << '/' << r.rows.size() << " rows pass\n";
      break;
    }
    case OutputFormat::kCsv:
      out << "suite,rank,ell,word_length,computed_N,predicted,relation,pass,millis\n";
      for (const auto& row : r.rows) {
        out << suite << ',' << row.rank << ',' << ell_text(row) << ',' << row.word_length << ','
            << row.computed << ',' << row.predicted << ',' << to_string(row.relation) << ','
            << (row.pass ? "true" : "false") << ',' << row.millis << '\n';
      }
      break;
    case OutputFormat::kJson: {
      json rows = json::array();
      for (const auto& row : r.rows) {
        rows.push_back({{"label", row.label},
                        {"rank", row.rank},
                        {"ell", row.ell ? json(*row.ell) : json(nullptr)},
                        {"word_length", row.word_length},
                        {"computed_N", row.computed},
                        {"predicted", row.predicted},
                        {"relation", std::string(to_string(row.relation))},
                        {"pass", row.pass},
                        {"truncated", row.truncated},
                        {"millis", row.millis}});
      }
      print_json(out, {{"suite", suite},
                       {"pass", r.pass()},
                       {"truncated", r.truncated()},
                       {"rows", rows}});
      break;
    }
  }
}

}  // namespace

int cmd_verify(Suite suite, const SuiteParams& params, const RunConfig& config,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const auto report = run_suite(suite, params, config);
    write_report(report, config.format, out);
    if (report.truncated()) return kLimitExceeded;
    return report.pass() ? kOk : kVerificationFailed;
  });
}

int cmd_family(const FamilySpec& spec, bool count, const RunConfig& config, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&]() -> int {
    const Prediction p = predicted_count(spec);
    const std::string predicted = p.exact ? std::to_string(*p.exact) : p.lower_bound->str();
    json j{{"family", std::string(to_string(spec.kind))},
           {"rank", spec.rank},
           {"ell", spec.ell},
           {"word", format_word(p.word)},
           {"length", p.word.length()},
           {"predicted", predicted},
           {"relation", std::string(to_string(p.relation()))},
           {"formula", p.source}};
    int code = kOk;
    if (count) {
      std::size_t n = 0;
      try {
        n = count_minimal(p.word, config.limits, config.threads);
        j["truncated"] = false;
        j["pass"] = p.accepts(n);
        if (!p.accepts(n)) code = kVerificationFailed;
      } catch (const LimitExceeded& e) {
        err << "warning: " << e.what() << '\n';
        n = e.partial_size();
        j["truncated"] = true;
        j["lower_bound"] = n;
        code = kLimitExceeded;
      }
      j["N"] = n;
    }
    switch (config.format) {
      case OutputFormat::kJson: print_json(out, j); break;
      case OutputFormat::kCsv:
        out << "family,rank,ell,word,length,predicted,relation,N\n"
            << to_string(spec.kind) << ',' << spec.rank << ',' << spec.ell << ','
            << format_word(p.word) << ',' << p.word.length() << ',' << predicted << ','
            << to_string(p.relation()) << ',' << (j.contains("N") ? j["N"].dump() : "") << '\n';
        break;
      case OutputFormat::kText:
        out << "word: " << format_word(p.word) << "\nlength: " << p.word.length()
            << "\npredicted: N " << to_string(p.relation()) << ' ' << predicted << "  ["
            << p.source << "]\n";
        if (count) {
          out << "N: " << (code == kLimitExceeded ? ">= " : "") << j["N"].get<std::size_t>()
              << (code == kOk ? " (pass)" : code == kVerificationFailed ? " (FAIL)" : "") << '\n';
        }
        break;
    }
    return code;
  });
}

int cmd_omega(std::string_view word, int k, bool allow_empty, const RunConfig& config,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    config.limits.validate();
    const auto v = read_word(word, config);
    const auto convention = allow_empty ? ChainConvention::kAllowEmpty : ChainConvention::kNonEmpty;
    const auto omega = omega_set(v, k, config.limits, convention);
    switch (config.format) {
      case OutputFormat::kJson: {
        json members = json::array();
        for (const auto& w : omega) members.push_back(format_word(w));
        print_json(out, {{"word", format_word(v)},
                         {"k", k},
                         {"chains", allow_empty ? "allow_empty" : "non_empty"},
                         {"M", omega.size()},
                         {"members", members}});
        break;
      }
      case OutputFormat::kCsv:
        out << "word,k,M\n" << format_word(v) << ',' << k << ',' << omega.size() << '\n';
        break;
      case OutputFormat::kText:
        out << "M_" << k << ": " << omega.size() << '\n';
        for (const auto& w : omega) out << "  " << format_word(w) << '\n';
        break;
    }
    return kOk;
  });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Whitehead minimization and minimal-length orbit counts in free groups"};
  app.require_subcommand(1);
  app.fallthrough();

  int rank = 0;
  std::string format = "text";
  std::string threads = "1";
  SearchLimits limits;
  app.add_option("--rank", rank, "Rank n of the free group (default: inferred from the word)")
      ->check(CLI::Range(1, kMaxRank));
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--max-members", limits.max_members, "Abort a search above this many words")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-frontier", limits.max_frontier,
                 "Abort a search when one BFS level adds more words")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "Worker threads: a positive integer or 'auto'");

  std::string word;
  std::string dump;
  std::vector<std::string> extra;
  std::string suite_name;
  std::string ell_text;
  int n = 3;
  std::string family_name;
  int ell = 3;
  bool do_count = false;
  int k = 0;
  bool allow_empty = false;

  auto* min = app.add_subcommand("minimize", "Reduce a word to minimal length by Whitehead moves");
  min->add_option("word", word, "Word, e.g. 'x1^2 x2^-1 x1'")->required();

  auto* count = app.add_subcommand("count", "Size N of the minimal-length automorphic level set");
  count->add_option("word", word)->required();
  count->add_option("--dump", dump, "Write the sorted member list to FILE");

  auto* analyze = app.add_subcommand("analyze", "Dependence graph, syllables and hypothesis check");
  analyze->add_option("word", word)->required();
  analyze->add_option("--with", extra, "Also profile these words against the graph");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite_name)
      ->required()
      ->check(CLI::IsMember({"f2", "f3-sims", "thm13", "hypothesis-fixtures"}));
  verify->add_option("--ell", ell_text, "Values of ell: A..B or a comma list");
  verify->add_option("--n", n, "Rank for the thm13 suite")->check(CLI::Range(2, kMaxRank));

  auto* family = app.add_subcommand("family", "Print a family word and its predicted N");
  family->add_option("kind", family_name)
      ->required()
      ->check(CLI::IsMember({"thm13", "sims_f3", "f2_max", "f2_square"}));
  family->add_option("--ell", ell, "Exponent ell");
  family->add_option("--n", n, "Rank for thm13")->check(CLI::Range(2, kMaxRank));
  family->add_flag("--count", do_count, "Also compute N by breadth-first search");

  auto* omega = app.add_subcommand("omega", "Degree-monotone chain set Omega_k of a minimal word");
  omega->add_option("word", word)->required();
  omega->add_option("-k", k, "Final degree k")->check(CLI::NonNegativeNumber);
  omega->add_flag("--allow-empty", allow_empty, "Count the empty chain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  RunConfig config;
  config.rank = rank;
  config.limits = limits;
  config.format = *parse_format(format);
  if (auto t = parse_threads(threads)) {
    config.threads = *t;
  } else {
    err << "error: --threads expects a positive integer or 'auto'\n";
    return kUsage;
  }

  if (*min) return cmd_minimize(word, config, out, err);
  if (*count) {
    return cmd_count(word, config, dump.empty() ? std::nullopt : std::optional(dump), out, err);
  }
  if (*analyze) return cmd_analyze(word, extra, config, out, err);
  if (*verify) {
    SuiteParams params;
    params.n = n;
    if (!ell_text.empty()) {
      try {
        params.ell = parse_int_list(ell_text);
      } catch (const std::invalid_argument& e) {
        err << "error: --ell: " << e.what() << '\n';
        return kUsage;
      }
    }
    return cmd_verify(*parse_suite(suite_name), params, config, out, err);
  }
  if (*family) {
    FamilySpec spec{*parse_family_kind(family_name), 2, ell};
    switch (spec.kind) {
      case FamilyKind::kThm13: spec.rank = n; break;
      case FamilyKind::kSimsF3: spec.rank = 3; break;
      default: break;
    }
    return cmd_family(spec, do_count, config, out, err);
  }
  if (*omega) return cmd_omega(word, k, allow_empty, config, out, err);
  return kUsage;
}

}  // namespace freeaut::cli
