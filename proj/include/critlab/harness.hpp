#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "critlab/certificate.hpp"
#include "critlab/criticality.hpp"
#include "critlab/graph.hpp"
#include "critlab/graph6.hpp"

namespace critlab {

enum class Subcommand {
  color,
  chi,
  critical,
  evenfactor,
  barrier,
  normalize,
  lemma1,
  lemma2,
  audit,
  theorem2_xcheck,
};

const char* to_string(Subcommand s);
std::optional<Subcommand> parse_subcommand(std::string_view name);

struct Budgets {
  std::uint64_t color = kDefaultColorBudget;
  std::uint64_t factor = kDefaultFactorBudget;
  std::uint64_t barrier = kDefaultBarrierBudget;

  /// Multiplies every budget, rounding down but never below 1.
  Budgets scaled(double factor) const;
};

/// Reads CRITLAB_BUDGET_SCALE; 1 when unset. UsageError unless positive.
double budget_scale_from_env();

struct Filters {
  int n_min = 0;
  int n_max = kGraph6MaxOrder;
  int delta_min = 0;
  int delta_max = kGraph6MaxOrder;
  bool class2_only = false;
  bool critical_only = false;
};

struct JobSpec {
  Subcommand command = Subcommand::chi;
  /// Path to a graph6 file; empty or "-" reads standard input.
  std::string input;
  /// Graph6 strings given directly; used instead of `input` when non-empty.
  std::vector<std::string> graphs;
  Filters filters;
  Budgets budgets;
  int jobs = 1;
  std::string json_out;
  std::string csv_out;
  /// Directory receiving one bundle per falsification; empty disables.
  std::string falsification_dir;

  /// UsageError on non-positive budgets or jobs, or inverted ranges.
  void validate() const;
};

struct InputGraph {
  int line = 0;  // 1-based
  std::string text;
  Graph graph;
};

struct InputError {
  int line = 0;
  std::string message;
};

struct ParsedStream {
  std::vector<InputGraph> graphs;
  std::vector<InputError> errors;
};

/// One graph6 string per line; blank lines are skipped.
ParsedStream read_graph6_stream(std::istream& in);

enum class RecordStatus { ok, falsification, budget_exhausted, inapplicable, error };

const char* to_string(RecordStatus s);

struct GraphRecord {
  int line = 0;
  std::string graph6;
  int n = 0;
  int m = 0;
  int delta = 0;
  std::optional<int> chi;
  Verdict critical = Verdict::unknown;
  bool critical_known = false;
  int divalent_count = 0;
  bool hypothesis_met = false;
  std::optional<bool> even_factor;
  std::optional<int> barrier_size;
  RecordStatus status = RecordStatus::ok;
  std::string detail;
  cert::Json certificate;
};

struct RunSummary {
  int read = 0;
  int malformed = 0;
  int filtered_out = 0;
  int processed = 0;
  int critical = 0;
  int with_even_factor = 0;
  int without_even_factor = 0;
  int falsifications = 0;
  int budget_exhausted = 0;
  int inapplicable = 0;
  int errors = 0;
};

struct RunReport {
  Subcommand command = Subcommand::chi;
  std::vector<GraphRecord> records;  // input order
  std::vector<InputError> malformed;
  RunSummary summary;

  /// 0 when clean, 1 on any falsification or error, otherwise 2 when some
  /// budget ran out.
  int exit_code() const;
  cert::Json to_json() const;
  std::string to_csv() const;
};

/// Order-preserving filter. The class and criticality predicates run exact
/// searches; graphs they cannot decide within budget are kept.
std::vector<InputGraph> filter_stream(const JobSpec& spec, std::vector<InputGraph> graphs);

/// Runs the subcommand over already parsed input.
RunReport run(const JobSpec& spec, const ParsedStream& input);
/// Reads spec.input (or spec.graphs) and runs. UsageError when unreadable.
RunReport run(const JobSpec& spec);

/// Writes the JSON and CSV files named in spec and the falsification
/// bundles. Each file is written to a temporary name and renamed.
void write_outputs(const JobSpec& spec, const RunReport& report);

}  // namespace critlab
