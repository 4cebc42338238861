#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "mzvlab/json_io.hpp"
#include "mzvlab/words.hpp"

namespace mzv {

// --- enumeration (deterministic: by length/weight, then canonical order) ---

/// All normalized words of exactly this length (PDY: pd/dp-free sequences).
std::vector<Word> words_of_length(Alphabet a, int length);
std::vector<Word> words_up_to(Alphabet a, int max_length);
/// Words of h0 with 1 <= weight <= max_weight (plus the unit if asked).
std::vector<Word> convergent_h2(int max_weight, bool with_unit = false);
/// Words of H0 with 1 <= PY-weight <= max_weight and depth <= max_depth.
std::vector<Word> convergent_py(int max_weight, int max_depth, bool with_unit = false);
/// Compositions of length 1..max_length with first part in [first_min, max_part],
/// later parts in [rest_min, max_part] and part sum <= max_sum.
std::vector<Composition> compositions(int max_length, int first_min, int rest_min, int max_part,
                                      int max_sum);

// --- suites ---

struct CaseResult {
  bool ok = true;
  Json expected;
  std::string detail;
};

struct Case {
  Json input;
  std::function<CaseResult()> run;
};

struct SuiteOptions {
  /// Enumeration bound. Its unit depends on the suite (weight, total length or
  /// total z-length); see suite_description.
  int max_weight = 5;
  /// Truncation order for q-series suites.
  int order = 30;
  /// 0: MZV_LAB_THREADS if set, else hardware concurrency.
  int threads = 0;
};

struct Failure {
  std::size_t index;
  Json input;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::vector<Failure> failures;
  double seconds = 0;
  bool passed() const { return failures.empty(); }
};

std::vector<std::string> suite_names();
std::string suite_description(const std::string& name);

/// Throws DomainError for unknown names. "all" is the concatenation of every suite.
std::vector<Case> build_suite(const std::string& name, const SuiteOptions& opts);

int worker_count(const SuiteOptions& opts);

/// Runs every case; the report lists failures in case order whatever the worker count.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);
SuiteReport run_cases(const std::string& name, const std::vector<Case>& cases, const SuiteOptions& opts);

Json report_to_json(const SuiteReport& r);

/// JSON Lines: a header object, then one {"index", "input", "expected", "ok"} per case.
/// Returns the number of records written.
std::size_t export_vectors(const std::string& name, const SuiteOptions& opts, std::ostream& out);

}  // namespace mzv
