#pragma once

#include <string>
#include <vector>

#include "sublab/corpus.hpp"

namespace sublab {

enum class SuiteId {
  Lemma_1_1,
  Lemma_1_2,
  Lemma_1_3_Fwd,
  Lemma_1_4,
  Lemma_1_5,
  Lemma_2_1,
  Lemma_2_2,
  Lemma_2_3,
  Lemma_2_4,
  ExamplesPaper,
  Theorem_3_1,
  Theorem_3_2,
  Theorem_3_3,
  Theorem_3_4,
  OracleEquiv,
  Lemma_3_1,
  Lemma_3_2,
};

std::vector<SuiteId> all_suites();
std::string suite_name(SuiteId id);
SuiteId suite_from_name(const std::string& name);  // ArgumentError if unknown

enum class Outcome { Pass, Fail, Skip };

struct CaseResult {
  std::string group;
  int t = 0;  // 0 for t-independent checks
  std::string check;
  Outcome outcome = Outcome::Pass;
  std::string detail;  // failure context or skip reason
};

struct Report {
  SuiteId suite;
  std::vector<CaseResult> cases;
  double wall_seconds = 0.0;

  int passed() const;
  int failed() const;
  int skipped() const;

  /// Deterministic line-oriented rendering:
  ///   SUITE <name>
  ///   CASE <group> t=<t> <check>=<pass|fail|skip> [detail]
  ///   TOTAL pass=<a> fail=<b> skip=<c>
  std::string render() const;
};

/// Run every applicable check of the suite over the corpus. Entries over a
/// size cap are reported as skips with the cap in the detail field.
Report run_suite(SuiteId id, const Corpus& corpus,
                 const std::vector<int>& t_values, int jobs = 1);

/// Write report.render() to path; throws FormatError with path context.
void emit_report(const Report& report, const std::string& path);

}  // namespace sublab
