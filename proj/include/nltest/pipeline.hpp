// Orchestrates detection and transformation. Transformations run in a fixed
// order (Extract Conditional, Extract Action, Separate Actions, Extract
// Verification, Extract Ambiguity, Extract Precondition, Fill Verification);
// each stage repeats until its detector is silent before the next one runs.
// Tests created by Extract Conditional re-enter at the first stage.

#pragma once

#include <stdexcept>
#include <vector>

#include "nltest/detect.hpp"
#include "nltest/lexicon.hpp"
#include "nltest/model.hpp"
#include "nltest/transform.hpp"

namespace nltest {

struct PipelineConfig {
  std::vector<Transformation> enabled;  // kept in execution order
  int max_iterations_per_transformation = 100;
  int max_generated_tests_per_test = 64;

  static PipelineConfig defaults();
  /// Restricts the run to the named transformations (execution order is
  /// preserved regardless of the order given).
  static PipelineConfig with_only(const std::vector<Transformation>& picked);
  static PipelineConfig with_skip(const std::vector<Transformation>& skipped);
};

struct PipelineResult {
  TestSuite suite;
  std::vector<TransformationRecord> records;
  std::vector<std::string> warnings;
};

class PipelineError : public std::runtime_error {
 public:
  explicit PipelineError(const std::string& what) : std::runtime_error(what) {}
};

/// Runs the enabled transformations over every test. The output preserves
/// the input test order, with tests created by Extract Conditional taking
/// their parent's position. Throws PipelineError when a stage fails to reach
/// its fixpoint within the iteration cap or a test expands past the
/// generated-test cap; throws std::invalid_argument when the suite does not
/// validate.
PipelineResult run_pipeline(const TestSuite& suite, const Lexicon& lexicon,
                            const PipelineConfig& config);

/// Lint mode: every detector over every test, no rewriting.
std::vector<SmellOccurrence> detect_only(const TestSuite& suite, const Lexicon& lexicon);

/// Warnings for findings outside the seven smells (advisory only).
std::vector<std::string> scan_warnings(const TestSuite& suite, const Lexicon& lexicon);

}  // namespace nltest
