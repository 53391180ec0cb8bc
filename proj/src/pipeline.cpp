#include "nltest/pipeline.hpp"

#include <algorithm>
#include <sstream>

namespace nltest {

namespace {

const Transformation kExecutionOrder[] = {
    Transformation::ExtractConditional, Transformation::ExtractAction,
    Transformation::SeparateActions,    Transformation::ExtractVerification,
    Transformation::ExtractAmbiguity,   Transformation::ExtractPrecondition,
    Transformation::FillVerification,
};

}  // namespace

PipelineConfig PipelineConfig::defaults() {
  PipelineConfig config;
  config.enabled.assign(std::begin(kExecutionOrder), std::end(kExecutionOrder));
  return config;
}

PipelineConfig PipelineConfig::with_only(const std::vector<Transformation>& picked) {
  PipelineConfig config;
  for (Transformation t : kExecutionOrder)
    if (std::find(picked.begin(), picked.end(), t) != picked.end())
      config.enabled.push_back(t);
  return config;
}

PipelineConfig PipelineConfig::with_skip(const std::vector<Transformation>& skipped) {
  PipelineConfig config;
  for (Transformation t : kExecutionOrder)
    if (std::find(skipped.begin(), skipped.end(), t) == skipped.end())
      config.enabled.push_back(t);
  return config;
}

namespace {

class Runner {
 public:
  Runner(const Lexicon& lexicon, const PipelineConfig& config)
      : lexicon_(lexicon), config_(config) {}

  std::vector<TestCase> process(const TestCase& test) {
    generated_ = 0;
    std::vector<TestCase> current{test};
    for (Transformation stage : config_.enabled) {
      std::vector<TestCase> next;
      for (const TestCase& tc : current) {
        if (stage == Transformation::ExtractConditional) {
          expand_conditionals(tc, next, 0);
        } else {
          next.push_back(run_stage(tc, stage));
        }
      }
      current = std::move(next);
    }
    return current;
  }

  std::vector<TransformationRecord> records;
  std::vector<std::string> warnings;

 private:
  void expand_conditionals(TestCase test, std::vector<TestCase>& out, int depth) {
    for (int iter = 0;; ++iter) {
      if (detect_conditional_test(test, lexicon_).empty()) {
        out.push_back(std::move(test));
        return;
      }
      if (iter >= config_.max_iterations_per_transformation)
        throw PipelineError("iteration cap exceeded: ExtractConditional on test '" +
                            test.id + "'");
      TransformOutcome outcome = extract_conditional(test, lexicon_);
      take(outcome);
      generated_ += outcome.tests.size() - 1;
      if (static_cast<int>(generated_) > config_.max_generated_tests_per_test)
        throw PipelineError("generated-test cap exceeded while splitting test '" +
                            test.id + "'");
      if (outcome.tests.size() == 2) {
        expand_conditionals(std::move(outcome.tests[0]), out, depth + 1);
        expand_conditionals(std::move(outcome.tests[1]), out, depth + 1);
        return;
      }
      test = std::move(outcome.tests[0]);
    }
  }

  TestCase run_stage(TestCase test, Transformation stage) {
    for (int iter = 0;; ++iter) {
      if (detect_kind(test, lexicon_, addressed_smell(stage)).empty()) return test;
      if (iter >= config_.max_iterations_per_transformation) {
        throw PipelineError(std::string("iteration cap exceeded: ") +
                            to_string(stage) + " on test '" + test.id + "'");
      }
      TransformOutcome outcome = apply_transformation(test, lexicon_, stage);
      take(outcome);
      if (outcome.tests.size() == 1 && outcome.tests[0] == test &&
          outcome.records.empty()) {
        throw PipelineError(std::string("no progress: ") + to_string(stage) +
                            " on test '" + test.id + "'");
      }
      test = std::move(outcome.tests[0]);
    }
  }

  void take(const TransformOutcome& outcome) {
    records.insert(records.end(), outcome.records.begin(), outcome.records.end());
    for (const std::string& w : outcome.warnings) add_warning(w);
  }

  void add_warning(const std::string& w) {
    if (std::find(warnings.begin(), warnings.end(), w) == warnings.end())
      warnings.push_back(w);
  }

  const Lexicon& lexicon_;
  const PipelineConfig& config_;
  size_t generated_ = 0;
};

}  // namespace

PipelineResult run_pipeline(const TestSuite& suite, const Lexicon& lexicon,
                            const PipelineConfig& config) {
  std::vector<std::string> violations = validate(suite);
  if (!violations.empty())
    throw std::invalid_argument("suite does not validate: " + violations.front());

  PipelineResult result;
  result.suite.name = suite.name;
  Runner runner(lexicon, config);
  for (const TestCase& test : suite.tests) {
    for (const std::string& w : collect_warnings(test, lexicon)) {
      if (std::find(runner.warnings.begin(), runner.warnings.end(), w) ==
          runner.warnings.end())
        runner.warnings.push_back(w);
    }
    for (TestCase& done : runner.process(test))
      result.suite.tests.push_back(std::move(done));
  }
  result.records = std::move(runner.records);
  result.warnings = std::move(runner.warnings);
  return result;
}

std::vector<SmellOccurrence> detect_only(const TestSuite& suite, const Lexicon& lexicon) {
  std::vector<SmellOccurrence> out;
  for (const TestCase& test : suite.tests) {
    auto found = detect_all(test, lexicon);
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

std::vector<std::string> scan_warnings(const TestSuite& suite, const Lexicon& lexicon) {
  std::vector<std::string> out;
  for (const TestCase& test : suite.tests) {
    for (const std::string& w : collect_warnings(test, lexicon))
      if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  }
  return out;
}

}  // namespace nltest
