#include <fstream>
#include <map>
#include <sstream>

#include "doctest.h"
#include "nltest/pipeline.hpp"
#include "nltest/xml_io.hpp"
#include "testutil.hpp"

using namespace nltest;
using testutil::sent;
using testutil::step;
using testutil::suite;
using testutil::test_case;

namespace {

const Lexicon& lex() {
  static const Lexicon instance = Lexicon::seed();
  return instance;
}

std::array<int, kSmellKindCount> counts_of(const TestSuite& s) {
  std::array<int, kSmellKindCount> counts{};
  for (const SmellOccurrence& occ : detect_only(s, lex()))
    ++counts[static_cast<int>(occ.kind)];
  return counts;
}

}  // namespace

TEST_CASE("a clean suite passes through unchanged with no records") {
  TestSuite clean = suite(
      "s", {test_case("c", {step(1, {sent("Open the print dialog")},
                                 {sent("The dialog appears")})})});
  PipelineResult result = run_pipeline(clean, lex(), PipelineConfig::defaults());
  CHECK(result.suite == clean);
  CHECK(result.records.empty());
  CHECK(result.warnings.empty());
}

TEST_CASE("a conditional plus an eager step yields two fully fixed tests") {
  TestSuite s = suite(
      "s",
      {test_case(
          "usb-eject",
          {step(1, {sent("Open the file manager")}, {sent("The window appears")}),
           step(2, {sent("If you have a USB drive, plug it in and wait 5 seconds")}),
           step(3, {sent("Click the eject icon")}, {sent("The drive disappears")})})});
  PipelineResult result = run_pipeline(s, lex(), PipelineConfig::defaults());

  REQUIRE(result.suite.tests.size() == 2);
  const TestCase& yes = result.suite.tests[0];
  const TestCase& no = result.suite.tests[1];
  CHECK(yes.id == "usb-eject__if_true");
  CHECK(no.id == "usb-eject__if_false");

  // the eager conditional remainder was split and the new steps flagged
  REQUIRE(yes.steps.size() == 4);
  CHECK(yes.steps[1].actions[0].text == "Plug it in");
  CHECK(yes.steps[2].actions[0].text == "Wait 5 seconds");
  CHECK(is_placeholder(yes.steps[1].verifications[0]));
  CHECK(is_placeholder(yes.steps[2].verifications[0]));

  // every smell is gone from both outputs
  for (int c : counts_of(result.suite)) CHECK(c == 0);

  // the conditional record precedes the separate-actions records
  REQUIRE(result.records.size() >= 2);
  CHECK(result.records[0].transformation == Transformation::ExtractConditional);
  CHECK(result.records[0].target.test_id == "usb-eject");
  CHECK(result.records[1].transformation == Transformation::SeparateActions);
}

TEST_CASE("record streams are non-decreasing per test with fill verification last") {
  TestSuite s = suite(
      "s",
      {test_case("multi",
                 {step(1, {sent("Open the backup tool and then click 'New backup'")}),
                  step(2, {sent("Wait approximately 10 seconds")},
                       {sent("The progress bar appears")}),
                  step(3, {sent("Verify that the archive is listed"),
                           sent("Close the backup tool")})})});
  PipelineResult result = run_pipeline(s, lex(), PipelineConfig::defaults());

  std::map<std::string, int> last_index;
  std::map<std::string, bool> saw_fill;
  for (const TransformationRecord& rec : result.records) {
    const std::string& id = rec.target.test_id;
    int index = order_index(rec.transformation);
    if (last_index.count(id)) CHECK(index >= last_index[id]);
    last_index[id] = index;
    if (saw_fill[id])
      CHECK(rec.transformation == Transformation::FillVerification);
    if (rec.transformation == Transformation::FillVerification) saw_fill[id] = true;
  }
  for (int c : counts_of(result.suite)) CHECK(c == 0);
}

TEST_CASE("generated tests re-enter the first stage for nested conditionals") {
  TestSuite s = suite(
      "s", {test_case(
               "display",
               {step(1, {sent("Open the display settings")}, {sent("It opens")}),
                step(2, {sent("If you have an external monitor, connect it")},
                     {sent("The monitor is detected")}),
                step(3, {sent("In case the image looks blurry, open the resolution "
                              "menu")},
                     {sent("The menu appears")})})});
  PipelineResult result = run_pipeline(s, lex(), PipelineConfig::defaults());
  REQUIRE(result.suite.tests.size() == 3);
  CHECK(result.suite.tests[0].id == "display__if_true__if_true");
  CHECK(result.suite.tests[1].id == "display__if_true__if_false");
  CHECK(result.suite.tests[2].id == "display__if_false");
  REQUIRE(result.suite.tests[0].preconditions.size() == 2);
  CHECK(result.suite.tests[0].preconditions[1] == "In case the image looks blurry");
  for (int c : counts_of(result.suite)) CHECK(c == 0);
}

TEST_CASE("output preserves input order with expansions in the parent slot") {
  TestSuite s = suite(
      "s", {test_case("a", {step(1, {sent("Click OK")}, {sent("OK closes")})}),
            test_case("b", {step(1, {sent("Open the app")}, {sent("It opens")}),
                            step(2, {sent("If you have a USB drive, plug it in")},
                                 {sent("Mounted")})}),
            test_case("c", {step(1, {sent("Close the app")}, {sent("It closes")})})});
  PipelineResult result = run_pipeline(s, lex(), PipelineConfig::defaults());
  REQUIRE(result.suite.tests.size() == 4);
  CHECK(result.suite.tests[0].id == "a");
  CHECK(result.suite.tests[1].id == "b__if_true");
  CHECK(result.suite.tests[2].id == "b__if_false");
  CHECK(result.suite.tests[3].id == "c");
}

TEST_CASE("the pipeline is a fixpoint under the default configuration") {
  TestSuite s = suite(
      "s",
      {test_case("mix", {step(1, {sent("Ensure that the daemon is running")}),
                         step(2, {sent("Open any application and then click OK")}),
                         step(3, {sent("Verify that the list is empty"),
                                  sent("Close the app")})})});
  PipelineResult first = run_pipeline(s, lex(), PipelineConfig::defaults());
  PipelineResult second = run_pipeline(first.suite, lex(), PipelineConfig::defaults());
  CHECK(second.suite == first.suite);
  CHECK(second.records.empty());
}

TEST_CASE("disabled stages do not run") {
  TestSuite s = suite(
      "s", {test_case("t", {step(1, {sent("Open any application")})})});
  PipelineConfig only_fill =
      PipelineConfig::with_only({Transformation::FillVerification});
  PipelineResult result = run_pipeline(s, lex(), only_fill);
  // ambiguity survives, the verification flag is added
  CHECK(result.suite.tests[0].steps[0].actions[0].text == "Open any application");
  CHECK(is_placeholder(result.suite.tests[0].steps[0].verifications[0]));
  CHECK(counts_of(result.suite)[static_cast<int>(SmellKind::AmbiguousTest)] == 1);
}

TEST_CASE("with_only and with_skip keep the execution order") {
  PipelineConfig config = PipelineConfig::with_only(
      {Transformation::FillVerification, Transformation::ExtractConditional});
  REQUIRE(config.enabled.size() == 2);
  CHECK(config.enabled[0] == Transformation::ExtractConditional);
  CHECK(config.enabled[1] == Transformation::FillVerification);

  config = PipelineConfig::with_skip({Transformation::ExtractAmbiguity});
  REQUIRE(config.enabled.size() == 6);
  for (size_t i = 1; i < config.enabled.size(); ++i)
    CHECK(order_index(config.enabled[i - 1]) < order_index(config.enabled[i]));
}

TEST_CASE("the iteration cap aborts with the test id and transformation") {
  TestSuite s = suite(
      "s", {test_case("stuck", {step(1, {sent("Click the Dash icon")})})});
  PipelineConfig config = PipelineConfig::defaults();
  config.max_iterations_per_transformation = 0;
  CHECK_THROWS_WITH_AS(run_pipeline(s, lex(), config),
                       "iteration cap exceeded: FillVerification on test 'stuck'",
                       PipelineError);
}

TEST_CASE("an invalid suite is rejected up front") {
  TestSuite s = suite("s", {test_case("dup", {step(1, {sent("Click OK")})}),
                            test_case("dup", {step(1, {sent("Click OK")})})});
  CHECK_THROWS_AS(run_pipeline(s, lex(), PipelineConfig::defaults()),
                  std::invalid_argument);
}

TEST_CASE("detect_only counts equal the independent per-detector sums on the corpus") {
  std::ifstream in(std::string(NLTEST_FIXTURE_DIR) + "/corpus.xml", std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  TestSuite corpus = parse_suite_xml(buffer.str()).suite;

  std::array<int, kSmellKindCount> combined = counts_of(corpus);
  std::array<int, kSmellKindCount> separate{};
  for (const TestCase& t : corpus.tests)
    for (int k = 0; k < kSmellKindCount; ++k)
      separate[k] += static_cast<int>(
          detect_kind(t, lex(), static_cast<SmellKind>(k)).size());
  CHECK(combined == separate);
}

TEST_CASE("detect_only concatenates per-test results in order") {
  TestSuite s = suite(
      "s", {test_case("one", {step(1, {sent("Open any application")})}),
            test_case("two", {step(1, {sent("Click OK")}, {sent("Done")})})});
  auto occ = detect_only(s, lex());
  std::vector<SmellOccurrence> expected;
  for (const TestCase& t : s.tests)
    for (const SmellOccurrence& o : detect_all(t, lex())) expected.push_back(o);
  CHECK(occ == expected);
  CHECK(detect_only(suite("empty", {}), lex()).empty());
}
