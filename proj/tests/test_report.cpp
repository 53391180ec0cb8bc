#include "doctest.h"
#include "json.hpp"
#include "nltest/report.hpp"
#include "testutil.hpp"

using namespace nltest;
using testutil::sent;
using testutil::step;
using testutil::test_case;

TEST_CASE("a report with no findings has empty arrays and all-zero summaries") {
  Report report;
  report.input_file = "clean.xml";
  std::string json = emit_report_json(report);
  auto parsed = nlohmann::json::parse(json);
  CHECK(parsed["tool_version"] == kToolVersion);
  CHECK(parsed["occurrences"].empty());
  CHECK(parsed["transformations"].empty());
  CHECK(parsed["warnings"].empty());
  REQUIRE(parsed["summary"]["before"].size() == 7);
  REQUIRE(parsed["summary"]["after"].size() == 7);
  for (const auto& [kind, count] : parsed["summary"]["before"].items()) {
    CHECK(count == 0);
    CHECK(parsed["summary"]["after"][kind] == 0);
  }
}

TEST_CASE("occurrences serialize with nullable step and sentence fields") {
  SmellOccurrence whole_step;
  whole_step.kind = SmellKind::EagerAction;
  whole_step.test_id = "t";
  whole_step.step_index = 3;
  whole_step.list_side = ListSide::Actions;
  whole_step.evidence = "select, click";

  SmellOccurrence pointed;
  pointed.kind = SmellKind::AmbiguousTest;
  pointed.test_id = "t";
  pointed.step_index = 1;
  pointed.list_side = ListSide::Verifications;
  pointed.sentence_ordinal = 2;
  pointed.evidence = "any";

  Report report;
  report.occurrences = {whole_step, pointed};
  report.after_counts = count_by_kind(report.occurrences);
  auto parsed = nlohmann::json::parse(emit_report_json(report));
  REQUIRE(parsed["occurrences"].size() == 2);
  CHECK(parsed["occurrences"][0]["kind"] == "EagerAction");
  CHECK(parsed["occurrences"][0]["sentence_ordinal"].is_null());
  CHECK(parsed["occurrences"][1]["list_side"] == "verifications");
  CHECK(parsed["occurrences"][1]["sentence_ordinal"] == 2);
  CHECK(parsed["summary"]["before"]["EagerAction"] == 1);
  CHECK(parsed["summary"]["before"]["AmbiguousTest"] == 1);
}

TEST_CASE("transformation records carry target, snapshots and created ids") {
  TransformationRecord rec;
  rec.transformation = Transformation::ExtractConditional;
  rec.target.kind = SmellKind::ConditionalTest;
  rec.target.test_id = "usb";
  rec.target.step_index = 2;
  rec.target.sentence_ordinal = 1;
  rec.target.evidence = "If you have a USB drive";
  rec.before = "If you have a USB drive, plug it in";
  rec.after = "Plug it in";
  rec.created_test_ids = {"usb__if_true", "usb__if_false"};

  Report report;
  report.transformations = {rec};
  auto parsed = nlohmann::json::parse(emit_report_json(report));
  const auto& j = parsed["transformations"][0];
  CHECK(j["transformation"] == "ExtractConditional");
  CHECK(j["target"]["evidence"] == "If you have a USB drive");
  CHECK(j["before"] == "If you have a USB drive, plug it in");
  CHECK(j["created_test_ids"].size() == 2);
}

TEST_CASE("json key order is stable across emissions") {
  Report report;
  report.input_file = "a.xml";
  CHECK(emit_report_json(report) == emit_report_json(report));
  std::string json = emit_report_json(report);
  CHECK(json.find("\"tool_version\"") < json.find("\"input_file\""));
  CHECK(json.find("\"occurrences\"") < json.find("\"transformations\""));
  CHECK(json.find("\"warnings\"") < json.find("\"summary\""));
}

TEST_CASE("the stats table lists all seven smells and a grand total") {
  std::array<long long, kSmellKindCount> totals{};
  totals[static_cast<int>(SmellKind::EagerAction)] = 2663;
  totals[static_cast<int>(SmellKind::UnverifiedAction)] = 1967;
  std::string table = format_stats_table(totals);
  CHECK(table.find("Eager Action") != std::string::npos);
  CHECK(table.find("2663") != std::string::npos);
  CHECK(table.find("TOTAL") != std::string::npos);
  CHECK(table.find("4630") != std::string::npos);
}

TEST_CASE("text findings name the smell, test, step and evidence") {
  SmellOccurrence occ;
  occ.kind = SmellKind::MisplacedAction;
  occ.test_id = "launcher";
  occ.step_index = 1;
  occ.list_side = ListSide::Verifications;
  occ.sentence_ordinal = 1;
  occ.evidence = "Open some windows";
  std::string text = format_occurrences_text({occ});
  CHECK(text.find("Misplaced Action") != std::string::npos);
  CHECK(text.find("'launcher'") != std::string::npos);
  CHECK(text.find("step 1") != std::string::npos);
  CHECK(text.find("Open some windows") != std::string::npos);
}
