#include "nltest/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace nltest {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json occurrence_json(const SmellOccurrence& occ) {
  ordered_json j;
  j["kind"] = to_string(occ.kind);
  j["test_id"] = occ.test_id;
  if (occ.step_index) j["step_index"] = *occ.step_index;
  else j["step_index"] = nullptr;
  j["list_side"] = to_string(occ.list_side);
  if (occ.sentence_ordinal) j["sentence_ordinal"] = *occ.sentence_ordinal;
  else j["sentence_ordinal"] = nullptr;
  j["evidence"] = occ.evidence;
  return j;
}

ordered_json record_json(const TransformationRecord& rec) {
  ordered_json j;
  j["transformation"] = to_string(rec.transformation);
  j["target"] = occurrence_json(rec.target);
  j["before"] = rec.before;
  j["after"] = rec.after;
  j["advisory"] = rec.advisory;
  j["created_test_ids"] = rec.created_test_ids;
  return j;
}

ordered_json counts_json(const std::array<int, kSmellKindCount>& counts) {
  ordered_json j;
  for (int k = 0; k < kSmellKindCount; ++k)
    j[to_string(static_cast<SmellKind>(k))] = counts[k];
  return j;
}

}  // namespace

std::array<int, kSmellKindCount> count_by_kind(
    const std::vector<SmellOccurrence>& occurrences) {
  std::array<int, kSmellKindCount> counts{};
  for (const SmellOccurrence& occ : occurrences)
    ++counts[static_cast<int>(occ.kind)];
  return counts;
}

std::string emit_report_json(const Report& report) {
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["input_file"] = report.input_file;
  j["occurrences"] = ordered_json::array();
  for (const SmellOccurrence& occ : report.occurrences)
    j["occurrences"].push_back(occurrence_json(occ));
  j["transformations"] = ordered_json::array();
  for (const TransformationRecord& rec : report.transformations)
    j["transformations"].push_back(record_json(rec));
  j["warnings"] = report.warnings;
  j["summary"]["before"] = counts_json(count_by_kind(report.occurrences));
  j["summary"]["after"] = counts_json(report.after_counts);
  return j.dump(2) + "\n";
}

std::string format_occurrences_text(const std::vector<SmellOccurrence>& occurrences) {
  std::ostringstream os;
  for (const SmellOccurrence& occ : occurrences) {
    os << display_name(occ.kind) << ": test '" << occ.test_id << "'";
    if (occ.step_index) os << ", step " << *occ.step_index;
    os << ", " << to_string(occ.list_side);
    if (occ.sentence_ordinal) os << "[" << *occ.sentence_ordinal << "]";
    os << ": \"" << occ.evidence << "\"\n";
  }
  return os.str();
}

std::string format_stats_table(const std::array<long long, kSmellKindCount>& totals) {
  std::ostringstream os;
  constexpr int name_width = 24;
  constexpr int count_width = 10;
  os << std::left << std::setw(name_width) << "Test Smell" << std::right
     << std::setw(count_width) << "Total" << "\n";
  os << std::string(name_width + count_width, '-') << "\n";
  long long total = 0;
  for (int k = 0; k < kSmellKindCount; ++k) {
    os << std::left << std::setw(name_width)
       << display_name(static_cast<SmellKind>(k)) << std::right
       << std::setw(count_width) << totals[k] << "\n";
    total += totals[k];
  }
  os << std::string(name_width + count_width, '-') << "\n";
  os << std::left << std::setw(name_width) << "TOTAL" << std::right
     << std::setw(count_width) << total << "\n";
  return os.str();
}

}  // namespace nltest
