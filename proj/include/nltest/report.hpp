// JSON report emission and the per-smell count table.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "nltest/model.hpp"

namespace nltest {

inline constexpr const char* kToolVersion = "0.1.0";

struct Report {
  std::string input_file;
  std::vector<SmellOccurrence> occurrences;        // findings on the input
  std::vector<TransformationRecord> transformations;
  std::vector<std::string> warnings;
  std::array<int, kSmellKindCount> after_counts{};  // findings on the output
};

/// Per-smell counts of an occurrence list, indexed by SmellKind.
std::array<int, kSmellKindCount> count_by_kind(
    const std::vector<SmellOccurrence>& occurrences);

/// Serializes the report with stable key order; summary.before counts the
/// occurrences array, summary.after is taken from the report.
std::string emit_report_json(const Report& report);

/// Plain-text findings listing for the terminal.
std::string format_occurrences_text(const std::vector<SmellOccurrence>& occurrences);

/// Per-smell totals as a fixed-width table with a TOTAL row.
std::string format_stats_table(const std::array<long long, kSmellKindCount>& totals);

}  // namespace nltest
