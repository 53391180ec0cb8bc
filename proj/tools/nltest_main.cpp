// nltest command line: detect smells in natural-language test suites, fix
// them, or total them across a directory.

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nltest/lexicon.hpp"
#include "nltest/pipeline.hpp"
#include "nltest/report.hpp"
#include "nltest/xml_io.hpp"

namespace {

using namespace nltest;

const std::map<std::string, Transformation>& transformation_names() {
  static const std::map<std::string, Transformation> names = {
      {"extract-conditional", Transformation::ExtractConditional},
      {"extract-action", Transformation::ExtractAction},
      {"separate-actions", Transformation::SeparateActions},
      {"extract-verification", Transformation::ExtractVerification},
      {"extract-ambiguity", Transformation::ExtractAmbiguity},
      {"extract-precondition", Transformation::ExtractPrecondition},
      {"fill-verification", Transformation::FillVerification},
  };
  return names;
}

std::vector<Transformation> parse_transformation_list(const std::string& csv) {
  std::vector<Transformation> out;
  std::string item;
  std::istringstream is(csv);
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    auto it = transformation_names().find(item);
    if (it == transformation_names().end())
      throw std::runtime_error("unknown transformation '" + item +
                               "' (expected e.g. extract-conditional, "
                               "fill-verification)");
    out.push_back(it->second);
  }
  return out;
}

Lexicon load_lexicon(const std::string& dir) {
  Lexicon lexicon = Lexicon::seed();
  if (!dir.empty()) lexicon.merge_dir(dir);
  return lexicon;
}

// Reads a suite, assigns positional numbering to out-of-order steps, and
// rejects anything else that does not validate.
TestSuite load_checked(const std::string& path, std::vector<std::string>& warnings) {
  ParsedSuite parsed = load_suite_file(path);
  warnings.insert(warnings.end(), parsed.warnings.begin(), parsed.warnings.end());
  TestSuite suite = std::move(parsed.suite);
  for (TestCase& test : suite.tests) {
    bool contiguous = true;
    for (size_t i = 0; i < test.steps.size(); ++i)
      if (test.steps[i].index != static_cast<int>(i) + 1) contiguous = false;
    if (!contiguous) {
      test = renumber_steps(test);
      warnings.push_back("test '" + test.id +
                         "': step indices were not contiguous; renumbered");
    }
  }
  std::vector<std::string> violations = validate(suite);
  if (!violations.empty()) {
    std::string msg = "suite does not validate:";
    for (const std::string& v : violations) msg += "\n  " + v;
    throw std::runtime_error(msg);
  }
  return suite;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

int run_detect(const std::string& input, const std::string& report_path,
               const std::string& format, const std::string& lexicon_dir) {
  Lexicon lexicon = load_lexicon(lexicon_dir);
  std::vector<std::string> warnings;
  TestSuite suite = load_checked(input, warnings);
  std::vector<SmellOccurrence> occurrences = detect_only(suite, lexicon);
  for (const std::string& w : scan_warnings(suite, lexicon)) warnings.push_back(w);

  Report report;
  report.input_file = input;
  report.occurrences = occurrences;
  report.warnings = warnings;
  report.after_counts = count_by_kind(occurrences);  // nothing was transformed

  std::string json = emit_report_json(report);
  if (!report_path.empty()) write_text_file(report_path, json);

  if (format == "json") {
    std::cout << json;
  } else {
    std::cout << format_occurrences_text(occurrences);
    for (const std::string& w : warnings) std::cout << "warning: " << w << "\n";
    if (occurrences.empty()) std::cout << "no smells found\n";
    else std::cout << occurrences.size() << " smell occurrence(s)\n";
  }
  return occurrences.empty() ? 0 : 1;
}

int run_fix(const std::string& input, const std::string& output,
            const std::string& report_path, const std::string& only_csv,
            const std::string& skip_csv, const std::string& lexicon_dir,
            int max_iterations) {
  if (!only_csv.empty() && !skip_csv.empty())
    throw std::runtime_error("--only and --skip cannot be combined");

  Lexicon lexicon = load_lexicon(lexicon_dir);
  std::vector<std::string> warnings;
  TestSuite suite = load_checked(input, warnings);

  PipelineConfig config = PipelineConfig::defaults();
  if (!only_csv.empty())
    config = PipelineConfig::with_only(parse_transformation_list(only_csv));
  else if (!skip_csv.empty())
    config = PipelineConfig::with_skip(parse_transformation_list(skip_csv));
  if (max_iterations > 0) config.max_iterations_per_transformation = max_iterations;

  std::vector<SmellOccurrence> before = detect_only(suite, lexicon);
  PipelineResult result = run_pipeline(suite, lexicon, config);
  write_suite_file(output, result.suite);

  Report report;
  report.input_file = input;
  report.occurrences = before;
  report.transformations = result.records;
  report.warnings = warnings;
  for (const std::string& w : result.warnings) report.warnings.push_back(w);
  report.after_counts = count_by_kind(detect_only(result.suite, lexicon));
  if (!report_path.empty()) write_text_file(report_path, emit_report_json(report));

  std::cout << "wrote " << output << ": " << result.suite.tests.size()
            << " test(s), " << result.records.size() << " transformation(s), "
            << report.warnings.size() << " warning(s)\n";
  return 0;
}

int run_stats(const std::string& dir, const std::string& lexicon_dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw std::runtime_error("not a directory: " + dir);
  Lexicon lexicon = load_lexicon(lexicon_dir);

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".xml")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::array<long long, kSmellKindCount> totals{};
  for (const fs::path& file : files) {
    std::vector<std::string> warnings;
    TestSuite suite = load_checked(file.string(), warnings);
    for (const SmellOccurrence& occ : detect_only(suite, lexicon))
      ++totals[static_cast<int>(occ.kind)];
  }
  std::cout << format_stats_table(totals);
  std::cout << "(" << files.size() << " file(s) scanned)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linter and auto-fixer for natural-language test suites"};
  app.require_subcommand(1);

  std::string input, output, report_path, lexicon_dir, only_csv, skip_csv;
  std::string format = "text";
  std::string stats_dir;
  int max_iterations = 0;

  CLI::App* detect = app.add_subcommand("detect", "List smells in a suite");
  detect->add_option("input", input, "suite XML file")->required();
  detect->add_option("--report", report_path, "write a JSON report here");
  detect->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  detect->add_option("--lexicon-dir", lexicon_dir, "extra lexicon files")
      ->envname("NLTEST_LEXICON_DIR");

  CLI::App* fix = app.add_subcommand("fix", "Rewrite a suite to remove smells");
  fix->add_option("input", input, "suite XML file")->required();
  fix->add_option("-o,--output", output, "transformed suite file")->required();
  fix->add_option("--report", report_path, "write a JSON report here");
  fix->add_option("--only", only_csv, "comma-separated transformations to run");
  fix->add_option("--skip", skip_csv, "comma-separated transformations to skip");
  fix->add_option("--lexicon-dir", lexicon_dir, "extra lexicon files")
      ->envname("NLTEST_LEXICON_DIR");
  fix->add_option("--max-iterations", max_iterations,
                  "per-transformation iteration cap");

  CLI::App* stats = app.add_subcommand("stats", "Per-smell totals for a directory");
  stats->add_option("dir", stats_dir, "directory of suite XML files")->required();
  stats->add_option("--lexicon-dir", lexicon_dir, "extra lexicon files")
      ->envname("NLTEST_LEXICON_DIR");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (detect->parsed())
      return run_detect(input, report_path, format, lexicon_dir);
    if (fix->parsed())
      return run_fix(input, output, report_path, only_csv, skip_csv, lexicon_dir,
                     max_iterations);
    if (stats->parsed()) return run_stats(stats_dir, lexicon_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
