#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "nltest/lexicon.hpp"

using namespace nltest;

TEST_CASE("seed lexicon covers the core vocabulary") {
  Lexicon lex = Lexicon::seed();
  for (const char* v : {"click", "open", "select", "enter", "press", "plug",
                        "configure", "enable", "wait"})
    CHECK(lex.is_action_verb(v));
  CHECK(lex.verification_cues.count("verify"));
  CHECK(lex.verification_cues.count("check that"));
  CHECK(lex.precondition_cues.count("ensure"));
  CHECK(lex.precondition_cues.count("make sure"));
  CHECK(lex.connectors.count("and then"));
  CHECK(lex.ambiguity_terms.count("approximately"));
  CHECK(lex.ambiguity_terms.count("a few"));
  CHECK(lex.closed_class.at("the").pos == Pos::DET);
  CHECK(lex.closed_class.at("after").tag == "IN");
}

TEST_CASE("action verbs and verification cues are disjoint on single words") {
  Lexicon lex = Lexicon::seed();
  for (const std::string& cue : lex.verification_cues) {
    if (cue.find(' ') != std::string::npos) continue;
    CHECK_MESSAGE(!lex.action_verbs.count(cue), "overlapping entry: ", cue);
  }
}

TEST_CASE("shipped lexicon files agree with the seed") {
  Lexicon from_files;
  from_files.merge_dir(NLTEST_LEXICON_DATA_DIR);
  Lexicon seed = Lexicon::seed();
  CHECK(from_files.action_verbs == seed.action_verbs);
  CHECK(from_files.verification_cues == seed.verification_cues);
  CHECK(from_files.precondition_cues == seed.precondition_cues);
  CHECK(from_files.connectors == seed.connectors);
  CHECK(from_files.ambiguity_terms == seed.ambiguity_terms);
  for (const auto& [word, tag] : from_files.closed_class) {
    REQUIRE_MESSAGE(seed.closed_class.count(word), "unknown closed-class word: ", word);
    CHECK(seed.closed_class.at(word).pos == tag.pos);
  }
}

TEST_CASE("merge_dir extends the seed, lower-cases entries and skips comments") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "nltest_lexicon_test";
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "action_verbs.txt");
    out << "# custom verbs\nFROB  \nre-check\n";
  }
  Lexicon lex = Lexicon::seed();
  lex.merge_dir(dir.string());
  CHECK(lex.is_action_verb("frob"));
  CHECK(lex.is_action_verb("re-check"));
  CHECK(lex.is_action_verb("click"));  // seed entries survive
  fs::remove_all(dir);
}

TEST_CASE("merge_dir rejects a missing directory") {
  Lexicon lex = Lexicon::seed();
  CHECK_THROWS_AS(lex.merge_dir("/nonexistent/lexicon/dir"), std::runtime_error);
}
