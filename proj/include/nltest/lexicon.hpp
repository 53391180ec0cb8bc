// Word lists driving the linguistic analysis. The tool ships a seed lexicon
// compiled in (mirrored by the files under data/lexicon/); users can extend
// any category by pointing --lexicon-dir / NLTEST_LEXICON_DIR at a directory
// of category files: one lower-cased entry per line, '#' starts a comment.

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace nltest {

enum class Pos { ADP, ADV, NUM, NOUN, PUNCT, VERB, DET, PRON, CONJ, ADJ, PART, X };

const char* to_string(Pos pos);

/// Fixed tag assignment for a closed-class word.
struct ClosedClassTag {
  Pos pos = Pos::X;
  std::string tag;
};

struct Lexicon {
  std::set<std::string> action_verbs;
  std::set<std::string> verification_cues;   // words and phrases
  std::set<std::string> precondition_cues;   // words and phrases
  std::set<std::string> connectors;          // words, phrases, ";"
  std::set<std::string> ambiguity_terms;     // manner adverbs + vague quantifiers
  std::map<std::string, ClosedClassTag> closed_class;  // word -> POS/TAG

  /// The built-in seed lexicon.
  static Lexicon seed();

  /// Merges entries from category files found in dir (missing files are
  /// fine). Recognized file names: action_verbs.txt, verification_cues.txt,
  /// precondition_cues.txt, connectors.txt, ambiguity_terms.txt,
  /// determiners.txt, prepositions.txt, pronouns.txt, conjunctions.txt,
  /// numerals.txt, auxiliaries.txt, adverbs.txt.
  /// Throws std::runtime_error when dir does not exist.
  void merge_dir(const std::string& dir);

  bool is_action_verb(const std::string& lower) const;
  bool is_connector_word(const std::string& lower) const;
  /// True when the word belongs to any category (used to decide whether a
  /// sentence-initial capitalized word is "unknown" and may be presumed an
  /// imperative verb).
  bool knows_word(const std::string& lower) const;
};

/// Lower-cases ASCII letters; everything else passes through.
std::string ascii_lower(std::string_view s);

/// Splits a lexicon phrase entry into its words.
std::vector<std::string> phrase_words(const std::string& entry);

}  // namespace nltest
