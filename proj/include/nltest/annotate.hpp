// Deterministic lexicon-plus-rules analysis of test-step prose. One pass
// tokenizes and tags each sentence; a clause scan then identifies imperative
// verbs and clause boundaries. Tagging priority per token:
//
//   1. closed-class lexicon lookup (determiners, prepositions, pronouns,
//      conjunctions, auxiliaries/modals, number words, fixed adverbs)
//   2. numeral pattern            -> NUM/CD
//   3. punctuation                -> PUNCT
//   4. clause-initial bare verb (action-lexicon verb, or an unknown
//      sentence-initial capitalized word followed by a determiner/noun)
//                                 -> VERB/VB, VerbForm=Inf, dep ROOT on the
//                                    first such verb
//   5. action-lexicon verb elsewhere -> VERB/VB
//   6. "-ly" suffix or ambiguity-lexicon adverb -> ADV/RB, dep advmod
//   7. cue verbs and "-s" inflections of known verbs -> VERB
//   8. default NOUN/NN (NNS for an "-s" suffix)
//
// Dependency labels are reduced to {ROOT, advmod, other}; nothing downstream
// consumes any other label.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nltest/lexicon.hpp"
#include "nltest/model.hpp"

namespace nltest {

enum class Dep { Root, Advmod, Other };

const char* to_string(Dep dep);

struct Token {
  std::string text;   // source span, original casing
  std::string lower;
  Pos pos = Pos::X;
  std::string tag;
  Dep dep = Dep::Other;
  std::vector<std::string> morph;  // "Key=Value" entries
  size_t begin = 0;   // char offsets into the sentence text
  size_t end = 0;
  bool is_word = false;
  bool masked = false;  // inside a <<SPECIFY: ...>> marker

  bool operator==(const Token&) const = default;
};

/// Conditional clause split: c is the conditional clause (marker included),
/// remainder is the sentence without it. remainder may be empty when the
/// whole sentence is conditional.
struct ConditionalSplit {
  std::string clause;
  std::string remainder;

  bool operator==(const ConditionalSplit&) const = default;
};

/// A vague-term or manner-adverb match.
struct TermMatch {
  size_t position = 0;     // first token of the match
  size_t token_count = 1;  // tokens covered (multi-word lexicon entries)
  std::string text;        // source-cased span

  bool operator==(const TermMatch&) const = default;
};

struct AnnotatedSentence {
  Sentence source;
  std::vector<Token> tokens;
  std::vector<size_t> imperative_verbs;  // action imperatives only
  std::vector<size_t> manner_adverbs;    // ADV/RB tokens with dep=advmod
  std::vector<TermMatch> vague_terms;    // ambiguity-lexicon matches
  std::optional<ConditionalSplit> conditional;
};

/// One clause of a sentence, as produced by the splitter.
struct Clause {
  std::string text;            // source substring, trimmed
  size_t first_token = 0;
  size_t last_token = 0;       // inclusive
  size_t imperative_count = 0;
  std::string lead_verb;       // lower-cased first imperative verb, if any
};

AnnotatedSentence tokenize_and_tag(const Sentence& sentence, const Lexicon& lexicon);

enum class SentenceRole { Action, Verification, Precondition };

const char* to_string(SentenceRole role);

/// Position of a sentence inside its test, for classification scoping.
struct SentenceContext {
  int step_index = 1;
  int ordinal = 1;  // 1-based position in its list
  ListSide side = ListSide::Actions;
};

/// Classifies a sentence. Precondition only for a precondition cue opening
/// the first action of step 1; Verification for an opening verification cue
/// or, absent any imperative, a contained cue; Action for any sentence with
/// an imperative verb. Sentences matching nothing take the role of the list
/// they sit in.
SentenceRole classify_sentence(const AnnotatedSentence& annotated,
                               const SentenceContext& context,
                               const Lexicon& lexicon);

/// Splits a sentence into imperative clauses at connector runs, clause
/// commas/semicolons and sentence boundaries. Segments lacking an imperative
/// verb or a second word are merged back into their neighbour. A sentence
/// with at most one imperative verb is returned whole.
std::vector<Clause> split_clauses(const AnnotatedSentence& annotated,
                                  const Lexicon& lexicon);
std::vector<std::string> split_imperative_clauses(const AnnotatedSentence& annotated,
                                                  const Lexicon& lexicon);

/// All ambiguity signals of a sentence: manner adverbs (ADV/RB/advmod) plus
/// ambiguity-lexicon matches, in token order. Terms inside an existing
/// <<SPECIFY: ...>> marker are not reported.
std::vector<TermMatch> find_ambiguous_terms(const AnnotatedSentence& annotated,
                                            const Lexicon& lexicon);

/// Finds an "if" / "in case" clause. A sentence-initial conditional ends at
/// the first comma; a mid-sentence conditional extends to the sentence end.
/// Returns nothing when no marker is present.
std::optional<ConditionalSplit> extract_conditional_clause(
    const AnnotatedSentence& annotated);

/// Conditional-like markers the fixer does not transform ("when", "unless",
/// "whenever" opening a clause); surfaced as warnings.
std::vector<std::string> unhandled_conditional_markers(
    const AnnotatedSentence& annotated);

/// Strips leading "then"/"and" connectors and upper-cases the first letter.
/// Used when a split clause becomes a step of its own.
std::string normalize_clause_text(const std::string& text);

std::string normalize_whitespace(const std::string& text);

}  // namespace nltest
