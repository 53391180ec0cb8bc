// One predicate per smell, mapping a test case to the smell occurrences it
// contains. Detectors are pure; placeholder verifications are inert
// everywhere except that they satisfy the Unverified Action contract.

#pragma once

#include <vector>

#include "nltest/annotate.hpp"
#include "nltest/lexicon.hpp"
#include "nltest/model.hpp"

namespace nltest {

/// Steps with at least one action and no verification at all.
std::vector<SmellOccurrence> detect_unverified_action(const TestCase& test,
                                                      const Lexicon& lexicon);

/// Step 1's first action classifying as a precondition. At most one.
std::vector<SmellOccurrence> detect_misplaced_precondition(const TestCase& test,
                                                           const Lexicon& lexicon);

/// Verification sentences classifying as actions.
std::vector<SmellOccurrence> detect_misplaced_action(const TestCase& test,
                                                     const Lexicon& lexicon);

/// Action sentences classifying as verifications.
std::vector<SmellOccurrence> detect_misplaced_verification(const TestCase& test,
                                                           const Lexicon& lexicon);

/// Steps whose action sentences hold more than one imperative clause in
/// total. Evidence lists the clause-initial verbs.
std::vector<SmellOccurrence> detect_eager_action(const TestCase& test,
                                                 const Lexicon& lexicon);

/// One occurrence per (sentence, ambiguous term) pair across action and
/// verification sentences.
std::vector<SmellOccurrence> detect_ambiguous_test(const TestCase& test,
                                                   const Lexicon& lexicon);

/// Action sentences carrying an "if" / "in case" clause.
std::vector<SmellOccurrence> detect_conditional_test(const TestCase& test,
                                                     const Lexicon& lexicon);

/// All seven detectors, ordered by (step, list side, sentence, kind).
std::vector<SmellOccurrence> detect_all(const TestCase& test, const Lexicon& lexicon);

std::vector<SmellOccurrence> detect_kind(const TestCase& test, const Lexicon& lexicon,
                                         SmellKind kind);

/// Advisory findings that are reported but never transformed: conditionals
/// in verification sentences, conditional-like markers the fixer does not
/// handle, tests and steps with nothing in them.
std::vector<std::string> collect_warnings(const TestCase& test, const Lexicon& lexicon);

}  // namespace nltest
