// The seven catalog transformations. Each is a pure rewrite: it never
// mutates its input and is an exact no-op (identical output, no records)
// when the smell it addresses is absent.

#pragma once

#include <vector>

#include "nltest/lexicon.hpp"
#include "nltest/model.hpp"

namespace nltest {

struct TransformOutcome {
  std::vector<TestCase> tests;  // length 1; 2 when Extract Conditional splits
  std::vector<TransformationRecord> records;
  std::vector<std::string> warnings;
};

/// Appends a "FILL_VERIFICATION: <first action>" placeholder to every step
/// that has actions but no verification.
TransformOutcome fill_verification(const TestCase& test, const Lexicon& lexicon);

/// Moves step 1's first action into the precondition clauses when it
/// classifies as a precondition. Drops step 1 when that leaves it empty.
/// At most one extraction per invocation.
TransformOutcome extract_precondition(const TestCase& test, const Lexicon& lexicon);

/// Moves verification sentences classifying as actions to the end of the
/// step's action list, preserving their relative order.
TransformOutcome extract_action(const TestCase& test, const Lexicon& lexicon);

/// Moves action sentences classifying as verifications to the front of the
/// step's verification list, before any pre-existing verification.
TransformOutcome extract_verification(const TestCase& test, const Lexicon& lexicon);

/// Replaces every step holding more than one imperative clause with one step
/// per clause. The original verifications attach to the last new step; the
/// other new steps are left unverified for fill_verification.
TransformOutcome separate_actions(const TestCase& test, const Lexicon& lexicon);

/// Wraps every ambiguous term in action and verification sentences in a
/// "<<SPECIFY: term>>" marker; each record carries an advisory asking for an
/// exact value.
TransformOutcome extract_ambiguity(const TestCase& test, const Lexicon& lexicon);

/// Splits a test at its first conditional action into a test assuming the
/// condition holds (clause appended to the preconditions, sentence replaced
/// by its remainder) and one assuming it does not (steps truncated before
/// the conditional step). The second test is dropped with a warning when it
/// would have no steps.
TransformOutcome extract_conditional(const TestCase& test, const Lexicon& lexicon);

TransformOutcome apply_transformation(const TestCase& test, const Lexicon& lexicon,
                                      Transformation transformation);

}  // namespace nltest
