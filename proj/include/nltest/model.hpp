// Core data model for natural-language test suites: a suite of tests, each
// test a precondition clause list plus ordered steps of action/verification
// sentences. All types are immutable-by-convention values; operations on
// them are pure functions.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nltest {

/// Who produced a sentence: the test author, the fixer (placeholder flags),
/// or the fixer rewriting authored text in place.
enum class Origin { Authored, Placeholder, Rewritten };

/// Marker that opens every placeholder verification.
inline constexpr const char* kFillVerificationMarker = "FILL_VERIFICATION";

struct Sentence {
  std::string text;
  Origin origin = Origin::Authored;

  bool operator==(const Sentence&) const = default;
};

/// True for tool-inserted verification flags. Placeholders satisfy the
/// "step has a verification" contract but are inert for every detector
/// and transformation.
bool is_placeholder(const Sentence& s);

struct Step {
  int index = 1;
  std::vector<Sentence> actions;
  std::vector<Sentence> verifications;

  bool operator==(const Step&) const = default;
};

struct TestCase {
  std::string id;
  // Precondition clauses; the conjunction of all clauses is the test's
  // precondition expression.
  std::vector<std::string> preconditions;
  std::vector<Step> steps;

  bool operator==(const TestCase&) const = default;
};

struct TestSuite {
  std::string name;
  std::vector<TestCase> tests;

  bool operator==(const TestSuite&) const = default;
};

// ---------------------------------------------------------------------------
// Smells and audit records
// ---------------------------------------------------------------------------

enum class SmellKind {
  UnverifiedAction,
  MisplacedPrecondition,
  MisplacedAction,
  MisplacedVerification,
  EagerAction,
  AmbiguousTest,
  ConditionalTest,
};

inline constexpr int kSmellKindCount = 7;

const char* to_string(SmellKind kind);
const char* display_name(SmellKind kind);

enum class ListSide { Actions, Verifications, Preconditions };

const char* to_string(ListSide side);

/// One detected smell instance. step_index/sentence_ordinal are absent for
/// locations that are not tied to a step or a single sentence (for example
/// Eager Action, which is a property of a whole step's action list). When a
/// single sentence is referenced, evidence is a substring of it.
struct SmellOccurrence {
  SmellKind kind = SmellKind::UnverifiedAction;
  std::string test_id;
  std::optional<int> step_index;
  ListSide list_side = ListSide::Actions;
  std::optional<int> sentence_ordinal;  // 1-based within the list
  std::string evidence;

  bool operator==(const SmellOccurrence&) const = default;
};

/// The seven catalog transformations, numbered in pipeline execution order.
enum class Transformation {
  ExtractConditional = 1,
  ExtractAction = 2,
  SeparateActions = 3,
  ExtractVerification = 4,
  ExtractAmbiguity = 5,
  ExtractPrecondition = 6,
  FillVerification = 7,
};

inline constexpr int kTransformationCount = 7;

const char* to_string(Transformation t);
const char* display_name(Transformation t);
int order_index(Transformation t);
SmellKind addressed_smell(Transformation t);

/// Audit entry: one transformation application at one location.
struct TransformationRecord {
  Transformation transformation = Transformation::FillVerification;
  SmellOccurrence target;
  std::string before;
  std::string after;
  std::string advisory;                      // non-empty for Extract Ambiguity
  std::vector<std::string> created_test_ids; // non-empty only for Extract Conditional

  bool operator==(const TransformationRecord&) const = default;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Relabels steps 1..n preserving order and contents. Idempotent.
TestCase renumber_steps(const TestCase& test);

/// Returns one description per violated invariant; empty means the suite is
/// well formed. Each violation names the type, field, test id and step index
/// involved.
std::vector<std::string> validate(const TestSuite& suite);

/// Structural equality that ignores sentence origin tags. Used to compare a
/// fixer run against hand-written expected suites.
bool equal_ignore_origin(const TestSuite& a, const TestSuite& b);
bool equal_ignore_origin(const TestCase& a, const TestCase& b);

}  // namespace nltest
