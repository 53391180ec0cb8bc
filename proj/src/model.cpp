#include "nltest/model.hpp"

#include <map>
#include <sstream>

namespace nltest {

namespace {

std::string trimmed(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

bool is_placeholder(const Sentence& s) {
  return s.origin == Origin::Placeholder ||
         s.text.rfind(kFillVerificationMarker, 0) == 0;
}

const char* to_string(SmellKind kind) {
  switch (kind) {
    case SmellKind::UnverifiedAction: return "UnverifiedAction";
    case SmellKind::MisplacedPrecondition: return "MisplacedPrecondition";
    case SmellKind::MisplacedAction: return "MisplacedAction";
    case SmellKind::MisplacedVerification: return "MisplacedVerification";
    case SmellKind::EagerAction: return "EagerAction";
    case SmellKind::AmbiguousTest: return "AmbiguousTest";
    case SmellKind::ConditionalTest: return "ConditionalTest";
  }
  return "?";
}

const char* display_name(SmellKind kind) {
  switch (kind) {
    case SmellKind::UnverifiedAction: return "Unverified Action";
    case SmellKind::MisplacedPrecondition: return "Misplaced Precondition";
    case SmellKind::MisplacedAction: return "Misplaced Action";
    case SmellKind::MisplacedVerification: return "Misplaced Verification";
    case SmellKind::EagerAction: return "Eager Action";
    case SmellKind::AmbiguousTest: return "Ambiguous Test";
    case SmellKind::ConditionalTest: return "Conditional Test";
  }
  return "?";
}

const char* to_string(ListSide side) {
  switch (side) {
    case ListSide::Actions: return "actions";
    case ListSide::Verifications: return "verifications";
    case ListSide::Preconditions: return "preconditions";
  }
  return "?";
}

const char* to_string(Transformation t) {
  switch (t) {
    case Transformation::ExtractConditional: return "ExtractConditional";
    case Transformation::ExtractAction: return "ExtractAction";
    case Transformation::SeparateActions: return "SeparateActions";
    case Transformation::ExtractVerification: return "ExtractVerification";
    case Transformation::ExtractAmbiguity: return "ExtractAmbiguity";
    case Transformation::ExtractPrecondition: return "ExtractPrecondition";
    case Transformation::FillVerification: return "FillVerification";
  }
  return "?";
}

const char* display_name(Transformation t) {
  switch (t) {
    case Transformation::ExtractConditional: return "Extract Conditional";
    case Transformation::ExtractAction: return "Extract Action";
    case Transformation::SeparateActions: return "Separate Actions";
    case Transformation::ExtractVerification: return "Extract Verification";
    case Transformation::ExtractAmbiguity: return "Extract Ambiguity";
    case Transformation::ExtractPrecondition: return "Extract Precondition";
    case Transformation::FillVerification: return "Fill Verification";
  }
  return "?";
}

int order_index(Transformation t) { return static_cast<int>(t); }

SmellKind addressed_smell(Transformation t) {
  switch (t) {
    case Transformation::ExtractConditional: return SmellKind::ConditionalTest;
    case Transformation::ExtractAction: return SmellKind::MisplacedAction;
    case Transformation::SeparateActions: return SmellKind::EagerAction;
    case Transformation::ExtractVerification: return SmellKind::MisplacedVerification;
    case Transformation::ExtractAmbiguity: return SmellKind::AmbiguousTest;
    case Transformation::ExtractPrecondition: return SmellKind::MisplacedPrecondition;
    case Transformation::FillVerification: return SmellKind::UnverifiedAction;
  }
  return SmellKind::UnverifiedAction;
}

TestCase renumber_steps(const TestCase& test) {
  TestCase out = test;
  int next = 1;
  for (Step& step : out.steps) step.index = next++;
  return out;
}

std::vector<std::string> validate(const TestSuite& suite) {
  std::vector<std::string> violations;
  auto add = [&](std::string msg) { violations.push_back(std::move(msg)); };

  std::map<std::string, size_t> seen_ids;
  for (size_t i = 0; i < suite.tests.size(); ++i) {
    const TestCase& test = suite.tests[i];
    auto [it, inserted] = seen_ids.emplace(test.id, i);
    if (!inserted) {
      std::ostringstream os;
      os << "TestSuite.tests: duplicate test id '" << test.id
         << "' (positions " << it->second + 1 << " and " << i + 1 << ")";
      add(os.str());
    }
    if (trimmed(test.id).empty()) {
      std::ostringstream os;
      os << "TestCase.id: empty id (position " << i + 1 << ")";
      add(os.str());
    }

    for (size_t p = 0; p < test.preconditions.size(); ++p) {
      if (trimmed(test.preconditions[p]).empty()) {
        std::ostringstream os;
        os << "TestCase '" << test.id << "'.preconditions[" << p + 1
           << "]: empty clause";
        add(os.str());
      }
    }

    for (size_t s = 0; s < test.steps.size(); ++s) {
      const Step& step = test.steps[s];
      if (step.index != static_cast<int>(s) + 1) {
        std::ostringstream os;
        os << "TestCase '" << test.id
           << "'.steps: indices not contiguous from 1 (position " << s + 1
           << " has index " << step.index << ")";
        add(os.str());
      }
      auto check_list = [&](const std::vector<Sentence>& list, const char* field) {
        for (size_t k = 0; k < list.size(); ++k) {
          const Sentence& sentence = list[k];
          if (trimmed(sentence.text).empty()) {
            std::ostringstream os;
            os << "Step " << step.index << " of test '" << test.id << "'."
               << field << "[" << k + 1 << "]: empty sentence text";
            add(os.str());
          }
          if (sentence.origin == Origin::Placeholder &&
              sentence.text.rfind(kFillVerificationMarker, 0) != 0) {
            std::ostringstream os;
            os << "Step " << step.index << " of test '" << test.id << "'."
               << field << "[" << k + 1
               << "]: origin=placeholder but text lacks the "
               << kFillVerificationMarker << " marker";
            add(os.str());
          }
        }
      };
      check_list(step.actions, "actions");
      check_list(step.verifications, "verifications");
    }
  }
  return violations;
}

namespace {

bool same_texts(const std::vector<Sentence>& a, const std::vector<Sentence>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].text != b[i].text) return false;
  return true;
}

}  // namespace

bool equal_ignore_origin(const TestCase& a, const TestCase& b) {
  if (a.id != b.id || a.preconditions != b.preconditions ||
      a.steps.size() != b.steps.size())
    return false;
  for (size_t i = 0; i < a.steps.size(); ++i) {
    if (a.steps[i].index != b.steps[i].index) return false;
    if (!same_texts(a.steps[i].actions, b.steps[i].actions)) return false;
    if (!same_texts(a.steps[i].verifications, b.steps[i].verifications)) return false;
  }
  return true;
}

bool equal_ignore_origin(const TestSuite& a, const TestSuite& b) {
  if (a.name != b.name || a.tests.size() != b.tests.size()) return false;
  for (size_t i = 0; i < a.tests.size(); ++i)
    if (!equal_ignore_origin(a.tests[i], b.tests[i])) return false;
  return true;
}

}  // namespace nltest
