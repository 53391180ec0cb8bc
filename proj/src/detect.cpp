#include "nltest/detect.hpp"

#include <algorithm>
#include <sstream>

namespace nltest {

namespace {

SmellOccurrence occurrence(SmellKind kind, const TestCase& test, int step_index,
                           ListSide side, std::optional<int> ordinal,
                           std::string evidence) {
  SmellOccurrence occ;
  occ.kind = kind;
  occ.test_id = test.id;
  occ.step_index = step_index;
  occ.list_side = side;
  occ.sentence_ordinal = ordinal;
  occ.evidence = std::move(evidence);
  return occ;
}

}  // namespace

std::vector<SmellOccurrence> detect_unverified_action(const TestCase& test,
                                                      const Lexicon&) {
  std::vector<SmellOccurrence> out;
  for (const Step& step : test.steps) {
    if (step.actions.empty() || !step.verifications.empty()) continue;
    out.push_back(occurrence(SmellKind::UnverifiedAction, test, step.index,
                             ListSide::Actions, 1, step.actions.front().text));
  }
  return out;
}

std::vector<SmellOccurrence> detect_misplaced_precondition(const TestCase& test,
                                                           const Lexicon& lexicon) {
  std::vector<SmellOccurrence> out;
  if (test.steps.empty()) return out;
  const Step& first = test.steps.front();
  if (first.index != 1 || first.actions.empty()) return out;
  const Sentence& sentence = first.actions.front();
  AnnotatedSentence ann = tokenize_and_tag(sentence, lexicon);
  SentenceContext ctx{1, 1, ListSide::Actions};
  if (classify_sentence(ann, ctx, lexicon) == SentenceRole::Precondition)
    out.push_back(occurrence(SmellKind::MisplacedPrecondition, test, 1,
                             ListSide::Actions, 1, sentence.text));
  return out;
}

std::vector<SmellOccurrence> detect_misplaced_action(const TestCase& test,
                                                     const Lexicon& lexicon) {
  std::vector<SmellOccurrence> out;
  for (const Step& step : test.steps) {
    for (size_t i = 0; i < step.verifications.size(); ++i) {
      const Sentence& sentence = step.verifications[i];
      if (is_placeholder(sentence)) continue;
      AnnotatedSentence ann = tokenize_and_tag(sentence, lexicon);
      SentenceContext ctx{step.index, static_cast<int>(i) + 1,
                          ListSide::Verifications};
      if (classify_sentence(ann, ctx, lexicon) == SentenceRole::Action)
        out.push_back(occurrence(SmellKind::MisplacedAction, test, step.index,
                                 ListSide::Verifications, static_cast<int>(i) + 1,
                                 sentence.text));
    }
  }
  return out;
}

std::vector<SmellOccurrence> detect_misplaced_verification(const TestCase& test,
                                                           const Lexicon& lexicon) {
  std::vector<SmellOccurrence> out;
  for (const Step& step : test.steps) {
    for (size_t i = 0; i < step.actions.size(); ++i) {
      const Sentence& sentence = step.actions[i];
      if (is_placeholder(sentence)) continue;
      AnnotatedSentence ann = tokenize_and_tag(sentence, lexicon);
      SentenceContext ctx{step.index, static_cast<int>(i) + 1, ListSide::Actions};
      if (classify_sentence(ann, ctx, lexicon) == SentenceRole::Verification)
        out.push_back(occurrence(SmellKind::MisplacedVerification, test, step.index,
                                 ListSide::Actions, static_cast<int>(i) + 1,
                                 sentence.text));
    }
  }
  return out;
}

std::vector<SmellOccurrence> detect_eager_action(const TestCase& test,
                                                 const Lexicon& lexicon) {
  std::vector<SmellOccurrence> out;
  for (const Step& step : test.steps) {
    size_t imperative_clauses = 0;
    std::vector<std::string> verbs;
    for (const Sentence& sentence : step.actions) {
      AnnotatedSentence ann = tokenize_and_tag(sentence, lexicon);
      for (const Clause& clause : split_clauses(ann, lexicon)) {
        if (clause.imperative_count == 0) continue;
        ++imperative_clauses;
        verbs.push_back(clause.lead_verb);
      }
    }
    if (imperative_clauses <= 1) continue;
    std::string evidence;
    for (const std::string& v : verbs) {
      if (!evidence.empty()) evidence += ", ";
      evidence += v;
    }
    out.push_back(occurrence(SmellKind::EagerAction, test, step.index,
                             ListSide::Actions, std::nullopt, evidence));
  }
  return out;
}

std::vector<SmellOccurrence> detect_ambiguous_test(const TestCase& test,
                                                   const Lexicon& lexicon) {
  std::vector<SmellOccurrence> out;
  for (const Step& step : test.steps) {
    auto scan_list = [&](const std::vector<Sentence>& list, ListSide side) {
      for (size_t i = 0; i < list.size(); ++i) {
        const Sentence& sentence = list[i];
        if (is_placeholder(sentence)) continue;
        AnnotatedSentence ann = tokenize_and_tag(sentence, lexicon);
        for (const TermMatch& term : find_ambiguous_terms(ann, lexicon))
          out.push_back(occurrence(SmellKind::AmbiguousTest, test, step.index, side,
                                   static_cast<int>(i) + 1, term.text));
      }
    };
    scan_list(step.actions, ListSide::Actions);
    scan_list(step.verifications, ListSide::Verifications);
  }
  return out;
}

std::vector<SmellOccurrence> detect_conditional_test(const TestCase& test,
                                                     const Lexicon& lexicon) {
  std::vector<SmellOccurrence> out;
  for (const Step& step : test.steps) {
    for (size_t i = 0; i < step.actions.size(); ++i) {
      const Sentence& sentence = step.actions[i];
      if (is_placeholder(sentence)) continue;
      AnnotatedSentence ann = tokenize_and_tag(sentence, lexicon);
      if (ann.conditional)
        out.push_back(occurrence(SmellKind::ConditionalTest, test, step.index,
                                 ListSide::Actions, static_cast<int>(i) + 1,
                                 ann.conditional->clause));
    }
  }
  return out;
}

std::vector<SmellOccurrence> detect_kind(const TestCase& test, const Lexicon& lexicon,
                                         SmellKind kind) {
  switch (kind) {
    case SmellKind::UnverifiedAction: return detect_unverified_action(test, lexicon);
    case SmellKind::MisplacedPrecondition:
      return detect_misplaced_precondition(test, lexicon);
    case SmellKind::MisplacedAction: return detect_misplaced_action(test, lexicon);
    case SmellKind::MisplacedVerification:
      return detect_misplaced_verification(test, lexicon);
    case SmellKind::EagerAction: return detect_eager_action(test, lexicon);
    case SmellKind::AmbiguousTest: return detect_ambiguous_test(test, lexicon);
    case SmellKind::ConditionalTest: return detect_conditional_test(test, lexicon);
  }
  return {};
}

std::vector<SmellOccurrence> detect_all(const TestCase& test, const Lexicon& lexicon) {
  std::vector<SmellOccurrence> out;
  for (int k = 0; k < kSmellKindCount; ++k) {
    auto found = detect_kind(test, lexicon, static_cast<SmellKind>(k));
    out.insert(out.end(), found.begin(), found.end());
  }
  auto key = [](const SmellOccurrence& o) {
    return std::make_tuple(o.step_index.value_or(0), static_cast<int>(o.list_side),
                           o.sentence_ordinal.value_or(0), static_cast<int>(o.kind));
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const SmellOccurrence& a, const SmellOccurrence& b) {
                     return key(a) < key(b);
                   });
  return out;
}

std::vector<std::string> collect_warnings(const TestCase& test, const Lexicon& lexicon) {
  std::vector<std::string> warnings;
  auto add = [&](std::string msg) {
    if (std::find(warnings.begin(), warnings.end(), msg) == warnings.end())
      warnings.push_back(std::move(msg));
  };

  if (test.steps.empty()) add("test '" + test.id + "': no steps");

  for (const Step& step : test.steps) {
    if (step.actions.empty() && step.verifications.empty()) {
      std::ostringstream os;
      os << "test '" << test.id << "' step " << step.index
         << ": no actions and no verifications";
      add(os.str());
    }
    auto scan_list = [&](const std::vector<Sentence>& list, ListSide side) {
      for (const Sentence& sentence : list) {
        if (is_placeholder(sentence)) continue;
        AnnotatedSentence ann = tokenize_and_tag(sentence, lexicon);
        if (side == ListSide::Verifications && ann.conditional) {
          std::ostringstream os;
          os << "test '" << test.id << "' step " << step.index
             << ": conditional in verification (not transformed): \""
             << ann.conditional->clause << "\"";
          add(os.str());
        }
        for (const std::string& marker : unhandled_conditional_markers(ann)) {
          std::ostringstream os;
          os << "test '" << test.id << "' step " << step.index
             << ": possible conditional (unhandled marker '" << marker << "')";
          add(os.str());
        }
      }
    };
    scan_list(step.actions, ListSide::Actions);
    scan_list(step.verifications, ListSide::Verifications);
  }
  return warnings;
}

}  // namespace nltest
