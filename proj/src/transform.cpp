#include "nltest/transform.hpp"

#include <algorithm>
#include <sstream>

#include "nltest/annotate.hpp"
#include "nltest/detect.hpp"

namespace nltest {

namespace {

TransformOutcome unchanged(const TestCase& test) {
  TransformOutcome out;
  out.tests.push_back(test);
  return out;
}

SmellOccurrence make_target(SmellKind kind, const std::string& test_id,
                            std::optional<int> step_index, ListSide side,
                            std::optional<int> ordinal, std::string evidence) {
  SmellOccurrence occ;
  occ.kind = kind;
  occ.test_id = test_id;
  occ.step_index = step_index;
  occ.list_side = side;
  occ.sentence_ordinal = ordinal;
  occ.evidence = std::move(evidence);
  return occ;
}

std::string join_texts(const std::vector<Sentence>& sentences) {
  std::string out;
  for (const Sentence& s : sentences) {
    if (!out.empty()) out += " | ";
    out += s.text;
  }
  return out;
}

}  // namespace

TransformOutcome fill_verification(const TestCase& test, const Lexicon&) {
  TransformOutcome out;
  TestCase result = test;
  for (Step& step : result.steps) {
    if (!step.verifications.empty()) continue;
    if (step.actions.empty()) {
      std::ostringstream os;
      os << "test '" << test.id << "' step " << step.index
         << ": empty step, no verification flag added";
      out.warnings.push_back(os.str());
      continue;
    }
    Sentence flag;
    flag.text = std::string(kFillVerificationMarker) + ": " + step.actions.front().text;
    flag.origin = Origin::Placeholder;
    step.verifications.push_back(flag);

    TransformationRecord rec;
    rec.transformation = Transformation::FillVerification;
    rec.target = make_target(SmellKind::UnverifiedAction, test.id, step.index,
                             ListSide::Actions, 1, step.actions.front().text);
    rec.before = "";
    rec.after = flag.text;
    out.records.push_back(std::move(rec));
  }
  out.tests.push_back(std::move(result));
  return out;
}

TransformOutcome extract_precondition(const TestCase& test, const Lexicon& lexicon) {
  if (test.steps.empty() || test.steps.front().actions.empty())
    return unchanged(test);
  const Sentence& first = test.steps.front().actions.front();
  AnnotatedSentence ann = tokenize_and_tag(first, lexicon);
  SentenceContext ctx{1, 1, ListSide::Actions};
  if (classify_sentence(ann, ctx, lexicon) != SentenceRole::Precondition)
    return unchanged(test);

  TransformOutcome out;
  TestCase result = test;
  Step& step1 = result.steps.front();
  std::string clause = step1.actions.front().text;
  step1.actions.erase(step1.actions.begin());
  result.preconditions.push_back(clause);
  if (step1.actions.empty() && step1.verifications.empty()) {
    result.steps.erase(result.steps.begin());
    result = renumber_steps(result);
  }

  TransformationRecord rec;
  rec.transformation = Transformation::ExtractPrecondition;
  rec.target = make_target(SmellKind::MisplacedPrecondition, test.id, 1,
                           ListSide::Actions, 1, clause);
  rec.before = clause;
  rec.after = clause;
  out.records.push_back(std::move(rec));
  out.tests.push_back(std::move(result));
  return out;
}

TransformOutcome extract_action(const TestCase& test, const Lexicon& lexicon) {
  TransformOutcome out;
  TestCase result = test;
  for (Step& step : result.steps) {
    std::vector<Sentence> kept;
    std::vector<Sentence> moved;
    for (size_t i = 0; i < step.verifications.size(); ++i) {
      const Sentence& sentence = step.verifications[i];
      bool move = false;
      if (!is_placeholder(sentence)) {
        AnnotatedSentence ann = tokenize_and_tag(sentence, lexicon);
        SentenceContext ctx{step.index, static_cast<int>(i) + 1,
                            ListSide::Verifications};
        move = classify_sentence(ann, ctx, lexicon) == SentenceRole::Action;
      }
      if (!move) {
        kept.push_back(sentence);
        continue;
      }
      moved.push_back(sentence);
      TransformationRecord rec;
      rec.transformation = Transformation::ExtractAction;
      rec.target = make_target(SmellKind::MisplacedAction, test.id, step.index,
                               ListSide::Verifications, static_cast<int>(i) + 1,
                               sentence.text);
      rec.before = sentence.text;
      rec.after = sentence.text;
      out.records.push_back(std::move(rec));
    }
    if (moved.empty()) continue;
    step.verifications = std::move(kept);
    for (Sentence& s : moved) step.actions.push_back(std::move(s));
  }
  out.tests.push_back(std::move(result));
  return out;
}

TransformOutcome extract_verification(const TestCase& test, const Lexicon& lexicon) {
  TransformOutcome out;
  TestCase result = test;
  for (Step& step : result.steps) {
    std::vector<Sentence> kept;
    std::vector<Sentence> moved;
    for (size_t i = 0; i < step.actions.size(); ++i) {
      const Sentence& sentence = step.actions[i];
      bool move = false;
      if (!is_placeholder(sentence)) {
        AnnotatedSentence ann = tokenize_and_tag(sentence, lexicon);
        SentenceContext ctx{step.index, static_cast<int>(i) + 1, ListSide::Actions};
        move = classify_sentence(ann, ctx, lexicon) == SentenceRole::Verification;
      }
      if (!move) {
        kept.push_back(sentence);
        continue;
      }
      moved.push_back(sentence);
      TransformationRecord rec;
      rec.transformation = Transformation::ExtractVerification;
      rec.target = make_target(SmellKind::MisplacedVerification, test.id, step.index,
                               ListSide::Actions, static_cast<int>(i) + 1,
                               sentence.text);
      rec.before = sentence.text;
      rec.after = sentence.text;
      out.records.push_back(std::move(rec));
    }
    if (moved.empty()) continue;
    step.actions = std::move(kept);
    // moved sentences go ahead of the existing verifications, keeping their
    // own relative order
    std::vector<Sentence> fresh;
    fresh.reserve(moved.size() + step.verifications.size());
    for (Sentence& s : moved) fresh.push_back(std::move(s));
    for (Sentence& s : step.verifications) fresh.push_back(std::move(s));
    step.verifications = std::move(fresh);
  }
  out.tests.push_back(std::move(result));
  return out;
}

TransformOutcome separate_actions(const TestCase& test, const Lexicon& lexicon) {
  TransformOutcome out;
  TestCase result = test;
  std::vector<Step> new_steps;
  bool any_split = false;

  for (const Step& step : result.steps) {
    std::vector<std::vector<Clause>> per_sentence;
    size_t imperative_clauses = 0;
    for (const Sentence& sentence : step.actions) {
      AnnotatedSentence ann = tokenize_and_tag(sentence, lexicon);
      per_sentence.push_back(split_clauses(ann, lexicon));
      for (const Clause& c : per_sentence.back())
        if (c.imperative_count > 0) ++imperative_clauses;
    }
    if (imperative_clauses <= 1) {
      new_steps.push_back(step);
      continue;
    }

    any_split = true;
    std::vector<std::string> verbs;
    std::vector<Step> replacement;
    for (size_t s = 0; s < step.actions.size(); ++s) {
      for (const Clause& clause : per_sentence[s]) {
        if (clause.imperative_count > 0) verbs.push_back(clause.lead_verb);
        Step fresh;
        fresh.index = 1;  // renumbered below
        std::string text = normalize_clause_text(clause.text);
        if (text == step.actions[s].text) {
          fresh.actions.push_back(step.actions[s]);
        } else {
          Sentence sentence;
          sentence.text = text;
          sentence.origin = Origin::Rewritten;
          fresh.actions.push_back(std::move(sentence));
        }
        replacement.push_back(std::move(fresh));
      }
    }
    replacement.back().verifications = step.verifications;

    TransformationRecord rec;
    rec.transformation = Transformation::SeparateActions;
    std::string evidence;
    for (const std::string& v : verbs) {
      if (!evidence.empty()) evidence += ", ";
      evidence += v;
    }
    rec.target = make_target(SmellKind::EagerAction, test.id, step.index,
                             ListSide::Actions, std::nullopt, evidence);
    rec.before = join_texts(step.actions);
    std::string after;
    for (const Step& fresh : replacement) {
      if (!after.empty()) after += " | ";
      after += fresh.actions.front().text;
    }
    rec.after = after;
    out.records.push_back(std::move(rec));

    for (Step& fresh : replacement) new_steps.push_back(std::move(fresh));
  }

  if (any_split) {
    result.steps = std::move(new_steps);
    result = renumber_steps(result);
  }
  out.tests.push_back(std::move(result));
  return out;
}

TransformOutcome extract_ambiguity(const TestCase& test, const Lexicon& lexicon) {
  TransformOutcome out;
  TestCase result = test;
  for (Step& step : result.steps) {
    auto rewrite_list = [&](std::vector<Sentence>& list, ListSide side) {
      for (size_t i = 0; i < list.size(); ++i) {
        Sentence& sentence = list[i];
        if (is_placeholder(sentence)) continue;
        AnnotatedSentence ann = tokenize_and_tag(sentence, lexicon);
        std::vector<TermMatch> terms = find_ambiguous_terms(ann, lexicon);
        if (terms.empty()) continue;

        const std::string& old_text = sentence.text;
        std::string rewritten;
        size_t cursor = 0;
        for (const TermMatch& term : terms) {
          size_t begin = ann.tokens[term.position].begin;
          size_t end = ann.tokens[term.position + term.token_count - 1].end;
          rewritten += old_text.substr(cursor, begin - cursor);
          rewritten += "<<SPECIFY: ";
          rewritten += old_text.substr(begin, end - begin);
          rewritten += ">>";
          cursor = end;
        }
        rewritten += old_text.substr(cursor);

        for (const TermMatch& term : terms) {
          TransformationRecord rec;
          rec.transformation = Transformation::ExtractAmbiguity;
          rec.target = make_target(SmellKind::AmbiguousTest, test.id, step.index,
                                   side, static_cast<int>(i) + 1, term.text);
          rec.before = old_text;
          rec.after = rewritten;
          rec.advisory = "replace '" + term.text + "' with an exact value";
          out.records.push_back(std::move(rec));
        }
        sentence.text = rewritten;
        sentence.origin = Origin::Rewritten;
      }
    };
    rewrite_list(step.actions, ListSide::Actions);
    rewrite_list(step.verifications, ListSide::Verifications);
  }
  out.tests.push_back(std::move(result));
  return out;
}

TransformOutcome extract_conditional(const TestCase& test, const Lexicon& lexicon) {
  for (size_t s = 0; s < test.steps.size(); ++s) {
    const Step& step = test.steps[s];
    for (size_t a = 0; a < step.actions.size(); ++a) {
      const Sentence& sentence = step.actions[a];
      if (is_placeholder(sentence)) continue;
      AnnotatedSentence ann = tokenize_and_tag(sentence, lexicon);
      if (!ann.conditional) continue;

      const std::string clause = ann.conditional->clause;
      const std::string remainder = ann.conditional->remainder;
      TransformOutcome out;

      TestCase if_true = test;
      if_true.id = test.id + "__if_true";
      if_true.preconditions.push_back(clause);
      Step& true_step = if_true.steps[s];
      std::string replacement_text;
      if (remainder.empty()) {
        true_step.actions.erase(true_step.actions.begin() + a);
      } else {
        replacement_text = normalize_clause_text(remainder);
        Sentence replacement;
        replacement.text = replacement_text;
        replacement.origin = Origin::Rewritten;
        true_step.actions[a] = std::move(replacement);
      }

      TestCase if_false = test;
      if_false.id = test.id + "__if_false";
      if_false.steps.erase(if_false.steps.begin() + s, if_false.steps.end());
      if_false = renumber_steps(if_false);

      TransformationRecord rec;
      rec.transformation = Transformation::ExtractConditional;
      rec.target = make_target(SmellKind::ConditionalTest, test.id, step.index,
                               ListSide::Actions, static_cast<int>(a) + 1, clause);
      rec.before = sentence.text;
      rec.after = replacement_text;
      rec.created_test_ids.push_back(if_true.id);

      out.tests.push_back(std::move(if_true));
      if (if_false.steps.empty()) {
        std::ostringstream os;
        os << "test '" << test.id << "': condition-false variant would have no steps"
           << " and was not created";
        out.warnings.push_back(os.str());
      } else {
        rec.created_test_ids.push_back(if_false.id);
        out.tests.push_back(std::move(if_false));
      }
      out.records.push_back(std::move(rec));
      return out;
    }
  }
  return unchanged(test);
}

TransformOutcome apply_transformation(const TestCase& test, const Lexicon& lexicon,
                                      Transformation transformation) {
  switch (transformation) {
    case Transformation::ExtractConditional: return extract_conditional(test, lexicon);
    case Transformation::ExtractAction: return extract_action(test, lexicon);
    case Transformation::SeparateActions: return separate_actions(test, lexicon);
    case Transformation::ExtractVerification:
      return extract_verification(test, lexicon);
    case Transformation::ExtractAmbiguity: return extract_ambiguity(test, lexicon);
    case Transformation::ExtractPrecondition:
      return extract_precondition(test, lexicon);
    case Transformation::FillVerification: return fill_verification(test, lexicon);
  }
  return unchanged(test);
}

}  // namespace nltest
