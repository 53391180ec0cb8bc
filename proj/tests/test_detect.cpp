#include "doctest.h"
#include "nltest/detect.hpp"
#include "testutil.hpp"

using namespace nltest;
using testutil::sent;
using testutil::step;
using testutil::test_case;

namespace {

const Lexicon& lex() {
  static const Lexicon instance = Lexicon::seed();
  return instance;
}

}  // namespace

TEST_CASE("unverified action fires on steps with actions and no verification") {
  std::vector<Step> steps;
  for (int i = 1; i <= 6; ++i)
    steps.push_back(step(i, {sent("Open the status menu")}, {sent("The menu appears")}));
  steps.push_back(step(7, {sent("Click one more time on the same message")}));
  TestCase t = test_case("messages", steps);

  auto occ = detect_unverified_action(t, lex());
  REQUIRE(occ.size() == 1);
  CHECK(occ[0].kind == SmellKind::UnverifiedAction);
  CHECK(occ[0].step_index == 7);
  CHECK(occ[0].evidence == "Click one more time on the same message");
}

TEST_CASE("unverified action is satisfied by verifications and placeholders") {
  TestCase verified = test_case(
      "t", {step(1, {sent("Click OK")}, {sent("The dialog closes")})});
  CHECK(detect_unverified_action(verified, lex()).empty());

  TestCase flagged = test_case(
      "t", {step(1, {sent("Click OK")},
                 {sent("FILL_VERIFICATION: Click OK", Origin::Placeholder)})});
  CHECK(detect_unverified_action(flagged, lex()).empty());

  // a step with no actions has nothing to verify
  TestCase empty_actions = test_case("t", {step(1, {}, {})});
  CHECK(detect_unverified_action(empty_actions, lex()).empty());
}

TEST_CASE("misplaced precondition fires only on step 1's first action") {
  TestCase smelly = test_case(
      "t", {step(1, {sent("Ensure that Ristretto is loaded without any errors")},
                 {sent("Ristretto is running")})});
  auto occ = detect_misplaced_precondition(smelly, lex());
  REQUIRE(occ.size() == 1);
  CHECK(occ[0].step_index == 1);
  CHECK(occ[0].sentence_ordinal == 1);

  TestCase imperative = test_case(
      "t", {step(1, {sent("Open the network manager")}, {sent("It opens")})});
  CHECK(detect_misplaced_precondition(imperative, lex()).empty());

  TestCase later = test_case(
      "t", {step(1, {sent("Open the app")}, {sent("It opens")}),
            step(2, {sent("Click OK")}, {sent("OK")}),
            step(3, {sent("Ensure the window is closed")}, {sent("Closed")})});
  CHECK(detect_misplaced_precondition(later, lex()).empty());
}

TEST_CASE("misplaced action fires per action-like verification sentence") {
  TestCase smelly = test_case(
      "t", {step(1, {sent("Enable auto-hide in the launcher settings")},
                 {sent("Open some windows"), sent("The launcher hides")})});
  auto occ = detect_misplaced_action(smelly, lex());
  REQUIRE(occ.size() == 1);
  CHECK(occ[0].sentence_ordinal == 1);
  CHECK(occ[0].list_side == ListSide::Verifications);
  CHECK(occ[0].evidence == "Open some windows");

  TestCase declarative = test_case(
      "t", {step(1, {sent("Open a window")}, {sent("The window opens")})});
  CHECK(detect_misplaced_action(declarative, lex()).empty());

  // hyphen-preserving tokenization keeps 're-check' out of the verb lexicon
  TestCase recheck = test_case(
      "t", {step(1, {sent("Open the release settings")},
                 {sent("Re-Check release-setting options")})});
  CHECK(detect_misplaced_action(recheck, lex()).empty());

  Lexicon extended = lex();
  extended.action_verbs.insert("re-check");
  auto extended_occ = detect_misplaced_action(recheck, extended);
  REQUIRE(extended_occ.size() == 1);
  CHECK(extended_occ[0].evidence == "Re-Check release-setting options");
}

TEST_CASE("misplaced verification fires per verification-like action sentence") {
  TestCase smelly = test_case(
      "t", {step(1, {sent("Open the removable drives settings"),
                     sent("Verify that 'Enable Volume Management' is checked")})});
  auto occ = detect_misplaced_verification(smelly, lex());
  REQUIRE(occ.size() == 1);
  CHECK(occ[0].sentence_ordinal == 2);
  CHECK(occ[0].list_side == ListSide::Actions);

  TestCase imperative = test_case("t", {step(1, {sent("Click on 'Print'")})});
  CHECK(detect_misplaced_verification(imperative, lex()).empty());

  TestCase confirm = test_case(
      "t", {step(1, {sent("Confirm the dialog appears")})});
  REQUIRE(detect_misplaced_verification(confirm, lex()).size() == 1);
}

TEST_CASE("eager action counts imperative clauses across a step's sentences") {
  TestCase grouped = test_case(
      "t", {step(1, {sent("Select 'print to file' as printer"),
                     sent("enter 'firefox.pdf' as filename"),
                     sent("Select your home folder as location"),
                     sent("Then click on 'Print'")},
                 {sent("A window opens, showing the progress of the print")})});
  auto occ = detect_eager_action(grouped, lex());
  REQUIRE(occ.size() == 1);
  CHECK(occ[0].evidence == "select, enter, select, click");
  CHECK_FALSE(occ[0].sentence_ordinal.has_value());

  TestCase single = test_case("t", {step(1, {sent("Open the file manager")})});
  CHECK(detect_eager_action(single, lex()).empty());

  TestCase one_sentence = test_case(
      "t", {step(1, {sent("Add content to the popped up memo and then click the "
                          "green tick")},
                 {sent("Did the window showed the expected behaviour?")})});
  auto one = detect_eager_action(one_sentence, lex());
  REQUIRE(one.size() == 1);
  CHECK(one[0].evidence == "add, click");
}

TEST_CASE("eager action ignores sentences without an action imperative") {
  TestCase t = test_case(
      "t", {step(1, {sent("Open the removable drives settings"),
                     sent("Verify that 'Enable Volume Management' is checked")})});
  CHECK(detect_eager_action(t, lex()).empty());
}

TEST_CASE("ambiguous test fires per matched term on both lists") {
  TestCase any = test_case("t", {step(1, {sent("Open any application")})});
  auto occ = detect_ambiguous_test(any, lex());
  REQUIRE(occ.size() == 1);
  CHECK(occ[0].evidence == "any");

  TestCase adverb = test_case(
      "t", {step(1, {sent("After approximately 30 seconds, open the network manager")})});
  REQUIRE(detect_ambiguous_test(adverb, lex()).size() == 1);

  TestCase clean = test_case("t", {step(1, {sent("Press Enter")})});
  CHECK(detect_ambiguous_test(clean, lex()).empty());

  TestCase in_verification = test_case(
      "t", {step(1, {sent("Open the launcher")}, {sent("Open some windows")})});
  auto vocc = detect_ambiguous_test(in_verification, lex());
  REQUIRE(vocc.size() == 1);
  CHECK(vocc[0].list_side == ListSide::Verifications);
}

TEST_CASE("conditional test fires per conditional action sentence") {
  TestCase usb = test_case("t", {step(1, {sent("If you have a USB drive, plug it in")})});
  auto occ = detect_conditional_test(usb, lex());
  REQUIRE(occ.size() == 1);
  CHECK(occ[0].evidence == "If you have a USB drive");

  TestCase plain = test_case("t", {step(1, {sent("Plug in the USB drive")})});
  CHECK(detect_conditional_test(plain, lex()).empty());

  TestCase printer = test_case(
      "t", {step(1, {sent("If your printer doesn't show up, add it to the list "
                          "(click Add and follow the wizard)")})});
  REQUIRE(detect_conditional_test(printer, lex()).size() == 1);
}

TEST_CASE("evidence always appears in the sentence it points at") {
  TestCase t = test_case(
      "multi",
      {step(1, {sent("If you have a USB drive, plug it in and wait approximately "
                     "10 seconds")}),
       step(2, {sent("Open any application")}, {sent("Open some windows")})});
  for (const SmellOccurrence& occ : detect_all(t, lex())) {
    if (!occ.sentence_ordinal) continue;
    const Step& s = t.steps[*occ.step_index - 1];
    const Sentence& sentence = occ.list_side == ListSide::Actions
                                   ? s.actions[*occ.sentence_ordinal - 1]
                                   : s.verifications[*occ.sentence_ordinal - 1];
    CAPTURE(occ.evidence);
    CHECK(sentence.text.find(occ.evidence) != std::string::npos);
  }
}

TEST_CASE("detect_all composes the detectors in a deterministic order") {
  TestCase t = test_case(
      "two-smells",
      {step(1, {sent("Open the file manager")}, {sent("The window appears")}),
       step(2, {sent("If you have a USB drive, plug it in")})});
  auto occ = detect_all(t, lex());
  REQUIRE(occ.size() == 2);
  CHECK(occ[0].kind == SmellKind::UnverifiedAction);
  CHECK(occ[0].step_index == 2);
  CHECK(occ[1].kind == SmellKind::ConditionalTest);
  CHECK(occ[1].step_index == 2);

  CHECK(detect_all(test_case("empty", {}), lex()).empty());
  CHECK(detect_all(t, lex()) == detect_all(t, lex()));
}

TEST_CASE("a grouped step with a verified outcome yields exactly one eager finding") {
  TestCase t = test_case(
      "print", {step(1, {sent("Select 'print to file' as printer"),
                         sent("enter 'firefox.pdf' as filename"),
                         sent("Select your home folder as location"),
                         sent("Then click on 'Print'")},
                     {sent("A window opens, showing the progress of the print")})});
  auto occ = detect_all(t, lex());
  REQUIRE(occ.size() == 1);
  CHECK(occ[0].kind == SmellKind::EagerAction);
}

TEST_CASE("a sentence never classifies as both misplaced action and verification") {
  const char* samples[] = {"Open some windows", "Verify that the list is empty",
                           "The window opens", "Re-Check release-setting options",
                           "Confirm the dialog appears", "Click the OK button"};
  for (const char* text : samples) {
    TestCase as_action = test_case("t", {step(1, {sent(text)}, {sent("ok")})});
    TestCase as_verification =
        test_case("t", {step(1, {sent("Open the app")}, {sent(text)})});
    bool verification_in_actions =
        !detect_misplaced_verification(as_action, lex()).empty();
    bool action_in_verifications =
        !detect_misplaced_action(as_verification, lex()).empty();
    CAPTURE(text);
    bool both = verification_in_actions && action_in_verifications;
    CHECK_FALSE(both);
  }
}

TEST_CASE("warnings surface unhandled markers and verification-side conditionals") {
  TestCase t = test_case(
      "warny",
      {step(1, {sent("When the dialog opens, click OK")},
            {sent("If the bar turns green, the test passed")}),
       step(2, {}, {})});
  auto warnings = collect_warnings(t, lex());
  REQUIRE(warnings.size() == 3);
  bool unhandled = false, conditional_verification = false, empty_step = false;
  for (const std::string& w : warnings) {
    if (w.find("unhandled marker 'when'") != std::string::npos) unhandled = true;
    if (w.find("conditional in verification") != std::string::npos)
      conditional_verification = true;
    if (w.find("no actions and no verifications") != std::string::npos)
      empty_step = true;
  }
  CHECK(unhandled);
  CHECK(conditional_verification);
  CHECK(empty_step);
}
