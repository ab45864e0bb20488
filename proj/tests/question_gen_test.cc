#include "doctest.h"
#include "eeqa/errors.h"
#include "eeqa/question_gen.h"
#include "test_util.h"

namespace eeqa {
namespace {

using testing::DefaultOntology;

const RoleSpec &TransportRole(const char *role) {
  return DefaultOntology().Role("Movement.Transport", role);
}

TEST_CASE("trigger question literals") {
  CHECK(TriggerQuestion(TriggerQuestionStrategy::kEmpty).text == "");
  CHECK(TriggerQuestion(TriggerQuestionStrategy::kWhatIsTheTrigger).text ==
        "what is the trigger");
  CHECK(TriggerQuestion(TriggerQuestionStrategy::kWhatHappened).text ==
        "what happened");
  CHECK(TriggerQuestion(TriggerQuestionStrategy::kTrigger).text == "trigger");
  CHECK(TriggerQuestion(TriggerQuestionStrategy::kAction).text == "action");
  CHECK(TriggerQuestion(TriggerQuestionStrategy::kVerb).text == "verb");
}

TEST_CASE("role name template") {
  const ArgTemplateStrategy s{ArgTemplateKind::kRoleName, false};
  CHECK(ArgumentQuestion(TransportRole("Agent"), s).text == "agent");
  CHECK(ArgumentQuestion(TransportRole("Artifact"), s).text == "artifact");
  CHECK(ArgumentQuestion(TransportRole("Artifact"),
                         {ArgTemplateKind::kRoleName, true}, "sale")
            .text == "artifact in sale");
}

TEST_CASE("type + role template uses the WH word of the role class") {
  const ArgTemplateStrategy s{ArgTemplateKind::kTypePlusRole, false};
  CHECK(ArgumentQuestion(TransportRole("Agent"), s).text == "Who is the agent?");
  CHECK(ArgumentQuestion(TransportRole("Artifact"), s).text ==
        "What is the artifact?");
  CHECK(ArgumentQuestion(TransportRole("Destination"), s).text ==
        "What is the destination?");
  CHECK(ArgumentQuestion(TransportRole("Origin"), s).text == "What is the origin?");
  CHECK(ArgumentQuestion(DefaultOntology().Role("Life.Die", "Place"), s).text ==
        "Where is the place?");
}

TEST_CASE("guideline template is verbatim, with optional trigger") {
  const RoleSpec &artifact = TransportRole("Artifact");
  CHECK(ArgumentQuestion(artifact, {ArgTemplateKind::kAnnotationGuideline, false})
            .text == "What is being transported?");
  CHECK(ArgumentQuestion(artifact, {ArgTemplateKind::kAnnotationGuideline, true},
                         "sale")
            .text == "What is being transported in sale?");
  CHECK(ArgumentQuestion(artifact, {ArgTemplateKind::kTypePlusRole, true}, "sale")
            .text == "What is the artifact in sale?");
}

TEST_CASE("question records role and strategy tag") {
  Question q = ArgumentQuestion(TransportRole("Vehicle"),
                                {ArgTemplateKind::kAnnotationGuideline, true},
                                "drove");
  CHECK(q.role_name == "Vehicle");
  CHECK(q.strategy == "guideline+trigger");
  CHECK(TriggerQuestion(TriggerQuestionStrategy::kVerb).role_name.empty());
}

TEST_CASE("append_trigger without a trigger token is a config error") {
  const ArgTemplateStrategy s{ArgTemplateKind::kTypePlusRole, true};
  CHECK_THROWS_AS(ArgumentQuestion(TransportRole("Agent"), s), ConfigError);
  CHECK_THROWS_AS(ArgumentQuestion(TransportRole("Agent"), s, ""), ConfigError);
}

TEST_CASE("strategy tags round-trip for all six argument strategies") {
  for (ArgTemplateKind kind :
       {ArgTemplateKind::kRoleName, ArgTemplateKind::kTypePlusRole,
        ArgTemplateKind::kAnnotationGuideline}) {
    for (bool in_trigger : {false, true}) {
      const ArgTemplateStrategy s{kind, in_trigger};
      CHECK(ParseStrategyTag(StrategyTag(s)) == s);
      CHECK(ParseArgTemplate(ArgTemplateName(kind)) == kind);
    }
  }
  CHECK(ParseArgTemplate("1") == ArgTemplateKind::kRoleName);
  CHECK(ParseArgTemplate("3") == ArgTemplateKind::kAnnotationGuideline);
  CHECK_THROWS_AS(ParseArgTemplate("4"), ParseError);
  CHECK_THROWS_AS(ParseStrategyTag("guideline+nope"), ParseError);
}

TEST_CASE("every role yields a question under every strategy") {
  for (const EventType &t : DefaultOntology().event_types()) {
    for (const RoleSpec &r : t.roles) {
      for (ArgTemplateKind kind :
           {ArgTemplateKind::kRoleName, ArgTemplateKind::kTypePlusRole,
            ArgTemplateKind::kAnnotationGuideline}) {
        const std::string plain = ArgumentQuestion(r, {kind, false}).text;
        const std::string with = ArgumentQuestion(r, {kind, true}, "x").text;
        CHECK_FALSE(plain.empty());
        CHECK(with.find(" in x") != std::string::npos);
        CHECK(with.size() == plain.size() + 5);
      }
    }
  }
}

}  // namespace
}  // namespace eeqa
