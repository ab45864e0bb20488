#ifndef EEQA_QUESTION_GEN_H_
#define EEQA_QUESTION_GEN_H_

#include <optional>
#include <string>
#include <string_view>

#include "eeqa/ontology.h"

namespace eeqa {

// How an argument question is worded.
//   kRoleName              "artifact"
//   kTypePlusRole          "What is the artifact?"
//   kAnnotationGuideline   the role's guideline question, verbatim
enum class ArgTemplateKind { kRoleName, kTypePlusRole, kAnnotationGuideline };

struct ArgTemplateStrategy {
  ArgTemplateKind kind = ArgTemplateKind::kAnnotationGuideline;
  // Adds " in <trigger>" before the final question mark.
  bool append_trigger = false;

  bool operator==(const ArgTemplateStrategy &) const = default;
};

std::string_view ArgTemplateName(ArgTemplateKind kind);
ArgTemplateKind ParseArgTemplate(std::string_view name);

// Stable tag such as "guideline+trigger"; used as part of probability keys.
std::string StrategyTag(const ArgTemplateStrategy &strategy);
ArgTemplateStrategy ParseStrategyTag(std::string_view tag);

struct Question {
  std::string text;
  // Empty for trigger questions.
  std::string role_name;
  std::string strategy;
};

Question TriggerQuestion(TriggerQuestionStrategy strategy);

// Throws ConfigError when the strategy appends the trigger but no (or an
// empty) trigger token is given.
Question ArgumentQuestion(const RoleSpec &role,
                          const ArgTemplateStrategy &strategy,
                          std::optional<std::string_view> trigger_token = {});

}  // namespace eeqa

#endif  // EEQA_QUESTION_GEN_H_
