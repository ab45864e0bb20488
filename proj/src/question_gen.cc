#include "eeqa/question_gen.h"

#include <cctype>

#include "eeqa/errors.h"

namespace eeqa {

namespace {

constexpr std::string_view kTriggerSuffix = "+trigger";

std::string Lowercase(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string Capitalize(std::string_view s) {
  std::string out(s);
  if (!out.empty()) {
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  }
  return out;
}

}  // namespace

std::string_view ArgTemplateName(ArgTemplateKind kind) {
  switch (kind) {
    case ArgTemplateKind::kRoleName: return "role-name";
    case ArgTemplateKind::kTypePlusRole: return "type-role";
    case ArgTemplateKind::kAnnotationGuideline: return "guideline";
  }
  return "guideline";
}

ArgTemplateKind ParseArgTemplate(std::string_view name) {
  if (name == "role-name" || name == "1") return ArgTemplateKind::kRoleName;
  if (name == "type-role" || name == "2") return ArgTemplateKind::kTypePlusRole;
  if (name == "guideline" || name == "3") {
    return ArgTemplateKind::kAnnotationGuideline;
  }
  throw ParseError("unknown argument template '" + std::string(name) +
                   "' (expected role-name, type-role or guideline)");
}

std::string StrategyTag(const ArgTemplateStrategy &strategy) {
  std::string tag(ArgTemplateName(strategy.kind));
  if (strategy.append_trigger) tag += kTriggerSuffix;
  return tag;
}

ArgTemplateStrategy ParseStrategyTag(std::string_view tag) {
  ArgTemplateStrategy strategy;
  if (tag.ends_with(kTriggerSuffix)) {
    strategy.append_trigger = true;
    tag.remove_suffix(kTriggerSuffix.size());
  }
  strategy.kind = ParseArgTemplate(tag);
  return strategy;
}

Question TriggerQuestion(TriggerQuestionStrategy strategy) {
  Question q;
  q.strategy = std::string(TriggerStrategyName(strategy));
  switch (strategy) {
    case TriggerQuestionStrategy::kEmpty: q.text = ""; break;
    case TriggerQuestionStrategy::kWhatIsTheTrigger:
      q.text = "what is the trigger";
      break;
    case TriggerQuestionStrategy::kWhatHappened: q.text = "what happened"; break;
    case TriggerQuestionStrategy::kTrigger: q.text = "trigger"; break;
    case TriggerQuestionStrategy::kAction: q.text = "action"; break;
    case TriggerQuestionStrategy::kVerb: q.text = "verb"; break;
  }
  return q;
}

Question ArgumentQuestion(const RoleSpec &role,
                          const ArgTemplateStrategy &strategy,
                          std::optional<std::string_view> trigger_token) {
  if (strategy.append_trigger && (!trigger_token || trigger_token->empty())) {
    throw ConfigError("question for role '" + role.role_name +
                      "' needs a trigger token (strategy " +
                      StrategyTag(strategy) + ")");
  }

  Question q;
  q.role_name = role.role_name;
  q.strategy = StrategyTag(strategy);

  // Template 1 is a bare phrase without a question mark.
  bool has_question_mark = true;
  switch (strategy.kind) {
    case ArgTemplateKind::kRoleName:
      q.text = Lowercase(role.role_name);
      has_question_mark = false;
      break;
    case ArgTemplateKind::kTypePlusRole:
      q.text = Capitalize(WhWord(role.wh_class)) + " is the " +
               Lowercase(role.role_name) + "?";
      break;
    case ArgTemplateKind::kAnnotationGuideline:
      q.text = role.guideline_question;
      break;
  }

  if (strategy.append_trigger) {
    if (has_question_mark && !q.text.empty() && q.text.back() == '?') {
      q.text.pop_back();
      q.text += " in " + std::string(*trigger_token) + "?";
    } else {
      q.text += " in " + std::string(*trigger_token);
    }
  }
  return q;
}

}  // namespace eeqa
