#ifndef EEQA_ONTOLOGY_H_
#define EEQA_ONTOLOGY_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace eeqa {

// General semantic class of an argument role. Selects the WH word of the
// type + role question.
enum class WhClass { kPerson, kPlace, kOther };

// "who", "where" or "what".
std::string_view WhWord(WhClass wh);
std::string_view WhClassName(WhClass wh);
WhClass ParseWhClass(std::string_view name);

// Fixed literal question used for trigger detection.
enum class TriggerQuestionStrategy {
  kEmpty,
  kWhatIsTheTrigger,
  kWhatHappened,
  kTrigger,
  kAction,
  kVerb,
};

std::string_view TriggerStrategyName(TriggerQuestionStrategy strategy);
TriggerQuestionStrategy ParseTriggerStrategy(std::string_view name);

struct RoleSpec {
  std::string role_name;
  WhClass wh_class = WhClass::kOther;
  std::string guideline_question;
};

struct EventType {
  std::string name;
  std::vector<RoleSpec> roles;
};

// Immutable event schema. Type labels are indexed 0..num_labels()-1 where
// label 0 is the "None" (non-trigger) class and label i > 0 is
// event_types()[i - 1].
class EventOntology {
 public:
  // Validates all invariants; throws ValidationError naming the offending
  // type or role.
  EventOntology(std::vector<EventType> event_types,
                TriggerQuestionStrategy trigger_strategy =
                    TriggerQuestionStrategy::kVerb);

  const std::vector<EventType> &event_types() const { return event_types_; }
  TriggerQuestionStrategy trigger_question_strategy() const {
    return trigger_strategy_;
  }

  // Roles of the named event type in declared order. Throws NotFoundError
  // for an unknown type.
  const std::vector<RoleSpec> &Roles(std::string_view event_type) const;
  const RoleSpec &Role(std::string_view event_type,
                       std::string_view role_name) const;
  bool HasType(std::string_view event_type) const;
  bool HasRole(std::string_view event_type, std::string_view role_name) const;

  // Number of trigger labels, i.e. event types plus one for None.
  int num_labels() const { return static_cast<int>(event_types_.size()) + 1; }
  // Label index of an event type (>= 1). Throws NotFoundError.
  int LabelIndex(std::string_view event_type) const;
  // Event type name for a label index >= 1.
  const std::string &LabelName(int label) const;

  // Distinct role names over all event types, sorted.
  std::vector<std::string> RoleNames() const;

 private:
  std::vector<EventType> event_types_;
  TriggerQuestionStrategy trigger_strategy_;
  std::map<std::string, int, std::less<>> index_;
};

// Parses an ontology document. `source` names the input in error messages.
EventOntology ParseOntology(std::string_view text,
                            std::string_view source = "<ontology>");
EventOntology LoadOntology(const std::string &path);

// Path of the ontology file shipped with the repository.
std::string DefaultOntologyPath();

}  // namespace eeqa

#endif  // EEQA_ONTOLOGY_H_
