#include "eeqa/ontology.h"

#include <fstream>
#include <set>
#include <sstream>

#include "eeqa/errors.h"
#include "json.hpp"

namespace eeqa {

using json = nlohmann::json;

namespace {

struct TriggerStrategyEntry {
  TriggerQuestionStrategy strategy;
  std::string_view name;
};

constexpr TriggerStrategyEntry kTriggerStrategies[] = {
    {TriggerQuestionStrategy::kEmpty, "empty"},
    {TriggerQuestionStrategy::kWhatIsTheTrigger, "what-is-the-trigger"},
    {TriggerQuestionStrategy::kWhatHappened, "what-happened"},
    {TriggerQuestionStrategy::kTrigger, "trigger"},
    {TriggerQuestionStrategy::kAction, "action"},
    {TriggerQuestionStrategy::kVerb, "verb"},
};

// Reads a required string member, reporting the record location on failure.
std::string RequireString(const json &obj, const char *field,
                          const std::string &where) {
  auto it = obj.find(field);
  if (it == obj.end() || !it->is_string()) {
    throw ParseError(where + ": missing or non-string field '" + field + "'");
  }
  return it->get<std::string>();
}

}  // namespace

std::string_view WhWord(WhClass wh) {
  switch (wh) {
    case WhClass::kPerson: return "who";
    case WhClass::kPlace: return "where";
    case WhClass::kOther: return "what";
  }
  return "what";
}

std::string_view WhClassName(WhClass wh) {
  switch (wh) {
    case WhClass::kPerson: return "Person";
    case WhClass::kPlace: return "Place";
    case WhClass::kOther: return "Other";
  }
  return "Other";
}

WhClass ParseWhClass(std::string_view name) {
  if (name == "Person") return WhClass::kPerson;
  if (name == "Place") return WhClass::kPlace;
  if (name == "Other") return WhClass::kOther;
  throw ParseError("unknown wh_class '" + std::string(name) +
                   "' (expected Person, Place or Other)");
}

std::string_view TriggerStrategyName(TriggerQuestionStrategy strategy) {
  for (const auto &entry : kTriggerStrategies) {
    if (entry.strategy == strategy) return entry.name;
  }
  return "verb";
}

TriggerQuestionStrategy ParseTriggerStrategy(std::string_view name) {
  for (const auto &entry : kTriggerStrategies) {
    if (entry.name == name) return entry.strategy;
  }
  throw ParseError("unknown trigger question strategy '" + std::string(name) +
                   "'");
}

EventOntology::EventOntology(std::vector<EventType> event_types,
                             TriggerQuestionStrategy trigger_strategy)
    : event_types_(std::move(event_types)), trigger_strategy_(trigger_strategy) {
  if (event_types_.empty()) {
    throw ValidationError("ontology defines no event types");
  }
  for (size_t i = 0; i < event_types_.size(); ++i) {
    const EventType &type = event_types_[i];
    if (type.name.empty()) {
      throw ValidationError("event type #" + std::to_string(i) +
                            " has an empty name");
    }
    if (!index_.emplace(type.name, static_cast<int>(i) + 1).second) {
      throw ValidationError("duplicate event type '" + type.name + "'");
    }
    if (type.roles.empty()) {
      throw ValidationError("event type '" + type.name + "' has no roles");
    }
    std::set<std::string, std::less<>> seen;
    for (const RoleSpec &role : type.roles) {
      if (role.role_name.empty()) {
        throw ValidationError("event type '" + type.name +
                              "' has a role with an empty name");
      }
      if (!seen.insert(role.role_name).second) {
        throw ValidationError("event type '" + type.name +
                              "' declares role '" + role.role_name +
                              "' twice");
      }
      const std::string &q = role.guideline_question;
      if (q.empty() || q.back() != '?') {
        throw ValidationError("role '" + role.role_name + "' of '" +
                              type.name +
                              "': guideline question must end with '?'");
      }
    }
  }
}

const std::vector<RoleSpec> &EventOntology::Roles(
    std::string_view event_type) const {
  return event_types_[LabelIndex(event_type) - 1].roles;
}

const RoleSpec &EventOntology::Role(std::string_view event_type,
                                    std::string_view role_name) const {
  for (const RoleSpec &role : Roles(event_type)) {
    if (role.role_name == role_name) return role;
  }
  throw NotFoundError("event type '" + std::string(event_type) +
                      "' has no role '" + std::string(role_name) + "'");
}

bool EventOntology::HasType(std::string_view event_type) const {
  return index_.find(event_type) != index_.end();
}

bool EventOntology::HasRole(std::string_view event_type,
                            std::string_view role_name) const {
  auto it = index_.find(event_type);
  if (it == index_.end()) return false;
  for (const RoleSpec &role : event_types_[it->second - 1].roles) {
    if (role.role_name == role_name) return true;
  }
  return false;
}

int EventOntology::LabelIndex(std::string_view event_type) const {
  auto it = index_.find(event_type);
  if (it == index_.end()) {
    throw NotFoundError("unknown event type '" + std::string(event_type) + "'");
  }
  return it->second;
}

const std::string &EventOntology::LabelName(int label) const {
  if (label < 1 || label > static_cast<int>(event_types_.size())) {
    throw NotFoundError("event type label " + std::to_string(label) +
                        " out of range");
  }
  return event_types_[label - 1].name;
}

std::vector<std::string> EventOntology::RoleNames() const {
  std::set<std::string> names;
  for (const EventType &type : event_types_) {
    for (const RoleSpec &role : type.roles) names.insert(role.role_name);
  }
  return {names.begin(), names.end()};
}

EventOntology ParseOntology(std::string_view text, std::string_view source) {
  const std::string src(source);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(src + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError(src + ": top level must be an object");
  }

  TriggerQuestionStrategy strategy = TriggerQuestionStrategy::kVerb;
  if (auto it = doc.find("trigger_question"); it != doc.end()) {
    if (!it->is_string()) {
      throw ParseError(src + ": 'trigger_question' must be a string");
    }
    strategy = ParseTriggerStrategy(it->get<std::string>());
  }

  auto types_it = doc.find("event_types");
  if (types_it == doc.end() || !types_it->is_array()) {
    throw ParseError(src + ": missing array 'event_types'");
  }

  std::vector<EventType> types;
  for (size_t i = 0; i < types_it->size(); ++i) {
    const json &entry = (*types_it)[i];
    const std::string where = src + ": event_types[" + std::to_string(i) + "]";
    if (!entry.is_object()) throw ParseError(where + ": expected an object");
    EventType type;
    type.name = RequireString(entry, "event_type", where);
    auto roles_it = entry.find("roles");
    if (roles_it == entry.end() || !roles_it->is_array()) {
      throw ParseError(where + " (" + type.name + "): missing array 'roles'");
    }
    for (size_t j = 0; j < roles_it->size(); ++j) {
      const json &r = (*roles_it)[j];
      const std::string role_where =
          where + ".roles[" + std::to_string(j) + "]";
      if (!r.is_object()) throw ParseError(role_where + ": expected an object");
      RoleSpec role;
      role.role_name = RequireString(r, "role", role_where);
      try {
        role.wh_class = ParseWhClass(RequireString(r, "wh_class", role_where));
      } catch (const ParseError &e) {
        throw ParseError(role_where + ": " + e.what());
      }
      role.guideline_question = RequireString(r, "question", role_where);
      type.roles.push_back(std::move(role));
    }
    types.push_back(std::move(type));
  }
  return EventOntology(std::move(types), strategy);
}

EventOntology LoadOntology(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open ontology file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseOntology(buffer.str(), path);
}

std::string DefaultOntologyPath() {
#ifdef EEQA_DATA_DIR
  return std::string(EEQA_DATA_DIR) + "/ontology/ace2005.json";
#else
  return "data/ontology/ace2005.json";
#endif
}

}  // namespace eeqa
