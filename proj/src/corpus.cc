#include "eeqa/corpus.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "eeqa/errors.h"
#include "json.hpp"

namespace eeqa {

using json = nlohmann::json;

namespace {

Sentence ParseSentence(const json &j, const EventOntology &ontology,
                       const std::string &where) {
  Sentence s;
  try {
    s.doc_id = j.at("doc_id").get<std::string>();
    s.sent_id = j.at("sent_id").get<std::string>();
    s.tokens = j.at("tokens").get<std::vector<std::string>>();
  } catch (const json::exception &e) {
    throw ParseError(where + ": " + e.what());
  }
  const std::string id = where + " (" + s.doc_id + "/" + s.sent_id + ")";
  if (s.tokens.empty()) throw ValidationError(id + ": no tokens");
  for (size_t i = 0; i < s.tokens.size(); ++i) {
    if (s.tokens[i].empty()) {
      throw ValidationError(id + ": token " + std::to_string(i) + " is empty");
    }
  }

  auto events = j.find("events");
  if (events == j.end()) return s;
  if (!events->is_array()) throw ParseError(id + ": 'events' must be an array");
  for (size_t e = 0; e < events->size(); ++e) {
    const json &ev = (*events)[e];
    const std::string ev_where = id + ": events[" + std::to_string(e) + "]";
    GoldEvent event;
    try {
      event.trigger_offset = ev.at("trigger").get<int>();
      event.event_type = ev.at("event_type").get<std::string>();
    } catch (const json::exception &ex) {
      throw ParseError(ev_where + ": " + ex.what());
    }
    if (event.trigger_offset < 0 || event.trigger_offset >= s.size()) {
      throw ValidationError(ev_where + ": trigger offset " +
                            std::to_string(event.trigger_offset) +
                            " out of bounds");
    }
    if (!ontology.HasType(event.event_type)) {
      throw ValidationError(ev_where + ": unknown event type '" +
                            event.event_type + "'");
    }
    if (auto args = ev.find("arguments"); args != ev.end()) {
      if (!args->is_array()) {
        throw ParseError(ev_where + ": 'arguments' must be an array");
      }
      for (size_t a = 0; a < args->size(); ++a) {
        const json &arg_json = (*args)[a];
        const std::string arg_where =
            ev_where + ".arguments[" + std::to_string(a) + "]";
        GoldArgument arg;
        try {
          arg.role = arg_json.at("role").get<std::string>();
          arg.start = arg_json.at("start").get<int>();
          arg.end = arg_json.at("end").get<int>();
        } catch (const json::exception &ex) {
          throw ParseError(arg_where + ": " + ex.what());
        }
        if (arg.start > arg.end) {
          throw ValidationError(arg_where + ": start " +
                                std::to_string(arg.start) + " > end " +
                                std::to_string(arg.end));
        }
        if (arg.start < 0 || arg.end >= s.size()) {
          throw ValidationError(arg_where + ": span out of bounds");
        }
        if (!ontology.HasRole(event.event_type, arg.role)) {
          throw ValidationError(arg_where + ": unknown role '" + arg.role +
                                "' for " + event.event_type);
        }
        event.arguments.push_back(std::move(arg));
      }
    }
    s.gold_events.push_back(std::move(event));
  }
  return s;
}

json EventsJson(const std::vector<GoldEvent> &events) {
  json out = json::array();
  for (const GoldEvent &ev : events) {
    json args = json::array();
    for (const GoldArgument &a : ev.arguments) {
      args.push_back({{"role", a.role}, {"start", a.start}, {"end", a.end}});
    }
    out.push_back({{"trigger", ev.trigger_offset},
                   {"event_type", ev.event_type},
                   {"arguments", args}});
  }
  return out;
}

bool HasArgumentIn(const Sentence &s, const std::set<std::string> &roles) {
  for (const GoldEvent &ev : s.gold_events) {
    for (const GoldArgument &a : ev.arguments) {
      if (roles.count(a.role)) return true;
    }
  }
  return false;
}

void AppendSentence(Corpus &corpus, Sentence sentence) {
  if (corpus.documents.empty() ||
      corpus.documents.back().doc_id != sentence.doc_id) {
    corpus.documents.push_back({sentence.doc_id, {}});
  }
  corpus.documents.back().sentences.push_back(std::move(sentence));
}

}  // namespace

std::string_view SplitTagName(SplitTag tag) {
  switch (tag) {
    case SplitTag::kTrain: return "train";
    case SplitTag::kDev: return "dev";
    case SplitTag::kTest: return "test";
  }
  return "test";
}

int Corpus::num_sentences() const {
  int n = 0;
  for (const Document &d : documents) n += static_cast<int>(d.sentences.size());
  return n;
}

int Corpus::num_triggers() const {
  int n = 0;
  for (const Sentence *s : Sentences()) n += static_cast<int>(s->gold_events.size());
  return n;
}

int Corpus::num_arguments() const {
  int n = 0;
  for (const Sentence *s : Sentences()) {
    for (const GoldEvent &ev : s->gold_events) {
      n += static_cast<int>(ev.arguments.size());
    }
  }
  return n;
}

std::vector<const Sentence *> Corpus::Sentences() const {
  std::vector<const Sentence *> out;
  for (const Document &d : documents) {
    for (const Sentence &s : d.sentences) out.push_back(&s);
  }
  return out;
}

Corpus ParseCorpus(std::string_view text, const EventOntology &ontology,
                   std::string_view source, SplitTag split) {
  Corpus corpus;
  corpus.split = split;
  std::map<std::string, size_t> doc_index;
  std::set<std::pair<std::string, std::string>> seen;

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error &e) {
      throw ParseError(where + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    Sentence s = ParseSentence(j, ontology, where);
    if (!seen.emplace(s.doc_id, s.sent_id).second) {
      throw ValidationError(where + ": duplicate sentence " + s.doc_id + "/" +
                            s.sent_id);
    }
    auto [it, inserted] = doc_index.emplace(s.doc_id, corpus.documents.size());
    if (inserted) corpus.documents.push_back({s.doc_id, {}});
    corpus.documents[it->second].sentences.push_back(std::move(s));
  }
  return corpus;
}

Corpus LoadCorpus(const std::string &path, const EventOntology &ontology,
                  SplitTag split) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open corpus file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseCorpus(buffer.str(), ontology, path, split);
}

std::string SentenceRecordLine(const Sentence &sentence) {
  json j = {{"doc_id", sentence.doc_id},
            {"sent_id", sentence.sent_id},
            {"tokens", sentence.tokens},
            {"events", EventsJson(sentence.gold_events)}};
  return j.dump();
}

std::string WriteCorpus(const Corpus &corpus) {
  std::string out;
  for (const Sentence *s : corpus.Sentences()) {
    out += SentenceRecordLine(*s);
    out += '\n';
  }
  return out;
}

std::vector<TriggerMention> GoldTriggerMentions(const Corpus &corpus) {
  std::vector<TriggerMention> out;
  for (const Sentence *s : corpus.Sentences()) {
    for (const GoldEvent &ev : s->gold_events) {
      out.push_back({s->doc_id, s->sent_id, ev.trigger_offset, ev.event_type});
    }
  }
  return out;
}

std::vector<ArgumentMention> GoldArgumentMentions(const Corpus &corpus) {
  std::vector<ArgumentMention> out;
  for (const Sentence *s : corpus.Sentences()) {
    for (const GoldEvent &ev : s->gold_events) {
      for (const GoldArgument &a : ev.arguments) {
        out.push_back({s->doc_id, s->sent_id, ev.event_type, a.role, a.start,
                       a.end});
      }
    }
  }
  return out;
}

std::set<std::string> DefaultUnseenRoles() {
  return {"Vehicle", "Artifact", "Target", "Victim", "Recipient", "Buyer"};
}

RoleSplit MakeRoleSplit(const EventOntology &ontology,
                        const std::set<std::string> &unseen) {
  if (unseen.empty()) {
    throw ValidationError("zero-shot split needs at least one unseen role");
  }
  RoleSplit split;
  const std::vector<std::string> all = ontology.RoleNames();
  for (const std::string &role : unseen) {
    if (std::find(all.begin(), all.end(), role) == all.end()) {
      throw ValidationError("unseen role '" + role + "' is not in the ontology");
    }
  }
  for (const std::string &role : all) {
    (unseen.count(role) ? split.unseen_roles : split.seen_roles).insert(role);
  }
  if (split.seen_roles.empty()) {
    throw ValidationError("zero-shot split leaves no seen roles");
  }
  return split;
}

ZeroShotSubsets ZeroShotSplit(const EventOntology &ontology,
                              const std::set<std::string> &unseen,
                              const Corpus &corpus) {
  ZeroShotSubsets out;
  out.roles = MakeRoleSplit(ontology, unseen);
  out.train.split = SplitTag::kTrain;
  out.test.split = SplitTag::kTest;
  for (const Sentence *s : corpus.Sentences()) {
    if (HasArgumentIn(*s, out.roles.seen_roles)) {
      Sentence stripped = *s;
      for (GoldEvent &ev : stripped.gold_events) {
        std::erase_if(ev.arguments, [&](const GoldArgument &a) {
          return out.roles.unseen_roles.count(a.role) > 0;
        });
      }
      AppendSentence(out.train, std::move(stripped));
    }
    if (HasArgumentIn(*s, out.roles.unseen_roles)) AppendSentence(out.test, *s);
  }
  return out;
}

}  // namespace eeqa
