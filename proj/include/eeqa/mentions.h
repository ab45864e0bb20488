#ifndef EEQA_MENTIONS_H_
#define EEQA_MENTIONS_H_

#include <compare>
#include <string>
#include <tuple>

namespace eeqa {

// A trigger as seen by the scorer.
struct TriggerMention {
  std::string doc_id;
  std::string sent_id;
  int offset = 0;
  std::string event_type;

  auto operator<=>(const TriggerMention &) const = default;
};

// An argument as seen by the scorer: a sentence-local inclusive span tied to
// an event type and role. The trigger it was attached to is not part of the
// match criterion.
struct ArgumentMention {
  std::string doc_id;
  std::string sent_id;
  std::string event_type;
  std::string role;
  int start = 0;
  int end = 0;

  auto operator<=>(const ArgumentMention &) const = default;
};

// Argument match keys. Spans are compared document-wide by their
// sentence-local offsets; the sentence id is not part of the key.
using ArgumentIdKey = std::tuple<std::string, int, int, std::string>;
using ArgumentIdcKey = std::tuple<std::string, int, int, std::string, std::string>;

inline ArgumentIdKey IdKey(const ArgumentMention &m) {
  return {m.doc_id, m.start, m.end, m.event_type};
}

inline ArgumentIdcKey IdcKey(const ArgumentMention &m) {
  return {m.doc_id, m.start, m.end, m.event_type, m.role};
}

}  // namespace eeqa

#endif  // EEQA_MENTIONS_H_
