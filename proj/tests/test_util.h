#ifndef EEQA_TESTS_TEST_UTIL_H_
#define EEQA_TESTS_TEST_UTIL_H_

#include <string>

#include "eeqa/corpus.h"
#include "eeqa/ontology.h"

namespace eeqa::testing {

inline const EventOntology &DefaultOntology() {
  static const EventOntology ontology = LoadOntology(DefaultOntologyPath());
  return ontology;
}

inline std::string FixturePath() {
  return std::string(EEQA_DATA_DIR) + "/fixtures/fixture.jsonl";
}

inline std::string GoldenPath(const std::string &name) {
  return std::string(EEQA_TEST_DATA_DIR) + "/golden/" + name;
}

inline const Corpus &FixtureCorpus() {
  static const Corpus corpus = LoadCorpus(FixturePath(), DefaultOntology());
  return corpus;
}

inline Sentence MakeSentence(std::vector<std::string> tokens,
                             std::vector<GoldEvent> events = {},
                             std::string doc = "d", std::string sent = "s") {
  return {std::move(doc), std::move(sent), std::move(tokens), std::move(events)};
}

}  // namespace eeqa::testing

#endif  // EEQA_TESTS_TEST_UTIL_H_
