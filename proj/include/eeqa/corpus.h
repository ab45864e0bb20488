#ifndef EEQA_CORPUS_H_
#define EEQA_CORPUS_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "eeqa/mentions.h"
#include "eeqa/ontology.h"
#include "eeqa/sequence_builder.h"

namespace eeqa {

enum class SplitTag { kTrain, kDev, kTest };

std::string_view SplitTagName(SplitTag tag);

struct Document {
  std::string doc_id;
  std::vector<Sentence> sentences;
};

struct Corpus {
  std::vector<Document> documents;
  SplitTag split = SplitTag::kTest;

  int num_sentences() const;
  int num_triggers() const;
  int num_arguments() const;
  // Sentences in document order.
  std::vector<const Sentence *> Sentences() const;
};

// Parses line-delimited sentence records and validates them against the
// ontology (offsets in bounds, known event types and roles, unique ids).
// Sentences of one document need not be contiguous; documents keep the order
// of their first sentence.
Corpus ParseCorpus(std::string_view text, const EventOntology &ontology,
                   std::string_view source = "<corpus>",
                   SplitTag split = SplitTag::kTest);
Corpus LoadCorpus(const std::string &path, const EventOntology &ontology,
                  SplitTag split = SplitTag::kTest);

// One JSON record per sentence; ParseCorpus reads it back.
std::string SentenceRecordLine(const Sentence &sentence);
std::string WriteCorpus(const Corpus &corpus);

std::vector<TriggerMention> GoldTriggerMentions(const Corpus &corpus);
std::vector<ArgumentMention> GoldArgumentMentions(const Corpus &corpus);

struct RoleSplit {
  std::set<std::string> seen_roles;
  std::set<std::string> unseen_roles;
};

// Vehicle, Artifact, Target, Victim, Recipient, Buyer.
std::set<std::string> DefaultUnseenRoles();

// Throws ValidationError if `unseen` is empty, names an unknown role, or
// covers every role of the ontology.
RoleSplit MakeRoleSplit(const EventOntology &ontology,
                        const std::set<std::string> &unseen);

struct ZeroShotSubsets {
  RoleSplit roles;
  // Sentences with at least one seen-role argument. Unseen-role arguments
  // are removed from their gold events.
  Corpus train;
  // Sentences with at least one unseen-role argument, annotation intact.
  Corpus test;
};

ZeroShotSubsets ZeroShotSplit(const EventOntology &ontology,
                              const std::set<std::string> &unseen,
                              const Corpus &corpus);

}  // namespace eeqa

#endif  // EEQA_CORPUS_H_
