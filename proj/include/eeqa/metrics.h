#ifndef EEQA_METRICS_H_
#define EEQA_METRICS_H_

#include <set>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "eeqa/arg_decoder.h"
#include "eeqa/mentions.h"
#include "eeqa/trigger_decoder.h"

namespace eeqa {

// Raw counts behind one P/R/F1 block. Counts add across documents.
struct Counts {
  int num_pred = 0;
  int num_gold = 0;
  int num_correct = 0;

  Counts &operator+=(const Counts &other) {
    num_pred += other.num_pred;
    num_gold += other.num_gold;
    num_correct += other.num_correct;
    return *this;
  }
  bool operator==(const Counts &) const = default;
};

// Percentages in [0, 100]. An empty denominator gives 0.
struct Block {
  Counts counts;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  static Block FromCounts(const Counts &counts);
};

struct EvalReport {
  Block trigger_id;
  Block trigger_idc;
  Block arg_id;
  Block arg_idc;

  // Fixed-width table, two decimals.
  std::string ToTable() const;
  std::string ToJson() const;
};

struct BlockCounts {
  Counts trigger_id;
  Counts trigger_idc;
  Counts arg_id;
  Counts arg_idc;

  BlockCounts &operator+=(const BlockCounts &other);
};

// Trigger identification credits an offset match in the same sentence;
// classification also requires the event type. Each gold trigger credits at
// most one prediction.
std::pair<Counts, Counts> ScoreTriggers(std::span<const TriggerMention> preds,
                                        std::span<const TriggerMention> gold);

// Argument identification credits a span + event type match against any gold
// argument of the same document, spans compared by sentence-local offsets;
// classification also requires the role. One-to-one credit, greedily in
// prediction order.
std::pair<Counts, Counts> ScoreArguments(std::span<const ArgumentMention> preds,
                                         std::span<const ArgumentMention> gold);

// Micro-average: sum the counts, then compute P/R/F1.
EvalReport Aggregate(std::span<const BlockCounts> parts);

// Predicted triggers and kept arguments for a corpus. Duplicates are
// collapsed on insertion.
class PredictionSet {
 public:
  struct Trigger {
    std::string doc_id;
    std::string sent_id;
    TriggerPrediction prediction;
  };

  // Returns false if an identical entry was already present.
  bool AddTrigger(const std::string &doc_id, const std::string &sent_id,
                  const TriggerPrediction &prediction);
  bool AddArgument(const ArgCandidate &candidate);

  const std::vector<Trigger> &triggers() const { return triggers_; }
  const std::vector<ArgCandidate> &arguments() const { return arguments_; }

  std::vector<TriggerMention> TriggerMentions() const;
  std::vector<ArgumentMention> ArgumentMentions() const;

 private:
  using TriggerKey = std::tuple<std::string, std::string, int, std::string>;
  using ArgumentKey = std::tuple<std::string, std::string, std::string, int,
                                 std::string, int, int>;

  std::vector<Trigger> triggers_;
  std::vector<ArgCandidate> arguments_;
  std::set<TriggerKey> trigger_keys_;
  std::set<ArgumentKey> argument_keys_;
};

}  // namespace eeqa

#endif  // EEQA_METRICS_H_
