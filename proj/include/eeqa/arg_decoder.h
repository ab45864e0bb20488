#ifndef EEQA_ARG_DECODER_H_
#define EEQA_ARG_DECODER_H_

#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eeqa/mentions.h"
#include "eeqa/prob_provider.h"
#include "eeqa/sequence_builder.h"

namespace eeqa {

// One harvested argument span for a (trigger, role) question. start/end are
// inclusive sentence offsets.
struct ArgCandidate {
  std::string doc_id;
  std::string sent_id;
  std::string event_type;
  std::string role_name;
  int trigger_offset = 0;
  int start = 0;
  int end = 0;
  // P_s(start) + P_e(end).
  double score = 0.0;
  // P_s(cls) + P_e(cls) - score. Lower is more confident.
  double no_ans_score = 0.0;

  ArgumentMention ToMention() const {
    return {doc_id, sent_id, event_type, role_name, start, end};
  }
};

// Identifies the question a candidate list was harvested for.
struct CandidateMeta {
  std::string doc_id;
  std::string sent_id;
  std::string event_type;
  std::string role_name;
  int trigger_offset = 0;
};

enum class ThresholdMode { kDynamicThreshold, kZeroRule };

std::string_view ThresholdModeName(ThresholdMode mode);
ThresholdMode ParseThresholdMode(std::string_view name);

struct DecodeConfig {
  int max_span_length = 10;
  ThresholdMode mode = ThresholdMode::kDynamicThreshold;
};

// Enumerates every (start, end) pair of sentence positions with
// start <= end, span length <= max_span_length, P_s(start) >= P_s(cls) and
// P_e(end) >= P_e(cls). Candidates come out ordered by (start, end).
std::vector<ArgCandidate> HarvestCandidates(const SpanProbs &probs,
                                            const EncodedSequence &sequence,
                                            const DecodeConfig &config,
                                            const CandidateMeta &meta);

// no_ans_score cutoffs per role name. A candidate is kept when its
// no_ans_score <= the cutoff for its role; -inf keeps nothing.
class ThresholdTable {
 public:
  static constexpr double kKeepNothing = -std::numeric_limits<double>::infinity();
  static constexpr double kKeepAll = std::numeric_limits<double>::infinity();

  ThresholdTable() = default;
  explicit ThresholdTable(double fallback) : fallback_(fallback) {}

  void Set(const std::string &role, double threshold) {
    per_role_[role] = threshold;
  }
  void set_fallback(double threshold) { fallback_ = threshold; }

  double fallback() const { return fallback_; }
  const std::map<std::string, double, std::less<>> &per_role() const {
    return per_role_;
  }
  double Resolve(std::string_view role) const;

  std::string Serialize() const;
  static ThresholdTable Parse(std::string_view text,
                              std::string_view source = "<thresholds>");
  void Save(const std::string &path) const;
  static ThresholdTable Load(const std::string &path);

 private:
  std::map<std::string, double, std::less<>> per_role_;
  double fallback_ = kKeepNothing;
};

// Best threshold and the dev F1 (as a fraction) it achieves.
struct ThresholdChoice {
  double threshold = ThresholdTable::kKeepNothing;
  double f1 = 0.0;
  int kept = 0;
  int correct = 0;
};

// Sweeps -inf and every distinct no_ans_score and returns the threshold with
// the highest argument ID+C F1 against `gold`; ties go to the smaller
// threshold.
ThresholdChoice BestThreshold(std::span<const ArgCandidate> candidates,
                              std::span<const ArgumentMention> gold);

// Dev calibration. With per_role, each role seen among the candidates gets
// its own threshold (gold pooled by role name across event types); the
// fallback is always the global best. Throws ValidationError for empty gold.
ThresholdTable CalibrateThreshold(std::span<const ArgCandidate> dev_candidates,
                                  std::span<const ArgumentMention> dev_gold,
                                  bool per_role = true);

std::vector<ArgCandidate> ApplyThreshold(std::span<const ArgCandidate> candidates,
                                         const ThresholdTable &table);

// Keeps candidates with no_ans_score < 0.
std::vector<ArgCandidate> ZeroRule(std::span<const ArgCandidate> candidates);

// -ln P_s(start) - ln P_e(end) for gold encoded positions; nullopt means no
// answer and scores the cls position for both. Throws NumericError on a zero
// gold probability.
double ArgumentNll(const SpanProbs &probs,
                   std::optional<std::pair<int, int>> gold_positions);

}  // namespace eeqa

#endif  // EEQA_ARG_DECODER_H_
