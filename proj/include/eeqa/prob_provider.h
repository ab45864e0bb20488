#ifndef EEQA_PROB_PROVIDER_H_
#define EEQA_PROB_PROVIDER_H_

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eeqa/ontology.h"
#include "eeqa/sequence_builder.h"

namespace eeqa {

// Per-token distribution over trigger labels; row i belongs to sentence
// token i and column 0 is the None label.
struct TriggerProbs {
  std::vector<std::vector<double>> rows;

  int num_tokens() const { return static_cast<int>(rows.size()); }
};

// Start/end distributions over the whole encoded sequence, question tokens
// and markers included.
struct SpanProbs {
  std::vector<double> start;
  std::vector<double> end;
  int cls_index = 0;

  int size() const { return static_cast<int>(start.size()); }
};

enum class RequestKind { kTrigger, kArgument };

std::string_view RequestKindName(RequestKind kind);

struct ProbRequest {
  std::string doc_id;
  std::string sent_id;
  RequestKind kind = RequestKind::kTrigger;
  // Argument requests only.
  std::string event_type;
  std::string role_name;
  int trigger_offset = -1;
  std::string strategy;

  static ProbRequest Trigger(const Sentence &sentence);
  static ProbRequest Argument(const Sentence &sentence,
                              std::string event_type, std::string role_name,
                              int trigger_offset, std::string strategy);

  // Unique lookup key for probability files.
  std::string Key() const;
  // Human-readable identification for error messages.
  std::string Describe() const;
};

// True if all entries are in [0,1] and they sum to 1 within `tolerance`.
bool IsStochastic(std::span<const double> values, double tolerance = 1e-6);

// Throw ValidationError on shape or normalization problems.
void CheckTriggerProbs(const TriggerProbs &probs, int num_tokens,
                       int num_labels);
void CheckSpanProbs(const SpanProbs &probs, int sequence_length);

// Source of model probabilities. Implementations are read-only after
// construction, so concurrent calls are allowed.
class ProbProvider {
 public:
  virtual ~ProbProvider() = default;

  virtual TriggerProbs GetTriggerProbs(const ProbRequest &request,
                                       const Sentence &sentence) const = 0;
  virtual SpanProbs GetSpanProbs(const ProbRequest &request,
                                 const Sentence &sentence,
                                 const EncodedSequence &sequence) const = 0;
};

// Builds near-one-hot outputs from the sentence's gold annotation: 0.99 on
// the gold label or position(s), the remaining 0.01 spread uniformly.
class OracleProvider : public ProbProvider {
 public:
  static constexpr double kPeakMass = 0.99;

  explicit OracleProvider(const EventOntology &ontology);

  TriggerProbs GetTriggerProbs(const ProbRequest &request,
                               const Sentence &sentence) const override;
  SpanProbs GetSpanProbs(const ProbRequest &request, const Sentence &sentence,
                         const EncodedSequence &sequence) const override;

 private:
  EventOntology ontology_;
};

// Seeded random distributions. Each request draws from its own stream
// derived from (seed, request key), so results do not depend on call order.
class PseudoRandomProvider : public ProbProvider {
 public:
  PseudoRandomProvider(uint64_t seed, int num_labels);

  TriggerProbs GetTriggerProbs(const ProbRequest &request,
                               const Sentence &sentence) const override;
  SpanProbs GetSpanProbs(const ProbRequest &request, const Sentence &sentence,
                         const EncodedSequence &sequence) const override;

 private:
  uint64_t seed_;
  int num_labels_;
};

// Reads probability records produced by an external model adapter. The
// whole file is loaded and validated up front.
class FileProbProvider : public ProbProvider {
 public:
  static FileProbProvider FromFile(const std::string &path);
  static FileProbProvider FromText(std::string_view text,
                                   std::string_view source = "<probs>");

  TriggerProbs GetTriggerProbs(const ProbRequest &request,
                               const Sentence &sentence) const override;
  SpanProbs GetSpanProbs(const ProbRequest &request, const Sentence &sentence,
                         const EncodedSequence &sequence) const override;

  size_t size() const { return records_.size(); }

 private:
  struct Record {
    TriggerProbs trigger;
    SpanProbs span;
    // Non-empty when the adapter could not produce the record.
    std::string skipped;
  };

  const Record &Find(const ProbRequest &request) const;

  std::map<std::string, Record> records_;
};

// One line of the probability file format (no trailing newline).
std::string TriggerRecordLine(const ProbRequest &request,
                              const TriggerProbs &probs);
std::string SpanRecordLine(const ProbRequest &request, const SpanProbs &probs);

}  // namespace eeqa

#endif  // EEQA_PROB_PROVIDER_H_
