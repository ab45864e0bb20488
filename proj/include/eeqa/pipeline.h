#ifndef EEQA_PIPELINE_H_
#define EEQA_PIPELINE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eeqa/arg_decoder.h"
#include "eeqa/corpus.h"
#include "eeqa/metrics.h"
#include "eeqa/ontology.h"
#include "eeqa/prob_provider.h"
#include "eeqa/question_gen.h"

namespace eeqa {

struct ProviderConfig {
  enum class Kind { kOracle, kPseudoRandom, kFile };

  Kind kind = Kind::kOracle;
  std::optional<uint64_t> seed;
  std::string path;
};

std::unique_ptr<ProbProvider> MakeProvider(const ProviderConfig &config,
                                           const EventOntology &ontology);

// Question and decoding settings shared by extraction and calibration.
struct ExtractOptions {
  TriggerQuestionStrategy trigger_strategy = TriggerQuestionStrategy::kVerb;
  ArgTemplateStrategy arg_strategy{ArgTemplateKind::kAnnotationGuideline, true};
  DecodeConfig decode;
  // Ask argument questions about the gold triggers instead of decoded ones.
  bool use_gold_triggers = false;
};

// Triggers the argument questions are asked about, per sentence.
std::vector<TriggerPrediction> SentenceTriggers(const Sentence &sentence,
                                                const EventOntology &ontology,
                                                const ProbProvider &provider,
                                                const ExtractOptions &options);

// Every argument question for one trigger: one question per role of its
// event type, each harvested into candidates.
std::vector<ArgCandidate> HarvestTrigger(const Sentence &sentence,
                                         const TriggerPrediction &trigger,
                                         const EventOntology &ontology,
                                         const ProbProvider &provider,
                                         const ExtractOptions &options);

// Triggers plus all harvested (unfiltered) candidates for a corpus.
struct Harvest {
  PredictionSet triggers;
  std::vector<ArgCandidate> candidates;
};

Harvest HarvestCorpus(const Corpus &corpus, const EventOntology &ontology,
                      const ProbProvider &provider,
                      const ExtractOptions &options);

// Full extraction. `thresholds` is required in dynamic-threshold mode and
// ignored under the zero rule.
PredictionSet Extract(const Corpus &corpus, const EventOntology &ontology,
                      const ProbProvider &provider,
                      const ExtractOptions &options,
                      const ThresholdTable *thresholds);

// Harvests the dev corpus and calibrates no_ans_score thresholds against
// its gold arguments. Refused under the zero rule.
ThresholdTable Calibrate(const Corpus &dev, const EventOntology &ontology,
                         const ProbProvider &provider,
                         const ExtractOptions &options, bool per_role = true);

// Scores per document and micro-averages. Throws ConfigError if the two
// sides do not cover the same sentences.
EvalReport Evaluate(const PredictionSet &predictions,
                    const std::set<std::pair<std::string, std::string>> &
                        predicted_sentences,
                    const Corpus &gold);
EvalReport Evaluate(const PredictionSet &predictions, const Corpus &gold);

// Prediction file: the corpus records plus a "predicted_events" field.
std::string WritePredictions(const Corpus &corpus,
                             const PredictionSet &predictions);

struct PredictionFile {
  PredictionSet predictions;
  std::set<std::pair<std::string, std::string>> sentences;
};

// Reads "predicted_events", or "events" when a record has none, so a gold
// corpus file is also accepted.
PredictionFile ParsePredictions(std::string_view text,
                                std::string_view source = "<predictions>");

// Model adapter request records: the probability key plus the exact
// question text, sentence tokens and encoded sequence.
std::string TriggerRequestLines(const Corpus &corpus,
                                const ExtractOptions &options);
// Argument requests for the triggers found by `provider` (or the gold
// triggers with options.use_gold_triggers).
std::string ArgumentRequestLines(const Corpus &corpus,
                                 const EventOntology &ontology,
                                 const ProbProvider &provider,
                                 const ExtractOptions &options);

// Zero-shot evaluation: split off the sentences with unseen-role arguments
// and extract arguments for their gold triggers.
struct ZeroShotRun {
  ZeroShotSubsets subsets;
  PredictionSet predictions;
  EvalReport report;
};

ZeroShotRun RunZeroShot(const Corpus &corpus, const EventOntology &ontology,
                        const std::set<std::string> &unseen,
                        const ProbProvider &provider, ExtractOptions options,
                        const ThresholdTable *thresholds);

// File-level drivers behind the command-line tool.
struct RunConfig {
  std::string ontology_path;
  std::string corpus_path;
  std::string predictions_path;
  std::string thresholds_path;
  std::string output_path;
  ProviderConfig provider;
  ExtractOptions options;
  bool per_role = true;

  // Throws ConfigError for missing paths or a seed/provider mismatch.
  void Validate() const;
};

PredictionSet RunExtract(const RunConfig &config);
ThresholdTable RunCalibrate(const RunConfig &config);
EvalReport RunEvaluate(const RunConfig &config);

}  // namespace eeqa

#endif  // EEQA_PIPELINE_H_
