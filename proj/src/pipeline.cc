#include "eeqa/pipeline.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "eeqa/errors.h"
#include "eeqa/sequence_builder.h"
#include "json.hpp"

namespace eeqa {

using json = nlohmann::json;

namespace {

using SentenceKey = std::pair<std::string, std::string>;

void RequireFile(const std::string &path, const char *what) {
  if (path.empty()) throw ConfigError(std::string("no ") + what + " given");
  if (!std::filesystem::exists(path)) {
    throw ConfigError(std::string(what) + " '" + path + "' does not exist");
  }
}

void WriteFile(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << content;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFoundError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Question ArgumentQuestionFor(const Sentence &sentence,
                             const TriggerPrediction &trigger,
                             const RoleSpec &role,
                             const ExtractOptions &options) {
  return ArgumentQuestion(role, options.arg_strategy,
                          std::string_view(sentence.tokens[trigger.token_offset]));
}

json RequestRecord(const ProbRequest &request, const Question &question,
                   const Sentence &sentence, const EncodedSequence &sequence) {
  json j;
  j["doc_id"] = request.doc_id;
  j["sent_id"] = request.sent_id;
  j["kind"] = std::string(RequestKindName(request.kind));
  if (request.kind == RequestKind::kArgument) {
    j["event_type"] = request.event_type;
    j["role_name"] = request.role_name;
    j["trigger_offset"] = request.trigger_offset;
    j["strategy"] = request.strategy;
  }
  j["question"] = question.text;
  j["tokens"] = sentence.tokens;
  j["sequence"] = sequence.items();
  j["sentence_span"] = {sequence.sentence_first(), sequence.sentence_last()};
  return j;
}

}  // namespace

std::unique_ptr<ProbProvider> MakeProvider(const ProviderConfig &config,
                                           const EventOntology &ontology) {
  switch (config.kind) {
    case ProviderConfig::Kind::kOracle:
      return std::make_unique<OracleProvider>(ontology);
    case ProviderConfig::Kind::kPseudoRandom:
      if (!config.seed) {
        throw ConfigError("the pseudorandom provider needs a seed");
      }
      return std::make_unique<PseudoRandomProvider>(*config.seed,
                                                    ontology.num_labels());
    case ProviderConfig::Kind::kFile:
      RequireFile(config.path, "probability file");
      return std::make_unique<FileProbProvider>(
          FileProbProvider::FromFile(config.path));
  }
  throw ConfigError("unknown provider");
}

std::vector<TriggerPrediction> SentenceTriggers(const Sentence &sentence,
                                                const EventOntology &ontology,
                                                const ProbProvider &provider,
                                                const ExtractOptions &options) {
  if (options.use_gold_triggers) {
    std::vector<TriggerPrediction> out;
    for (const GoldEvent &ev : sentence.gold_events) {
      out.push_back({ev.trigger_offset, ev.event_type, 1.0});
    }
    return out;
  }
  const TriggerProbs probs =
      provider.GetTriggerProbs(ProbRequest::Trigger(sentence), sentence);
  CheckTriggerProbs(probs, sentence.size(), ontology.num_labels());
  return DecodeTriggers(probs, ontology);
}

std::vector<ArgCandidate> HarvestTrigger(const Sentence &sentence,
                                         const TriggerPrediction &trigger,
                                         const EventOntology &ontology,
                                         const ProbProvider &provider,
                                         const ExtractOptions &options) {
  std::vector<ArgCandidate> out;
  const std::string strategy = StrategyTag(options.arg_strategy);
  for (const RoleSpec &role : ontology.Roles(trigger.event_type)) {
    const Question question =
        ArgumentQuestionFor(sentence, trigger, role, options);
    const EncodedSequence sequence =
        Encode(question, sentence, trigger.token_offset);
    const ProbRequest request =
        ProbRequest::Argument(sentence, trigger.event_type, role.role_name,
                              trigger.token_offset, strategy);
    const SpanProbs probs = provider.GetSpanProbs(request, sentence, sequence);
    const CandidateMeta meta{sentence.doc_id, sentence.sent_id,
                             trigger.event_type, role.role_name,
                             trigger.token_offset};
    std::vector<ArgCandidate> found =
        HarvestCandidates(probs, sequence, options.decode, meta);
    out.insert(out.end(), std::make_move_iterator(found.begin()),
               std::make_move_iterator(found.end()));
  }
  return out;
}

Harvest HarvestCorpus(const Corpus &corpus, const EventOntology &ontology,
                      const ProbProvider &provider,
                      const ExtractOptions &options) {
  Harvest harvest;
  for (const Sentence *sentence : corpus.Sentences()) {
    for (const TriggerPrediction &trigger :
         SentenceTriggers(*sentence, ontology, provider, options)) {
      harvest.triggers.AddTrigger(sentence->doc_id, sentence->sent_id, trigger);
      std::vector<ArgCandidate> found =
          HarvestTrigger(*sentence, trigger, ontology, provider, options);
      harvest.candidates.insert(harvest.candidates.end(),
                                std::make_move_iterator(found.begin()),
                                std::make_move_iterator(found.end()));
    }
  }
  return harvest;
}

PredictionSet Extract(const Corpus &corpus, const EventOntology &ontology,
                      const ProbProvider &provider,
                      const ExtractOptions &options,
                      const ThresholdTable *thresholds) {
  if (options.decode.mode == ThresholdMode::kDynamicThreshold && !thresholds) {
    throw ConfigError("dynamic-threshold extraction needs a threshold table");
  }
  Harvest harvest = HarvestCorpus(corpus, ontology, provider, options);
  const std::vector<ArgCandidate> kept =
      options.decode.mode == ThresholdMode::kZeroRule
          ? ZeroRule(harvest.candidates)
          : ApplyThreshold(harvest.candidates, *thresholds);
  PredictionSet predictions = std::move(harvest.triggers);
  for (const ArgCandidate &c : kept) predictions.AddArgument(c);
  return predictions;
}

ThresholdTable Calibrate(const Corpus &dev, const EventOntology &ontology,
                         const ProbProvider &provider,
                         const ExtractOptions &options, bool per_role) {
  if (options.decode.mode == ThresholdMode::kZeroRule) {
    throw ConfigError(
        "calibration is only meaningful in dynamic-threshold mode; the zero "
        "rule uses a fixed cutoff of 0");
  }
  const std::vector<ArgumentMention> gold = GoldArgumentMentions(dev);
  if (gold.empty()) {
    throw ValidationError("dev corpus has no gold arguments to calibrate on");
  }
  const Harvest harvest = HarvestCorpus(dev, ontology, provider, options);
  return CalibrateThreshold(harvest.candidates, gold, per_role);
}

EvalReport Evaluate(const PredictionSet &predictions,
                    const std::set<SentenceKey> &predicted_sentences,
                    const Corpus &gold) {
  std::set<SentenceKey> gold_sentences;
  for (const Sentence *s : gold.Sentences()) {
    gold_sentences.emplace(s->doc_id, s->sent_id);
  }
  if (predicted_sentences != gold_sentences) {
    for (const SentenceKey &k : predicted_sentences) {
      if (!gold_sentences.count(k)) {
        throw ConfigError("mismatched corpora: predicted sentence " + k.first +
                          "/" + k.second + " is not in the gold corpus");
      }
    }
    for (const SentenceKey &k : gold_sentences) {
      if (!predicted_sentences.count(k)) {
        throw ConfigError("mismatched corpora: gold sentence " + k.first + "/" +
                          k.second + " has no prediction record");
      }
    }
  }

  struct DocMentions {
    std::vector<TriggerMention> pred_triggers, gold_triggers;
    std::vector<ArgumentMention> pred_args, gold_args;
  };
  std::map<std::string, DocMentions> docs;
  for (TriggerMention &m : predictions.TriggerMentions()) {
    docs[m.doc_id].pred_triggers.push_back(std::move(m));
  }
  for (ArgumentMention &m : predictions.ArgumentMentions()) {
    docs[m.doc_id].pred_args.push_back(std::move(m));
  }
  for (TriggerMention &m : GoldTriggerMentions(gold)) {
    docs[m.doc_id].gold_triggers.push_back(std::move(m));
  }
  for (ArgumentMention &m : GoldArgumentMentions(gold)) {
    docs[m.doc_id].gold_args.push_back(std::move(m));
  }

  std::vector<BlockCounts> parts;
  for (const auto &[doc_id, d] : docs) {
    BlockCounts c;
    std::tie(c.trigger_id, c.trigger_idc) =
        ScoreTriggers(d.pred_triggers, d.gold_triggers);
    std::tie(c.arg_id, c.arg_idc) = ScoreArguments(d.pred_args, d.gold_args);
    parts.push_back(c);
  }
  return Aggregate(parts);
}

EvalReport Evaluate(const PredictionSet &predictions, const Corpus &gold) {
  std::set<SentenceKey> sentences;
  for (const Sentence *s : gold.Sentences()) {
    sentences.emplace(s->doc_id, s->sent_id);
  }
  for (const auto &t : predictions.triggers()) {
    sentences.emplace(t.doc_id, t.sent_id);
  }
  return Evaluate(predictions, sentences, gold);
}

std::string WritePredictions(const Corpus &corpus,
                             const PredictionSet &predictions) {
  std::map<SentenceKey, std::vector<const PredictionSet::Trigger *>> triggers;
  for (const auto &t : predictions.triggers()) {
    triggers[{t.doc_id, t.sent_id}].push_back(&t);
  }
  std::map<std::tuple<std::string, std::string, int, std::string>,
           std::vector<const ArgCandidate *>>
      arguments;
  for (const ArgCandidate &a : predictions.arguments()) {
    arguments[{a.doc_id, a.sent_id, a.trigger_offset, a.event_type}].push_back(&a);
  }

  std::string out;
  for (const Sentence *s : corpus.Sentences()) {
    json j = json::parse(SentenceRecordLine(*s));
    json predicted = json::array();
    auto it = triggers.find({s->doc_id, s->sent_id});
    if (it != triggers.end()) {
      for (const PredictionSet::Trigger *t : it->second) {
        json args = json::array();
        auto a_it = arguments.find({s->doc_id, s->sent_id,
                                    t->prediction.token_offset,
                                    t->prediction.event_type});
        if (a_it != arguments.end()) {
          for (const ArgCandidate *a : a_it->second) {
            args.push_back({{"role", a->role_name},
                            {"start", a->start},
                            {"end", a->end},
                            {"score", a->score},
                            {"no_ans_score", a->no_ans_score}});
          }
        }
        predicted.push_back({{"trigger", t->prediction.token_offset},
                             {"event_type", t->prediction.event_type},
                             {"prob", t->prediction.prob},
                             {"arguments", args}});
      }
    }
    j["predicted_events"] = predicted;
    out += j.dump();
    out += '\n';
  }
  return out;
}

PredictionFile ParsePredictions(std::string_view text, std::string_view source) {
  PredictionFile file;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    try {
      const json j = json::parse(line);
      const std::string doc_id = j.at("doc_id").get<std::string>();
      const std::string sent_id = j.at("sent_id").get<std::string>();
      if (!file.sentences.emplace(doc_id, sent_id).second) {
        throw ValidationError(where + ": duplicate sentence " + doc_id + "/" +
                              sent_id);
      }
      const json &events =
          j.contains("predicted_events") ? j["predicted_events"] : j.value("events", json::array());
      for (const json &ev : events) {
        TriggerPrediction t;
        t.token_offset = ev.at("trigger").get<int>();
        t.event_type = ev.at("event_type").get<std::string>();
        t.prob = ev.value("prob", 1.0);
        file.predictions.AddTrigger(doc_id, sent_id, t);
        for (const json &a : ev.value("arguments", json::array())) {
          ArgCandidate c;
          c.doc_id = doc_id;
          c.sent_id = sent_id;
          c.event_type = t.event_type;
          c.trigger_offset = t.token_offset;
          c.role_name = a.at("role").get<std::string>();
          c.start = a.at("start").get<int>();
          c.end = a.at("end").get<int>();
          c.score = a.value("score", 0.0);
          c.no_ans_score = a.value("no_ans_score", 0.0);
          file.predictions.AddArgument(c);
        }
      }
    } catch (const json::exception &e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return file;
}

std::string TriggerRequestLines(const Corpus &corpus,
                                const ExtractOptions &options) {
  const Question question = TriggerQuestion(options.trigger_strategy);
  std::string out;
  for (const Sentence *s : corpus.Sentences()) {
    json j = RequestRecord(ProbRequest::Trigger(*s), question, *s,
                           Encode(question, *s));
    j["strategy"] = question.strategy;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string ArgumentRequestLines(const Corpus &corpus,
                                 const EventOntology &ontology,
                                 const ProbProvider &provider,
                                 const ExtractOptions &options) {
  const std::string strategy = StrategyTag(options.arg_strategy);
  std::string out;
  for (const Sentence *s : corpus.Sentences()) {
    for (const TriggerPrediction &trigger :
         SentenceTriggers(*s, ontology, provider, options)) {
      for (const RoleSpec &role : ontology.Roles(trigger.event_type)) {
        const Question question = ArgumentQuestionFor(*s, trigger, role, options);
        const EncodedSequence sequence = Encode(question, *s, trigger.token_offset);
        const ProbRequest request = ProbRequest::Argument(
            *s, trigger.event_type, role.role_name, trigger.token_offset,
            strategy);
        out += RequestRecord(request, question, *s, sequence).dump();
        out += '\n';
      }
    }
  }
  return out;
}

ZeroShotRun RunZeroShot(const Corpus &corpus, const EventOntology &ontology,
                        const std::set<std::string> &unseen,
                        const ProbProvider &provider, ExtractOptions options,
                        const ThresholdTable *thresholds) {
  ZeroShotRun run;
  run.subsets = ZeroShotSplit(ontology, unseen, corpus);
  // Trigger detection is skipped in the zero-shot setting.
  options.use_gold_triggers = true;
  run.predictions =
      Extract(run.subsets.test, ontology, provider, options, thresholds);
  run.report = Evaluate(run.predictions, run.subsets.test);
  return run;
}

void RunConfig::Validate() const {
  if (provider.kind == ProviderConfig::Kind::kPseudoRandom && !provider.seed) {
    throw ConfigError("--seed is required with the pseudorandom provider");
  }
  if (provider.kind != ProviderConfig::Kind::kPseudoRandom && provider.seed) {
    throw ConfigError("--seed only applies to the pseudorandom provider");
  }
  if (provider.kind == ProviderConfig::Kind::kFile) {
    RequireFile(provider.path, "probability file");
  }
  if (!ontology_path.empty()) RequireFile(ontology_path, "ontology file");
}

PredictionSet RunExtract(const RunConfig &config) {
  config.Validate();
  RequireFile(config.corpus_path, "corpus file");
  const EventOntology ontology = LoadOntology(
      config.ontology_path.empty() ? DefaultOntologyPath() : config.ontology_path);
  const Corpus corpus = LoadCorpus(config.corpus_path, ontology);
  std::optional<ThresholdTable> thresholds;
  if (config.options.decode.mode == ThresholdMode::kDynamicThreshold) {
    RequireFile(config.thresholds_path, "threshold file");
    thresholds = ThresholdTable::Load(config.thresholds_path);
  }
  const auto provider = MakeProvider(config.provider, ontology);
  PredictionSet predictions =
      Extract(corpus, ontology, *provider, config.options,
              thresholds ? &*thresholds : nullptr);
  if (!config.output_path.empty()) {
    WriteFile(config.output_path, WritePredictions(corpus, predictions));
  }
  return predictions;
}

ThresholdTable RunCalibrate(const RunConfig &config) {
  config.Validate();
  if (config.options.decode.mode == ThresholdMode::kZeroRule) {
    throw ConfigError(
        "calibration is only meaningful in dynamic-threshold mode; the zero "
        "rule uses a fixed cutoff of 0");
  }
  RequireFile(config.corpus_path, "dev corpus file");
  const EventOntology ontology = LoadOntology(
      config.ontology_path.empty() ? DefaultOntologyPath() : config.ontology_path);
  const Corpus dev = LoadCorpus(config.corpus_path, ontology, SplitTag::kDev);
  const auto provider = MakeProvider(config.provider, ontology);
  ThresholdTable table =
      Calibrate(dev, ontology, *provider, config.options, config.per_role);
  if (!config.output_path.empty()) table.Save(config.output_path);
  return table;
}

EvalReport RunEvaluate(const RunConfig &config) {
  if (!config.ontology_path.empty()) {
    RequireFile(config.ontology_path, "ontology file");
  }
  RequireFile(config.corpus_path, "gold corpus file");
  RequireFile(config.predictions_path, "prediction file");
  const EventOntology ontology = LoadOntology(
      config.ontology_path.empty() ? DefaultOntologyPath() : config.ontology_path);
  const Corpus gold = LoadCorpus(config.corpus_path, ontology);
  const PredictionFile file =
      ParsePredictions(ReadFile(config.predictions_path), config.predictions_path);
  EvalReport report = Evaluate(file.predictions, file.sentences, gold);
  if (!config.output_path.empty()) WriteFile(config.output_path, report.ToJson());
  return report;
}

}  // namespace eeqa
