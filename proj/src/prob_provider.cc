#include "eeqa/prob_provider.h"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "eeqa/errors.h"
#include "json.hpp"

namespace eeqa {

using json = nlohmann::json;

namespace {

// Vector of length `size` with `peaks` (position, mass) and the leftover
// mass spread uniformly over the remaining positions.
std::vector<double> PeakedVector(int size, const std::map<int, double> &peaks) {
  double peak_total = 0.0;
  for (const auto &[pos, mass] : peaks) peak_total += mass;
  const int rest = size - static_cast<int>(peaks.size());
  const double fill = rest > 0 ? (1.0 - peak_total) / rest : 0.0;
  std::vector<double> v(size, fill);
  for (const auto &[pos, mass] : peaks) v[pos] = mass;
  return v;
}

uint64_t Fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in (0,1], built from raw engine bits so the stream is identical
// across standard library implementations.
double UnitInterval(std::mt19937_64 &engine) {
  return (static_cast<double>(engine() >> 11) + 1.0) * 0x1.0p-53;
}

// Flat Dirichlet sample; weight[0] is scaled by `first_weight`.
std::vector<double> RandomSimplex(std::mt19937_64 &engine, int size,
                                  double first_weight = 1.0) {
  std::vector<double> v(size);
  double total = 0.0;
  for (int i = 0; i < size; ++i) {
    v[i] = -std::log(UnitInterval(engine));
    if (i == 0) v[i] *= first_weight;
    total += v[i];
  }
  for (double &x : v) x /= total;
  return v;
}

std::vector<double> ReadVector(const json &value, const std::string &where) {
  if (!value.is_array()) throw ParseError(where + ": expected a number array");
  std::vector<double> v;
  v.reserve(value.size());
  for (const json &x : value) {
    if (!x.is_number()) throw ParseError(where + ": non-numeric entry");
    v.push_back(x.get<double>());
  }
  return v;
}

json RequestJson(const ProbRequest &request) {
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
  return j;
}

}  // namespace

std::string_view RequestKindName(RequestKind kind) {
  return kind == RequestKind::kTrigger ? "trigger" : "argument";
}

ProbRequest ProbRequest::Trigger(const Sentence &sentence) {
  ProbRequest r;
  r.doc_id = sentence.doc_id;
  r.sent_id = sentence.sent_id;
  r.kind = RequestKind::kTrigger;
  return r;
}

ProbRequest ProbRequest::Argument(const Sentence &sentence,
                                  std::string event_type,
                                  std::string role_name, int trigger_offset,
                                  std::string strategy) {
  ProbRequest r;
  r.doc_id = sentence.doc_id;
  r.sent_id = sentence.sent_id;
  r.kind = RequestKind::kArgument;
  r.event_type = std::move(event_type);
  r.role_name = std::move(role_name);
  r.trigger_offset = trigger_offset;
  r.strategy = std::move(strategy);
  return r;
}

std::string ProbRequest::Key() const {
  std::string key = doc_id + '\t' + sent_id + '\t' +
                    std::string(RequestKindName(kind));
  if (kind == RequestKind::kArgument) {
    key += '\t' + event_type + '\t' + role_name + '\t' +
           std::to_string(trigger_offset) + '\t' + strategy;
  }
  return key;
}

std::string ProbRequest::Describe() const {
  std::string s = "(doc " + doc_id + ", sent " + sent_id;
  if (kind == RequestKind::kArgument) {
    s += ", " + event_type + " trigger@" + std::to_string(trigger_offset) +
         ", role " + role_name + ", strategy " + strategy;
  } else {
    s += ", trigger";
  }
  return s + ")";
}

bool IsStochastic(std::span<const double> values, double tolerance) {
  if (values.empty()) return false;
  double total = 0.0;
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) return false;
    total += v;
  }
  return std::abs(total - 1.0) <= tolerance;
}

void CheckTriggerProbs(const TriggerProbs &probs, int num_tokens,
                       int num_labels) {
  if (probs.num_tokens() != num_tokens) {
    throw ValidationError("trigger probabilities have " +
                          std::to_string(probs.num_tokens()) +
                          " rows, sentence has " + std::to_string(num_tokens) +
                          " tokens");
  }
  for (int i = 0; i < num_tokens; ++i) {
    const auto &row = probs.rows[i];
    if (static_cast<int>(row.size()) != num_labels) {
      throw ValidationError("trigger row " + std::to_string(i) + " has " +
                            std::to_string(row.size()) + " labels, expected " +
                            std::to_string(num_labels));
    }
    if (!IsStochastic(row)) {
      throw ValidationError("trigger row " + std::to_string(i) +
                            " is not a probability distribution");
    }
  }
}

void CheckSpanProbs(const SpanProbs &probs, int sequence_length) {
  if (probs.size() != sequence_length ||
      static_cast<int>(probs.end.size()) != sequence_length) {
    throw ValidationError("span probabilities have length " +
                          std::to_string(probs.size()) + "/" +
                          std::to_string(probs.end.size()) +
                          ", encoded sequence has " +
                          std::to_string(sequence_length));
  }
  if (probs.cls_index < 0 || probs.cls_index >= sequence_length) {
    throw ValidationError("span cls_index out of range");
  }
  if (!IsStochastic(probs.start) || !IsStochastic(probs.end)) {
    throw ValidationError("span start/end vector is not a distribution");
  }
}

// --- Oracle ---------------------------------------------------------------

OracleProvider::OracleProvider(const EventOntology &ontology)
    : ontology_(ontology) {}

TriggerProbs OracleProvider::GetTriggerProbs(const ProbRequest &,
                                             const Sentence &sentence) const {
  const int labels = ontology_.num_labels();
  std::vector<int> gold(sentence.size(), 0);
  for (const GoldEvent &event : sentence.gold_events) {
    // A second event on the same token keeps the first type.
    if (gold[event.trigger_offset] == 0) {
      gold[event.trigger_offset] = ontology_.LabelIndex(event.event_type);
    }
  }
  TriggerProbs probs;
  probs.rows.reserve(sentence.size());
  for (int label : gold) {
    probs.rows.push_back(PeakedVector(labels, {{label, kPeakMass}}));
  }
  return probs;
}

SpanProbs OracleProvider::GetSpanProbs(const ProbRequest &request,
                                       const Sentence &sentence,
                                       const EncodedSequence &sequence) const {
  std::vector<const GoldArgument *> spans;
  for (const GoldEvent &event : sentence.gold_events) {
    if (event.trigger_offset != request.trigger_offset ||
        event.event_type != request.event_type) {
      continue;
    }
    for (const GoldArgument &arg : event.arguments) {
      if (arg.role == request.role_name) spans.push_back(&arg);
    }
    break;
  }

  std::map<int, double> starts, ends;
  if (spans.empty()) {
    starts[sequence.cls_index()] = kPeakMass;
    ends[sequence.cls_index()] = kPeakMass;
  } else {
    const double share = kPeakMass / static_cast<double>(spans.size());
    for (const GoldArgument *arg : spans) {
      starts[sequence.ToPosition(arg->start)] += share;
      ends[sequence.ToPosition(arg->end)] += share;
    }
  }
  SpanProbs probs;
  probs.start = PeakedVector(sequence.size(), starts);
  probs.end = PeakedVector(sequence.size(), ends);
  probs.cls_index = sequence.cls_index();
  return probs;
}

// --- Pseudorandom -----------------------------------------------------------

PseudoRandomProvider::PseudoRandomProvider(uint64_t seed, int num_labels)
    : seed_(seed), num_labels_(num_labels) {}

TriggerProbs PseudoRandomProvider::GetTriggerProbs(
    const ProbRequest &request, const Sentence &sentence) const {
  std::mt19937_64 engine(SplitMix64(seed_ ^ Fnv1a(request.Key())));
  TriggerProbs probs;
  // Bias toward None so that only some tokens come out as triggers.
  for (int i = 0; i < sentence.size(); ++i) {
    probs.rows.push_back(RandomSimplex(engine, num_labels_, num_labels_ / 2.0));
  }
  return probs;
}

SpanProbs PseudoRandomProvider::GetSpanProbs(
    const ProbRequest &request, const Sentence &,
    const EncodedSequence &sequence) const {
  std::mt19937_64 engine(SplitMix64(seed_ ^ Fnv1a(request.Key())));
  SpanProbs probs;
  probs.start = RandomSimplex(engine, sequence.size());
  probs.end = RandomSimplex(engine, sequence.size());
  probs.cls_index = sequence.cls_index();
  return probs;
}

// --- File-backed ------------------------------------------------------------

FileProbProvider FileProbProvider::FromFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open probability file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FromText(buffer.str(), path);
}

FileProbProvider FileProbProvider::FromText(std::string_view text,
                                            std::string_view source) {
  FileProbProvider provider;
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

    ProbRequest req;
    try {
      req.doc_id = j.at("doc_id").get<std::string>();
      req.sent_id = j.at("sent_id").get<std::string>();
      const std::string kind = j.at("kind").get<std::string>();
      if (kind == "trigger") {
        req.kind = RequestKind::kTrigger;
      } else if (kind == "argument") {
        req.kind = RequestKind::kArgument;
        req.event_type = j.at("event_type").get<std::string>();
        req.role_name = j.at("role_name").get<std::string>();
        req.trigger_offset = j.at("trigger_offset").get<int>();
        req.strategy = j.at("strategy").get<std::string>();
      } else {
        throw ParseError(where + ": unknown kind '" + kind + "'");
      }
    } catch (const json::exception &e) {
      throw ParseError(where + ": " + e.what());
    }

    Record record;
    if (auto it = j.find("skipped"); it != j.end()) {
      record.skipped = it->is_string() ? it->get<std::string>() : "skipped";
    } else if (req.kind == RequestKind::kTrigger) {
      if (!j.contains("probs") || !j["probs"].is_array()) {
        throw ParseError(where + ": trigger record without 'probs'");
      }
      for (size_t i = 0; i < j["probs"].size(); ++i) {
        record.trigger.rows.push_back(ReadVector(
            j["probs"][i], where + ": probs[" + std::to_string(i) + "]"));
        if (!IsStochastic(record.trigger.rows.back())) {
          throw ValidationError(where + ": malformed row " +
                                std::to_string(i) + " (not a distribution)");
        }
      }
    } else {
      if (!j.contains("start") || !j.contains("end")) {
        throw ParseError(where + ": argument record without 'start'/'end'");
      }
      record.span.start = ReadVector(j["start"], where + ": start");
      record.span.end = ReadVector(j["end"], where + ": end");
      record.span.cls_index = j.value("cls_index", 0);
      try {
        CheckSpanProbs(record.span, record.span.size());
      } catch (const ValidationError &e) {
        throw ValidationError(where + ": " + e.what());
      }
    }
    if (!provider.records_.emplace(req.Key(), std::move(record)).second) {
      throw ValidationError(where + ": duplicate record " + req.Describe());
    }
  }
  return provider;
}

const FileProbProvider::Record &FileProbProvider::Find(
    const ProbRequest &request) const {
  auto it = records_.find(request.Key());
  if (it == records_.end()) {
    throw NotFoundError("no probability record for " + request.Describe());
  }
  if (!it->second.skipped.empty()) {
    throw NotFoundError("probability record for " + request.Describe() +
                        " was skipped by the adapter: " + it->second.skipped);
  }
  return it->second;
}

TriggerProbs FileProbProvider::GetTriggerProbs(const ProbRequest &request,
                                               const Sentence &sentence) const {
  const TriggerProbs &probs = Find(request).trigger;
  if (probs.num_tokens() != sentence.size()) {
    throw ValidationError("trigger record for " + request.Describe() +
                          " has " + std::to_string(probs.num_tokens()) +
                          " rows, sentence has " +
                          std::to_string(sentence.size()) + " tokens");
  }
  return probs;
}

SpanProbs FileProbProvider::GetSpanProbs(const ProbRequest &request,
                                         const Sentence &,
                                         const EncodedSequence &sequence) const {
  const SpanProbs &probs = Find(request).span;
  if (probs.size() != sequence.size()) {
    throw ValidationError("argument record for " + request.Describe() +
                          " has length " + std::to_string(probs.size()) +
                          ", encoded sequence has " +
                          std::to_string(sequence.size()));
  }
  return probs;
}

std::string TriggerRecordLine(const ProbRequest &request,
                              const TriggerProbs &probs) {
  json j = RequestJson(request);
  j["probs"] = probs.rows;
  return j.dump();
}

std::string SpanRecordLine(const ProbRequest &request, const SpanProbs &probs) {
  json j = RequestJson(request);
  j["cls_index"] = probs.cls_index;
  j["start"] = probs.start;
  j["end"] = probs.end;
  return j.dump();
}

}  // namespace eeqa
