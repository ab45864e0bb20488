#include "eeqa/arg_decoder.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "eeqa/errors.h"
#include "json.hpp"

namespace eeqa {

using json = nlohmann::json;

namespace {

json ThresholdJson(double t) {
  if (std::isinf(t)) return t < 0 ? "-inf" : "inf";
  return t;
}

double ThresholdValue(const json &j, const std::string &where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "-inf") return ThresholdTable::kKeepNothing;
    if (s == "inf" || s == "+inf") return ThresholdTable::kKeepAll;
  }
  throw ParseError(where + ": threshold must be a number, \"-inf\" or \"inf\"");
}

}  // namespace

std::string_view ThresholdModeName(ThresholdMode mode) {
  return mode == ThresholdMode::kDynamicThreshold ? "dynamic" : "zero";
}

ThresholdMode ParseThresholdMode(std::string_view name) {
  if (name == "dynamic") return ThresholdMode::kDynamicThreshold;
  if (name == "zero") return ThresholdMode::kZeroRule;
  throw ParseError("unknown threshold mode '" + std::string(name) +
                   "' (expected dynamic or zero)");
}

std::vector<ArgCandidate> HarvestCandidates(const SpanProbs &probs,
                                            const EncodedSequence &sequence,
                                            const DecodeConfig &config,
                                            const CandidateMeta &meta) {
  if (config.max_span_length < 1) {
    throw ConfigError("max_span_length must be at least 1");
  }
  CheckSpanProbs(probs, sequence.size());
  const int cls = probs.cls_index;
  const double start_cls = probs.start[cls];
  const double end_cls = probs.end[cls];

  std::vector<ArgCandidate> out;
  for (int s = sequence.sentence_first(); s <= sequence.sentence_last(); ++s) {
    if (probs.start[s] < start_cls) continue;
    const int last = std::min(sequence.sentence_last(),
                              s + config.max_span_length - 1);
    for (int e = s; e <= last; ++e) {
      if (probs.end[e] < end_cls) continue;
      ArgCandidate c;
      c.doc_id = meta.doc_id;
      c.sent_id = meta.sent_id;
      c.event_type = meta.event_type;
      c.role_name = meta.role_name;
      c.trigger_offset = meta.trigger_offset;
      c.start = *sequence.ToSentenceOffset(s);
      c.end = *sequence.ToSentenceOffset(e);
      c.score = probs.start[s] + probs.end[e];
      c.no_ans_score = start_cls + end_cls - c.score;
      out.push_back(std::move(c));
    }
  }
  return out;
}

double ThresholdTable::Resolve(std::string_view role) const {
  auto it = per_role_.find(role);
  return it == per_role_.end() ? fallback_ : it->second;
}

std::string ThresholdTable::Serialize() const {
  json j;
  j["fallback"] = ThresholdJson(fallback_);
  j["per_role"] = json::object();
  for (const auto &[role, t] : per_role_) j["per_role"][role] = ThresholdJson(t);
  return j.dump(2) + "\n";
}

ThresholdTable ThresholdTable::Parse(std::string_view text,
                                     std::string_view source) {
  const std::string src(source);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(src + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("fallback")) {
    throw ParseError(src + ": expected an object with 'fallback'");
  }
  ThresholdTable table(ThresholdValue(j["fallback"], src + ": fallback"));
  if (auto it = j.find("per_role"); it != j.end()) {
    if (!it->is_object()) throw ParseError(src + ": 'per_role' must be an object");
    for (const auto &[role, value] : it->items()) {
      table.Set(role, ThresholdValue(value, src + ": per_role." + role));
    }
  }
  return table;
}

void ThresholdTable::Save(const std::string &path) const {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write threshold file '" + path + "'");
  out << Serialize();
}

ThresholdTable ThresholdTable::Load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open threshold file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str(), path);
}

ThresholdChoice BestThreshold(std::span<const ArgCandidate> candidates,
                              std::span<const ArgumentMention> gold) {
  std::map<ArgumentIdcKey, int> unmatched;
  for (const ArgumentMention &m : gold) ++unmatched[IdcKey(m)];
  const int num_gold = static_cast<int>(gold.size());

  std::vector<const ArgCandidate *> sorted;
  sorted.reserve(candidates.size());
  for (const ArgCandidate &c : candidates) sorted.push_back(&c);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ArgCandidate *a, const ArgCandidate *b) {
                     return a->no_ans_score < b->no_ans_score;
                   });

  // Matching on exact keys, so the number of correct candidates in a kept
  // set does not depend on the order they are credited in.
  ThresholdChoice best;
  int kept = 0;
  int correct = 0;
  for (size_t i = 0; i < sorted.size();) {
    const double threshold = sorted[i]->no_ans_score;
    for (; i < sorted.size() && sorted[i]->no_ans_score == threshold; ++i) {
      ++kept;
      auto it = unmatched.find(IdcKey(sorted[i]->ToMention()));
      if (it != unmatched.end() && it->second > 0) {
        --it->second;
        ++correct;
      }
    }
    const double f1 = 2.0 * correct / static_cast<double>(kept + num_gold);
    if (f1 > best.f1) best = {threshold, f1, kept, correct};
  }
  return best;
}

ThresholdTable CalibrateThreshold(std::span<const ArgCandidate> dev_candidates,
                                  std::span<const ArgumentMention> dev_gold,
                                  bool per_role) {
  if (dev_gold.empty()) {
    throw ValidationError("threshold calibration needs dev gold arguments");
  }
  ThresholdTable table(BestThreshold(dev_candidates, dev_gold).threshold);
  if (!per_role) return table;

  std::map<std::string, std::vector<ArgCandidate>> by_role;
  for (const ArgCandidate &c : dev_candidates) by_role[c.role_name].push_back(c);
  for (const auto &[role, candidates] : by_role) {
    std::vector<ArgumentMention> role_gold;
    for (const ArgumentMention &m : dev_gold) {
      if (m.role == role) role_gold.push_back(m);
    }
    table.Set(role, BestThreshold(candidates, role_gold).threshold);
  }
  return table;
}

std::vector<ArgCandidate> ApplyThreshold(std::span<const ArgCandidate> candidates,
                                         const ThresholdTable &table) {
  std::vector<ArgCandidate> out;
  for (const ArgCandidate &c : candidates) {
    if (c.no_ans_score <= table.Resolve(c.role_name)) out.push_back(c);
  }
  return out;
}

std::vector<ArgCandidate> ZeroRule(std::span<const ArgCandidate> candidates) {
  std::vector<ArgCandidate> out;
  for (const ArgCandidate &c : candidates) {
    if (c.no_ans_score < 0.0) out.push_back(c);
  }
  return out;
}

double ArgumentNll(const SpanProbs &probs,
                   std::optional<std::pair<int, int>> gold_positions) {
  const auto [start, end] =
      gold_positions.value_or(std::pair{probs.cls_index, probs.cls_index});
  if (start < 0 || start >= probs.size() || end < 0 ||
      end >= static_cast<int>(probs.end.size())) {
    throw ValidationError("argument loss: gold position outside sequence");
  }
  if (probs.start[start] <= 0.0 || probs.end[end] <= 0.0) {
    throw NumericError("argument loss: zero probability at gold position (" +
                       std::to_string(start) + ", " + std::to_string(end) + ")");
  }
  double loss = 0.0;
  loss -= std::log(probs.start[start]);
  loss -= std::log(probs.end[end]);
  return loss;
}

}  // namespace eeqa
