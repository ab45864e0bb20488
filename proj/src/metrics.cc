#include "eeqa/metrics.h"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace eeqa {

namespace {

// Greedy one-to-one matching in prediction order: each gold item can be
// consumed once.
template <typename Key, typename Item, typename KeyFn>
Counts GreedyMatch(std::span<const Item> preds, std::span<const Item> gold,
                   KeyFn key) {
  std::map<Key, int> remaining;
  for (const Item &g : gold) ++remaining[key(g)];
  Counts counts;
  counts.num_pred = static_cast<int>(preds.size());
  counts.num_gold = static_cast<int>(gold.size());
  for (const Item &p : preds) {
    auto it = remaining.find(key(p));
    if (it != remaining.end() && it->second > 0) {
      --it->second;
      ++counts.num_correct;
    }
  }
  return counts;
}

std::string Fixed2(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << v;
  return out.str();
}

nlohmann::json BlockJson(const Block &b) {
  return {{"precision", b.precision}, {"recall", b.recall}, {"f1", b.f1},
          {"num_pred", b.counts.num_pred}, {"num_gold", b.counts.num_gold},
          {"num_correct", b.counts.num_correct}};
}

}  // namespace

Block Block::FromCounts(const Counts &counts) {
  Block b;
  b.counts = counts;
  if (counts.num_pred > 0) {
    b.precision = 100.0 * counts.num_correct / counts.num_pred;
  }
  if (counts.num_gold > 0) {
    b.recall = 100.0 * counts.num_correct / counts.num_gold;
  }
  if (b.precision + b.recall > 0.0) {
    b.f1 = 2.0 * b.precision * b.recall / (b.precision + b.recall);
  }
  return b;
}

BlockCounts &BlockCounts::operator+=(const BlockCounts &other) {
  trigger_id += other.trigger_id;
  trigger_idc += other.trigger_idc;
  arg_id += other.arg_id;
  arg_idc += other.arg_idc;
  return *this;
}

std::pair<Counts, Counts> ScoreTriggers(std::span<const TriggerMention> preds,
                                        std::span<const TriggerMention> gold) {
  using IdKey = std::tuple<std::string, std::string, int>;
  using IdcKey = std::tuple<std::string, std::string, int, std::string>;
  Counts id = GreedyMatch<IdKey>(preds, gold, [](const TriggerMention &m) {
    return IdKey{m.doc_id, m.sent_id, m.offset};
  });
  Counts idc = GreedyMatch<IdcKey>(preds, gold, [](const TriggerMention &m) {
    return IdcKey{m.doc_id, m.sent_id, m.offset, m.event_type};
  });
  return {id, idc};
}

std::pair<Counts, Counts> ScoreArguments(std::span<const ArgumentMention> preds,
                                         std::span<const ArgumentMention> gold) {
  Counts id = GreedyMatch<ArgumentIdKey>(
      preds, gold, [](const ArgumentMention &m) { return IdKey(m); });
  Counts idc = GreedyMatch<ArgumentIdcKey>(
      preds, gold, [](const ArgumentMention &m) { return IdcKey(m); });
  return {id, idc};
}

EvalReport Aggregate(std::span<const BlockCounts> parts) {
  BlockCounts total;
  for (const BlockCounts &p : parts) total += p;
  EvalReport report;
  report.trigger_id = Block::FromCounts(total.trigger_id);
  report.trigger_idc = Block::FromCounts(total.trigger_idc);
  report.arg_id = Block::FromCounts(total.arg_id);
  report.arg_idc = Block::FromCounts(total.arg_idc);
  return report;
}

std::string EvalReport::ToTable() const {
  std::ostringstream out;
  out << std::left << std::setw(22) << "criterion" << std::right
      << std::setw(9) << "P" << std::setw(9) << "R" << std::setw(9) << "F1"
      << std::setw(8) << "pred" << std::setw(8) << "gold" << std::setw(9)
      << "correct" << "\n";
  const std::pair<const char *, const Block *> rows[] = {
      {"trigger ID", &trigger_id},
      {"trigger ID+C", &trigger_idc},
      {"argument ID", &arg_id},
      {"argument ID+C", &arg_idc},
  };
  for (const auto &[name, b] : rows) {
    out << std::left << std::setw(22) << name << std::right << std::setw(9)
        << Fixed2(b->precision) << std::setw(9) << Fixed2(b->recall)
        << std::setw(9) << Fixed2(b->f1) << std::setw(8) << b->counts.num_pred
        << std::setw(8) << b->counts.num_gold << std::setw(9)
        << b->counts.num_correct << "\n";
  }
  return out.str();
}

std::string EvalReport::ToJson() const {
  nlohmann::json j = {{"trigger_id", BlockJson(trigger_id)},
                      {"trigger_idc", BlockJson(trigger_idc)},
                      {"arg_id", BlockJson(arg_id)},
                      {"arg_idc", BlockJson(arg_idc)}};
  return j.dump(2) + "\n";
}

bool PredictionSet::AddTrigger(const std::string &doc_id,
                               const std::string &sent_id,
                               const TriggerPrediction &prediction) {
  if (!trigger_keys_.emplace(doc_id, sent_id, prediction.token_offset,
                             prediction.event_type).second) {
    return false;
  }
  triggers_.push_back({doc_id, sent_id, prediction});
  return true;
}

bool PredictionSet::AddArgument(const ArgCandidate &candidate) {
  if (!argument_keys_.emplace(candidate.doc_id, candidate.sent_id,
                              candidate.event_type, candidate.trigger_offset,
                              candidate.role_name, candidate.start,
                              candidate.end).second) {
    return false;
  }
  arguments_.push_back(candidate);
  return true;
}

std::vector<TriggerMention> PredictionSet::TriggerMentions() const {
  std::vector<TriggerMention> out;
  out.reserve(triggers_.size());
  for (const Trigger &t : triggers_) {
    out.push_back({t.doc_id, t.sent_id, t.prediction.token_offset,
                   t.prediction.event_type});
  }
  return out;
}

std::vector<ArgumentMention> PredictionSet::ArgumentMentions() const {
  std::vector<ArgumentMention> out;
  out.reserve(arguments_.size());
  for (const ArgCandidate &a : arguments_) out.push_back(a.ToMention());
  return out;
}

}  // namespace eeqa
