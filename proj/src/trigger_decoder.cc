#include "eeqa/trigger_decoder.h"

#include <cmath>

#include "eeqa/errors.h"

namespace eeqa {

std::vector<TriggerPrediction> DecodeTriggers(const TriggerProbs &probs,
                                              const EventOntology &ontology) {
  std::vector<TriggerPrediction> out;
  for (int t = 0; t < probs.num_tokens(); ++t) {
    const std::vector<double> &row = probs.rows[t];
    if (static_cast<int>(row.size()) != ontology.num_labels()) {
      throw ValidationError("trigger row " + std::to_string(t) + " has " +
                            std::to_string(row.size()) + " labels, ontology has " +
                            std::to_string(ontology.num_labels()));
    }
    int best = 0;
    for (int k = 1; k < static_cast<int>(row.size()); ++k) {
      if (row[k] > row[best]) best = k;
    }
    if (best == 0) continue;
    out.push_back({t, ontology.LabelName(best), row[best]});
  }
  return out;
}

double TriggerNll(const TriggerProbs &probs, std::span<const int> gold_labels) {
  if (static_cast<int>(gold_labels.size()) != probs.num_tokens()) {
    throw ValidationError("trigger loss: " + std::to_string(gold_labels.size()) +
                          " gold labels for " +
                          std::to_string(probs.num_tokens()) + " tokens");
  }
  double loss = 0.0;
  for (int t = 0; t < probs.num_tokens(); ++t) {
    const int label = gold_labels[t];
    const auto &row = probs.rows[t];
    if (label < 0 || label >= static_cast<int>(row.size())) {
      throw ValidationError("trigger loss: label " + std::to_string(label) +
                            " out of range at token " + std::to_string(t));
    }
    if (row[label] <= 0.0) {
      throw NumericError("trigger loss: zero probability for gold label at "
                         "token " + std::to_string(t));
    }
    loss -= std::log(row[label]);
  }
  return loss;
}

}  // namespace eeqa
