#ifndef EEQA_TRIGGER_DECODER_H_
#define EEQA_TRIGGER_DECODER_H_

#include <span>
#include <string>
#include <vector>

#include "eeqa/ontology.h"
#include "eeqa/prob_provider.h"

namespace eeqa {

struct TriggerPrediction {
  int token_offset = 0;
  std::string event_type;
  double prob = 0.0;
};

// Per-token argmax over the label distribution. Tokens whose argmax is None
// are dropped; ties go to the lowest label index, so an exact tie with None
// yields no trigger. Output offsets are strictly increasing.
std::vector<TriggerPrediction> DecodeTriggers(const TriggerProbs &probs,
                                              const EventOntology &ontology);

// Sum over tokens of -ln P[token][gold_label]. Label 0 is None. Throws
// NumericError naming the token when a gold probability is zero.
double TriggerNll(const TriggerProbs &probs, std::span<const int> gold_labels);

}  // namespace eeqa

#endif  // EEQA_TRIGGER_DECODER_H_
