#ifndef EEQA_SEQUENCE_BUILDER_H_
#define EEQA_SEQUENCE_BUILDER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eeqa/question_gen.h"

namespace eeqa {

inline constexpr std::string_view kClsToken = "[CLS]";
inline constexpr std::string_view kSepToken = "[SEP]";

// Inclusive token offsets within a sentence.
struct GoldArgument {
  std::string role;
  int start = 0;
  int end = 0;

  bool operator==(const GoldArgument &) const = default;
};

struct GoldEvent {
  int trigger_offset = 0;
  std::string event_type;
  std::vector<GoldArgument> arguments;

  bool operator==(const GoldEvent &) const = default;
};

struct Sentence {
  std::string doc_id;
  std::string sent_id;
  std::vector<std::string> tokens;
  std::vector<GoldEvent> gold_events;

  int size() const { return static_cast<int>(tokens.size()); }
};

// "[CLS] <question> [SEP] <sentence> [SEP]" with a position map back to
// sentence token offsets. Positions are 0-based; the CLS marker is at 0.
class EncodedSequence {
 public:
  const std::vector<std::string> &items() const { return items_; }
  int size() const { return static_cast<int>(items_.size()); }
  int cls_index() const { return 0; }

  // Inclusive range of sentence positions.
  int sentence_first() const { return sentence_first_; }
  int sentence_last() const { return sentence_last_; }
  bool InSentence(int position) const {
    return position >= sentence_first_ && position <= sentence_last_;
  }

  // Sentence offset of a sequence position, or nullopt outside the sentence.
  std::optional<int> ToSentenceOffset(int position) const;
  // Sequence position of a sentence offset. Throws std::out_of_range.
  int ToPosition(int sentence_offset) const;

  // Offset of the trigger the question was asked about, if any. Recorded so
  // a repeated trigger word can be told apart; the question text does not
  // change.
  std::optional<int> trigger_offset;

 private:
  friend EncodedSequence Encode(const Question &, const Sentence &,
                                std::optional<int>);

  std::vector<std::string> items_;
  int sentence_first_ = 0;
  int sentence_last_ = -1;
};

// Whitespace tokenization of question text; punctuation stays attached.
std::vector<std::string> TokenizeQuestion(std::string_view text);

EncodedSequence Encode(const Question &question, const Sentence &sentence,
                       std::optional<int> trigger_offset = {});

}  // namespace eeqa

#endif  // EEQA_SEQUENCE_BUILDER_H_
