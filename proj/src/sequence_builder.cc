#include "eeqa/sequence_builder.h"

#include <cctype>
#include <stdexcept>

namespace eeqa {

std::optional<int> EncodedSequence::ToSentenceOffset(int position) const {
  if (!InSentence(position)) return std::nullopt;
  return position - sentence_first_;
}

int EncodedSequence::ToPosition(int sentence_offset) const {
  if (sentence_offset < 0 ||
      sentence_offset > sentence_last_ - sentence_first_) {
    throw std::out_of_range("sentence offset " +
                            std::to_string(sentence_offset) +
                            " outside encoded sentence");
  }
  return sentence_first_ + sentence_offset;
}

std::vector<std::string> TokenizeQuestion(std::string_view text) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    if (j > i) tokens.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

EncodedSequence Encode(const Question &question, const Sentence &sentence,
                       std::optional<int> trigger_offset) {
  EncodedSequence seq;
  std::vector<std::string> q = TokenizeQuestion(question.text);
  seq.items_.reserve(q.size() + sentence.tokens.size() + 3);
  seq.items_.emplace_back(kClsToken);
  for (auto &token : q) seq.items_.push_back(std::move(token));
  seq.items_.emplace_back(kSepToken);
  seq.sentence_first_ = seq.size();
  for (const auto &token : sentence.tokens) seq.items_.push_back(token);
  seq.sentence_last_ = seq.size() - 1;
  seq.items_.emplace_back(kSepToken);
  seq.trigger_offset = trigger_offset;
  return seq;
}

}  // namespace eeqa
