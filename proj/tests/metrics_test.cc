#include <random>

#include "doctest.h"
#include "eeqa/metrics.h"

namespace eeqa {
namespace {

ArgumentMention Arg(std::string role, int start, int end,
                    std::string type = "Conflict.Attack", std::string sent = "s") {
  return {"d", std::move(sent), std::move(type), std::move(role), start, end};
}

TEST_CASE("precision, recall and F1 from counts") {
  Block b = Block::FromCounts({3, 4, 2});
  CHECK(b.precision == doctest::Approx(66.6667).epsilon(1e-4));
  CHECK(b.recall == doctest::Approx(50.0));
  CHECK(b.f1 == doctest::Approx(57.1429).epsilon(1e-4));
  Block empty = Block::FromCounts({0, 0, 0});
  CHECK(empty.precision == 0.0);
  CHECK(empty.recall == 0.0);
  CHECK(empty.f1 == 0.0);
  CHECK(Block::FromCounts({0, 5, 0}).f1 == 0.0);
  CHECK(Block::FromCounts({5, 0, 0}).f1 == 0.0);
}

TEST_CASE("trigger scoring: identification ignores the type") {
  std::vector<TriggerMention> gold{{"d", "s", 1, "Life.Die"}, {"d", "s", 4, "Conflict.Attack"}};
  std::vector<TriggerMention> pred{{"d", "s", 1, "Conflict.Attack"},
                                   {"d", "s", 4, "Conflict.Attack"},
                                   {"d", "t", 4, "Conflict.Attack"}};
  auto [id, idc] = ScoreTriggers(pred, gold);
  CHECK(id == Counts{3, 2, 2});
  CHECK(idc == Counts{3, 2, 1});
}

TEST_CASE("argument scoring: identification ignores the role") {
  std::vector<ArgumentMention> gold{Arg("Attacker", 0, 0), Arg("Target", 2, 3)};
  std::vector<ArgumentMention> pred{Arg("Target", 0, 0), Arg("Target", 2, 3),
                                    Arg("Target", 2, 3, "Life.Die")};
  auto [id, idc] = ScoreArguments(pred, gold);
  CHECK(id == Counts{3, 2, 2});
  CHECK(idc == Counts{3, 2, 1});
}

TEST_CASE("argument matching is document-wide on sentence-local offsets") {
  std::vector<ArgumentMention> gold{Arg("Target", 2, 3, "Conflict.Attack", "s1")};
  std::vector<ArgumentMention> pred{Arg("Target", 2, 3, "Conflict.Attack", "s2")};
  CHECK(ScoreArguments(pred, gold).second.num_correct == 1);
  pred[0].doc_id = "other";
  CHECK(ScoreArguments(pred, gold).first.num_correct == 0);
}

TEST_CASE("a merged span gets no credit for its parts") {
  // "Washington and Pyongyang" vs "Washington", "Pyongyang".
  std::vector<ArgumentMention> gold{Arg("Entity", 0, 0, "Contact.Meet"),
                                    Arg("Entity", 2, 2, "Contact.Meet")};
  std::vector<ArgumentMention> pred{Arg("Entity", 0, 2, "Contact.Meet")};
  auto [id, idc] = ScoreArguments(pred, gold);
  CHECK(id.num_correct == 0);
  CHECK(idc.num_correct == 0);
  auto empty = ScoreArguments({}, gold).second;
  CHECK(Block::FromCounts(empty).precision == 0.0);
  CHECK(Block::FromCounts(empty).recall == 0.0);
}

TEST_CASE("one-to-one credit") {
  std::vector<ArgumentMention> gold{Arg("Attacker", 0, 0)};
  std::vector<ArgumentMention> pred{Arg("Attacker", 0, 0), Arg("Attacker", 0, 0)};
  auto [id, idc] = ScoreArguments(pred, gold);
  CHECK(idc.num_correct == 1);
  CHECK(id.num_correct == 1);
  std::vector<ArgumentMention> gold2{Arg("Attacker", 0, 0), Arg("Attacker", 0, 0)};
  CHECK(ScoreArguments(pred, gold2).second.num_correct == 2);
}

TEST_CASE("micro average sums counts before dividing") {
  BlockCounts a, b;
  a.arg_idc = {1, 1, 1};
  b.arg_idc = {3, 1, 0};
  std::vector<BlockCounts> parts{a, b};
  EvalReport r = Aggregate(parts);
  CHECK(r.arg_idc.counts == Counts{4, 2, 1});
  CHECK(r.arg_idc.precision == doctest::Approx(25.0));
  CHECK(r.arg_idc.recall == doctest::Approx(50.0));
}

TEST_CASE("F1 is symmetric and monotone in correct") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const int p = static_cast<int>(rng() % 30);
    const int g = static_cast<int>(rng() % 30);
    const int c = std::min(p, g) == 0 ? 0 : static_cast<int>(rng() % (std::min(p, g) + 1));
    const double f = Block::FromCounts({p, g, c}).f1;
    CHECK(f == doctest::Approx(Block::FromCounts({g, p, c}).f1));
    CHECK(f >= 0.0);
    CHECK(f <= 100.0);
    if (c < std::min(p, g)) CHECK(Block::FromCounts({p, g, c + 1}).f1 > f);
    if (p + g > 0) CHECK(f == doctest::Approx(200.0 * c / (p + g)));
  }
}

TEST_CASE("prediction set collapses duplicates") {
  PredictionSet set;
  CHECK(set.AddTrigger("d", "s", {1, "Life.Die", 0.9}));
  CHECK_FALSE(set.AddTrigger("d", "s", {1, "Life.Die", 0.8}));
  CHECK(set.AddTrigger("d", "s", {1, "Conflict.Attack", 0.8}));
  ArgCandidate c;
  c.doc_id = "d";
  c.sent_id = "s";
  c.event_type = "Life.Die";
  c.role_name = "Victim";
  c.trigger_offset = 1;
  CHECK(set.AddArgument(c));
  CHECK_FALSE(set.AddArgument(c));
  c.trigger_offset = 2;
  CHECK(set.AddArgument(c));
  CHECK(set.TriggerMentions().size() == 2);
  CHECK(set.ArgumentMentions().size() == 2);
}

TEST_CASE("report table has two decimals") {
  EvalReport r;
  r.arg_idc = Block::FromCounts({3, 4, 2});
  const std::string table = r.ToTable();
  CHECK(table.find("66.67") != std::string::npos);
  CHECK(table.find("50.00") != std::string::npos);
  CHECK(table.find("57.14") != std::string::npos);
  CHECK(r.ToJson().find("\"arg_idc\"") != std::string::npos);
}

}  // namespace
}  // namespace eeqa
