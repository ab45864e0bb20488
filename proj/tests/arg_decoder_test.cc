#include <cmath>
#include <random>

#include "doctest.h"
#include "eeqa/arg_decoder.h"
#include "eeqa/errors.h"
#include "oracles.h"
#include "test_util.h"

namespace eeqa {
namespace {

using testing::MakeSentence;

EncodedSequence MakeSequence(int question_tokens, int sentence_tokens) {
  std::string q;
  for (int i = 0; i < question_tokens; ++i) q += "q ";
  return Encode({q, "", ""},
                MakeSentence(std::vector<std::string>(sentence_tokens, "w")));
}

std::vector<double> RandomDistribution(std::mt19937_64 &rng, int size) {
  std::exponential_distribution<double> exp(1.0);
  std::vector<double> v(size);
  double total = 0.0;
  for (double &x : v) total += (x = exp(rng));
  for (double &x : v) x /= total;
  return v;
}

ArgCandidate Candidate(std::string role, int start, int end, double no_ans) {
  ArgCandidate c;
  c.doc_id = "d";
  c.sent_id = "s";
  c.event_type = "E";
  c.role_name = std::move(role);
  c.start = start;
  c.end = end;
  c.no_ans_score = no_ans;
  return c;
}

ArgumentMention Gold(std::string role, int start, int end) {
  return {"d", "s", "E", std::move(role), start, end};
}

TEST_CASE("worked example") {
  // [CLS] q [SEP] w0 w1 [SEP]
  EncodedSequence seq = MakeSequence(1, 2);
  SpanProbs p{{0.1, 0.0, 0.0, 0.6, 0.3, 0.0}, {0.2, 0.0, 0.0, 0.1, 0.7, 0.0}, 0};
  auto out = HarvestCandidates(p, seq, {}, {"d", "s", "E", "R", 0});
  REQUIRE(out.size() == 2);
  CHECK(out[0].start == 0);
  CHECK(out[0].end == 1);
  CHECK(out[0].score == doctest::Approx(1.3));
  CHECK(out[0].no_ans_score == doctest::Approx(-1.0));
  CHECK(out[1].start == 1);
  CHECK(out[1].end == 1);
  CHECK(out[1].no_ans_score == doctest::Approx(-0.7));
  CHECK(out[0].role_name == "R");
}

TEST_CASE("harvest matches brute force on random inputs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int q = static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 8);
    const int max_len = std::array{1, 3, 10}[rng() % 3];
    EncodedSequence seq = MakeSequence(q, n);
    SpanProbs p{RandomDistribution(rng, seq.size()),
                RandomDistribution(rng, seq.size()), 0};
    auto got = HarvestCandidates(p, seq, {max_len}, {});
    auto want = testing::BruteForceHarvest(p.start, p.end, 0, seq.sentence_first(),
                                           seq.sentence_last(), max_len);
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].start == want[i].start);
      CHECK(got[i].end == want[i].end);
      CHECK(std::abs(got[i].score - want[i].score) <= 1e-12);
      CHECK(std::abs(got[i].no_ans_score - want[i].no_ans) <= 1e-12);
      CHECK(std::abs(got[i].score + got[i].no_ans_score - p.start[0] - p.end[0]) <=
            1e-12);
      CHECK(got[i].end - got[i].start + 1 <= max_len);
    }
  }
}

TEST_CASE("cls dominating everywhere yields no candidates") {
  EncodedSequence seq = MakeSequence(1, 3);
  SpanProbs p{{0.88, 0.02, 0.02, 0.02, 0.02, 0.02, 0.02},
              {0.88, 0.02, 0.02, 0.02, 0.02, 0.02, 0.02}, 0};
  CHECK(HarvestCandidates(p, seq, {}, {}).empty());
}

TEST_CASE("harvest input checks") {
  EncodedSequence seq = MakeSequence(1, 2);
  SpanProbs p{{1, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 0};
  CHECK_THROWS_AS(HarvestCandidates(p, seq, {0}, {}), ConfigError);
  SpanProbs short_p{{1, 0}, {1, 0}, 0};
  CHECK_THROWS_AS(HarvestCandidates(short_p, seq, {}, {}), ValidationError);
}

TEST_CASE("best threshold: hand example and tie break") {
  std::vector<ArgCandidate> c{Candidate("R", 0, 0, -1.5), Candidate("R", 1, 1, -1.0),
                              Candidate("R", 2, 2, -0.5)};
  std::vector<ArgumentMention> g{Gold("R", 0, 0), Gold("R", 2, 2)};
  ThresholdChoice best = BestThreshold(c, g);
  // -1.5: 2/3; -1.0: 2/4; -0.5: 4/5.
  CHECK(best.threshold == -0.5);
  CHECK(best.kept == 3);
  CHECK(best.correct == 2);
  CHECK(best.f1 == doctest::Approx(0.8));

  // Keeping 1 of 1 correct and 4 with 2 correct both give F1 2/3 against
  // two gold spans; the smaller threshold wins.
  std::vector<ArgCandidate> tie{Candidate("R", 0, 0, -2.0), Candidate("R", 9, 9, -1.5),
                                Candidate("R", 8, 8, -1.0), Candidate("R", 1, 1, -0.5)};
  std::vector<ArgumentMention> tie_gold{Gold("R", 0, 0), Gold("R", 1, 1)};
  CHECK(BestThreshold(tie, tie_gold).threshold == -2.0);
}

TEST_CASE("no correct candidate keeps nothing") {
  std::vector<ArgCandidate> c{Candidate("R", 3, 3, -1.0)};
  std::vector<ArgumentMention> g{Gold("R", 0, 0)};
  CHECK(BestThreshold(c, g).threshold == ThresholdTable::kKeepNothing);
  CHECK(BestThreshold({}, g).threshold == ThresholdTable::kKeepNothing);
}

TEST_CASE("calibration is optimal over all sweep points") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng() % 12);
    std::vector<ArgCandidate> cands;
    std::vector<std::pair<double, int>> keyed;
    for (int i = 0; i < n; ++i) {
      const int key = static_cast<int>(rng() % 6);
      // Coarse grid so ties in no_ans occur.
      const double no_ans = static_cast<int>(rng() % 9) * 0.25 - 1.0;
      cands.push_back(Candidate("R", key, key, no_ans));
      keyed.push_back({no_ans, key});
    }
    std::vector<ArgumentMention> gold;
    std::vector<int> gold_keys;
    const int ng = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < ng; ++i) {
      const int key = static_cast<int>(rng() % 6);
      gold.push_back(Gold("R", key, key));
      gold_keys.push_back(key);
    }
    const ThresholdChoice got = BestThreshold(cands, gold);
    const testing::SweepPoint at = testing::EvaluateAt(keyed, gold_keys, got.threshold);
    CHECK(at.kept == got.kept);
    CHECK(at.correct == got.correct);
    std::vector<double> points{ThresholdTable::kKeepNothing};
    for (const auto &[v, k] : keyed) points.push_back(v);
    for (double t : points) {
      const testing::SweepPoint other = testing::EvaluateAt(keyed, gold_keys, t);
      CHECK(testing::F1AtLeast(at, other));
      // Smallest among the optima.
      if (testing::F1AtLeast(other, at)) CHECK(got.threshold <= t);
    }
  }
}

TEST_CASE("kept set grows monotonically with the threshold") {
  std::vector<ArgCandidate> c;
  for (int i = 0; i < 20; ++i) c.push_back(Candidate("R", i, i, std::sin(i)));
  size_t previous = 0;
  for (double t = -1.5; t <= 1.5; t += 0.05) {
    const size_t kept = ApplyThreshold(c, ThresholdTable(t)).size();
    CHECK(kept >= previous);
    previous = kept;
  }
  CHECK(ApplyThreshold(c, ThresholdTable()).empty());
  CHECK(ApplyThreshold(c, ThresholdTable(ThresholdTable::kKeepAll)).size() == c.size());
}

TEST_CASE("per-role calibration and fallback") {
  std::vector<ArgCandidate> c{Candidate("A", 0, 0, -1.9), Candidate("A", 1, 1, -0.9),
                              Candidate("B", 2, 2, -0.1), Candidate("B", 3, 3, -0.2)};
  std::vector<ArgumentMention> g{Gold("A", 0, 0), Gold("B", 3, 3)};
  ThresholdTable t = CalibrateThreshold(c, g);
  CHECK(t.Resolve("A") == -1.9);
  CHECK(t.Resolve("B") == -0.2);
  CHECK(t.Resolve("Unseen") == t.fallback());
  auto kept = ApplyThreshold(c, t);
  REQUIRE(kept.size() == 2);
  CHECK(kept[0].start == 0);
  CHECK(kept[1].start == 3);

  ThresholdTable global = CalibrateThreshold(c, g, false);
  CHECK(global.per_role().empty());
  CHECK_THROWS_AS(CalibrateThreshold(c, {}), ValidationError);
}

TEST_CASE("zero rule is strict") {
  std::vector<ArgCandidate> c{Candidate("R", 0, 0, -0.1), Candidate("R", 1, 1, 0.0),
                              Candidate("R", 2, 2, 0.3)};
  auto kept = ZeroRule(c);
  REQUIRE(kept.size() == 1);
  CHECK(kept[0].start == 0);
}

TEST_CASE("threshold file round trip") {
  ThresholdTable t(-0.125);
  t.Set("Agent", -1.75);
  t.Set("Place", ThresholdTable::kKeepNothing);
  t.Set("Time", ThresholdTable::kKeepAll);
  t.Set("Buyer", 0.1 + 0.2);
  ThresholdTable back = ThresholdTable::Parse(t.Serialize());
  CHECK(back.fallback() == t.fallback());
  CHECK(back.per_role() == t.per_role());
  CHECK(back.Serialize() == t.Serialize());
  CHECK(ThresholdTable::Parse(R"({"fallback": "-inf"})").fallback() ==
        ThresholdTable::kKeepNothing);
  CHECK_THROWS_AS(ThresholdTable::Parse("{}"), ParseError);
  CHECK_THROWS_AS(ThresholdTable::Parse(R"({"fallback": "low"})"), ParseError);
  CHECK_THROWS_AS(ThresholdTable::Parse("nope"), ParseError);
  CHECK_THROWS_AS(ThresholdTable::Load("/nonexistent/t.json"), NotFoundError);
}

TEST_CASE("argument loss") {
  SpanProbs p{{0.5, 0.25, 0.25}, {0.5, 0.5, 0.0}, 0};
  CHECK(ArgumentNll(p, std::pair{1, 1}) ==
        doctest::Approx(std::log(4.0) + std::log(2.0)));
  CHECK(ArgumentNll(p, std::nullopt) == doctest::Approx(2 * std::log(2.0)));
  CHECK(ArgumentNll({{1, 0}, {1, 0}, 0}, std::nullopt) == 0.0);
  CHECK_FALSE(std::signbit(ArgumentNll({{1, 0}, {1, 0}, 0}, std::nullopt)));
  CHECK_THROWS_AS(ArgumentNll(p, std::pair{1, 2}), NumericError);
  CHECK_THROWS_AS(ArgumentNll(p, std::pair{1, 7}), ValidationError);
}

}  // namespace
}  // namespace eeqa
