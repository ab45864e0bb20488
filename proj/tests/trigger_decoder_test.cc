#include <cmath>
#include <random>

#include "doctest.h"
#include "eeqa/errors.h"
#include "eeqa/trigger_decoder.h"
#include "test_util.h"

namespace eeqa {
namespace {

using testing::DefaultOntology;

EventOntology SmallOntology() {
  return ParseOntology(R"({"event_types": [
      {"event_type": "A", "roles": [{"role": "R", "wh_class": "Other", "question": "What?"}]},
      {"event_type": "B", "roles": [{"role": "R", "wh_class": "Other", "question": "What?"}]}]})");
}

TEST_CASE("argmax per token, None dropped") {
  const EventOntology ont = SmallOntology();
  TriggerProbs p{{{0.8, 0.1, 0.1}, {0.1, 0.7, 0.2}, {0.2, 0.3, 0.5}}};
  auto out = DecodeTriggers(p, ont);
  REQUIRE(out.size() == 2);
  CHECK(out[0].token_offset == 1);
  CHECK(out[0].event_type == "A");
  CHECK(out[0].prob == doctest::Approx(0.7));
  CHECK(out[1].token_offset == 2);
  CHECK(out[1].event_type == "B");
}

TEST_CASE("ties go to the lowest label index") {
  const EventOntology ont = SmallOntology();
  CHECK(DecodeTriggers({{{0.4, 0.4, 0.2}}}, ont).empty());
  auto out = DecodeTriggers({{{0.2, 0.4, 0.4}}}, ont);
  REQUIRE(out.size() == 1);
  CHECK(out[0].event_type == "A");
}

TEST_CASE("decoding is invariant to positive row scaling") {
  const EventOntology &ont = DefaultOntology();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    TriggerProbs p, scaled;
    for (int t = 0; t < 6; ++t) {
      std::vector<double> row(ont.num_labels());
      for (double &x : row) x = u(rng);
      p.rows.push_back(row);
      const double k = 0.1 + 10 * u(rng);
      for (double &x : row) x *= k;
      scaled.rows.push_back(row);
    }
    auto a = DecodeTriggers(p, ont);
    auto b = DecodeTriggers(scaled, ont);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].token_offset == b[i].token_offset);
      CHECK(a[i].event_type == b[i].event_type);
    }
  }
}

TEST_CASE("row width must match the ontology") {
  CHECK_THROWS_AS(DecodeTriggers({{{0.5, 0.5}}}, SmallOntology()), ValidationError);
}

TEST_CASE("negative log likelihood") {
  TriggerProbs p{{{0.5, 0.5}, {0.25, 0.75}}};
  const std::vector<int> gold{0, 0};
  CHECK(TriggerNll(p, gold) == doctest::Approx(std::log(2.0) + std::log(4.0)));
  const std::vector<int> one{1};
  CHECK(TriggerNll({{{0.0, 1.0}}}, one) == 0.0);
  CHECK_THROWS_AS(TriggerNll({{{1.0, 0.0}}}, one), NumericError);
  CHECK_THROWS_AS(TriggerNll(p, one), ValidationError);
  const std::vector<int> bad{0, 5};
  CHECK_THROWS_AS(TriggerNll(p, bad), ValidationError);
}

}  // namespace
}  // namespace eeqa
