#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "spandep/trainer.hpp"
#include "support/synthetic_treebank.hpp"
#include "support/test_util.hpp"

using namespace spandep;

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(SPANDEP_FIXTURE_DIR) + "/" + name;
}

bool same_weights(const LinearModel& a, const LinearModel& b) {
  if (a.weights().size() != b.weights().size()) return false;
  for (auto [id, w] : a.weights()) {
    auto it = b.weights().find(id);
    if (it == b.weights().end() || it->second != w) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("zero model loss equals the augmented argmax delta") {
  // all scores vanish, so the hinge reduces to max delta; n=2 with one
  // rival differing in both arcs gives exactly 2 under unit arc costs
  Sentence x({{"a", "X", "_", 0, "root"}, {"b", "X", "_", 1, "dep"}});
  ProjectiveTree gold({0, 1});
  LinearModel m;
  TrainConfig cfg;
  cfg.model = Algorithm::kEisner1o;
  cfg.costs = CostConfig::unit_for(cfg.model);
  double loss = hinge_step(x, gold, m, cfg);
  CHECK(loss == doctest::Approx(2.0));
}

TEST_CASE("non-projective gold is rejected by hinge_step") {
  Sentence x({{"a", "X", "_", 4, "dep"},
              {"b", "X", "_", 0, "root"},
              {"c", "X", "_", 2, "dep"},
              {"d", "X", "_", 2, "dep"}});
  LinearModel m;
  TrainConfig cfg;
  CHECK_THROWS_AS(hinge_step(x, ProjectiveTree({4, 0, 2, 2}), m, cfg),
                  std::invalid_argument);
}

TEST_CASE("repeated steps on one sentence drive its loss to zero") {
  Corpus c = sdtest::synthetic_corpus(30, 5);
  // pick a sentence with a few words
  const TrainExample* ex = nullptr;
  for (const TrainExample& e : c)
    if (e.sentence.n() >= 4 && e.sentence.n() <= 8) ex = &e;
  REQUIRE(ex != nullptr);

  for (Algorithm a : {Algorithm::kEisner1o, Algorithm::kEisner2oHeadSplit}) {
    LinearModel m;
    TrainConfig cfg;
    cfg.model = a;
    cfg.costs = CostConfig::unit_for(a);
    double last = 1e9;
    bool reached_zero = false;
    for (int it = 0; it < 50 && !reached_zero; ++it) {
      last = hinge_step(ex->sentence, ex->gold, m, cfg);
      reached_zero = last == 0.0;
    }
    CAPTURE(algorithm_name(a));
    CHECK(reached_zero);
    // once separable, further steps change nothing
    LinearModel before = m;
    CHECK(hinge_step(ex->sentence, ex->gold, m, cfg) == 0.0);
    CHECK(same_weights(before, m));
  }
}

TEST_CASE("train is deterministic under a fixed seed") {
  Corpus train_set = sdtest::synthetic_corpus(40, 11);
  Corpus dev_set = sdtest::synthetic_corpus(10, 12);
  TrainConfig cfg;
  cfg.model = Algorithm::kEisnerHeadSplit;
  cfg.costs = CostConfig::unit_for(cfg.model);
  cfg.epochs = 2;
  cfg.seed = 42;
  TrainResult r1 = train(train_set, dev_set, cfg);
  TrainResult r2 = train(train_set, dev_set, cfg);
  CHECK(same_weights(r1.model, r2.model));
  REQUIRE(r1.log.size() == r2.log.size());
  for (std::size_t i = 0; i < r1.log.size(); ++i)
    CHECK(r1.log[i].mean_loss == r2.log[i].mean_loss);
}

TEST_CASE("training a one-sentence corpus reaches zero loss") {
  Corpus one = sdtest::synthetic_corpus(1, 9);
  TrainConfig cfg;
  cfg.model = Algorithm::kEisnerHeadSplit;
  cfg.costs = CostConfig::unit_for(cfg.model);
  cfg.epochs = 50;
  TrainResult r = train(one, {}, cfg);
  CHECK(r.log.back().mean_loss == 0.0);
}

TEST_CASE("empty and all-non-projective corpora are rejected; skips are counted") {
  TrainConfig cfg;
  CHECK_THROWS_AS(train({}, {}, cfg), std::invalid_argument);

  ConlluDocument doc = read_conllu_file(fixture_path("nonproj.conllu"));
  Corpus bad = corpus_from_document(doc);
  REQUIRE(bad.size() == 1);
  CHECK_THROWS_AS(train(bad, {}, cfg), std::invalid_argument);

  Corpus mixed = sdtest::synthetic_corpus(5, 3);
  mixed.push_back(bad[0]);
  cfg.model = Algorithm::kEisner1o;
  cfg.costs = CostConfig::unit_for(cfg.model);
  cfg.epochs = 1;
  TrainResult r = train(mixed, {}, cfg);
  CHECK(r.skipped_nonprojective == 1);
}

TEST_CASE("updates only touch features of the two decompositions") {
  Corpus c = sdtest::synthetic_corpus(3, 21);
  LinearModel m;
  TrainConfig cfg;
  cfg.model = Algorithm::kEisner1o;
  cfg.costs = CostConfig::unit_for(cfg.model);
  hinge_step(c[0].sentence, c[0].gold, m, cfg);
  std::size_t after_first = m.weight_count();
  CHECK(after_first > 0);
  // replaying the same example cannot introduce features from elsewhere:
  // every new weight belongs to some arc of this sentence
  hinge_step(c[0].sentence, c[0].gold, m, cfg);
  std::set<FeatureId> sentence_features;
  const Sentence& x = c[0].sentence;
  for (int h = 0; h <= x.n(); ++h)
    for (int d = 1; d <= x.n(); ++d) {
      if (h == d) continue;
      for (auto [id, cnt] : featurize_arc(x, h, d).items) sentence_features.insert(id);
    }
  for (auto [id, w] : m.weights()) CHECK(sentence_features.count(id) == 1);
}

TEST_CASE("small synthetic corpus trains past the attach-previous baseline") {
  Corpus train_set = sdtest::synthetic_corpus(150, 1001);
  Corpus dev_set = sdtest::synthetic_corpus(40, 1002);
  TrainConfig cfg;
  cfg.model = Algorithm::kEisnerHeadSplit;
  cfg.costs = CostConfig::unit_for(cfg.model);
  cfg.epochs = 3;
  cfg.seed = 7;
  std::ostringstream log;
  TrainResult r = train(train_set, dev_set, cfg, &log);
  REQUIRE(r.log.size() == 3);
  REQUIRE(r.log.back().dev_uas.has_value());
  double baseline = attach_previous_uas(dev_set);
  CAPTURE(baseline);
  CAPTURE(*r.log.back().dev_uas);
  CHECK(*r.log.back().dev_uas > baseline);
  // one log line per epoch
  int lines = 0;
  std::string line;
  std::istringstream in(log.str());
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 3);
  CHECK(log.str().find("dev-uas") != std::string::npos);
}
