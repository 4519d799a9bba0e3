#pragma once

// Structured max-margin training: loss-augmented decode, hinge update on
// the unit feature differences, averaged weights, dev-set model selection.
// Arc labeling trains separately as a per-arc multiclass hinge on gold
// arcs.

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "spandep/conllu.hpp"
#include "spandep/cost_augment.hpp"
#include "spandep/linear_model.hpp"

namespace spandep {

struct TrainExample {
  Sentence sentence;
  ProjectiveTree gold;
  std::vector<std::string> labels;
};

using Corpus = std::vector<TrainExample>;

// Keeps sentences whose every word carries an integer head. Trees are not
// validated here; train() skips non-projective ones.
Corpus corpus_from_document(const ConlluDocument& doc);

struct TrainConfig {
  int epochs = 5;
  double learning_rate = 0.1;
  std::uint64_t seed = 1;
  Algorithm model = Algorithm::kEisner2oHeadSplit;
  CostConfig costs;  // defaults to unit costs for the model's kinds
  bool shuffle = true;
  int dev_eval_every = 1;  // epochs between dev evaluations
  RootMode root_mode = RootMode::kSingle;

  TrainConfig() { costs = CostConfig::unit_for(model); }
};

// One loss-augmented subgradient step on `m` (no averaging). Returns the
// hinge loss; zero means gold already beats every augmented rival.
double hinge_step(const Sentence& x, const ProjectiveTree& gold, LinearModel& m,
                  const TrainConfig& cfg);

struct EpochLog {
  int epoch = 0;
  double mean_loss = 0.0;
  std::optional<double> dev_uas, dev_las;
  double seconds = 0.0;
};

struct TrainResult {
  LinearModel model;  // averaged weights, best dev UAS when dev is given
  std::vector<EpochLog> log;
  int skipped_nonprojective = 0;
};

// `log_to`, when given, receives one line per epoch.
TrainResult train(const Corpus& train_set, const Corpus& dev_set,
                  const TrainConfig& cfg, std::ostream* log_to = nullptr);

// Head accuracy of predicting head(i) = i-1 (word 1 to the root); the
// sanity baseline dev UAS is measured against.
double attach_previous_uas(const Corpus& corpus);

}  // namespace spandep
