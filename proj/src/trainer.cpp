#include "spandep/trainer.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>
#include <set>

#include "spandep/decode.hpp"

namespace spandep {

Corpus corpus_from_document(const ConlluDocument& doc) {
  Corpus out;
  for (const ConlluSentence& s : doc.sentences) {
    if (!s.has_gold_tree()) continue;
    out.push_back({s.to_sentence(), s.gold_tree(), s.gold_labels()});
  }
  return out;
}

namespace {

// Feature vectors of every unit in a decomposition, per the model.
std::vector<FeatureVector> unit_features(const Sentence& x,
                                         const TreeDecomposition& d,
                                         Algorithm model) {
  std::vector<FeatureVector> out;
  for (auto [h, dep] : d.arcs) out.push_back(featurize_arc(x, h, dep));
  switch (model) {
    case Algorithm::kEisner1o:
      break;
    case Algorithm::kEisnerSattaSpan:
      for (const HeadedSpan& sp : d.spans)
        out.push_back(featurize_span(x, sp.h, sp.l, sp.r));
      break;
    case Algorithm::kEisner2oHeadSplit:
      for (const SiblingTriple& t : d.sibling_pairs)
        out.push_back(featurize_sibling(x, t.head, t.inner, t.outer));
      [[fallthrough]];
    case Algorithm::kEisnerHeadSplit:
      for (const HeadedSpan& sp : d.spans) {
        out.push_back(featurize_boundary(x, sp.h, sp.l, Side::kLeft));
        out.push_back(featurize_boundary(x, sp.h, sp.r, Side::kRight));
      }
      break;
  }
  return out;
}

struct StepOutcome {
  double loss = 0.0;
  bool updated = false;
};

// The hinge step, optionally mirroring every update into an accumulator
// scaled by the step index (the averaging trick).
StepOutcome hinge_step_impl(const Sentence& x, const ProjectiveTree& gold,
                            LinearModel& m, const TrainConfig& cfg,
                            LinearModel* accum, double step_index) {
  ScoreSet base = build_scores(x, m, cfg.model);
  AugmentedScores aug = augment(base, gold, cfg.costs, cfg.model, cfg.root_mode);
  DecodeResult pred = decode(cfg.model, aug.scores, x.n(), cfg.root_mode);

  StepOutcome out;
  if (pred.tree == gold) return out;  // gold is the augmented argmax: zero hinge
  double aug_gold = tree_score(gold, aug.scores, cfg.model, cfg.root_mode);
  out.loss = std::max(0.0, pred.score - aug_gold);
  if (out.loss <= 0.0) return out;

  TreeDecomposition gd = decompose_tree(gold, cfg.root_mode);
  TreeDecomposition pd = decompose_tree(pred.tree, cfg.root_mode);
  for (const FeatureVector& f : unit_features(x, gd, cfg.model)) {
    m.update(f, cfg.learning_rate);
    if (accum) accum->update(f, step_index * cfg.learning_rate);
  }
  for (const FeatureVector& f : unit_features(x, pd, cfg.model)) {
    m.update(f, -cfg.learning_rate);
    if (accum) accum->update(f, -step_index * cfg.learning_rate);
  }
  out.updated = true;
  return out;
}

void label_step(const Sentence& x, const ProjectiveTree& gold,
                const std::vector<std::string>& labels, LinearModel& m,
                const TrainConfig& cfg, LinearModel* accum, double step_index) {
  for (int d = 1; d <= x.n(); ++d) {
    int g = m.label_index(labels[d - 1]);
    if (g < 0) continue;
    FeatureVector f = featurize_arc(x, gold.head_of(d), d);
    // margin-1 multiclass hinge
    int rival = -1;
    double rival_score = 0.0;
    for (int l = 0; l < int(m.labels().size()); ++l) {
      if (l == g) continue;
      double s = m.label_score(l, f);
      if (rival < 0 || s > rival_score) {
        rival = l;
        rival_score = s;
      }
    }
    if (rival < 0) continue;
    if (m.label_score(g, f) < rival_score + 1.0) {
      m.update_label(g, f, cfg.learning_rate);
      m.update_label(rival, f, -cfg.learning_rate);
      if (accum) {
        accum->update_label(g, f, step_index * cfg.learning_rate);
        accum->update_label(rival, f, -step_index * cfg.learning_rate);
      }
    }
  }
}

// averaged weights: ((T+1) w - u) / T, where u accumulated t * delta
LinearModel averaged_snapshot(const LinearModel& m, const LinearModel& u,
                              double steps) {
  LinearModel avg(m.labels());
  avg.trained_for = m.trained_for;
  if (steps <= 0) return m;
  const double t1 = steps + 1.0;
  for (auto [id, w] : m.weights()) {
    FeatureVector f;
    f.add(id);
    auto it = u.weights().find(id);
    double uv = it == u.weights().end() ? 0.0 : it->second;
    avg.update(f, (t1 * w - uv) / steps);
  }
  for (std::size_t l = 0; l < m.labels().size(); ++l)
    for (auto [id, w] : m.label_weights()[l]) {
      FeatureVector f;
      f.add(id);
      auto it = u.label_weights()[l].find(id);
      double uv = it == u.label_weights()[l].end() ? 0.0 : it->second;
      avg.update_label(int(l), f, (t1 * w - uv) / steps);
    }
  return avg;
}

struct DevScore {
  double uas = 0.0, las = 0.0;
};

DevScore dev_accuracy(const Corpus& dev, const LinearModel& m,
                      const TrainConfig& cfg) {
  long correct = 0, labeled = 0, total = 0;
  for (const TrainExample& ex : dev) {
    ScoreSet s = build_scores(ex.sentence, m, cfg.model);
    DecodeResult r = decode(cfg.model, s, ex.sentence.n(), cfg.root_mode);
    for (int d = 1; d <= ex.sentence.n(); ++d) {
      ++total;
      if (r.tree.head_of(d) != ex.gold.head_of(d)) continue;
      ++correct;
      int best = m.best_label(featurize_arc(ex.sentence, r.tree.head_of(d), d));
      if (best >= 0 && m.labels()[best] == ex.labels[d - 1]) ++labeled;
    }
  }
  if (total == 0) return {};
  return {100.0 * correct / total, 100.0 * labeled / total};
}

}  // namespace

double hinge_step(const Sentence& x, const ProjectiveTree& gold, LinearModel& m,
                  const TrainConfig& cfg) {
  if (!validate_tree(gold, x.n(), cfg.root_mode))
    throw std::invalid_argument("hinge_step: gold tree is not projective/valid");
  return hinge_step_impl(x, gold, m, cfg, nullptr, 0.0).loss;
}

TrainResult train(const Corpus& train_set, const Corpus& dev_set,
                  const TrainConfig& cfg, std::ostream* log_to) {
  if (train_set.empty()) throw std::invalid_argument("train: empty corpus");

  std::vector<const TrainExample*> usable;
  int skipped = 0;
  for (const TrainExample& ex : train_set) {
    if (validate_tree(ex.gold, ex.sentence.n(), cfg.root_mode))
      usable.push_back(&ex);
    else
      ++skipped;
  }
  if (usable.empty())
    throw std::invalid_argument("train: no projective gold trees in corpus");

  std::set<std::string> label_set;
  for (const TrainExample* ex : usable)
    for (const std::string& l : ex->labels)
      if (!l.empty() && l != "_") label_set.insert(l);

  LinearModel m(std::vector<std::string>(label_set.begin(), label_set.end()));
  LinearModel u(m.labels());
  m.trained_for = cfg.model;

  TrainResult result;
  result.skipped_nonprojective = skipped;

  std::mt19937_64 rng(cfg.seed);
  std::vector<std::size_t> order(usable.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  double steps = 0.0;
  double best_dev = -1.0;
  bool have_best = false;

  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    auto t0 = std::chrono::steady_clock::now();
    if (cfg.shuffle) std::shuffle(order.begin(), order.end(), rng);

    double loss_sum = 0.0;
    for (std::size_t idx : order) {
      const TrainExample& ex = *usable[idx];
      steps += 1.0;
      loss_sum += hinge_step_impl(ex.sentence, ex.gold, m, cfg, &u, steps).loss;
      label_step(ex.sentence, ex.gold, ex.labels, m, cfg, &u, steps);
    }

    EpochLog log;
    log.epoch = epoch;
    log.mean_loss = loss_sum / double(usable.size());

    bool eval_now = !dev_set.empty() &&
                    (epoch % cfg.dev_eval_every == 0 || epoch == cfg.epochs);
    LinearModel avg = averaged_snapshot(m, u, steps);
    avg.trained_for = cfg.model;
    if (eval_now) {
      DevScore dev = dev_accuracy(dev_set, avg, cfg);
      log.dev_uas = dev.uas;
      log.dev_las = dev.las;
      if (dev.uas > best_dev) {
        best_dev = dev.uas;
        result.model = avg;
        have_best = true;
      }
    }
    log.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    result.log.push_back(log);

    if (log_to) {
      char buf[160];
      if (log.dev_uas)
        std::snprintf(buf, sizeof(buf),
                      "epoch %d  loss %.4f  dev-uas %.2f  dev-las %.2f  %.1fs",
                      epoch, log.mean_loss, *log.dev_uas, *log.dev_las, log.seconds);
      else
        std::snprintf(buf, sizeof(buf), "epoch %d  loss %.4f  %.1fs", epoch,
                      log.mean_loss, log.seconds);
      (*log_to) << buf << "\n";
    }
    if (!have_best) result.model = avg;  // no dev: keep the latest average
  }
  return result;
}

double attach_previous_uas(const Corpus& corpus) {
  long correct = 0, total = 0;
  for (const TrainExample& ex : corpus)
    for (int d = 1; d <= ex.sentence.n(); ++d) {
      ++total;
      if (ex.gold.head_of(d) == d - 1) ++correct;
    }
  return total == 0 ? 0.0 : 100.0 * correct / total;
}

}  // namespace spandep
