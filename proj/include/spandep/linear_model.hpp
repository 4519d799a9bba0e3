#pragma once

// Sparse linear model over hashed features, plus per-label weights for arc
// labeling. Serialization is a versioned text dump, sorted so identical
// models produce identical files.

#include <string>
#include <unordered_map>
#include <vector>

#include "spandep/core.hpp"
#include "spandep/features.hpp"

namespace spandep {

class LinearModel {
 public:
  LinearModel() = default;
  explicit LinearModel(std::vector<std::string> labels) : labels_(std::move(labels)) {
    label_weights_.resize(labels_.size());
  }

  const std::vector<std::string>& labels() const { return labels_; }
  int label_index(const std::string& label) const;  // -1 if unknown

  double score(const FeatureVector& f) const;
  double label_score(int label, const FeatureVector& f) const;
  int best_label(const FeatureVector& f) const;  // argmax, -1 without labels

  void update(const FeatureVector& f, double scale);
  void update_label(int label, const FeatureVector& f, double scale);

  std::size_t weight_count() const { return weights_.size(); }
  const std::unordered_map<FeatureId, double>& weights() const { return weights_; }
  const std::vector<std::unordered_map<FeatureId, double>>& label_weights() const {
    return label_weights_;
  }

  Algorithm trained_for = Algorithm::kEisner1o;

  void save(const std::string& path) const;
  static LinearModel load(const std::string& path);

 private:
  std::vector<std::string> labels_;
  std::unordered_map<FeatureId, double> weights_;
  std::vector<std::unordered_map<FeatureId, double>> label_weights_;
};

// Fill exactly the components the model's objective reads, by dot product
// over the corresponding featurizers.
ScoreSet build_scores(const Sentence& x, const LinearModel& m, Algorithm model);

}  // namespace spandep
