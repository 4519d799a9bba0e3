#include "spandep/linear_model.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace spandep {

namespace {

double dot(const std::unordered_map<FeatureId, double>& w, const FeatureVector& f) {
  double total = 0.0;
  for (auto [id, count] : f.items) {
    auto it = w.find(id);
    if (it != w.end()) total += it->second * count;
  }
  return total;
}

void bump(std::unordered_map<FeatureId, double>& w, const FeatureVector& f,
          double scale) {
  for (auto [id, count] : f.items) w[id] += scale * count;
}

void dump_weights(std::ostream& out,
                  const std::unordered_map<FeatureId, double>& w) {
  std::vector<std::pair<FeatureId, double>> sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  for (auto [id, weight] : sorted) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64 " %.17g\n", id, weight);
    out << buf;
  }
}

void parse_weights(std::istream& in, int count,
                   std::unordered_map<FeatureId, double>& w) {
  std::string line;
  for (int i = 0; i < count; ++i) {
    if (!std::getline(in, line))
      throw std::runtime_error("model file truncated in weight block");
    std::uint64_t id;
    double weight;
    if (std::sscanf(line.c_str(), "%" SCNx64 " %lg", &id, &weight) != 2)
      throw std::runtime_error("bad weight line: " + line);
    w[id] = weight;
  }
}

}  // namespace

int LinearModel::label_index(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return int(i);
  return -1;
}

double LinearModel::score(const FeatureVector& f) const { return dot(weights_, f); }

double LinearModel::label_score(int label, const FeatureVector& f) const {
  return dot(label_weights_[label], f);
}

int LinearModel::best_label(const FeatureVector& f) const {
  int best = -1;
  double best_score = 0.0;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    double s = label_score(int(i), f);
    if (best < 0 || s > best_score) {
      best = int(i);
      best_score = s;
    }
  }
  return best;
}

void LinearModel::update(const FeatureVector& f, double scale) {
  bump(weights_, f, scale);
}

void LinearModel::update_label(int label, const FeatureVector& f, double scale) {
  bump(label_weights_[label], f, scale);
}

void LinearModel::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "spandep-linear-model v1\n";
  out << "algorithm " << algorithm_name(trained_for) << "\n";
  out << "labels " << labels_.size() << "\n";
  for (const std::string& l : labels_) out << l << "\n";
  out << "weights " << weights_.size() << "\n";
  dump_weights(out, weights_);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    out << "label-weights " << i << " " << label_weights_[i].size() << "\n";
    dump_weights(out, label_weights_[i]);
  }
}

LinearModel LinearModel::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != "spandep-linear-model v1")
    throw std::runtime_error("not a spandep model file (bad header): " + path);

  std::string word, algo;
  if (!(in >> word >> algo) || word != "algorithm")
    throw std::runtime_error("model file missing algorithm line");
  std::size_t n_labels = 0;
  if (!(in >> word >> n_labels) || word != "labels")
    throw std::runtime_error("model file missing labels line");
  std::getline(in, line);

  std::vector<std::string> labels(n_labels);
  for (auto& l : labels)
    if (!std::getline(in, l)) throw std::runtime_error("model file truncated in labels");

  LinearModel m(std::move(labels));
  m.trained_for = algorithm_from_name(algo);

  std::size_t n_weights = 0;
  if (!(in >> word >> n_weights) || word != "weights")
    throw std::runtime_error("model file missing weights line");
  std::getline(in, line);
  parse_weights(in, int(n_weights), m.weights_);

  for (std::size_t i = 0; i < m.labels_.size(); ++i) {
    std::size_t idx = 0, count = 0;
    if (!(in >> word >> idx >> count) || word != "label-weights" || idx != i)
      throw std::runtime_error("model file missing label-weights block " +
                               std::to_string(i));
    std::getline(in, line);
    parse_weights(in, int(count), m.label_weights_[i]);
  }
  return m;
}

ScoreSet build_scores(const Sentence& x, const LinearModel& m, Algorithm model) {
  const int n = x.n();
  ScoreSet s = zero_scores(n, model);
  for (int h = 0; h <= n; ++h)
    for (int d = 1; d <= n; ++d)
      if (h != d) s.arc(h, d) = m.score(featurize_arc(x, h, d));

  if (s.has_span())
    for (int h = 1; h <= n; ++h)
      for (int l = 0; l < h; ++l)
        for (int r = h; r <= n; ++r)
          s.span(h, l, r) = m.score(featurize_span(x, h, l, r));

  if (s.has_left())
    for (int h = 1; h <= n; ++h)
      for (int l = 0; l < h; ++l)
        s.left(h, l) = m.score(featurize_boundary(x, h, l, Side::kLeft));
  if (s.has_right())
    for (int h = 1; h <= n; ++h)
      for (int r = h; r <= n; ++r)
        s.right(h, r) = m.score(featurize_boundary(x, h, r, Side::kRight));

  if (s.has_sib())
    for (int h = 0; h <= n; ++h) {
      for (int outer = 1; outer < h - 1; ++outer)
        for (int inner = outer + 1; inner < h; ++inner)
          s.sib(h, inner, outer) = m.score(featurize_sibling(x, h, inner, outer));
      for (int outer = h + 2; outer <= n; ++outer)
        for (int inner = h + 1; inner < outer; ++inner)
          s.sib(h, inner, outer) = m.score(featurize_sibling(x, h, inner, outer));
    }
  return s;
}

}  // namespace spandep
