#include "spandep/core.hpp"

#include <algorithm>

namespace spandep {

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kEisner1o: return "eisner1o";
    case Algorithm::kEisnerSattaSpan: return "eisner-satta-span";
    case Algorithm::kEisnerHeadSplit: return "eisner-headsplit";
    case Algorithm::kEisner2oHeadSplit: return "eisner2o-headsplit";
  }
  throw std::invalid_argument("algorithm_name: bad enum value");
}

Algorithm algorithm_from_name(const std::string& name) {
  std::string s = name;
  std::replace(s.begin(), s.end(), '_', '-');
  if (s == "eisner1o") return Algorithm::kEisner1o;
  if (s == "eisner-satta-span") return Algorithm::kEisnerSattaSpan;
  if (s == "eisner-headsplit") return Algorithm::kEisnerHeadSplit;
  if (s == "eisner2o-headsplit") return Algorithm::kEisner2oHeadSplit;
  throw std::invalid_argument("unknown algorithm: " + name);
}

std::set<ScoreComponent> score_components_required(Algorithm a) {
  switch (a) {
    case Algorithm::kEisner1o:
      return {ScoreComponent::kArc};
    case Algorithm::kEisnerSattaSpan:
      return {ScoreComponent::kArc, ScoreComponent::kSpan};
    case Algorithm::kEisnerHeadSplit:
      return {ScoreComponent::kArc, ScoreComponent::kLeft,
              ScoreComponent::kRight};
    case Algorithm::kEisner2oHeadSplit:
      return {ScoreComponent::kArc, ScoreComponent::kSib,
              ScoreComponent::kLeft, ScoreComponent::kRight};
  }
  throw std::invalid_argument("score_components_required: bad enum value");
}

bool ScoreSet::has(ScoreComponent c) const {
  switch (c) {
    case ScoreComponent::kArc: return has_arc();
    case ScoreComponent::kSib: return has_sib();
    case ScoreComponent::kSpan: return has_span();
    case ScoreComponent::kLeft: return has_left();
    case ScoreComponent::kRight: return has_right();
  }
  return false;
}

void ScoreSet::enable_arc() {
  if (has_arc()) return;
  arc_.assign((n_ + 1) * (n_ + 1), kNegInf);
  for (int h = 0; h <= n_; ++h)
    for (int d = 1; d <= n_; ++d)
      if (h != d) arc(h, d) = 0.0;
}

void ScoreSet::enable_sib() {
  if (has_sib()) return;
  sib_.assign(std::size_t(n_ + 1) * (n_ + 1) * (n_ + 1), kNegInf);
  for (int h = 0; h <= n_; ++h) {
    for (int outer = 1; outer < h - 1; ++outer)
      for (int inner = outer + 1; inner < h; ++inner) sib(h, inner, outer) = 0.0;
    for (int outer = h + 2; outer <= n_; ++outer)
      for (int inner = h + 1; inner < outer; ++inner) sib(h, inner, outer) = 0.0;
  }
}

void ScoreSet::enable_span() {
  if (has_span()) return;
  span_.assign(std::size_t(n_ + 1) * (n_ + 1) * (n_ + 1), kNegInf);
  for (int h = 1; h <= n_; ++h)
    for (int l = 0; l < h; ++l)
      for (int r = h; r <= n_; ++r) span(h, l, r) = 0.0;
}

void ScoreSet::enable_left() {
  if (has_left()) return;
  left_.assign(std::size_t(n_) * (n_ + 1), kNegInf);
  for (int h = 1; h <= n_; ++h)
    for (int l = 0; l < h; ++l) left(h, l) = 0.0;
}

void ScoreSet::enable_right() {
  if (has_right()) return;
  right_.assign(std::size_t(n_) * (n_ + 1), kNegInf);
  for (int h = 1; h <= n_; ++h)
    for (int r = h; r <= n_; ++r) right(h, r) = 0.0;
}

void ScoreSet::enable(ScoreComponent c) {
  switch (c) {
    case ScoreComponent::kArc: enable_arc(); break;
    case ScoreComponent::kSib: enable_sib(); break;
    case ScoreComponent::kSpan: enable_span(); break;
    case ScoreComponent::kLeft: enable_left(); break;
    case ScoreComponent::kRight: enable_right(); break;
  }
}

ScoreSet zero_scores(int n, Algorithm a) {
  ScoreSet s(n);
  for (ScoreComponent c : score_components_required(a)) s.enable(c);
  return s;
}

bool validate_tree(const ProjectiveTree& t, int n, RootMode mode) {
  if (t.n() != n || n < 1) return false;
  int root_children = 0;
  for (int i = 1; i <= n; ++i) {
    int h = t.head_of(i);
    if (h < 0 || h > n || h == i) return false;
    if (h == 0) ++root_children;
  }
  if (root_children == 0) return false;
  if (mode == RootMode::kSingle && root_children != 1) return false;

  // Walk up from each word; a cycle never reaches 0 within n steps.
  for (int i = 1; i <= n; ++i) {
    int cur = i;
    for (int steps = 0; cur != 0; ++steps) {
      if (steps > n) return false;
      cur = t.head_of(cur);
    }
  }

  // Projectivity: every subtree covers a contiguous interval. With the
  // tree already known acyclic, check size == extent per word.
  std::vector<int> lo(n + 1), hi(n + 1), size(n + 1, 1);
  for (int i = 1; i <= n; ++i) lo[i] = hi[i] = i;
  // Propagate bottom-up by processing words in order of decreasing depth.
  std::vector<int> depth(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    int d = 0;
    for (int cur = i; cur != 0; cur = t.head_of(cur)) ++d;
    depth[i] = d;
  }
  std::vector<int> order;
  order.reserve(n);
  for (int i = 1; i <= n; ++i) order.push_back(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return depth[a] > depth[b]; });
  for (int i : order) {
    int h = t.head_of(i);
    if (h == 0) continue;
    lo[h] = std::min(lo[h], lo[i]);
    hi[h] = std::max(hi[h], hi[i]);
    size[h] += size[i];
  }
  for (int i = 1; i <= n; ++i)
    if (hi[i] - lo[i] + 1 != size[i]) return false;
  return true;
}

}  // namespace spandep
