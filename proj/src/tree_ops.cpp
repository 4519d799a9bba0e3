#include "spandep/tree_ops.hpp"

#include <algorithm>

namespace spandep {

namespace {

void require_valid(const ProjectiveTree& t, RootMode mode) {
  if (!validate_tree(t, t.n(), mode))
    throw std::invalid_argument("not a valid projective tree");
}

}  // namespace

std::vector<HeadedSpan> extract_headed_spans(const ProjectiveTree& t,
                                             RootMode mode) {
  require_valid(t, mode);
  const int n = t.n();
  std::vector<int> lo(n + 1), hi(n + 1);
  for (int i = 1; i <= n; ++i) lo[i] = hi[i] = i;
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
  }
  std::vector<HeadedSpan> spans(n);
  for (int i = 1; i <= n; ++i) spans[i - 1] = HeadedSpan{lo[i] - 1, hi[i], i};
  return spans;
}

std::vector<SiblingTriple> extract_sibling_pairs(const ProjectiveTree& t,
                                                 RootMode mode) {
  require_valid(t, mode);
  const int n = t.n();
  // Children of h sorted by position; walk each side outward from h.
  std::vector<std::vector<int>> children(n + 1);
  for (int i = 1; i <= n; ++i) children[t.head_of(i)].push_back(i);
  std::vector<SiblingTriple> out;
  for (int h = 0; h <= n; ++h) {
    std::vector<int> left_kids, right_kids;
    for (int c : children[h]) (c < h ? left_kids : right_kids).push_back(c);
    // left children are in increasing position; innermost is the last
    std::reverse(left_kids.begin(), left_kids.end());
    for (std::size_t m = 0; m + 1 < left_kids.size(); ++m)
      out.push_back({h, left_kids[m], left_kids[m + 1]});
    for (std::size_t m = 0; m + 1 < right_kids.size(); ++m)
      out.push_back({h, right_kids[m], right_kids[m + 1]});
  }
  return out;
}

TreeDecomposition decompose_tree(const ProjectiveTree& t, RootMode mode) {
  TreeDecomposition d;
  d.spans = extract_headed_spans(t, mode);
  d.sibling_pairs = extract_sibling_pairs(t, mode);
  d.arcs.reserve(t.n());
  for (int i = 1; i <= t.n(); ++i) d.arcs.emplace_back(t.head_of(i), i);
  return d;
}

double decomposition_score(const TreeDecomposition& d, const ScoreSet& s,
                           Algorithm model) {
  for (ScoreComponent c : score_components_required(model))
    if (!s.has(c)) throw std::invalid_argument("ScoreSet missing a component");

  double total = 0.0;
  for (auto [h, dep] : d.arcs) total += s.arc(h, dep);
  switch (model) {
    case Algorithm::kEisner1o:
      break;
    case Algorithm::kEisnerSattaSpan:
      for (const HeadedSpan& sp : d.spans) total += s.span(sp.h, sp.l, sp.r);
      break;
    case Algorithm::kEisner2oHeadSplit:
      for (const SiblingTriple& sib : d.sibling_pairs)
        total += s.sib(sib.head, sib.inner, sib.outer);
      [[fallthrough]];
    case Algorithm::kEisnerHeadSplit:
      for (const HeadedSpan& sp : d.spans)
        total += s.left(sp.h, sp.l) + s.right(sp.h, sp.r);
      break;
  }
  return total;
}

double tree_score(const ProjectiveTree& t, const ScoreSet& s, Algorithm model,
                  RootMode mode) {
  return decomposition_score(decompose_tree(t, mode), s, model);
}

}  // namespace spandep
