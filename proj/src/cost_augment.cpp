#include "spandep/cost_augment.hpp"

#include <algorithm>
#include <set>

namespace spandep {

CostConfig CostConfig::unit_for(Algorithm model) {
  CostConfig c;
  c.arc = 1.0;
  switch (model) {
    case Algorithm::kEisner1o:
      break;
    case Algorithm::kEisnerSattaSpan:
      c.span = 1.0;
      break;
    case Algorithm::kEisner2oHeadSplit:
      c.sibling = 1.0;
      [[fallthrough]];
    case Algorithm::kEisnerHeadSplit:
      c.left_boundary = 1.0;
      c.right_boundary = 1.0;
      break;
  }
  return c;
}

namespace {

void check_config(const CostConfig& cfg, Algorithm model) {
  if (cfg.arc < 0 || cfg.span < 0 || cfg.left_boundary < 0 ||
      cfg.right_boundary < 0 || cfg.sibling < 0)
    throw std::invalid_argument("augment: costs must be nonnegative");
  auto req = score_components_required(model);
  auto scored = [&](ScoreComponent c) { return req.count(c) > 0; };
  if ((cfg.span > 0 && !scored(ScoreComponent::kSpan)) ||
      (cfg.sibling > 0 && !scored(ScoreComponent::kSib)) ||
      ((cfg.left_boundary > 0 || cfg.right_boundary > 0) &&
       !scored(ScoreComponent::kLeft)))
    throw std::invalid_argument("augment: nonzero cost on a kind the model does not score");
}

}  // namespace

AugmentedScores augment(const ScoreSet& s, const ProjectiveTree& gold,
                        const CostConfig& cfg, Algorithm model, RootMode mode) {
  check_config(cfg, model);
  for (ScoreComponent c : score_components_required(model))
    if (!s.has(c)) throw std::invalid_argument("augment: ScoreSet missing a component");
  if (s.n() != gold.n())
    throw std::invalid_argument("augment: gold tree and scores disagree on n");

  TreeDecomposition g = decompose_tree(gold, mode);
  AugmentedScores out{s, 0.0};

  for (auto [h, d] : g.arcs) {
    out.scores.arc(h, d) -= cfg.arc;
    out.gold_unit_cost += cfg.arc;
  }
  if (model == Algorithm::kEisnerSattaSpan) {
    for (const HeadedSpan& sp : g.spans) {
      out.scores.span(sp.h, sp.l, sp.r) -= cfg.span;
      out.gold_unit_cost += cfg.span;
    }
  }
  if (model == Algorithm::kEisnerHeadSplit || model == Algorithm::kEisner2oHeadSplit) {
    for (const HeadedSpan& sp : g.spans) {
      out.scores.left(sp.h, sp.l) -= cfg.left_boundary;
      out.scores.right(sp.h, sp.r) -= cfg.right_boundary;
      out.gold_unit_cost += cfg.left_boundary + cfg.right_boundary;
    }
  }
  if (model == Algorithm::kEisner2oHeadSplit) {
    for (const SiblingTriple& sib : g.sibling_pairs) {
      out.scores.sib(sib.head, sib.inner, sib.outer) -= cfg.sibling;
      out.gold_unit_cost += cfg.sibling;
    }
  }
  return out;
}

double hamming_delta(const TreeDecomposition& pred, const TreeDecomposition& gold,
                     const CostConfig& cfg, Algorithm model) {
  double delta = 0.0;

  std::set<std::pair<int, int>> pred_arcs(pred.arcs.begin(), pred.arcs.end());
  for (auto arc : gold.arcs)
    if (!pred_arcs.count(arc)) delta += cfg.arc;

  const bool spans = model == Algorithm::kEisnerSattaSpan;
  const bool boundaries = model == Algorithm::kEisnerHeadSplit ||
                          model == Algorithm::kEisner2oHeadSplit;
  if (spans || boundaries) {
    // spans are per-word: compare word i's span directly
    for (std::size_t i = 0; i < gold.spans.size(); ++i) {
      const HeadedSpan& gs = gold.spans[i];
      const HeadedSpan& ps = pred.spans[i];
      if (spans && !(gs == ps)) delta += cfg.span;
      if (boundaries) {
        if (gs.l != ps.l) delta += cfg.left_boundary;
        if (gs.r != ps.r) delta += cfg.right_boundary;
      }
    }
  }
  if (model == Algorithm::kEisner2oHeadSplit) {
    std::set<SiblingTriple> pred_sibs(pred.sibling_pairs.begin(),
                                      pred.sibling_pairs.end());
    for (const SiblingTriple& t : gold.sibling_pairs)
      if (!pred_sibs.count(t)) delta += cfg.sibling;
  }
  return delta;
}

}  // namespace spandep
