#pragma once

// Hamming-cost-augmented score tables for loss-augmented decoding. The
// augmented tables subtract each gold unit's cost from its score cell, so
// for every candidate tree y'
//
//   augmented(y') = base(y') + delta(y', gold) - gold_unit_cost
//
// with delta the weighted count of gold units y' misses. Decoding the
// augmented tables therefore solves max_y' (s(y') + delta(y', gold)), the
// inner maximization of the structured hinge.

#include "spandep/core.hpp"
#include "spandep/tree_ops.hpp"

namespace spandep {

// Per-unit-kind costs. Kinds the model does not score must stay zero.
struct CostConfig {
  double arc = 0.0;
  double span = 0.0;
  double left_boundary = 0.0;
  double right_boundary = 0.0;
  double sibling = 0.0;

  // Unit cost on every kind the model scores. Left and right boundaries
  // count as two independent units for the head-split models; a headed
  // span is one unit for the Eisner-Satta model. Sibling units default to
  // cost 1 for the second-order model.
  static CostConfig unit_for(Algorithm model);
};

struct AugmentedScores {
  ScoreSet scores;
  double gold_unit_cost = 0.0;  // the constant: total cost of gold's units
};

AugmentedScores augment(const ScoreSet& s, const ProjectiveTree& gold,
                        const CostConfig& cfg, Algorithm model,
                        RootMode mode = RootMode::kSingle);

// delta(pred, gold) computed directly from the two decompositions.
double hamming_delta(const TreeDecomposition& pred, const TreeDecomposition& gold,
                     const CostConfig& cfg, Algorithm model);

}  // namespace spandep
