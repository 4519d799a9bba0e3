#pragma once

// Derives the scored units of a tree: arcs, headed spans, and adjacent
// sibling pairs. tree_score sums exactly the terms each decoder maximizes.

#include <tuple>
#include <vector>

#include "spandep/core.hpp"

namespace spandep {

struct SiblingTriple {
  int head;
  int inner;  // modifier closer to the head
  int outer;

  bool operator==(const SiblingTriple& o) const {
    return head == o.head && inner == o.inner && outer == o.outer;
  }
  bool operator<(const SiblingTriple& o) const {
    return std::tie(head, inner, outer) < std::tie(o.head, o.inner, o.outer);
  }
};

struct TreeDecomposition {
  std::vector<std::pair<int, int>> arcs;   // (head, dependent), n of them
  std::vector<HeadedSpan> spans;           // spans[i-1] is word i's span
  std::vector<SiblingTriple> sibling_pairs;
};

// The headed span of each word: spans[i-1] = (l_i, r_i, i) where words
// l_i+1..r_i are exactly the descendants-or-self of i. Throws on an
// invalid tree. Root mode only affects validation.
std::vector<HeadedSpan> extract_headed_spans(
    const ProjectiveTree& t, RootMode mode = RootMode::kSingle);

// Adjacent same-side modifier pairs, innermost first: a head with k
// children on one side yields k-1 triples on that side. Under single-root
// the root has one child and never appears; under multi-root its children
// pair up like any other head's.
std::vector<SiblingTriple> extract_sibling_pairs(
    const ProjectiveTree& t, RootMode mode = RootMode::kSingle);

TreeDecomposition decompose_tree(const ProjectiveTree& t,
                                 RootMode mode = RootMode::kSingle);

// s(y) for the given objective:
//   eisner1o:           sum of arc scores
//   eisner-satta-span:  arcs + sum_i span(i, l_i, r_i)
//   eisner-headsplit:   arcs + sum_i (left(i, l_i) + right(i, r_i))
//   eisner2o-headsplit: arcs + siblings + head-split terms
// Throws if `s` lacks a component the objective reads.
double tree_score(const ProjectiveTree& t, const ScoreSet& s, Algorithm model,
                  RootMode mode = RootMode::kSingle);

double decomposition_score(const TreeDecomposition& d, const ScoreSet& s,
                           Algorithm model);

}  // namespace spandep
