#pragma once

// Exact argmax decoders over projective trees, one per objective:
//
//   decode_eisner_1o            O(n^3)  arcs
//   decode_eisner_satta_span    O(n^4)  arcs + headed spans
//   decode_eisner_headsplit     O(n^3)  arcs + left/right boundaries
//   decode_eisner_2o_headsplit  O(n^3)  arcs + siblings + boundaries
//
// Every deduction system distinguishes "unfinished" items (the head may
// still take children on the relevant side) from "finished" ones (all
// children generated; the boundary or span score has been absorbed), and
// only finished items attach as dependents. Each system is derivation
// unambiguous: a tree has exactly one derivation, so the same charts run
// in counting mode enumerate projective trees.
//
// Ties break deterministically: smaller split point first, then the rule
// listed earlier in the deduction system.

#include <cstdint>

#include "spandep/core.hpp"

namespace spandep {

enum class DecodeMode { kViterbi, kCount };

struct DecodeResult {
  ProjectiveTree tree;
  double score = 0.0;
  DecodeMode mode = DecodeMode::kViterbi;
  std::uint64_t count = 0;  // count mode only
};

DecodeResult decode_eisner_1o(const ScoreSet& s, int n,
                              RootMode mode = RootMode::kSingle);
DecodeResult decode_eisner_satta_span(const ScoreSet& s, int n,
                                      RootMode mode = RootMode::kSingle);
DecodeResult decode_eisner_headsplit(const ScoreSet& s, int n,
                                     RootMode mode = RootMode::kSingle);
DecodeResult decode_eisner_2o_headsplit(const ScoreSet& s, int n,
                                        RootMode mode = RootMode::kSingle);

DecodeResult decode(Algorithm a, const ScoreSet& s, int n,
                    RootMode mode = RootMode::kSingle);

// Number of derivations of the algorithm's deduction system with scores
// ignored; equals the number of projective trees under the root mode.
// Overflows 64 bits past n = 24 (single root), so larger n is rejected.
std::uint64_t count_trees(Algorithm a, int n,
                          RootMode mode = RootMode::kSingle);

}  // namespace spandep
