#pragma once

// Exhaustive enumeration of projective trees; ground truth for decoder
// tests. Bounded to n <= 10 to keep the combinatorics sane.

#include <functional>
#include <vector>

#include "spandep/core.hpp"
#include "spandep/decode.hpp"

namespace spandep {

constexpr int kEnumerationMaxN = 10;

// Calls fn once per valid projective tree, each exactly once, in a fixed
// deterministic order. Throws if n is outside [1, kEnumerationMaxN].
void for_each_projective_tree(int n, RootMode mode,
                              const std::function<void(const ProjectiveTree&)>& fn);

std::vector<ProjectiveTree> enumerate_projective(int n, RootMode mode);

// Maximizes tree_score over the enumeration; ties go to the first tree in
// enumeration order.
DecodeResult brute_force_argmax(const ScoreSet& s, int n, Algorithm model,
                                RootMode mode = RootMode::kSingle);

}  // namespace spandep
