#pragma once

// UAS/LAS over aligned gold and predicted documents.

#include <string>

#include "spandep/conllu.hpp"

namespace spandep {

enum class PunctPolicy { kScoreAll, kExcludePunct };

std::string punct_policy_name(PunctPolicy p);
PunctPolicy punct_policy_from_name(const std::string& name);

struct EvalReport {
  double uas = 0.0;  // percentage
  double las = 0.0;
  long correct_heads = 0;
  long correct_labeled = 0;
  long scored = 0;
  PunctPolicy policy = PunctPolicy::kScoreAll;

  std::string text() const;  // aligned plain text
  std::string kv() const;    // machine-readable key=value block
};

// Both documents must have the same sentences (count, length, forms) and
// integer HEAD columns everywhere; anything else throws.
EvalReport evaluate(const ConlluDocument& gold, const ConlluDocument& pred,
                    PunctPolicy policy = PunctPolicy::kScoreAll);

}  // namespace spandep
