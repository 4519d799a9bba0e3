#include "spandep/evaluation.hpp"

#include <cstdio>

namespace spandep {

std::string punct_policy_name(PunctPolicy p) {
  return p == PunctPolicy::kScoreAll ? "score-all" : "exclude-punct";
}

PunctPolicy punct_policy_from_name(const std::string& name) {
  if (name == "score-all") return PunctPolicy::kScoreAll;
  if (name == "exclude-punct") return PunctPolicy::kExcludePunct;
  throw std::invalid_argument("unknown punctuation policy: " + name);
}

std::string EvalReport::text() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "UAS: %6.2f  (%ld/%ld)\n"
                "LAS: %6.2f  (%ld/%ld)\n"
                "tokens scored: %ld (policy: %s)\n",
                uas, correct_heads, scored, las, correct_labeled, scored, scored,
                punct_policy_name(policy).c_str());
  return buf;
}

std::string EvalReport::kv() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "uas=%.6f\nlas=%.6f\ncorrect_heads=%ld\ncorrect_labeled=%ld\n"
                "scored=%ld\npolicy=%s\n",
                uas, las, correct_heads, correct_labeled, scored,
                punct_policy_name(policy).c_str());
  return buf;
}

EvalReport evaluate(const ConlluDocument& gold, const ConlluDocument& pred,
                    PunctPolicy policy) {
  if (gold.sentences.size() != pred.sentences.size())
    throw std::invalid_argument("evaluate: sentence counts differ");

  EvalReport r;
  r.policy = policy;
  for (std::size_t si = 0; si < gold.sentences.size(); ++si) {
    const ConlluSentence& g = gold.sentences[si];
    const ConlluSentence& p = pred.sentences[si];
    if (g.n() != p.n())
      throw std::invalid_argument("evaluate: sentence " + std::to_string(si + 1) +
                                  " lengths differ");
    if (!g.has_gold_tree() || !p.has_gold_tree())
      throw std::invalid_argument("evaluate: sentence " + std::to_string(si + 1) +
                                  " lacks integer HEAD annotations");
    for (int i = 0; i < g.n(); ++i) {
      if (g.words[i].cols[1] != p.words[i].cols[1])
        throw std::invalid_argument("evaluate: sentence " + std::to_string(si + 1) +
                                    " forms differ at token " + std::to_string(i + 1));
      if (policy == PunctPolicy::kExcludePunct && g.words[i].cols[3] == "PUNCT")
        continue;
      ++r.scored;
      if (g.words[i].cols[6] == p.words[i].cols[6]) {
        ++r.correct_heads;
        if (g.words[i].cols[7] == p.words[i].cols[7]) ++r.correct_labeled;
      }
    }
  }
  if (r.scored > 0) {
    r.uas = 100.0 * double(r.correct_heads) / double(r.scored);
    r.las = 100.0 * double(r.correct_labeled) / double(r.scored);
  }
  return r;
}

}  // namespace spandep
