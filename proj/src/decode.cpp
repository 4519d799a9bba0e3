#include "spandep/decode.hpp"

#include "src/chart_util.hpp"

namespace spandep {

namespace detail {

void check_decode_inputs(const ScoreSet& s, int n, Algorithm a) {
  if (n < 1) throw std::invalid_argument("decode: n must be >= 1");
  if (s.n() != n) throw std::invalid_argument("decode: ScoreSet sized for different n");
  for (ScoreComponent c : score_components_required(a))
    if (!s.has(c))
      throw std::invalid_argument("decode: ScoreSet missing a component required by " +
                                  algorithm_name(a));
}

}  // namespace detail

DecodeResult decode(Algorithm a, const ScoreSet& s, int n, RootMode mode) {
  switch (a) {
    case Algorithm::kEisner1o: return decode_eisner_1o(s, n, mode);
    case Algorithm::kEisnerSattaSpan: return decode_eisner_satta_span(s, n, mode);
    case Algorithm::kEisnerHeadSplit: return decode_eisner_headsplit(s, n, mode);
    case Algorithm::kEisner2oHeadSplit: return decode_eisner_2o_headsplit(s, n, mode);
  }
  throw std::invalid_argument("decode: bad algorithm enum");
}

std::uint64_t count_trees(Algorithm a, int n, RootMode mode) {
  if (n < 1) throw std::invalid_argument("count_trees: n must be >= 1");
  if (n > 24) throw std::invalid_argument("count_trees: counts overflow 64 bits past n = 24");
  switch (a) {
    case Algorithm::kEisner1o: return detail::count_eisner_1o(n, mode);
    case Algorithm::kEisnerSattaSpan: return detail::count_eisner_satta(n, mode);
    case Algorithm::kEisnerHeadSplit: return detail::count_eisner_headsplit(n, mode);
    case Algorithm::kEisner2oHeadSplit: return detail::count_eisner_2o(n, mode);
  }
  throw std::invalid_argument("count_trees: bad algorithm enum");
}

}  // namespace spandep
