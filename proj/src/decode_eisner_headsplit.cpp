#include "spandep/decode.hpp"

#include <tuple>
#include <vector>

#include "src/chart_util.hpp"

namespace spandep {
namespace {

// Modified Eisner with head-splitting. Complete spans come in two states:
// open (the head may still take children on that side) and closed (the
// head is done on that side and the boundary score is absorbed). Only
// closed triangles attach as dependents.
//
//   rt[i][j] open right triangle, head i, covers i..j
//   rc[i][j] closed right triangle = rt + right(i, j)
//   lt[i][j] open left triangle, head j, covers i..j
//   lc[i][j] closed left triangle = lt + left(j, i-1)
//   rtrap[i][j] arc i -> j; premises rt[i][k], lc[k+1][j]
//   ltrap[i][j] arc j -> i; premises rc[i][k], lt[k+1][j]
//
// A dependent's inner side closes at LINK time, its outer side at COMB
// time; each word absorbs left(i, l_i) and right(i, r_i) exactly once.
template <bool kCounting>
struct HeadSplitChart {
  using V = detail::CellValue<kCounting>;

  int n;
  const ScoreSet& s;
  detail::Table2<kCounting> rt, rc, lt, lc, rtrap, ltrap;

  HeadSplitChart(const ScoreSet& scores, int n_words)
      : n(n_words), s(scores), rt(n), rc(n), lt(n), lc(n), rtrap(n), ltrap(n) {}

  void fill() {
    for (int i = 1; i <= n; ++i) {
      rt.set_axiom(i, i);
      lt.set_axiom(i, i);
      rc.relax(i, i, i, rt.at(i, i), detail::weight<kCounting>(s.right(i, i)));
      lc.relax(i, i, i, lt.at(i, i), detail::weight<kCounting>(s.left(i, i - 1)));
    }
    for (int w = 1; w < n; ++w) {
      for (int i = 1; i + w <= n; ++i) {
        const int j = i + w;
        for (int k = i; k < j; ++k) {
          rtrap.relax(i, j, k,
                      detail::combine<kCounting>(rt.at(i, k), lc.at(k + 1, j)),
                      detail::weight<kCounting>(s.arc(i, j)));
          ltrap.relax(i, j, k,
                      detail::combine<kCounting>(rc.at(i, k), lt.at(k + 1, j)),
                      detail::weight<kCounting>(s.arc(j, i)));
        }
        for (int k = i + 1; k <= j; ++k)
          rt.relax(i, j, k, detail::combine<kCounting>(rtrap.at(i, k), rc.at(k, j)));
        for (int k = i; k < j; ++k)
          lt.relax(i, j, k, detail::combine<kCounting>(lc.at(i, k), ltrap.at(k, j)));
        rc.relax(i, j, 0, rt.at(i, j), detail::weight<kCounting>(s.right(i, j)));
        lc.relax(i, j, 0, lt.at(i, j), detail::weight<kCounting>(s.left(j, i - 1)));
      }
    }
  }

  detail::RootChoice<kCounting> goal_single() const {
    detail::RootChoice<kCounting> goal;
    for (int r = 1; r <= n; ++r)
      goal.relax(r, detail::combine<kCounting>(lc.at(1, r), rc.at(r, n)),
                 detail::weight<kCounting>(s.arc(0, r)));
    return goal;
  }

  detail::RootChain<kCounting> goal_multi() const {
    detail::RootChain<kCounting> chain(n);
    for (int j = 1; j <= n; ++j) {
      for (int k = 0; k < j; ++k)
        chain.relax_trap(j, k, lc.at(k + 1, j), detail::weight<kCounting>(s.arc(0, j)));
      for (int k = 1; k <= j; ++k)
        chain.relax_span(j, k, rc.at(k, j));
    }
    return chain;
  }

  void backtrack(std::vector<int>& head, RootMode mode) const {
    enum Kind { kRT, kLT, kRTrap, kLTrap };
    std::vector<std::tuple<Kind, int, int>> stack;
    // Closed triangles unwrap to their open form implicitly.
    auto push = [&](Kind k, int i, int j) {
      if (i != j || k == kRTrap || k == kLTrap) stack.emplace_back(k, i, j);
    };

    if (mode == RootMode::kSingle) {
      auto goal = goal_single();
      head[goal.best_root - 1] = 0;
      push(kLT, 1, goal.best_root);
      push(kRT, goal.best_root, n);
    } else {
      auto chain = goal_multi();
      int j = n;
      while (j > 0) {
        int k = chain.span_bp[j];
        push(kRT, k, j);
        head[k - 1] = 0;
        int k2 = chain.trap_bp[k];
        push(kLT, k2 + 1, k);
        j = k2;
      }
    }

    while (!stack.empty()) {
      auto [kind, i, j] = stack.back();
      stack.pop_back();
      switch (kind) {
        case kRT: {
          int k = rt.bp(i, j);
          push(kRTrap, i, k);
          push(kRT, k, j);
          break;
        }
        case kLT: {
          int k = lt.bp(i, j);
          push(kLT, i, k);
          push(kLTrap, k, j);
          break;
        }
        case kRTrap: {
          head[j - 1] = i;
          int k = rtrap.bp(i, j);
          push(kRT, i, k);
          push(kLT, k + 1, j);
          break;
        }
        case kLTrap: {
          head[i - 1] = j;
          int k = ltrap.bp(i, j);
          push(kRT, i, k);
          push(kLT, k + 1, j);
          break;
        }
      }
    }
  }
};

}  // namespace

DecodeResult decode_eisner_headsplit(const ScoreSet& s, int n, RootMode mode) {
  detail::check_decode_inputs(s, n, Algorithm::kEisnerHeadSplit);
  HeadSplitChart<false> chart(s, n);
  chart.fill();
  DecodeResult res;
  res.mode = DecodeMode::kViterbi;
  res.score = mode == RootMode::kSingle ? chart.goal_single().best
                                        : chart.goal_multi().best(n);
  res.tree.head.assign(n, -1);
  chart.backtrack(res.tree.head, mode);
  return res;
}

namespace detail {

std::uint64_t count_eisner_headsplit(int n, RootMode mode) {
  ScoreSet s = zero_scores(n, Algorithm::kEisnerHeadSplit);
  HeadSplitChart<true> chart(s, n);
  chart.fill();
  return mode == RootMode::kSingle ? chart.goal_single().best
                                   : chart.goal_multi().best(n);
}

}  // namespace detail
}  // namespace spandep
