#include "spandep/decode.hpp"

#include <tuple>
#include <vector>

#include "src/chart_util.hpp"

namespace spandep {
namespace {

// First-order Eisner over words 1..n. Complete spans (triangles) are open
// in both directions; there is no finished/unfinished distinction because
// nothing beyond arcs is scored.
//
//   rt[i][j]    head i, right children, covers words i..j
//   lt[i][j]    head j, left children, covers words i..j
//   rtrap[i][j] arc i -> j under construction
//   ltrap[i][j] arc j -> i under construction
//
// Root attachment runs as a separate pass so the main chart never touches
// index 0.
template <bool kCounting>
struct Eisner1oChart {
  using V = detail::CellValue<kCounting>;

  int n;
  const ScoreSet& s;
  detail::Table2<kCounting> rt, lt, rtrap, ltrap;

  Eisner1oChart(const ScoreSet& scores, int n_words)
      : n(n_words), s(scores), rt(n), lt(n), rtrap(n), ltrap(n) {}

  void fill() {
    for (int i = 1; i <= n; ++i) {
      rt.set_axiom(i, i);
      lt.set_axiom(i, i);
    }
    for (int w = 1; w < n; ++w) {
      for (int i = 1; i + w <= n; ++i) {
        const int j = i + w;
        for (int k = i; k < j; ++k) {
          V inner = detail::combine<kCounting>(rt.at(i, k), lt.at(k + 1, j));
          rtrap.relax(i, j, k, inner, detail::weight<kCounting>(s.arc(i, j)));
          ltrap.relax(i, j, k, inner, detail::weight<kCounting>(s.arc(j, i)));
        }
        for (int k = i + 1; k <= j; ++k)
          rt.relax(i, j, k, detail::combine<kCounting>(rtrap.at(i, k), rt.at(k, j)));
        for (int k = i; k < j; ++k)
          lt.relax(i, j, k, detail::combine<kCounting>(lt.at(i, k), ltrap.at(k, j)));
      }
    }
  }

  // Single root: exactly one word attaches to 0 and must cover 1..n.
  detail::RootChoice<kCounting> goal_single() const {
    detail::RootChoice<kCounting> goal;
    for (int r = 1; r <= n; ++r)
      goal.relax(r, detail::combine<kCounting>(lt.at(1, r), rt.at(r, n)),
                 detail::weight<kCounting>(s.arc(0, r)));
    return goal;
  }

  // Multiple root children, folded left to right.
  detail::RootChain<kCounting> goal_multi() const {
    detail::RootChain<kCounting> chain(n);
    for (int j = 1; j <= n; ++j) {
      for (int k = 0; k < j; ++k)
        chain.relax_trap(j, k, lt.at(k + 1, j), detail::weight<kCounting>(s.arc(0, j)));
      for (int k = 1; k <= j; ++k)
        chain.relax_span(j, k, rt.at(k, j));
    }
    return chain;
  }

  // Backpointer walk (Viterbi only).
  void backtrack(std::vector<int>& head, RootMode mode) const {
    enum Kind { kRT, kLT, kRTrap, kLTrap };
    std::vector<std::tuple<Kind, int, int>> stack;
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

DecodeResult decode_eisner_1o(const ScoreSet& s, int n, RootMode mode) {
  detail::check_decode_inputs(s, n, Algorithm::kEisner1o);
  Eisner1oChart<false> chart(s, n);
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

std::uint64_t count_eisner_1o(int n, RootMode mode) {
  ScoreSet s = zero_scores(n, Algorithm::kEisner1o);
  Eisner1oChart<true> chart(s, n);
  chart.fill();
  return mode == RootMode::kSingle ? chart.goal_single().best
                                   : chart.goal_multi().best(n);
}

}  // namespace detail
}  // namespace spandep
