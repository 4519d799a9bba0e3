#include "spandep/decode.hpp"

#include <tuple>
#include <vector>

#include "src/chart_util.hpp"

namespace spandep {
namespace {

// Second-order extension of the head-split Eisner system. LINK rules only
// fire with a single-word head triangle (first child); later children
// arrive through LINK-2, which consumes a box pairing the previous
// sibling's outer side with the new dependent's inner side and adds the
// sibling score. Boxes are built from two closed triangles.
//
//   box[i][j]  rc[i][m] + lc[m+1][j]: i's finished right side next to
//              j's finished left side
//   rtrap[i][j] arc i -> j; first child: lc[i+1][j]
//                           next sibling k: rtrap[i][k] + box[k][j] + sib(i,k,j)
//   ltrap[i][j] arc j -> i; first child: rc[i][j-1]
//                           next sibling k: box[i][k] + ltrap[k][j] + sib(j,k,i)
//
// Trap backpointers reuse the split slot: bp == i (resp. j) marks the
// first-child rule, anything strictly inside marks the sibling rule.
template <bool kCounting>
struct SecondOrderChart {
  using V = detail::CellValue<kCounting>;

  int n;
  RootMode root_mode;
  const ScoreSet& s;
  detail::Table2<kCounting> rt, rc, lt, lc, rtrap, ltrap, box;

  // Multi-root state: root children chained with sibling scores.
  std::vector<V> root_trap;
  std::vector<int> root_trap_bp;
  V root_goal = detail::unreachable<kCounting>();
  int root_goal_bp = -1;

  SecondOrderChart(const ScoreSet& scores, int n_words, RootMode mode)
      : n(n_words),
        root_mode(mode),
        s(scores),
        rt(n), rc(n), lt(n), lc(n), rtrap(n), ltrap(n), box(n),
        root_trap(n + 1, detail::unreachable<kCounting>()),
        root_trap_bp(n + 1, -1) {}

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
        for (int m = i; m < j; ++m)
          box.relax(i, j, m, detail::combine<kCounting>(rc.at(i, m), lc.at(m + 1, j)));

        // arc i -> j: first child, then sibling chain
        rtrap.relax(i, j, i, lc.at(i + 1, j), detail::weight<kCounting>(s.arc(i, j)));
        for (int k = i + 1; k < j; ++k)
          rtrap.relax(i, j, k,
                      detail::combine<kCounting>(rtrap.at(i, k), box.at(k, j)),
                      detail::weight<kCounting>(s.arc(i, j) + s.sib(i, k, j)));

        // arc j -> i
        for (int k = i + 1; k < j; ++k)
          ltrap.relax(i, j, k,
                      detail::combine<kCounting>(box.at(i, k), ltrap.at(k, j)),
                      detail::weight<kCounting>(s.arc(j, i) + s.sib(j, k, i)));
        ltrap.relax(i, j, j, rc.at(i, j - 1), detail::weight<kCounting>(s.arc(j, i)));

        for (int k = i + 1; k <= j; ++k)
          rt.relax(i, j, k, detail::combine<kCounting>(rtrap.at(i, k), rc.at(k, j)));
        for (int k = i; k < j; ++k)
          lt.relax(i, j, k, detail::combine<kCounting>(lc.at(i, k), ltrap.at(k, j)));
        rc.relax(i, j, 0, rt.at(i, j), detail::weight<kCounting>(s.right(i, j)));
        lc.relax(i, j, 0, lt.at(i, j), detail::weight<kCounting>(s.left(j, i - 1)));
      }
    }
    if (root_mode == RootMode::kMulti) fill_root_chain();
  }

  detail::RootChoice<kCounting> goal_single() const {
    detail::RootChoice<kCounting> goal;
    for (int r = 1; r <= n; ++r)
      goal.relax(r, detail::combine<kCounting>(lc.at(1, r), rc.at(r, n)),
                 detail::weight<kCounting>(s.arc(0, r)));
    return goal;
  }

  // Root children pair up like any head's: first child forced against the
  // left sentence edge, later children via boxes with sib(0, k, j).
  void fill_root_chain() {
    auto relax_trap = [&](int j, int k, V cand) {
      if constexpr (kCounting) {
        root_trap[j] += cand;
      } else if (cand > root_trap[j]) {
        root_trap[j] = cand;
        root_trap_bp[j] = k;
      }
    };
    for (int j = 1; j <= n; ++j) {
      relax_trap(j, 0,
                 detail::combine<kCounting>(lc.at(1, j),
                                            detail::weight<kCounting>(s.arc(0, j))));
      for (int k = 1; k < j; ++k)
        relax_trap(j, k,
                   detail::combine<kCounting>(
                       detail::combine<kCounting>(root_trap[k], box.at(k, j)),
                       detail::weight<kCounting>(s.arc(0, j) + s.sib(0, k, j))));
    }
    for (int k = 1; k <= n; ++k) {
      V cand = detail::combine<kCounting>(root_trap[k], rc.at(k, n));
      if constexpr (kCounting) {
        root_goal += cand;
      } else if (cand > root_goal) {
        root_goal = cand;
        root_goal_bp = k;
      }
    }
  }

  void backtrack(std::vector<int>& head, RootMode mode) const {
    enum Kind { kRT, kLT, kRTrap, kLTrap, kBox };
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
      push(kRT, root_goal_bp, n);
      int j = root_goal_bp;
      while (j > 0) {
        head[j - 1] = 0;
        int k = root_trap_bp[j];
        if (k == 0) {
          push(kLT, 1, j);
          break;
        }
        push(kBox, k, j);
        j = k;
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
          if (k == i) {
            push(kLT, i + 1, j);
          } else {
            push(kRTrap, i, k);
            push(kBox, k, j);
          }
          break;
        }
        case kLTrap: {
          head[i - 1] = j;
          int k = ltrap.bp(i, j);
          if (k == j) {
            push(kRT, i, j - 1);
          } else {
            push(kBox, i, k);
            push(kLTrap, k, j);
          }
          break;
        }
        case kBox: {
          int m = box.bp(i, j);
          push(kRT, i, m);
          push(kLT, m + 1, j);
          break;
        }
      }
    }
  }
};

}  // namespace

DecodeResult decode_eisner_2o_headsplit(const ScoreSet& s, int n, RootMode mode) {
  detail::check_decode_inputs(s, n, Algorithm::kEisner2oHeadSplit);
  SecondOrderChart<false> chart(s, n, mode);
  chart.fill();
  DecodeResult res;
  res.mode = DecodeMode::kViterbi;
  res.score =
      mode == RootMode::kSingle ? chart.goal_single().best : chart.root_goal;
  res.tree.head.assign(n, -1);
  chart.backtrack(res.tree.head, mode);
  return res;
}

namespace detail {

std::uint64_t count_eisner_2o(int n, RootMode mode) {
  ScoreSet s = zero_scores(n, Algorithm::kEisner2oHeadSplit);
  SecondOrderChart<true> chart(s, n, mode);
  chart.fill();
  return mode == RootMode::kSingle ? chart.goal_single().best : chart.root_goal;
}

}  // namespace detail
}  // namespace spandep
