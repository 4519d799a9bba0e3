#include "spandep/decode.hpp"

#include <tuple>
#include <vector>

#include "src/chart_util.hpp"

namespace spandep {
namespace {

// Fencepost-indexed 3D table for the Eisner-Satta items.
template <bool kCounting>
class Table3 {
 public:
  using V = detail::CellValue<kCounting>;

  explicit Table3(int n)
      : stride_(n + 1),
        val_(std::size_t(n + 1) * (n + 1) * (n + 1), detail::unreachable<kCounting>()) {
    if constexpr (!kCounting) bp_.assign(val_.size(), -1);
  }

  V at(int a, int b, int c) const { return val_[idx(a, b, c)]; }
  int bp(int a, int b, int c) const { return bp_[idx(a, b, c)]; }
  void set_axiom(int a, int b, int c) { val_[idx(a, b, c)] = detail::identity<kCounting>(); }

  void relax(int a, int b, int c, int split, V cand) {
    std::size_t cell = idx(a, b, c);
    if constexpr (kCounting) {
      val_[cell] += cand;
    } else if (cand > val_[cell]) {
      val_[cell] = cand;
      bp_[cell] = split;
    }
  }
  void relax(int a, int b, int c, int split, V x, V w) {
    relax(a, b, c, split, detail::combine<kCounting>(x, w));
  }

 private:
  std::size_t idx(int a, int b, int c) const {
    return (std::size_t(a) * stride_ + b) * stride_ + c;
  }
  int stride_;
  std::vector<V> val_;
  std::vector<int> bp_;
};

// Modified Eisner-Satta: spans carry their head word inside.
//
//   t[l][h][r]      unfinished span (l, r] headed by h. While l == h-1 the
//                   head is collecting right children; once a left child
//                   attaches (l < h-1) the right side is final. This
//                   staging (right children first, then left) makes every
//                   tree derive exactly one way.
//   closed[l][h][r] finished span: t + span(h, l, r). Only these attach.
//   rhook[h][k][j]  max over c of closed[k][c][j] + arc(h, c), the hook
//                   trick item parameterized by the external head h <= k
//                   that will adopt c as a right child.
//   lhook[h][i][k]  same for a left child of h > k.
//
// Hooks fold the child-head maximization out of the COMB rules, keeping
// the total work O(n^4) over O(n^3) items.
template <bool kCounting>
struct EisnerSattaChart {
  using V = detail::CellValue<kCounting>;

  int n;
  RootMode root_mode;
  const ScoreSet& s;
  Table3<kCounting> t, closed, rhook, lhook;

  std::vector<V> root_span;  // multi-root frontier over words 1..j
  std::vector<int> root_span_bp;

  EisnerSattaChart(const ScoreSet& scores, int n_words, RootMode mode)
      : n(n_words),
        root_mode(mode),
        s(scores),
        t(n), closed(n), rhook(n), lhook(n),
        root_span(n + 1, detail::unreachable<kCounting>()),
        root_span_bp(n + 1, -1) {
    root_span[0] = detail::identity<kCounting>();
  }

  void fill() {
    const int h_min = root_mode == RootMode::kMulti ? 0 : 1;
    for (int h = 1; h <= n; ++h) t.set_axiom(h - 1, h, h);

    for (int w = 1; w <= n; ++w) {
      // unfinished spans of width w
      for (int l = 0; l + w <= n; ++l) {
        const int r = l + w;
        if (w >= 2) {
          const int h = l + 1;  // right growth: l pinned at h-1
          for (int k = h; k < r; ++k)
            t.relax(l, h, r, k,
                    detail::combine<kCounting>(t.at(h - 1, h, k), rhook.at(h, k, r)));
        }
        for (int h = l + 2; h <= r; ++h)  // left growth
          for (int k = l + 1; k <= h - 1; ++k)
            t.relax(l, h, r, k,
                    detail::combine<kCounting>(lhook.at(h, l, k), t.at(k, h, r)));
      }
      // finish: absorb the headed span score
      for (int l = 0; l + w <= n; ++l) {
        const int r = l + w;
        for (int h = l + 1; h <= r; ++h)
          closed.relax(l, h, r, 0, t.at(l, h, r),
                       detail::weight<kCounting>(s.span(h, l, r)));
      }
      // hooks over finished spans of width w; the span's candidate heads
      // are gathered once into a contiguous buffer so the per-external-head
      // reduction runs stride-1
      std::vector<V> column(n + 1);
      for (int k = 0; k + w <= n; ++k) {
        const int j = k + w;
        for (int c = k + 1; c <= j; ++c) column[c] = closed.at(k, c, j);
        for (int h = h_min; h <= k; ++h)
          for (int c = k + 1; c <= j; ++c)
            rhook.relax(h, k, j, c, column[c], detail::weight<kCounting>(s.arc(h, c)));
        for (int h = j + 1; h <= n; ++h)
          for (int c = k + 1; c <= j; ++c)
            lhook.relax(h, k, j, c, column[c], detail::weight<kCounting>(s.arc(h, c)));
      }
    }
    if (root_mode == RootMode::kMulti) {
      for (int j = 1; j <= n; ++j)
        for (int k = 0; k < j; ++k) {
          V cand = detail::combine<kCounting>(root_span[k], rhook.at(0, k, j));
          if constexpr (kCounting) {
            root_span[j] += cand;
          } else if (cand > root_span[j]) {
            root_span[j] = cand;
            root_span_bp[j] = k;
          }
        }
    }
  }

  detail::RootChoice<kCounting> goal_single() const {
    detail::RootChoice<kCounting> goal;
    for (int c = 1; c <= n; ++c)
      goal.relax(c, closed.at(0, c, n), detail::weight<kCounting>(s.arc(0, c)));
    return goal;
  }

  void backtrack(std::vector<int>& head, RootMode mode) const {
    std::vector<std::tuple<int, int, int>> stack;  // unfinished items (l, h, r)

    if (mode == RootMode::kSingle) {
      auto goal = goal_single();
      head[goal.best_root - 1] = 0;
      stack.emplace_back(0, goal.best_root, n);
    } else {
      int j = n;
      while (j > 0) {
        int k = root_span_bp[j];
        int c = rhook.bp(0, k, j);
        head[c - 1] = 0;
        stack.emplace_back(k, c, j);
        j = k;
      }
    }

    while (!stack.empty()) {
      auto [l, h, r] = stack.back();
      stack.pop_back();
      if (l == h - 1) {
        if (r == h) continue;  // axiom
        int k = t.bp(l, h, r);
        int c = rhook.bp(h, k, r);
        head[c - 1] = h;
        stack.emplace_back(k, c, r);  // the child's finished span
        stack.emplace_back(h - 1, h, k);
      } else {
        int k = t.bp(l, h, r);
        int c = lhook.bp(h, l, k);
        head[c - 1] = h;
        stack.emplace_back(l, c, k);
        stack.emplace_back(k, h, r);
      }
    }
  }
};

}  // namespace

DecodeResult decode_eisner_satta_span(const ScoreSet& s, int n, RootMode mode) {
  detail::check_decode_inputs(s, n, Algorithm::kEisnerSattaSpan);
  EisnerSattaChart<false> chart(s, n, mode);
  chart.fill();
  DecodeResult res;
  res.mode = DecodeMode::kViterbi;
  res.score = mode == RootMode::kSingle ? chart.goal_single().best
                                        : chart.root_span[n];
  res.tree.head.assign(n, -1);
  chart.backtrack(res.tree.head, mode);
  return res;
}

namespace detail {

std::uint64_t count_eisner_satta(int n, RootMode mode) {
  ScoreSet s = zero_scores(n, Algorithm::kEisnerSattaSpan);
  EisnerSattaChart<true> chart(s, n, mode);
  chart.fill();
  return mode == RootMode::kSingle ? chart.goal_single().best
                                   : chart.root_span[n];
}

}  // namespace detail
}  // namespace spandep
