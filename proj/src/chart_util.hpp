#pragma once

// Internal helpers for the chart decoders. Each deduction system runs in
// two modes over the same loops: Viterbi (max, +) with backpointers, and
// counting (sum, x) over weight 1.

#include <cstdint>
#include <type_traits>
#include <vector>

#include "spandep/core.hpp"

namespace spandep::detail {

template <bool kCounting>
using CellValue = std::conditional_t<kCounting, std::uint64_t, double>;

template <bool kCounting>
constexpr CellValue<kCounting> unreachable() {
  if constexpr (kCounting) return 0;
  else return kNegInf;
}

template <bool kCounting>
constexpr CellValue<kCounting> identity() {
  if constexpr (kCounting) return 1;
  else return 0.0;
}

template <bool kCounting>
constexpr CellValue<kCounting> combine(CellValue<kCounting> a,
                                       CellValue<kCounting> b) {
  if constexpr (kCounting) return a * b;
  else return a + b;
}

template <bool kCounting>
constexpr CellValue<kCounting> weight(double w) {
  if constexpr (kCounting) return 1;
  else return w;
}

// Dense (n+1) x (n+1) table of cell values; Viterbi mode also keeps one
// split backpointer per cell. Ties keep the first candidate offered, so
// relax order is the tie-break order.
template <bool kCounting>
class Table2 {
 public:
  using V = CellValue<kCounting>;

  explicit Table2(int n)
      : stride_(n + 1), val_(std::size_t(n + 1) * (n + 1), unreachable<kCounting>()) {
    if constexpr (!kCounting) bp_.assign(val_.size(), -1);
  }

  V at(int i, int j) const { return val_[idx(i, j)]; }
  int bp(int i, int j) const { return bp_[idx(i, j)]; }

  void set_axiom(int i, int j) { val_[idx(i, j)] = identity<kCounting>(); }

  void relax(int i, int j, int split, V cand) {
    std::size_t c = idx(i, j);
    if constexpr (kCounting) {
      val_[c] += cand;
    } else {
      if (cand > val_[c]) {
        val_[c] = cand;
        bp_[c] = split;
      }
    }
  }
  void relax(int i, int j, int split, V a, V b) {
    relax(i, j, split, combine<kCounting>(a, b));
  }

 private:
  std::size_t idx(int i, int j) const { return std::size_t(i) * stride_ + j; }
  int stride_;
  std::vector<V> val_;
  std::vector<int> bp_;
};

// Single-root goal: one word attaches to 0 and its closed spans cover the
// whole sentence.
template <bool kCounting>
struct RootChoice {
  using V = CellValue<kCounting>;
  V best = unreachable<kCounting>();
  int best_root = -1;

  void relax(int r, V body, V arc_w) {
    V cand = combine<kCounting>(body, arc_w);
    if constexpr (kCounting) {
      best += cand;
    } else {
      if (cand > best) {
        best = cand;
        best_root = r;
      }
    }
  }
};

// Multi-root goal: fold the root's children left to right. span_[j] is the
// best root-headed frontier over words 1..j; trap_[j] holds an arc 0 -> j
// whose dependent still owes its right side.
template <bool kCounting>
class RootChain {
 public:
  using V = CellValue<kCounting>;

  explicit RootChain(int n)
      : span_bp(n + 1, -1),
        trap_bp(n + 1, -1),
        span_(n + 1, unreachable<kCounting>()),
        trap_(n + 1, unreachable<kCounting>()) {
    span_[0] = identity<kCounting>();
  }

  void relax_trap(int j, int k, V dep_left, V arc_w) {
    V cand = combine<kCounting>(combine<kCounting>(span_[k], dep_left), arc_w);
    if constexpr (kCounting) {
      trap_[j] += cand;
    } else if (cand > trap_[j]) {
      trap_[j] = cand;
      trap_bp[j] = k;
    }
  }

  void relax_span(int j, int k, V dep_right) {
    V cand = combine<kCounting>(trap_[k], dep_right);
    if constexpr (kCounting) {
      span_[j] += cand;
    } else if (cand > span_[j]) {
      span_[j] = cand;
      span_bp[j] = k;
    }
  }

  V best(int n) const { return span_[n]; }

  std::vector<int> span_bp;
  std::vector<int> trap_bp;

 private:
  std::vector<V> span_;
  std::vector<V> trap_;
};

void check_decode_inputs(const ScoreSet& s, int n, Algorithm a);

std::uint64_t count_eisner_1o(int n, RootMode mode);
std::uint64_t count_eisner_satta(int n, RootMode mode);
std::uint64_t count_eisner_headsplit(int n, RootMode mode);
std::uint64_t count_eisner_2o(int n, RootMode mode);

}  // namespace spandep::detail
