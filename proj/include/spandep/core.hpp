#pragma once

// Core types shared by every decoder: sentences, projective trees, headed
// spans, and the dense score container.
//
// Indexing conventions, used everywhere in this library:
//   - words are 1..n, index 0 is the artificial root;
//   - fenceposts are 0..n, fencepost k sits between word k and word k+1;
//   - a span (l, r] covers words l+1..r.

#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace spandep {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct Token {
  std::string form;
  std::string upos;
  std::string xpos;
  int gold_head = -1;  // 0..n, or -1 when the treebank gives none
  std::string gold_label;
};

// A sentence of n words (the artificial root at index 0 is implicit and
// carries no token).
class Sentence {
 public:
  explicit Sentence(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty()) throw std::invalid_argument("Sentence: n must be >= 1");
  }

  int n() const { return static_cast<int>(tokens_.size()); }

  const Token& token(int word) const { return tokens_[check(word) - 1]; }
  const std::string& form(int word) const { return token(word).form; }
  const std::string& upos(int word) const { return token(word).upos; }

  // Gold tree if every word carries a head annotation.
  std::optional<std::vector<int>> gold_heads() const {
    std::vector<int> h;
    h.reserve(tokens_.size());
    for (const Token& t : tokens_) {
      if (t.gold_head < 0) return std::nullopt;
      h.push_back(t.gold_head);
    }
    return h;
  }

 private:
  int check(int word) const {
    if (word < 1 || word > n()) throw std::out_of_range("Sentence: word index");
    return word;
  }
  std::vector<Token> tokens_;
};

// Head assignment for words 1..n: head[i-1] is the head of word i, with 0
// meaning the artificial root. Not every instance is a valid projective
// tree; see validate_tree.
struct ProjectiveTree {
  std::vector<int> head;

  ProjectiveTree() = default;
  explicit ProjectiveTree(std::vector<int> h) : head(std::move(h)) {}

  int n() const { return static_cast<int>(head.size()); }
  int head_of(int word) const { return head[word - 1]; }

  bool operator==(const ProjectiveTree& o) const { return head == o.head; }
};

// The pair of a word and the contiguous interval its subtree covers,
// written with fencepost boundaries: l < h <= r, covering words l+1..r.
struct HeadedSpan {
  int l = 0;
  int r = 0;
  int h = 0;

  bool operator==(const HeadedSpan& o) const {
    return l == o.l && r == o.r && h == o.h;
  }
  bool operator<(const HeadedSpan& o) const {
    if (l != o.l) return l < o.l;
    if (r != o.r) return r < o.r;
    return h < o.h;
  }
};

struct LabeledTree {
  ProjectiveTree tree;
  std::vector<std::string> labels;  // labels[i-1] labels the arc into word i
};

enum class RootMode { kSingle, kMulti };

enum class Algorithm {
  kEisner1o,
  kEisnerSattaSpan,
  kEisnerHeadSplit,
  kEisner2oHeadSplit,
};

enum class ScoreComponent { kArc, kSib, kSpan, kLeft, kRight };

std::string algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

// Components each decoder's objective reads. Throws on an unknown id.
std::set<ScoreComponent> score_components_required(Algorithm a);

// Dense score tables. Components are optional; a decoder checks for the
// ones its objective needs. Structurally invalid cells hold -inf and are
// never read by any decoder or scorer.
//
// sib is stored as (head, inner, outer) with inner the modifier closer to
// the head; valid only when outer < inner < head or head < inner < outer.
class ScoreSet {
 public:
  explicit ScoreSet(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("ScoreSet: n must be >= 1");
  }

  int n() const { return n_; }

  bool has_arc() const { return !arc_.empty(); }
  bool has_sib() const { return !sib_.empty(); }
  bool has_span() const { return !span_.empty(); }
  bool has_left() const { return !left_.empty(); }
  bool has_right() const { return !right_.empty(); }
  bool has(ScoreComponent c) const;

  // Allocate a component with valid cells at 0 (idempotent).
  void enable_arc();
  void enable_sib();
  void enable_span();
  void enable_left();
  void enable_right();
  void enable(ScoreComponent c);

  // h in 0..n, d in 1..n, h != d
  double& arc(int h, int d) { return arc_[h * (n_ + 1) + d]; }
  double arc(int h, int d) const { return arc_[h * (n_ + 1) + d]; }

  // outer < inner < h or h < inner < outer. Laid out with inner as the
  // fastest index: the sibling decoder scans inner splits in its hot loop.
  double& sib(int h, int inner, int outer) {
    return sib_[(h * (n_ + 1) + outer) * (n_ + 1) + inner];
  }
  double sib(int h, int inner, int outer) const {
    return sib_[(h * (n_ + 1) + outer) * (n_ + 1) + inner];
  }

  // 1 <= h <= n, l < h <= r
  double& span(int h, int l, int r) {
    return span_[(h * (n_ + 1) + l) * (n_ + 1) + r];
  }
  double span(int h, int l, int r) const {
    return span_[(h * (n_ + 1) + l) * (n_ + 1) + r];
  }

  // h in 1..n, l in 0..h-1
  double& left(int h, int l) { return left_[(h - 1) * (n_ + 1) + l]; }
  double left(int h, int l) const { return left_[(h - 1) * (n_ + 1) + l]; }

  // h in 1..n, r in h..n
  double& right(int h, int r) { return right_[(h - 1) * (n_ + 1) + r]; }
  double right(int h, int r) const { return right_[(h - 1) * (n_ + 1) + r]; }

 private:
  int n_;
  std::vector<double> arc_;
  std::vector<double> sib_;
  std::vector<double> span_;
  std::vector<double> left_;
  std::vector<double> right_;
};

// Build a ScoreSet with exactly the components `a` requires, valid cells 0.
ScoreSet zero_scores(int n, Algorithm a);

// True iff `head` encodes a tree rooted at 0, projective, and (in single
// root mode) with exactly one child of the root. Pure predicate.
bool validate_tree(const ProjectiveTree& t, int n,
                   RootMode mode = RootMode::kSingle);

}  // namespace spandep
