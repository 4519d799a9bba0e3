#include "spandep/oracle.hpp"

#include "spandep/tree_ops.hpp"

namespace spandep {

namespace {

// Recursive interval construction: a subtree headed by h over [a, b] is a
// forest of child intervals left of h plus one right of h; a forest over
// [a, b] is a first child interval [a, c] (its head attaching to `parent`)
// followed by a forest over [c+1, b].
struct Enumerator {
  std::vector<int> head;  // head[i-1] for word i
  const std::function<void(const ProjectiveTree&)>& emit;

  void headed(int a, int b, int h, const std::function<void()>& cont) {
    forest(a, h - 1, h, [&] { forest(h + 1, b, h, cont); });
  }

  void forest(int a, int b, int parent, const std::function<void()>& cont) {
    if (a > b) {
      cont();
      return;
    }
    for (int c = a; c <= b; ++c) {
      for (int g = a; g <= c; ++g) {
        head[g - 1] = parent;
        headed(a, c, g, [&] { forest(c + 1, b, parent, cont); });
      }
    }
  }
};

}  // namespace

void for_each_projective_tree(
    int n, RootMode mode, const std::function<void(const ProjectiveTree&)>& fn) {
  if (n < 1 || n > kEnumerationMaxN)
    throw std::invalid_argument("for_each_projective_tree: n out of guard range");
  Enumerator e{std::vector<int>(n, 0), fn};
  ProjectiveTree t;
  auto emit = [&] {
    t.head = e.head;
    fn(t);
  };
  if (mode == RootMode::kSingle) {
    for (int h = 1; h <= n; ++h) {
      e.head[h - 1] = 0;
      e.headed(1, n, h, emit);
    }
  } else {
    e.forest(1, n, 0, emit);
  }
}

std::vector<ProjectiveTree> enumerate_projective(int n, RootMode mode) {
  std::vector<ProjectiveTree> trees;
  for_each_projective_tree(n, mode,
                           [&](const ProjectiveTree& t) { trees.push_back(t); });
  return trees;
}

DecodeResult brute_force_argmax(const ScoreSet& s, int n, Algorithm model,
                                RootMode mode) {
  for (ScoreComponent c : score_components_required(model))
    if (!s.has(c)) throw std::invalid_argument("ScoreSet missing a component");

  DecodeResult best;
  best.score = kNegInf;
  best.mode = DecodeMode::kViterbi;
  for_each_projective_tree(n, mode, [&](const ProjectiveTree& t) {
    double sc = tree_score(t, s, model, mode);
    if (sc > best.score) {
      best.score = sc;
      best.tree = t;
    }
  });
  return best;
}

}  // namespace spandep
