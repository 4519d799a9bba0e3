#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spandep/core.hpp"
#include "support/test_util.hpp"

using namespace spandep;

namespace {

// Definition-based projectivity: for every arc h -> d, every word strictly
// between must be a descendant of h.
bool projective_by_definition(const ProjectiveTree& t) {
  const int n = t.n();
  auto is_descendant_of = [&](int w, int h) {
    for (int cur = w, steps = 0; steps <= n; ++steps) {
      if (cur == h) return true;
      if (cur == 0) return false;
      cur = t.head_of(cur);
    }
    return false;
  };
  for (int d = 1; d <= n; ++d) {
    int h = t.head_of(d);
    int lo = std::min(h, d), hi = std::max(h, d);
    for (int w = lo + 1; w < hi; ++w)
      if (!is_descendant_of(w, h)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("validate_tree basics") {
  CHECK(validate_tree(ProjectiveTree({0}), 1));
  CHECK(validate_tree(ProjectiveTree({2, 0, 2, 2}), 4));
  CHECK(validate_tree(ProjectiveTree({2, 3, 0, 5, 3}), 5));  // the child reads a book
  CHECK_FALSE(validate_tree(ProjectiveTree({3, 4, 1, 0}), 4));  // cyclic
  CHECK_FALSE(validate_tree(ProjectiveTree({2, 1}), 2));        // no root
  CHECK_FALSE(validate_tree(ProjectiveTree({3, 0, 2}), 3));     // crossing arc
  CHECK_FALSE(validate_tree(ProjectiveTree({0, 1}), 3));        // length mismatch
  CHECK_FALSE(validate_tree(ProjectiveTree({0, 0}), 2));        // two roots, single mode
  CHECK(validate_tree(ProjectiveTree({0, 0}), 2, RootMode::kMulti));
}

TEST_CASE("validate_tree agrees with the definition-based check") {
  // all head vectors over n=4: 5^4 candidates
  const int n = 4;
  std::vector<int> head(n);
  for (int code = 0; code < 625; ++code) {
    int c = code;
    for (int i = 0; i < n; ++i) {
      head[i] = c % 5;
      c /= 5;
    }
    ProjectiveTree t(head);
    bool structural = true;
    int roots = 0;
    for (int i = 1; i <= n; ++i) {
      if (t.head_of(i) == i) structural = false;
      if (t.head_of(i) == 0) ++roots;
    }
    // reachability
    if (structural) {
      for (int i = 1; i <= n && structural; ++i) {
        int cur = i, steps = 0;
        while (cur != 0 && steps <= n) {
          cur = t.head_of(cur);
          ++steps;
        }
        if (cur != 0) structural = false;
      }
    }
    bool expected = structural && roots == 1 && projective_by_definition(t);
    CAPTURE(code);
    CHECK(validate_tree(t, n) == expected);
  }
}

TEST_CASE("score_components_required per algorithm") {
  using C = ScoreComponent;
  CHECK(score_components_required(Algorithm::kEisner1o) == std::set<C>{C::kArc});
  CHECK(score_components_required(Algorithm::kEisnerSattaSpan) ==
        std::set<C>{C::kArc, C::kSpan});
  CHECK(score_components_required(Algorithm::kEisnerHeadSplit) ==
        std::set<C>{C::kArc, C::kLeft, C::kRight});
  CHECK(score_components_required(Algorithm::kEisner2oHeadSplit) ==
        std::set<C>{C::kArc, C::kSib, C::kLeft, C::kRight});
  CHECK_THROWS_AS(algorithm_from_name("arc-hybrid"), std::invalid_argument);
}

TEST_CASE("zero_scores allocates exactly the required components") {
  ScoreSet s = zero_scores(3, Algorithm::kEisnerHeadSplit);
  CHECK(s.has_arc());
  CHECK(s.has_left());
  CHECK(s.has_right());
  CHECK_FALSE(s.has_sib());
  CHECK_FALSE(s.has_span());
  CHECK(s.arc(0, 1) == 0.0);
  CHECK(s.left(2, 0) == 0.0);
  CHECK(s.right(2, 3) == 0.0);
}

TEST_CASE("sentences require at least one word") {
  CHECK_THROWS_AS(Sentence(std::vector<Token>{}), std::invalid_argument);
  Sentence one({Token{"word", "NOUN", "NN", 0, "root"}});
  CHECK(one.n() == 1);
  CHECK(one.form(1) == "word");
  REQUIRE(one.gold_heads().has_value());
  CHECK(one.gold_heads()->at(0) == 0);
}
