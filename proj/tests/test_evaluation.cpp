#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "spandep/evaluation.hpp"

using namespace spandep;

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(SPANDEP_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("identical documents score 100/100") {
  ConlluDocument gold = read_conllu_file(fixture_path("eval_gold.conllu"));
  EvalReport r = evaluate(gold, gold);
  CHECK(r.uas == doctest::Approx(100.0));
  CHECK(r.las == doctest::Approx(100.0));
  CHECK(r.scored == 10);
}

TEST_CASE("hand-scored fixture pair, score-all") {
  // sentence 1: heads right for words 1,2,3,5; labels right for 1,3,5
  // sentence 2: heads all right; labels right except word 4
  ConlluDocument gold = read_conllu_file(fixture_path("eval_gold.conllu"));
  ConlluDocument pred = read_conllu_file(fixture_path("eval_pred.conllu"));
  EvalReport r = evaluate(gold, pred, PunctPolicy::kScoreAll);
  CHECK(r.scored == 10);
  CHECK(r.correct_heads == 9);
  CHECK(r.correct_labeled == 7);
  CHECK(r.uas == doctest::Approx(90.0));
  CHECK(r.las == doctest::Approx(70.0));
}

TEST_CASE("hand-scored fixture pair, exclude-punct") {
  ConlluDocument gold = read_conllu_file(fixture_path("eval_gold.conllu"));
  ConlluDocument pred = read_conllu_file(fixture_path("eval_pred.conllu"));
  EvalReport r = evaluate(gold, pred, PunctPolicy::kExcludePunct);
  CHECK(r.scored == 9);
  CHECK(r.correct_heads == 8);
  CHECK(r.correct_labeled == 6);
  CHECK(r.uas == doctest::Approx(800.0 / 9.0));
  CHECK(r.las == doctest::Approx(600.0 / 9.0));
}

TEST_CASE("las never exceeds uas") {
  ConlluDocument gold = read_conllu_file(fixture_path("eval_gold.conllu"));
  ConlluDocument pred = read_conllu_file(fixture_path("eval_pred.conllu"));
  for (PunctPolicy p : {PunctPolicy::kScoreAll, PunctPolicy::kExcludePunct}) {
    EvalReport r = evaluate(gold, pred, p);
    CHECK(r.las <= r.uas);
    CHECK(r.uas <= 100.0);
  }
}

TEST_CASE("sentence order permutation applied to both sides changes nothing") {
  ConlluDocument gold = read_conllu_file(fixture_path("eval_gold.conllu"));
  ConlluDocument pred = read_conllu_file(fixture_path("eval_pred.conllu"));
  EvalReport before = evaluate(gold, pred);
  std::swap(gold.sentences[0], gold.sentences[1]);
  std::swap(pred.sentences[0], pred.sentences[1]);
  EvalReport after = evaluate(gold, pred);
  CHECK(before.uas == after.uas);
  CHECK(before.las == after.las);
  CHECK(before.correct_heads == after.correct_heads);
}

TEST_CASE("misaligned documents are rejected") {
  ConlluDocument gold = read_conllu_file(fixture_path("eval_gold.conllu"));
  ConlluDocument pred = read_conllu_file(fixture_path("eval_pred.conllu"));
  ConlluDocument short_pred = pred;
  short_pred.sentences.pop_back();
  CHECK_THROWS_AS(evaluate(gold, short_pred), std::invalid_argument);

  ConlluDocument renamed = pred;
  renamed.sentences[0].words[0].cols[1] = "an";
  CHECK_THROWS_AS(evaluate(gold, renamed), std::invalid_argument);
}

TEST_CASE("reports render both formats") {
  ConlluDocument gold = read_conllu_file(fixture_path("eval_gold.conllu"));
  ConlluDocument pred = read_conllu_file(fixture_path("eval_pred.conllu"));
  EvalReport r = evaluate(gold, pred);
  std::string text = r.text();
  CHECK(text.find("UAS:") != std::string::npos);
  CHECK(text.find("LAS:") != std::string::npos);
  std::string kv = r.kv();
  CHECK(kv.find("uas=90.000000") != std::string::npos);
  CHECK(kv.find("scored=10") != std::string::npos);
  CHECK(kv.find("policy=score-all") != std::string::npos);
}
