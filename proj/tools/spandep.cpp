// spandep: batch CLI over the parsing toolkit.
//
// Exit codes: 0 success, 1 check failure (oracle-check mismatch),
// 2 usage or I/O error.

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "spandep/bench.hpp"
#include "spandep/conllu.hpp"
#include "spandep/decode.hpp"
#include "spandep/evaluation.hpp"
#include "spandep/oracle.hpp"
#include "spandep/score_io.hpp"
#include "spandep/trainer.hpp"

namespace {

using namespace spandep;

RootMode parse_root_mode(const std::string& s) {
  if (s == "single") return RootMode::kSingle;
  if (s == "multi") return RootMode::kMulti;
  throw CLI::ValidationError("--root-mode", "expected 'single' or 'multi'");
}

struct DecodeArgs {
  std::string input, model_path, scores_path, output = "-";
  std::string algorithm, root_mode = "single";
  int jobs = 1;
};

int run_decode(const DecodeArgs& args) {
  if (args.model_path.empty() == args.scores_path.empty()) {
    std::cerr << "decode: exactly one of --model or --scores is required\n";
    return 2;
  }
  RootMode mode = parse_root_mode(args.root_mode);

  ConlluDocument doc = read_conllu_file(args.input);
  LinearModel model;
  std::vector<ScoreSet> file_scores;
  Algorithm algo;
  if (!args.model_path.empty()) {
    model = LinearModel::load(args.model_path);
    algo = args.algorithm.empty() ? model.trained_for
                                  : algorithm_from_name(args.algorithm);
  } else {
    if (args.algorithm.empty()) {
      std::cerr << "decode: --scores requires --algorithm\n";
      return 2;
    }
    algo = algorithm_from_name(args.algorithm);
    file_scores = read_score_file(args.scores_path);
    if (file_scores.size() != doc.sentences.size())
      throw std::runtime_error("score file has " + std::to_string(file_scores.size()) +
                               " lines for " + std::to_string(doc.sentences.size()) +
                               " sentences");
  }

  const std::size_t count = doc.sentences.size();
  std::vector<LabeledTree> predictions(count);
  std::vector<double> sentence_scores(count, 0.0);
  auto t0 = std::chrono::steady_clock::now();

  auto decode_one = [&](std::size_t i) {
    const ConlluSentence& cs = doc.sentences[i];
    Sentence x = cs.to_sentence();
    const bool from_model = !args.model_path.empty();
    ScoreSet s = from_model ? build_scores(x, model, algo) : file_scores[i];
    if (s.n() != x.n())
      throw std::runtime_error("sentence " + std::to_string(i + 1) +
                               ": score line n=" + std::to_string(s.n()) +
                               " but sentence has n=" + std::to_string(x.n()));
    DecodeResult r = decode(algo, s, x.n(), mode);
    sentence_scores[i] = r.score;
    LabeledTree out;
    out.tree = r.tree;
    out.labels.resize(x.n(), "_");
    if (from_model && !model.labels().empty())
      for (int d = 1; d <= x.n(); ++d) {
        int best = model.best_label(featurize_arc(x, r.tree.head_of(d), d));
        if (best >= 0) out.labels[d - 1] = model.labels()[best];
      }
    predictions[i] = std::move(out);
  };

  const int jobs = std::max(1, args.jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) decode_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::string error;
    std::mutex error_mu;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count && !failed; i = next++) {
          try {
            decode_one(i);
          } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lock(error_mu);
            failed = true;
            error = e.what();
          }
        }
      });
    for (auto& t : pool) t.join();
    if (failed) throw std::runtime_error(error);
  }

  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string rendered = write_conllu(doc, predictions);
  if (args.output == "-") {
    std::cout << rendered;
  } else {
    std::ofstream out(args.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + args.output);
    out << rendered;
  }
  double total_score = 0.0;
  for (double sc : sentence_scores) total_score += sc;
  char score_line[64];
  std::snprintf(score_line, sizeof(score_line), "total model score: %.6f\n",
                total_score);
  std::cerr << score_line;
  std::cerr << count << " sentences in " << secs << "s ("
            << (secs > 0 ? double(count) / secs : 0.0) << " sentences/sec)\n";
  return 0;
}

struct TrainArgs {
  std::string train_path, dev_path, model_out;
  std::string algorithm = "eisner2o-headsplit", root_mode = "single";
  int epochs = 5, eval_every = 1;
  double lr = 0.1;
  std::uint64_t seed = 1;
  bool no_shuffle = false;
};

int run_train(const TrainArgs& args) {
  TrainConfig cfg;
  cfg.model = algorithm_from_name(args.algorithm);
  cfg.costs = CostConfig::unit_for(cfg.model);
  cfg.epochs = args.epochs;
  cfg.learning_rate = args.lr;
  cfg.seed = args.seed;
  cfg.shuffle = !args.no_shuffle;
  cfg.dev_eval_every = args.eval_every;
  cfg.root_mode = parse_root_mode(args.root_mode);

  Corpus train_set = corpus_from_document(read_conllu_file(args.train_path));
  Corpus dev_set;
  if (!args.dev_path.empty())
    dev_set = corpus_from_document(read_conllu_file(args.dev_path));

  TrainResult result = train(train_set, dev_set, cfg, &std::cout);
  if (result.skipped_nonprojective > 0)
    std::cerr << "skipped " << result.skipped_nonprojective
              << " non-projective gold trees\n";
  result.model.save(args.model_out);
  return 0;
}

int run_eval(const std::string& gold_path, const std::string& pred_path,
             const std::string& punct) {
  EvalReport r = evaluate(read_conllu_file(gold_path), read_conllu_file(pred_path),
                          punct_policy_from_name(punct));
  std::cout << r.text() << "\n" << r.kv();
  return 0;
}

int run_oracle_check(int n_max, int trials, const std::string& algorithm,
                     std::uint64_t seed) {
  if (n_max < 2 || n_max > kEnumerationMaxN) {
    std::cerr << "oracle-check: --n-max must be in [2, " << kEnumerationMaxN << "]\n";
    return 2;
  }
  std::vector<Algorithm> algos;
  if (algorithm == "all")
    algos = {Algorithm::kEisner1o, Algorithm::kEisnerSattaSpan,
             Algorithm::kEisnerHeadSplit, Algorithm::kEisner2oHeadSplit};
  else
    algos = {algorithm_from_name(algorithm)};

  int failures = 0;
  for (Algorithm a : algos) {
    for (int n = 2; n <= n_max; ++n) {
      std::uint64_t expected = enumerate_projective(n, RootMode::kSingle).size();
      std::uint64_t counted = count_trees(a, n);
      std::cout << algorithm_name(a) << " n=" << n << " count: "
                << (counted == expected ? "pass" : "FAIL") << " (" << counted << ")\n";
      if (counted != expected) ++failures;
      for (int trial = 0; trial < trials; ++trial) {
        ScoreSet s = zero_scores(n, a);
        std::mt19937_64 rng(seed ^ (std::uint64_t(n) << 32) ^ std::uint64_t(trial));
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (int h = 0; h <= n; ++h)
          for (int d = 1; d <= n; ++d)
            if (h != d) s.arc(h, d) = dist(rng);
        if (s.has_span())
          for (int h = 1; h <= n; ++h)
            for (int l = 0; l < h; ++l)
              for (int r = h; r <= n; ++r) s.span(h, l, r) = dist(rng);
        if (s.has_left())
          for (int h = 1; h <= n; ++h)
            for (int l = 0; l < h; ++l) s.left(h, l) = dist(rng);
        if (s.has_right())
          for (int h = 1; h <= n; ++h)
            for (int r = h; r <= n; ++r) s.right(h, r) = dist(rng);
        if (s.has_sib())
          for (int h = 0; h <= n; ++h) {
            for (int outer = 1; outer < h - 1; ++outer)
              for (int inner = outer + 1; inner < h; ++inner)
                s.sib(h, inner, outer) = dist(rng);
            for (int outer = h + 2; outer <= n; ++outer)
              for (int inner = h + 1; inner < outer; ++inner)
                s.sib(h, inner, outer) = dist(rng);
          }

        DecodeResult dp = decode(a, s, n);
        DecodeResult bf = brute_force_argmax(s, n, a);
        double scale = std::max({1.0, std::fabs(dp.score), std::fabs(bf.score)});
        bool ok = std::fabs(dp.score - bf.score) <= 1e-9 * scale &&
                  validate_tree(dp.tree, n);
        std::cout << algorithm_name(a) << " n=" << n << " trial=" << trial << ": "
                  << (ok ? "pass" : "FAIL") << "\n";
        if (!ok) {
          std::cout << "  dp=" << dp.score << " oracle=" << bf.score << "\n";
          ++failures;
        }
      }
    }
  }
  if (failures > 0) {
    std::cout << failures << " failures\n";
    return 1;
  }
  std::cout << "all checks passed\n";
  return 0;
}

int run_bench(const std::string& algorithm, std::vector<int> lengths, int repeats,
              std::uint64_t seed) {
  Algorithm a = algorithm_from_name(algorithm);
  if (lengths.empty()) {
    lengths = a == Algorithm::kEisnerSattaSpan ? std::vector<int>{10, 20, 40, 80}
                                               : std::vector<int>{20, 40, 80, 160, 320};
  }
  BenchResult r = run_bench(a, lengths, repeats, seed);
  std::cout << "algorithm\tlength\tmean_ms\trepeats\n";
  for (const BenchPoint& p : r.points) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s\t%d\t%.3f\t%d\n",
                  algorithm_name(a).c_str(), p.n, p.mean_seconds * 1e3, p.repeats);
    std::cout << buf;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "slope %.3f\n", r.slope);
  std::cout << buf;
  return 0;
}

int run_count(const std::string& algorithm, int n, const std::string& root_mode) {
  RootMode mode = parse_root_mode(root_mode);
  if (algorithm == "all") {
    for (Algorithm a : {Algorithm::kEisner1o, Algorithm::kEisnerSattaSpan,
                        Algorithm::kEisnerHeadSplit, Algorithm::kEisner2oHeadSplit})
      std::cout << algorithm_name(a) << " " << count_trees(a, n, mode) << "\n";
  } else {
    std::cout << count_trees(algorithm_from_name(algorithm), n, mode) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"projective dependency parsing toolkit"};
  app.require_subcommand(1);

  DecodeArgs dec;
  CLI::App* decode_cmd = app.add_subcommand("decode", "parse a CoNLL-U file");
  decode_cmd->add_option("--input", dec.input, "input CoNLL-U")->required();
  decode_cmd->add_option("--model", dec.model_path, "linear model file");
  decode_cmd->add_option("--scores", dec.scores_path, "JSON-lines score file");
  decode_cmd->add_option("--algorithm", dec.algorithm,
                         "eisner1o | eisner-satta-span | eisner-headsplit | "
                         "eisner2o-headsplit");
  decode_cmd->add_option("--output", dec.output, "output CoNLL-U ('-' = stdout)");
  decode_cmd->add_option("--root-mode", dec.root_mode, "single | multi");
  decode_cmd->add_option("--jobs", dec.jobs, "worker threads");

  TrainArgs tr;
  CLI::App* train_cmd = app.add_subcommand("train", "train the linear scorer");
  train_cmd->add_option("--train", tr.train_path, "training CoNLL-U")->required();
  train_cmd->add_option("--dev", tr.dev_path, "development CoNLL-U");
  train_cmd->add_option("--algorithm", tr.algorithm, "decoder objective");
  train_cmd->add_option("--epochs", tr.epochs, "training epochs");
  train_cmd->add_option("--lr", tr.lr, "learning rate");
  train_cmd->add_option("--seed", tr.seed, "shuffle seed");
  train_cmd->add_option("--model-out", tr.model_out, "where to save")->required();
  train_cmd->add_option("--root-mode", tr.root_mode, "single | multi");
  train_cmd->add_option("--eval-every", tr.eval_every, "dev eval cadence");
  train_cmd->add_flag("--no-shuffle", tr.no_shuffle, "keep corpus order");

  std::string gold_path, pred_path, punct = "score-all";
  CLI::App* eval_cmd = app.add_subcommand("eval", "UAS/LAS against gold");
  eval_cmd->add_option("--gold", gold_path, "gold CoNLL-U")->required();
  eval_cmd->add_option("--pred", pred_path, "predicted CoNLL-U")->required();
  eval_cmd->add_option("--punct", punct, "score-all | exclude-punct");

  int n_max = 7, trials = 20;
  std::string check_algo = "all";
  std::uint64_t check_seed = 1;
  CLI::App* check_cmd =
      app.add_subcommand("oracle-check", "decoders against brute force");
  check_cmd->add_option("--n-max", n_max, "largest sentence length");
  check_cmd->add_option("--trials", trials, "random score sets per length");
  check_cmd->add_option("--algorithm", check_algo, "one decoder or 'all'");
  check_cmd->add_option("--seed", check_seed, "score seed");

  std::string bench_algo;
  std::vector<int> lengths;
  int repeats = 3;
  std::uint64_t bench_seed = 1;
  CLI::App* bench_cmd = app.add_subcommand("bench", "decode-time scaling");
  bench_cmd->add_option("--algorithm", bench_algo, "decoder")->required();
  bench_cmd->add_option("--lengths", lengths, "sentence lengths")->delimiter(',');
  bench_cmd->add_option("--repeats", repeats, "minimum repeats per length");
  bench_cmd->add_option("--seed", bench_seed, "score seed");

  std::string count_algo = "all", count_mode = "single";
  int count_n = 8;
  CLI::App* count_cmd = app.add_subcommand("count", "projective tree counts");
  count_cmd->add_option("--algorithm", count_algo, "one decoder or 'all'");
  count_cmd->add_option("--n", count_n, "sentence length")->required();
  count_cmd->add_option("--root-mode", count_mode, "single | multi");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (decode_cmd->parsed()) return run_decode(dec);
    if (train_cmd->parsed()) return run_train(tr);
    if (eval_cmd->parsed()) return run_eval(gold_path, pred_path, punct);
    if (check_cmd->parsed()) return run_oracle_check(n_max, trials, check_algo, check_seed);
    if (bench_cmd->parsed()) return run_bench(bench_algo, lengths, repeats, bench_seed);
    if (count_cmd->parsed()) return run_count(count_algo, count_n, count_mode);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
