#include "spandep/conllu.hpp"

#include <fstream>
#include <sstream>

namespace spandep {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      cols.push_back(line.substr(start));
      break;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cols;
}

}  // namespace

Sentence ConlluSentence::to_sentence() const {
  std::vector<Token> tokens;
  tokens.reserve(words.size());
  for (const ConlluWord& w : words) {
    Token t;
    t.form = w.cols[1];
    t.upos = w.cols[3];
    t.xpos = w.cols[4];
    t.gold_head = all_digits(w.cols[6]) ? std::stoi(w.cols[6]) : -1;
    t.gold_label = w.cols[7];
    tokens.push_back(std::move(t));
  }
  return Sentence(std::move(tokens));
}

bool ConlluSentence::has_gold_tree() const {
  for (const ConlluWord& w : words)
    if (!all_digits(w.cols[6])) return false;
  return !words.empty();
}

ProjectiveTree ConlluSentence::gold_tree() const {
  std::vector<int> head;
  head.reserve(words.size());
  for (const ConlluWord& w : words) head.push_back(std::stoi(w.cols[6]));
  return ProjectiveTree(std::move(head));
}

std::vector<std::string> ConlluSentence::gold_labels() const {
  std::vector<std::string> labels;
  labels.reserve(words.size());
  for (const ConlluWord& w : words) labels.push_back(w.cols[7]);
  return labels;
}

ConlluDocument read_conllu(std::istream& in) {
  ConlluDocument doc;
  ConlluSentence cur;
  bool in_sentence = false;
  int expected_id = 1;
  int line_no = 0;
  std::string line;
  bool last_line_blank = false;

  auto flush = [&] {
    if (!in_sentence) return;
    if (cur.words.empty())
      throw ConlluError(line_no, "sentence has comments but no word lines");
    doc.sentences.push_back(std::move(cur));
    cur = ConlluSentence{};
    in_sentence = false;
    expected_id = 1;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      flush();
      last_line_blank = true;
      continue;
    }
    last_line_blank = false;
    if (line[0] == '#' && cur.words.empty()) {
      cur.comments.push_back(line);
      in_sentence = true;
      continue;
    }
    std::vector<std::string> cols = split_tabs(line);
    if (cols.size() != 10)
      throw ConlluError(line_no, "expected 10 tab-separated columns, found " +
                                     std::to_string(cols.size()));
    in_sentence = true;
    const std::string& id = cols[0];
    if (all_digits(id)) {
      int got = std::stoi(id);
      if (got != expected_id)
        throw ConlluError(line_no, "token id " + id + " out of order, expected " +
                                       std::to_string(expected_id));
      ++expected_id;
      if (!all_digits(cols[6]) && cols[6] != "_")
        throw ConlluError(line_no, "HEAD column is neither an integer nor '_': " + cols[6]);
      ConlluWord w;
      std::move(cols.begin(), cols.end(), w.cols.begin());
      cur.body.push_back({ConlluSentence::BodyLine::kWord,
                          static_cast<int>(cur.words.size()), ""});
      cur.words.push_back(std::move(w));
    } else if (id.find('-') != std::string::npos ||
               id.find('.') != std::string::npos) {
      cur.body.push_back({ConlluSentence::BodyLine::kPassthrough, -1, line});
    } else {
      throw ConlluError(line_no, "bad token id: " + id);
    }
  }
  flush();
  doc.final_blank_line = doc.sentences.empty() || last_line_blank;
  return doc;
}

ConlluDocument read_conllu_string(const std::string& text) {
  std::istringstream in(text);
  return read_conllu(in);
}

ConlluDocument read_conllu_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_conllu(in);
}

namespace {

std::string render(const ConlluDocument& doc,
                   const std::vector<LabeledTree>* predictions) {
  if (predictions && predictions->size() != doc.sentences.size())
    throw std::invalid_argument("write_conllu: prediction count does not match sentences");
  std::string out;
  for (std::size_t si = 0; si < doc.sentences.size(); ++si) {
    const ConlluSentence& sent = doc.sentences[si];
    const LabeledTree* pred = predictions ? &(*predictions)[si] : nullptr;
    if (pred && pred->tree.n() != sent.n())
      throw std::invalid_argument("write_conllu: prediction length mismatch at sentence " +
                                  std::to_string(si + 1));
    for (const std::string& c : sent.comments) {
      out += c;
      out += '\n';
    }
    for (const auto& b : sent.body) {
      if (b.kind == ConlluSentence::BodyLine::kPassthrough) {
        out += b.raw;
        out += '\n';
        continue;
      }
      const ConlluWord& w = sent.words[b.word_index];
      for (int c = 0; c < 10; ++c) {
        if (c) out += '\t';
        if (pred && c == 6)
          out += std::to_string(pred->tree.head_of(b.word_index + 1));
        else if (pred && c == 7)
          out += pred->labels[b.word_index];
        else
          out += w.cols[c];
      }
      out += '\n';
    }
    if (si + 1 < doc.sentences.size() || doc.final_blank_line) out += '\n';
  }
  return out;
}

}  // namespace

std::string write_conllu(const ConlluDocument& doc) { return render(doc, nullptr); }

std::string write_conllu(const ConlluDocument& doc,
                         const std::vector<LabeledTree>& predictions) {
  return render(doc, &predictions);
}

}  // namespace spandep
