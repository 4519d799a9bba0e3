#pragma once

// CoNLL-U reading and writing. Multiword-token and empty-node lines pass
// through verbatim and are excluded from word indexing; write_conllu
// reproduces a well-formed file byte for byte apart from any HEAD/DEPREL
// replacement.

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "spandep/core.hpp"

namespace spandep {

class ConlluError : public std::runtime_error {
 public:
  ConlluError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// One 10-column word line: ID FORM LEMMA UPOS XPOS FEATS HEAD DEPREL DEPS MISC
struct ConlluWord {
  std::array<std::string, 10> cols;
};

struct ConlluSentence {
  std::vector<std::string> comments;  // '#' lines before the word lines

  // Word lines interleaved with passthrough lines (ranges like "3-4",
  // decimals like "5.1"), kept in file order. kWord entries index into
  // `words`.
  struct BodyLine {
    enum Kind { kWord, kPassthrough } kind;
    int word_index;   // for kWord
    std::string raw;  // for kPassthrough
  };
  std::vector<BodyLine> body;
  std::vector<ConlluWord> words;  // ids 1..n in order

  int n() const { return static_cast<int>(words.size()); }
  Sentence to_sentence() const;

  // Gold tree when every HEAD column is an integer.
  bool has_gold_tree() const;
  ProjectiveTree gold_tree() const;
  std::vector<std::string> gold_labels() const;
};

struct ConlluDocument {
  std::vector<ConlluSentence> sentences;
  bool final_blank_line = true;  // well-formed files end with one
};

ConlluDocument read_conllu(std::istream& in);
ConlluDocument read_conllu_string(const std::string& text);
ConlluDocument read_conllu_file(const std::string& path);

std::string write_conllu(const ConlluDocument& doc);

// Same, with HEAD/DEPREL replaced by the predictions (one per sentence,
// aligned by order). Every other byte is preserved.
std::string write_conllu(const ConlluDocument& doc,
                         const std::vector<LabeledTree>& predictions);

}  // namespace spandep
