#pragma once

// JSON-lines score files: one object per sentence, in input order. Lets an
// external scorer (neural or otherwise) drive the decoders.
//
//   n      word count
//   arc    dense (n+1)x(n+1) row-major list, entry [h*(n+1)+d] = arc(h, d)
//   sib    optional sparse list of [h, inner, outer, score]
//   span   optional sparse list of [h, l, r, score]
//   left   optional dense n x (n+1) row-major list, row h-1, column l
//   right  optional dense n x (n+1) row-major list, row h-1, column r
//
// Unlisted sparse entries score 0.

#include <iosfwd>
#include <string>
#include <vector>

#include "spandep/core.hpp"

namespace spandep {

// Parses one line; `line_no` is used in error messages only.
ScoreSet parse_score_line(const std::string& line, int line_no);

std::vector<ScoreSet> read_score_file(std::istream& in);
std::vector<ScoreSet> read_score_file(const std::string& path);

// One JSON object (no trailing newline). Dense components dump in full;
// sib and span dump only nonzero cells.
std::string score_set_to_json(const ScoreSet& s);

}  // namespace spandep
