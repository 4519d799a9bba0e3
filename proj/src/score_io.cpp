#include "spandep/score_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace spandep {

namespace {

using nlohmann::json;

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw std::runtime_error("score file line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

ScoreSet parse_score_line(const std::string& line, int line_no) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    fail(line_no, std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    fail(line_no, "expected an object with integer field 'n'");
  const int n = j["n"].get<int>();
  if (n < 1) fail(line_no, "n must be >= 1");

  ScoreSet s(n);

  if (!j.contains("arc")) fail(line_no, "missing 'arc'");
  {
    const auto& a = j["arc"];
    const std::size_t want = std::size_t(n + 1) * (n + 1);
    if (!a.is_array() || a.size() != want)
      fail(line_no, "'arc' must be a flat row-major list of (n+1)^2 numbers");
    s.enable_arc();
    for (int h = 0; h <= n; ++h)
      for (int d = 1; d <= n; ++d)
        if (h != d) s.arc(h, d) = a[std::size_t(h) * (n + 1) + d].get<double>();
  }

  auto read_dense_boundary = [&](const char* key, auto&& set) {
    if (!j.contains(key)) return false;
    const auto& a = j[key];
    const std::size_t want = std::size_t(n) * (n + 1);
    if (!a.is_array() || a.size() != want)
      fail(line_no, std::string("'") + key + "' must be a flat n x (n+1) list");
    set(a);
    return true;
  };
  read_dense_boundary("left", [&](const json& a) {
    s.enable_left();
    for (int h = 1; h <= n; ++h)
      for (int l = 0; l < h; ++l)
        s.left(h, l) = a[std::size_t(h - 1) * (n + 1) + l].get<double>();
  });
  read_dense_boundary("right", [&](const json& a) {
    s.enable_right();
    for (int h = 1; h <= n; ++h)
      for (int r = h; r <= n; ++r)
        s.right(h, r) = a[std::size_t(h - 1) * (n + 1) + r].get<double>();
  });

  if (j.contains("sib")) {
    s.enable_sib();
    for (const auto& e : j["sib"]) {
      if (!e.is_array() || e.size() != 4) fail(line_no, "'sib' entries are [h, inner, outer, score]");
      int h = e[0].get<int>(), inner = e[1].get<int>(), outer = e[2].get<int>();
      bool ok = h >= 0 && h <= n && ((outer < inner && inner < h && outer >= 1) ||
                                     (h < inner && inner < outer && outer <= n));
      if (!ok) fail(line_no, "invalid sib triple");
      s.sib(h, inner, outer) = e[3].get<double>();
    }
  }
  if (j.contains("span")) {
    s.enable_span();
    for (const auto& e : j["span"]) {
      if (!e.is_array() || e.size() != 4) fail(line_no, "'span' entries are [h, l, r, score]");
      int h = e[0].get<int>(), l = e[1].get<int>(), r = e[2].get<int>();
      if (!(h >= 1 && h <= n && l >= 0 && r <= n && l < h && h <= r))
        fail(line_no, "invalid span triple");
      s.span(h, l, r) = e[3].get<double>();
    }
  }
  return s;
}

std::vector<ScoreSet> read_score_file(std::istream& in) {
  std::vector<ScoreSet> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    out.push_back(parse_score_line(line, line_no));
  }
  return out;
}

std::vector<ScoreSet> read_score_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_score_file(in);
}

std::string score_set_to_json(const ScoreSet& s) {
  const int n = s.n();
  json j;
  j["n"] = n;

  json arc = json::array();
  for (int h = 0; h <= n; ++h)
    for (int d = 0; d <= n; ++d)
      arc.push_back(d >= 1 && h != d && s.has_arc() ? s.arc(h, d) : 0.0);
  j["arc"] = std::move(arc);

  if (s.has_left()) {
    json left = json::array();
    for (int h = 1; h <= n; ++h)
      for (int l = 0; l <= n; ++l) left.push_back(l < h ? s.left(h, l) : 0.0);
    j["left"] = std::move(left);
  }
  if (s.has_right()) {
    json right = json::array();
    for (int h = 1; h <= n; ++h)
      for (int r = 0; r <= n; ++r) right.push_back(r >= h ? s.right(h, r) : 0.0);
    j["right"] = std::move(right);
  }
  if (s.has_sib()) {
    json sib = json::array();
    for (int h = 0; h <= n; ++h) {
      for (int outer = 1; outer < h - 1; ++outer)
        for (int inner = outer + 1; inner < h; ++inner)
          if (s.sib(h, inner, outer) != 0.0)
            sib.push_back(json::array({h, inner, outer, s.sib(h, inner, outer)}));
      for (int outer = h + 2; outer <= n; ++outer)
        for (int inner = h + 1; inner < outer; ++inner)
          if (s.sib(h, inner, outer) != 0.0)
            sib.push_back(json::array({h, inner, outer, s.sib(h, inner, outer)}));
    }
    j["sib"] = std::move(sib);
  }
  if (s.has_span()) {
    json span = json::array();
    for (int h = 1; h <= n; ++h)
      for (int l = 0; l < h; ++l)
        for (int r = h; r <= n; ++r)
          if (s.span(h, l, r) != 0.0)
            span.push_back(json::array({h, l, r, s.span(h, l, r)}));
    j["span"] = std::move(span);
  }
  return j.dump();
}

}  // namespace spandep
