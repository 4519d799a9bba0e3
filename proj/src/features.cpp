#include "spandep/features.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace spandep {

namespace {

constexpr FeatureId kFnvOffset = 14695981039346656037ull;
constexpr FeatureId kFnvPrime = 1099511628211ull;

FeatureId mix(FeatureId h, FeatureId v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

FeatureId hash_bytes(FeatureId h, const std::string& s) {
  FeatureId f = kFnvOffset;
  for (unsigned char c : s) {
    f ^= c;
    f *= kFnvPrime;
  }
  return mix(h, f);
}

// Signed, binned distance: 1..5 exact, 6 for 6-10, 7 beyond; negated for
// leftward.
int distance_bin(int from, int to) {
  int d = std::abs(to - from);
  int bin = d <= 5 ? d : (d <= 10 ? 6 : 7);
  return to < from ? -bin : bin;
}

const std::string kRoot = "<root>";
const std::string kBos = "<bos>";
const std::string kEos = "<eos>";
const std::string kNone = "<none>";

const std::string& form_at(const Sentence& x, int i) {
  if (i == 0) return kRoot;
  if (i < 0) return kBos;
  if (i > x.n()) return kEos;
  return x.form(i);
}

const std::string& pos_at(const Sentence& x, int i) {
  if (i == 0) return kRoot;
  if (i < 0) return kBos;
  if (i > x.n()) return kEos;
  const std::string& p = x.upos(i);
  return p.empty() ? kNone : p;
}

// Words adjacent to fencepost f: word f to its left, word f+1 to its
// right; the sentence edges read as <root> and <eos>.
const std::string& fence_left_pos(const Sentence& x, int f) { return pos_at(x, f); }
const std::string& fence_right_pos(const Sentence& x, int f) {
  return pos_at(x, f + 1);
}

}  // namespace

void FeatureVector::finish() {
  std::sort(items.begin(), items.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < items.size();) {
    std::size_t j = i;
    int total = 0;
    while (j < items.size() && items[j].first == items[i].first) total += items[j++].second;
    items[out++] = {items[i].first, total};
    i = j;
  }
  items.resize(out);
}

FeatureVector featurize_arc(const Sentence& x, int h, int d) {
  const int n = x.n();
  if (h < 0 || h > n || d < 1 || d > n || h == d)
    throw std::out_of_range("featurize_arc: bad (h, d)");

  const std::string& hf = form_at(x, h);
  const std::string& hp = pos_at(x, h);
  const std::string& df = form_at(x, d);
  const std::string& dp = pos_at(x, d);
  const FeatureId dist = FeatureId(distance_bin(h, d) + 16);

  FeatureVector v;
  v.add(hash_bytes(1, hf));
  v.add(hash_bytes(2, hp));
  v.add(hash_bytes(3, df));
  v.add(hash_bytes(4, dp));
  v.add(hash_bytes(hash_bytes(5, hf), hp));
  v.add(hash_bytes(hash_bytes(6, df), dp));
  v.add(mix(hash_bytes(hash_bytes(7, hp), dp), dist));
  v.add(mix(hash_bytes(hash_bytes(8, hf), df), dist));
  v.add(hash_bytes(hash_bytes(9, hf), dp));
  v.add(hash_bytes(hash_bytes(10, hp), df));
  v.add(hash_bytes(hash_bytes(11, hp), dp));

  // surrounding-POS 4-grams
  const std::string& hp_prev = pos_at(x, h - 1);
  const std::string& hp_next = h == 0 ? kNone : pos_at(x, h + 1);
  const std::string& dp_prev = pos_at(x, d - 1);
  const std::string& dp_next = pos_at(x, d + 1);
  auto gram4 = [&](FeatureId salt, const std::string& a, const std::string& b,
                   const std::string& c, const std::string& e) {
    return mix(hash_bytes(hash_bytes(hash_bytes(hash_bytes(salt, a), b), c), e), dist);
  };
  v.add(gram4(12, hp, hp_next, dp_prev, dp));
  v.add(gram4(13, hp_prev, hp, dp_prev, dp));
  v.add(gram4(14, hp, hp_next, dp, dp_next));
  v.add(gram4(15, hp_prev, hp, dp, dp_next));

  // in-between POS counts, one item per distinct tag
  int lo = std::min(h, d), hi = std::max(h, d);
  std::set<std::string> seen;
  for (int b = lo + 1; b < hi; ++b) {
    const std::string& bp = pos_at(x, b);
    int count = 0;
    if (!seen.insert(bp).second) continue;
    for (int c = lo + 1; c < hi; ++c)
      if (pos_at(x, c) == bp) ++count;
    v.add(hash_bytes(hash_bytes(hash_bytes(16, hp), bp), dp), count);
  }

  v.finish();
  return v;
}

FeatureVector featurize_boundary(const Sentence& x, int h, int fencepost, Side side) {
  const int n = x.n();
  if (h < 1 || h > n || fencepost < 0 || fencepost > n)
    throw std::out_of_range("featurize_boundary: bad (h, fencepost)");
  if (side == Side::kLeft ? fencepost >= h : fencepost < h)
    throw std::out_of_range("featurize_boundary: fencepost on the wrong side of h");

  const FeatureId base = side == Side::kLeft ? 20 : 30;
  const std::string& hf = form_at(x, h);
  const std::string& hp = pos_at(x, h);
  const std::string& fl = fence_left_pos(x, fencepost);
  const std::string& fr = fence_right_pos(x, fencepost);
  int width = side == Side::kLeft ? h - fencepost : fencepost - h + 1;
  FeatureId wbin = FeatureId(width <= 5 ? width : (width <= 10 ? 6 : 7));

  FeatureVector v;
  v.add(hash_bytes(hash_bytes(base + 1, hp), fl));
  v.add(hash_bytes(hash_bytes(base + 2, hp), fr));
  v.add(hash_bytes(hash_bytes(hash_bytes(base + 3, hp), fl), fr));
  v.add(hash_bytes(hash_bytes(hash_bytes(base + 4, hf), fl), fr));
  v.add(mix(hash_bytes(base + 5, hp), wbin));
  v.add(mix(hash_bytes(base + 6, hf), wbin));
  v.finish();
  return v;
}

FeatureVector featurize_span(const Sentence& x, int h, int l, int r) {
  const int n = x.n();
  if (h < 1 || h > n || l < 0 || r > n || !(l < h && h <= r))
    throw std::out_of_range("featurize_span: bad (h, l, r)");

  const std::string& hf = form_at(x, h);
  const std::string& hp = pos_at(x, h);
  const std::string& ll = fence_left_pos(x, l);
  const std::string& lr = fence_right_pos(x, l);  // first word inside
  const std::string& rl = fence_left_pos(x, r);   // last word inside
  const std::string& rr = fence_right_pos(x, r);
  int width = r - l;
  FeatureId wbin = FeatureId(width <= 5 ? width : (width <= 10 ? 6 : 7));

  FeatureVector v;
  v.add(hash_bytes(hash_bytes(hash_bytes(40, hp), ll), rr));
  v.add(hash_bytes(hash_bytes(hash_bytes(41, hp), lr), rl));
  v.add(hash_bytes(hash_bytes(hash_bytes(hash_bytes(hash_bytes(42, hp), ll), lr), rl), rr));
  v.add(mix(hash_bytes(43, hp), wbin));
  v.add(mix(hash_bytes(44, hf), wbin));
  v.add(mix(mix(hash_bytes(45, hp), FeatureId(h - l)), FeatureId(r - h + 1)));
  v.finish();
  return v;
}

FeatureVector featurize_sibling(const Sentence& x, int h, int inner, int outer) {
  const int n = x.n();
  bool left_side = outer < inner && inner < h;
  bool right_side = h < inner && inner < outer;
  if (h < 0 || h > n || inner < 1 || inner > n || outer < 1 || outer > n ||
      (!left_side && !right_side))
    throw std::out_of_range("featurize_sibling: bad (h, inner, outer)");

  const std::string& hp = pos_at(x, h);
  const std::string& hf = form_at(x, h);
  const std::string& ip = pos_at(x, inner);
  const std::string& of = form_at(x, outer);
  const std::string& op = pos_at(x, outer);
  FeatureId side = left_side ? 1 : 2;
  int gap = std::abs(outer - inner);
  FeatureId gbin = FeatureId(gap <= 5 ? gap : (gap <= 10 ? 6 : 7));

  FeatureVector v;
  v.add(mix(hash_bytes(hash_bytes(hash_bytes(50, hp), ip), op), side));
  v.add(mix(hash_bytes(hash_bytes(hash_bytes(51, hf), ip), op), side));
  v.add(mix(hash_bytes(hash_bytes(hash_bytes(52, hp), ip), of), side));
  v.add(hash_bytes(hash_bytes(53, ip), op));
  v.add(mix(mix(hash_bytes(54, hp), gbin), side));
  v.finish();
  return v;
}

}  // namespace spandep
