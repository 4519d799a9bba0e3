#pragma once

// Hand-crafted sparse features over words, boundaries, spans, and sibling
// triples. Feature identifiers are 64-bit hashes, deterministic across
// runs and platforms.

#include <cstdint>
#include <vector>

#include "spandep/core.hpp"

namespace spandep {

using FeatureId = std::uint64_t;

struct FeatureVector {
  std::vector<std::pair<FeatureId, int>> items;  // (id, count), id-sorted

  void add(FeatureId id, int count = 1) { items.emplace_back(id, count); }
  void finish();  // sort by id and merge duplicates
};

enum class Side { kLeft, kRight };

FeatureVector featurize_arc(const Sentence& x, int h, int d);
FeatureVector featurize_boundary(const Sentence& x, int h, int fencepost, Side side);
FeatureVector featurize_span(const Sentence& x, int h, int l, int r);
FeatureVector featurize_sibling(const Sentence& x, int h, int inner, int outer);

}  // namespace spandep
