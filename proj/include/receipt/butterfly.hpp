#pragma once

#include <vector>

#include "receipt/bigraph.hpp"

namespace receipt {

// Per-vertex butterfly counts over both sides plus the number of wedges the
// counting pass traversed.
struct ButterflyCounts {
  std::vector<count_t> u;
  std::vector<count_t> v;
  count_t wedges = 0;

  count_t total() const;  // butterflies in the graph
  friend bool operator==(const ButterflyCounts& a, const ButterflyCounts& b) {
    return a.u == b.u && a.v == b.v;
  }
};

// Vertex-priority counting: a wedge sp-mp-ep is taken only when ep precedes
// both sp and mp in the degree order. Parallel over start vertices, one dense
// aggregation array per worker. Throws Overflow if any count wraps.
ButterflyCounts count_per_vertex(const BipartiteGraph& g, int workers = 1);

// Serial reference: enumerate every wedge between U endpoints and combine the
// ones with common endpoints. O(sum_u sum_{v in N_u} d_v).
ButterflyCounts count_naive(const BipartiteGraph& g);

// Counts over the live part of a view, reported in the view's base labels.
// Dead U vertices get 0. The live graph is relabeled by its own degrees
// before counting, so the traversal respects sum over live edges of
// min(d_u, d_v).
ButterflyCounts count_live(const PeelableView& view, int workers = 1);

// C(c, 2) where c is the number of live common neighbours of u1 and u2.
count_t shared_butterflies(const PeelableView& view, vertex_t u1, vertex_t u2);

// sum over live edges of min(d_u, d_v), the counting cost bound.
count_t recount_cost(const PeelableView& view);

}  // namespace receipt
