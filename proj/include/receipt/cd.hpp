#pragma once

#include <span>
#include <vector>

#include "receipt/bigraph.hpp"
#include "receipt/peel.hpp"

namespace receipt {

// Output of coarse decomposition. Subset i holds the U vertices whose tip
// numbers lie in [boundaries[i], boundaries[i+1]).
struct RangePartition {
  std::vector<count_t> boundaries;
  std::vector<std::vector<vertex_t>> subsets;
  std::vector<count_t> support_init;   // by U label: support when its subset began
  std::vector<count_t> subset_wedges;  // sum of w[u] over each subset
  std::vector<std::uint32_t> subset_of;

  std::size_t size() const { return subsets.size(); }
  friend bool operator==(const RangePartition&, const RangePartition&) = default;
};

struct CdOptions {
  std::size_t partitions = 150;
  bool huc = true;
  bool dgm = true;
  count_t dgm_threshold = 0;  // 0 = edge count
  int workers = 1;
};

struct CoarseResult {
  RangePartition partition;
  PeelStats stats;
};

// Smallest support s whose cumulative wedge mass (over vertices with support
// <= s) reaches tgt, plus one. Falls back to max support + 1. Arrays are
// parallel: live_supports[k] belongs to the vertex with wedge count live_w[k].
count_t find_hi(std::span<const count_t> live_supports, std::span<const count_t> live_w, double tgt);

// (remaining_wedges / remaining_subsets) * prev_scale.
double adaptive_target(double remaining_wedges, std::size_t remaining_subsets, double prev_scale);

// tgt / covered clamped to (0, 1]; 1 when nothing was covered.
double overshoot_scale(double tgt, count_t covered);

enum class HucAction { Peel, Recount };

struct HucDecision {
  count_t peel_cost = 0;     // sum over active u of sum_{v in N_u} d_v
  count_t recount_cost = 0;  // sum over live edges of min(d_u, d_v)
  HucAction action = HucAction::Peel;
};

// Evaluated on the view before the active set is removed. Ties peel. When the
// peel cost does not exceed the live edge count the recount cannot win and
// recount_cost is left at 0.
HucDecision huc_decide(std::span<const vertex_t> active, const PeelableView& view);

// Coarse decomposition of g's U side. Throws InvalidConfig when partitions < 1.
CoarseResult coarse_decompose(const BipartiteGraph& g, const CdOptions& opts);

}  // namespace receipt
