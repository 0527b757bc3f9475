#pragma once

#include <functional>
#include <span>
#include <vector>

#include "receipt/cd.hpp"
#include "receipt/peel.hpp"

namespace receipt {

struct SubsetTask {
  std::size_t subset_id = 0;
  count_t wedge_estimate = 0;
  count_t range_floor = 0;
};

struct ScheduleEntry {
  std::size_t subset_id = 0;
  int worker = 0;
  std::size_t pop_order = 0;
  count_t wedges = 0;  // actually traversed while peeling the subset
};
using ScheduleTrace = std::vector<ScheduleEntry>;

// One task per subset, sorted by decreasing wedge estimate (stable on id).
std::vector<SubsetTask> make_tasks(const RangePartition& part);

// Workers pop tasks from the front of a shared queue until it is empty and
// run `job` on each; the job returns the wedges it traversed. The trace is
// ordered by pop order.
ScheduleTrace schedule(std::span<const SubsetTask> tasks, int workers,
                       const std::function<count_t(const SubsetTask&, int worker)>& job);

struct FdOptions {
  bool huc = false;
  bool dgm = true;
  count_t dgm_threshold = 0;  // 0 = edge count of each induced subgraph
  int workers = 1;
};

struct FineResult {
  TipResult tips;
  PeelStats stats;
  ScheduleTrace trace;
};

// Exact tip numbers of g's U side from a coarse partition of the same graph.
// Throws InvalidPartition if the partition does not describe g.
FineResult fine_decompose(const BipartiteGraph& g, const RangePartition& part, const FdOptions& opts);

// e_u = support_init[u] - (butterflies of u inside the pristine subgraph).
// Adds the counting traversal to *wedges when given.
std::vector<count_t> external_counts(const BipartiteGraph& subgraph, std::span<const count_t> init,
                                     count_t* wedges = nullptr);

// Supports after a recount inside a subgraph: live count plus external count.
// Dead vertices get 0.
std::vector<count_t> fd_huc_recount(const PeelableView& subgraph_view, std::span<const count_t> external);

}  // namespace receipt
