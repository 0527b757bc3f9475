#pragma once

#include "receipt/bigraph.hpp"
#include "receipt/butterfly.hpp"
#include "receipt/cd.hpp"
#include "receipt/fd.hpp"
#include "receipt/peel.hpp"

namespace receipt {

struct ReceiptOptions {
  std::size_t partitions = 150;
  bool huc = true;     // hybrid update computation in the coarse phase
  bool dgm = true;     // adjacency compaction in both phases
  count_t dgm_threshold = 0;  // coarse phase; 0 = edge count
  bool fd_huc = false;  // hybrid update computation in the fine phase
  int workers = 1;
};

struct ReceiptRun {
  Decomposition result;
  RangePartition partition;
  ScheduleTrace trace;
};

// Coarse range partitioning followed by independent fine peeling of each
// subset. Stats hold "count", "cd" and "fd" phases.
ReceiptRun tip_decompose_receipt(const BipartiteGraph& g, Side side, const ReceiptOptions& opts = {});

}  // namespace receipt
