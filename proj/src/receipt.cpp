#include "receipt/receipt.hpp"

namespace receipt {

ReceiptRun tip_decompose_receipt(const BipartiteGraph& g, Side side, const ReceiptOptions& opts) {
  const BipartiteGraph og = oriented(g, side);

  CdOptions cd;
  cd.partitions = opts.partitions;
  cd.huc = opts.huc;
  cd.dgm = opts.dgm;
  cd.dgm_threshold = opts.dgm_threshold;
  cd.workers = opts.workers;
  auto coarse = coarse_decompose(og, cd);

  FdOptions fd;
  fd.huc = opts.fd_huc;
  fd.dgm = opts.dgm;
  fd.workers = opts.workers;
  auto fine = fine_decompose(og, coarse.partition, fd);

  ReceiptRun run;
  run.result.ids.assign(og.original_ids(Side::U).begin(), og.original_ids(Side::U).end());
  run.result.tips = std::move(fine.tips);
  run.result.stats = std::move(coarse.stats);
  run.result.stats.merge(fine.stats);
  run.partition = std::move(coarse.partition);
  run.trace = std::move(fine.trace);
  return run;
}

}  // namespace receipt
