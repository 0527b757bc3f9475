#include "receipt/cli.hpp"

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "receipt/io.hpp"
#include "receipt/receipt.hpp"

namespace receipt::cli {

int default_workers() {
  if (const char* env = std::getenv("RECEIPT_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return std::max(omp_get_num_procs(), 1);
}

Side side_auto(const BipartiteGraph& g) {
  const auto wu = wedge_counts(g, Side::U);
  const auto wv = wedge_counts(g, Side::V);
  const count_t su = std::accumulate(wu.begin(), wu.end(), count_t{0});
  const count_t sv = std::accumulate(wv.begin(), wv.end(), count_t{0});
  return sv > su ? Side::V : Side::U;
}

namespace {

void write_to(const std::string& path, std::ostream& fallback, const auto& writer) {
  if (path.empty()) {
    writer(fallback);
    return;
  }
  std::ofstream f(path);
  if (!f) throw IoError("cannot open " + path + " for writing");
  writer(f);
}

bool budget_exceeded(const BipartiteGraph& g, Side side, count_t budget) {
  const auto w = wedge_counts(g, side);
  return std::accumulate(w.begin(), w.end(), count_t{0}) > budget;
}

}  // namespace

int verify_tips(const BipartiteGraph& g, Side side, const Decomposition& result, std::ostream& err) {
  const auto reference = tip_decompose_bup(g, side);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < reference.tips.theta.size(); ++i) {
    const bool same = i < result.tips.theta.size() && result.ids[i] == reference.ids[i] &&
                      result.tips.theta[i] == reference.tips.theta[i];
    if (same) continue;
    if (mismatches++ < 10) {
      err << "mismatch: vertex " << reference.ids[i] << " expected " << reference.tips.theta[i] << " got ";
      if (i < result.tips.theta.size()) err << result.tips.theta[i] << '\n';
      else err << "nothing\n";
    }
  }
  if (mismatches) {
    err << "verification failed: " << mismatches << " vertices differ\n";
    return kExitMismatch;
  }
  err << "verification passed\n";
  return kExitOk;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.partitions < 1) {
    err << "error: --partitions must be >= 1\n";
    return kExitUsage;
  }
  if (config.workers < 1) {
    err << "error: --threads must be >= 1\n";
    return kExitUsage;
  }

  BipartiteGraph g;
  try {
    g = build_graph(read_edge_list_file(config.input).edges);
  } catch (const ParseError& e) {
    err << "error: " << config.input << ": " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << config.input << ": " << e.what() << '\n';
    return kExitInput;
  }

  const Side side = config.side == SideChoice::Auto ? side_auto(g)
                    : config.side == SideChoice::U  ? Side::U
                                                    : Side::V;

  Decomposition result;
  PartitionSummary summary;
  try {
    switch (config.algorithm) {
      case Algorithm::Receipt: {
        ReceiptOptions opts;
        opts.partitions = config.partitions;
        opts.huc = config.huc;
        opts.dgm = config.dgm;
        opts.dgm_threshold = config.dgm_threshold;
        opts.workers = config.workers;
        auto r = tip_decompose_receipt(g, side, opts);
        summary = summarize(r.partition);
        result = std::move(r.result);
        break;
      }
      case Algorithm::Bup:
        result = tip_decompose_bup(g, side, BupOptions{config.dgm, config.dgm_threshold});
        break;
      case Algorithm::Parb:
        result = tip_decompose_parb(g, side, config.workers);
        break;
      case Algorithm::Oracle: {
        const BipartiteGraph og = oriented(g, side);
        result.tips = tip_oracle_recount(og, Side::U);
        result.ids.assign(og.original_ids(Side::U).begin(), og.original_ids(Side::U).end());
        break;
      }
    }

    write_to(config.output, out, [&](std::ostream& s) { write_tips(result.tips, result.ids, s); });
    if (!config.stats.empty())
      write_to(config.stats, out, [&](std::ostream& s) { write_stats(result.stats, summary, s); });
  } catch (const InvalidConfig& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  if (!config.verify) return kExitOk;

  if (budget_exceeded(g, side, config.verify_wedge_budget))
    err << "warning: verification runs bottom-up peeling above the wedge budget\n";
  return verify_tips(g, side, result, err);
}

}  // namespace receipt::cli
