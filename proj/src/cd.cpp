#include "receipt/cd.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

#include "receipt/butterfly.hpp"

namespace receipt {

count_t find_hi(std::span<const count_t> live_supports, std::span<const count_t> live_w, double tgt) {
  std::vector<std::pair<count_t, count_t>> bins(live_supports.size());
  for (std::size_t k = 0; k < bins.size(); ++k) bins[k] = {live_supports[k], live_w[k]};
  std::sort(bins.begin(), bins.end());

  long double work = 0;
  for (std::size_t k = 0; k < bins.size();) {
    const count_t key = bins[k].first;
    for (; k < bins.size() && bins[k].first == key; ++k) work += bins[k].second;
    if (work >= tgt) return key + 1;
  }
  return bins.empty() ? 1 : bins.back().first + 1;
}

double adaptive_target(double remaining_wedges, std::size_t remaining_subsets, double prev_scale) {
  if (remaining_subsets == 0) throw InvalidConfig("adaptive_target: no subsets left");
  return remaining_wedges / static_cast<double>(remaining_subsets) * prev_scale;
}

double overshoot_scale(double tgt, count_t covered) {
  if (covered == 0 || tgt <= 0) return 1.0;
  return std::min(1.0, tgt / static_cast<double>(covered));
}

HucDecision huc_decide(std::span<const vertex_t> active, const PeelableView& view) {
  HucDecision d;
  for (vertex_t u : active)
    for (vertex_t v : view.u_neighbors(u)) d.peel_cost += view.live_degree_v(v);
  // the recount cost is at least the live edge count; skip the full sum below it
  if (d.peel_cost <= view.live_edge_count()) return d;
  d.recount_cost = recount_cost(view);
  d.action = d.peel_cost > d.recount_cost ? HucAction::Recount : HucAction::Peel;
  return d;
}

CoarseResult coarse_decompose(const BipartiteGraph& g, const CdOptions& opts) {
  if (opts.partitions < 1) throw InvalidConfig("partition count must be >= 1");
  const int workers = std::max(opts.workers, 1);
  const vertex_t nu = g.u_count();

  CoarseResult out;
  auto& part = out.partition;
  auto& stats = out.stats;

  std::vector<count_t> supports;
  {
    PhaseTimer t(stats, "count");
    auto counts = count_per_vertex(g, workers);
    stats.add_wedges("count", counts.wedges);
    supports = std::move(counts.u);
  }

  PhaseTimer timer(stats, "cd");
  const WedgeCounts w = wedge_counts(g, Side::U);
  PeelableView view(g);
  std::vector<UpdateScratch> scratch(static_cast<std::size_t>(workers), UpdateScratch(nu));
  std::vector<std::vector<vertex_t>> touched(static_cast<std::size_t>(workers));
  std::vector<std::uint8_t> queued(nu, 0);
  const count_t threshold = opts.dgm_threshold ? opts.dgm_threshold : std::max<count_t>(g.edge_count(), 1);

  part.support_init.assign(nu, 0);
  part.subset_of.assign(nu, ~std::uint32_t{0});
  part.boundaries.push_back(0);

  count_t remaining = std::accumulate(w.begin(), w.end(), count_t{0});
  double scale = 1.0;
  count_t wedges = 0;

  auto begin_subset = [&](const std::vector<vertex_t>& live) {
    const auto n = static_cast<std::int64_t>(live.size());
#pragma omp parallel for num_threads(workers)
    for (std::int64_t k = 0; k < n; ++k) part.support_init[live[k]] = supports[live[k]];
  };

  for (std::size_t i = 0; i < opts.partitions && view.live_count() > 0; ++i) {
    const count_t lo = part.boundaries.back();
    const auto live = view.live_vertices();
    begin_subset(live);

    std::vector<count_t> live_s(live.size()), live_w(live.size());
    for (std::size_t k = 0; k < live.size(); ++k) {
      live_s[k] = supports[live[k]];
      live_w[k] = w[live[k]];
    }
    const double tgt = adaptive_target(static_cast<double>(remaining), opts.partitions - i, scale);
    const count_t hi = find_hi(live_s, live_w, tgt);
    part.boundaries.push_back(hi);

    std::vector<vertex_t> active;
    for (vertex_t u : live)
      if (supports[u] < hi) active.push_back(u);

    std::vector<vertex_t> subset;
    count_t covered = 0;
    while (!active.empty()) {
      ++stats.sync_rounds;
      for (vertex_t u : active) {
        part.subset_of[u] = static_cast<std::uint32_t>(i);
        covered += w[u];
      }
      subset.insert(subset.end(), active.begin(), active.end());

      const bool recount = opts.huc && huc_decide(active, view).action == HucAction::Recount;
      const auto na = static_cast<std::int64_t>(active.size());
#pragma omp parallel for num_threads(workers)
      for (std::int64_t k = 0; k < na; ++k) view.kill(active[k]);

      if (recount) {
        const auto fresh = count_live(view, workers);
        wedges += fresh.wedges;
        ++stats.recount_invocations;
        active.clear();
        for (vertex_t x = 0; x < nu; ++x) {
          if (!view.alive(x)) continue;
          supports[x] = std::max(lo, fresh.u[x]);
          if (supports[x] < hi) active.push_back(x);
        }
      } else {
#pragma omp parallel num_threads(workers) reduction(+ : wedges)
        {
          const auto tid = static_cast<std::size_t>(omp_get_thread_num());
          touched[tid].clear();
#pragma omp for schedule(dynamic, 4)
          for (std::int64_t k = 0; k < na; ++k)
            wedges += update(active[k], lo, supports, view, scratch[tid], touched[tid], true);
        }
        active.clear();
        for (const auto& list : touched)
          for (vertex_t x : list)
            if (!queued[x] && view.alive(x) && supports[x] < hi) {
              queued[x] = 1;
              active.push_back(x);
            }
        for (vertex_t x : active) queued[x] = 0;
        std::sort(active.begin(), active.end());
      }
      if (opts.dgm) view.maybe_compact(threshold, workers);
    }

    std::sort(subset.begin(), subset.end());
    part.subsets.push_back(std::move(subset));
    part.subset_wedges.push_back(covered);
    remaining -= covered;
    scale = overshoot_scale(tgt, covered);
  }

  if (view.live_count() > 0) {
    // leftover vertices form one extra subset without further peeling
    const auto live = view.live_vertices();
    begin_subset(live);
    count_t top = 0, covered = 0;
    const auto idx = static_cast<std::uint32_t>(part.subsets.size());
    for (vertex_t u : live) {
      top = std::max(top, supports[u]);
      covered += w[u];
      part.subset_of[u] = idx;
    }
    part.boundaries.push_back(top + 1);
    part.subsets.push_back(live);
    part.subset_wedges.push_back(covered);
  }

  stats.add_wedges("cd", wedges);
  return out;
}

}  // namespace receipt
