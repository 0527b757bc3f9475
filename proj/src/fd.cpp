#include "receipt/fd.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>

#include "receipt/butterfly.hpp"

namespace receipt {

std::vector<SubsetTask> make_tasks(const RangePartition& part) {
  std::vector<SubsetTask> tasks(part.size());
  for (std::size_t i = 0; i < part.size(); ++i)
    tasks[i] = {i, part.subset_wedges[i], part.boundaries[i]};
  std::stable_sort(tasks.begin(), tasks.end(), [](const SubsetTask& a, const SubsetTask& b) {
    return a.wedge_estimate > b.wedge_estimate;
  });
  return tasks;
}

ScheduleTrace schedule(std::span<const SubsetTask> tasks, int workers,
                       const std::function<count_t(const SubsetTask&, int worker)>& job) {
  workers = std::max(workers, 1);
  ScheduleTrace trace(tasks.size());
  std::atomic<std::size_t> head{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

#pragma omp parallel num_threads(workers)
  {
    const int tid = omp_get_thread_num();
    while (true) {
      const std::size_t k = head.fetch_add(1);
      if (k >= tasks.size()) break;
      try {
        const count_t wedges = job(tasks[k], tid);
        trace[k] = {tasks[k].subset_id, tid, k, wedges};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        head.store(tasks.size());
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return trace;
}

std::vector<count_t> external_counts(const BipartiteGraph& subgraph, std::span<const count_t> init,
                                     count_t* wedges) {
  const auto inside = count_per_vertex(subgraph, 1);
  if (wedges) *wedges += inside.wedges;
  std::vector<count_t> e(subgraph.u_count());
  for (vertex_t u = 0; u < subgraph.u_count(); ++u) {
    if (init[u] < inside.u[u]) throw InvalidPartition("initial support below in-subset butterfly count");
    e[u] = init[u] - inside.u[u];
  }
  return e;
}

std::vector<count_t> fd_huc_recount(const PeelableView& subgraph_view, std::span<const count_t> external) {
  const auto fresh = count_live(subgraph_view, 1);
  std::vector<count_t> s(subgraph_view.u_count(), 0);
  for (vertex_t u = 0; u < subgraph_view.u_count(); ++u)
    if (subgraph_view.alive(u)) s[u] = fresh.u[u] + external[u];
  return s;
}

namespace {

void validate(const BipartiteGraph& g, const RangePartition& part) {
  const vertex_t nu = g.u_count();
  if (part.support_init.size() != nu) throw InvalidPartition("support_init size differs from |U|");
  if (part.boundaries.size() != part.size() + 1 || part.subset_wedges.size() != part.size())
    throw InvalidPartition("boundary/subset count mismatch");
  std::vector<std::uint8_t> seen(nu, 0);
  for (const auto& subset : part.subsets)
    for (vertex_t u : subset) {
      if (u >= nu) throw InvalidPartition("subset vertex " + std::to_string(u) + " outside graph");
      if (seen[u]++) throw InvalidPartition("vertex " + std::to_string(u) + " in two subsets");
    }
  if (std::count(seen.begin(), seen.end(), 0) != 0) throw InvalidPartition("partition does not cover U");
}

}  // namespace

FineResult fine_decompose(const BipartiteGraph& g, const RangePartition& part, const FdOptions& opts) {
  validate(g, part);
  FineResult out;
  out.tips.theta.assign(g.u_count(), 0);
  PhaseTimer timer(out.stats, "fd");
  std::mutex merge_mutex;
  PeelStats merged;

  const auto tasks = make_tasks(part);
  out.trace = schedule(tasks, opts.workers, [&](const SubsetTask& task, int) -> count_t {
    const auto& members = part.subsets[task.subset_id];
    const auto sub = induce_with_map(g, members);
    const vertex_t n = sub.graph.u_count();

    std::vector<count_t> supports(n);
    for (vertex_t x = 0; x < n; ++x) supports[x] = part.support_init[sub.parent_u[x]];

    PeelStats local;
    SequentialPeelOptions so;
    so.dgm = opts.dgm;
    so.dgm_threshold = opts.dgm_threshold ? opts.dgm_threshold : std::max<count_t>(sub.graph.edge_count(), 1);
    so.huc = opts.huc;
    so.phase = "fd";
    if (opts.huc) {
      count_t counted = 0;
      so.external = external_counts(sub.graph, supports, &counted);
      local.add_wedges("fd", counted);
    }

    std::vector<count_t> theta(n, 0);
    sequential_peel(sub.graph, std::move(supports), so, theta, local);
    for (vertex_t x = 0; x < n; ++x) out.tips.theta[sub.parent_u[x]] = theta[x];

    std::lock_guard lock(merge_mutex);
    local.phase_times_ms.clear();
    merged.merge(local);
    return local.wedges_in("fd");
  });

  merged.sync_rounds = 0;  // workers only join at the end
  out.stats.merge(merged);
  out.tips.theta_max = max_theta(out.tips.theta);
  return out;
}

}  // namespace receipt
