#include "receipt/peel.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>

#include "receipt/butterfly.hpp"

namespace receipt {

void PeelStats::merge(const PeelStats& other) {
  wedges_traversed += other.wedges_traversed;
  sync_rounds += other.sync_rounds;
  recount_invocations += other.recount_invocations;
  for (const auto& [k, n] : other.phase_wedges) phase_wedges[k] += n;
  for (const auto& [k, t] : other.phase_times_ms) phase_times_ms[k] += t;
}

count_t max_theta(std::span<const count_t> theta) {
  return theta.empty() ? 0 : *std::max_element(theta.begin(), theta.end());
}

// ------------------------------------------------------------- MinSupportQueue

MinSupportQueue::MinSupportQueue(std::span<const count_t> supports,
                                 std::span<const vertex_t> members) {
  heap_.reserve(members.size());
  waiting_ = members.size();
  for (vertex_t u : members) heap_.push_back({supports[u], u});
  std::sort(heap_.begin(), heap_.end());  // a sorted array is a valid heap
}

void MinSupportQueue::push(vertex_t u, count_t support) {
  heap_.push_back({support, u});
  std::size_t i = heap_.size() - 1;
  while (i > 0) {
    const std::size_t parent = (i - 1) / kArity;
    if (!(heap_[i] < heap_[parent])) break;
    std::swap(heap_[i], heap_[parent]);
    i = parent;
  }
}

void MinSupportQueue::pop_front() {
  heap_.front() = heap_.back();
  heap_.pop_back();
  const std::size_t n = heap_.size();
  std::size_t i = 0;
  while (true) {
    const std::size_t first = i * kArity + 1;
    if (first >= n) break;
    std::size_t best = first;
    for (std::size_t c = first + 1; c < std::min(first + kArity, n); ++c)
      if (heap_[c] < heap_[best]) best = c;
    if (!(heap_[best] < heap_[i])) break;
    std::swap(heap_[i], heap_[best]);
    i = best;
  }
}

// ---------------------------------------------------------------------- update

namespace {

inline void saturating_sub(count_t& target, count_t dec, count_t floor, bool concurrent) {
  auto next = [&](count_t old) { return old > floor && old - floor > dec ? old - dec : floor; };
  if (!concurrent) {
    target = next(target);
    return;
  }
  std::atomic_ref<count_t> ref(target);
  count_t old = ref.load(std::memory_order_relaxed);
  while (!ref.compare_exchange_weak(old, next(old), std::memory_order_relaxed)) {
  }
}

}  // namespace

count_t update(vertex_t u, count_t floor, std::span<count_t> supports, PeelableView& view,
               UpdateScratch& scratch, std::vector<vertex_t>& touched, bool concurrent) {
  count_t wedges = 0;
  for (vertex_t v : view.u_neighbors(u)) {
    for (vertex_t w : view.v_neighbors(v)) {
      if (w == u) continue;
      ++wedges;
      if (!view.alive(w)) continue;
      if (scratch.wdg[w]++ == 0) scratch.hits.push_back(w);
    }
  }
  for (vertex_t w : scratch.hits) {
    const count_t shared = choose2(scratch.wdg[w]);
    scratch.wdg[w] = 0;
    if (shared == 0) continue;
    saturating_sub(supports[w], shared, floor, concurrent);
    touched.push_back(w);
  }
  scratch.hits.clear();
  view.record_wedges(wedges);
  return wedges;
}

// ------------------------------------------------------------ sequential peel

std::vector<vertex_t> sequential_peel(const BipartiteGraph& g, std::vector<count_t> supports,
                                      const SequentialPeelOptions& opts,
                                      std::span<count_t> theta, PeelStats& stats) {
  PeelableView view(g);
  UpdateScratch scratch(g.u_count());
  std::vector<vertex_t> touched;
  std::vector<vertex_t> order;
  order.reserve(g.u_count());

  std::vector<vertex_t> all(g.u_count());
  for (vertex_t u = 0; u < g.u_count(); ++u) all[u] = u;
  MinSupportQueue queue(supports, all);
  auto alive = [&](vertex_t x) { return view.alive(x); };
  const count_t threshold = opts.dgm_threshold ? opts.dgm_threshold : std::max<count_t>(g.edge_count(), 1);

  count_t wedges = 0;
  while (auto next = queue.pop(supports, alive)) {
    const vertex_t u = *next;
    theta[u] = supports[u];
    order.push_back(u);

    bool recount = false;
    if (opts.huc) {
      count_t peel_cost = 0;
      for (vertex_t v : view.u_neighbors(u)) peel_cost += view.live_degree_v(v);
      // recount_cost >= live edge count, so small peels skip the O(m) sum
      recount = peel_cost > view.live_edge_count() && peel_cost > recount_cost(view);
    }
    view.kill(u);

    if (recount) {
      const auto fresh = count_live(view, 1);
      wedges += fresh.wedges;
      ++stats.recount_invocations;
      for (vertex_t x = 0; x < g.u_count(); ++x) {
        if (!view.alive(x)) continue;
        const count_t ext = opts.external.empty() ? 0 : opts.external[x];
        const count_t s = std::max(theta[u], fresh.u[x] + ext);
        if (s != supports[x]) {
          supports[x] = s;
          queue.push(x, s);
        }
      }
      continue;
    }

    touched.clear();
    wedges += update(u, theta[u], supports, view, scratch, touched);
    for (vertex_t x : touched) queue.push(x, supports[x]);
    if (opts.dgm) view.maybe_compact(threshold);
  }
  stats.add_wedges(opts.phase, wedges);
  return order;
}

// ------------------------------------------------------------------------- BUP

Decomposition tip_decompose_bup(const BipartiteGraph& g, Side side, const BupOptions& opts) {
  const BipartiteGraph og = oriented(g, side);
  Decomposition out;
  out.ids.assign(og.original_ids(Side::U).begin(), og.original_ids(Side::U).end());
  out.tips.theta.assign(og.u_count(), 0);

  ButterflyCounts counts;
  {
    PhaseTimer t(out.stats, "count");
    counts = count_per_vertex(og, 1);
    out.stats.add_wedges("count", counts.wedges);
  }
  {
    PhaseTimer t(out.stats, "peel");
    SequentialPeelOptions so;
    so.dgm = opts.dgm;
    so.dgm_threshold = opts.dgm_threshold;
    out.order = sequential_peel(og, std::move(counts.u), so, out.tips.theta, out.stats);
  }
  out.tips.theta_max = max_theta(out.tips.theta);
  return out;
}

// ------------------------------------------------------------------------ ParB

Decomposition tip_decompose_parb(const BipartiteGraph& g, Side side, int workers) {
  workers = std::max(workers, 1);
  const BipartiteGraph og = oriented(g, side);
  Decomposition out;
  out.ids.assign(og.original_ids(Side::U).begin(), og.original_ids(Side::U).end());
  out.tips.theta.assign(og.u_count(), 0);

  std::vector<count_t> supports;
  {
    PhaseTimer t(out.stats, "count");
    auto counts = count_per_vertex(og, workers);
    out.stats.add_wedges("count", counts.wedges);
    supports = std::move(counts.u);
  }

  PhaseTimer t(out.stats, "peel");
  PeelableView view(og);
  std::vector<UpdateScratch> scratch(static_cast<std::size_t>(workers), UpdateScratch(og.u_count()));
  std::vector<vertex_t> live = view.live_vertices();
  std::vector<vertex_t> batch;
  count_t running = 0;
  count_t wedges = 0;

  while (!live.empty()) {
    count_t lowest = ~count_t{0};
    const auto n = static_cast<std::int64_t>(live.size());
#pragma omp parallel for num_threads(workers) reduction(min : lowest)
    for (std::int64_t i = 0; i < n; ++i) lowest = std::min(lowest, supports[live[i]]);

    running = std::max(running, lowest);
    batch.clear();
    std::vector<vertex_t> rest;
    for (vertex_t u : live) (supports[u] == lowest ? batch : rest).push_back(u);
    live.swap(rest);

    const auto nb = static_cast<std::int64_t>(batch.size());
    for (vertex_t u : batch) out.tips.theta[u] = running;
#pragma omp parallel for num_threads(workers)
    for (std::int64_t i = 0; i < nb; ++i) view.kill(batch[i]);

#pragma omp parallel num_threads(workers) reduction(+ : wedges)
    {
      auto& s = scratch[static_cast<std::size_t>(omp_get_thread_num())];
      std::vector<vertex_t> touched;
#pragma omp for schedule(dynamic, 4)
      for (std::int64_t i = 0; i < nb; ++i) {
        touched.clear();
        wedges += update(batch[i], running, supports, view, s, touched, true);
      }
    }
    ++out.stats.sync_rounds;
  }
  out.stats.add_wedges("peel", wedges);
  out.tips.theta_max = max_theta(out.tips.theta);
  return out;
}

// ---------------------------------------------------------------------- oracle

TipResult tip_oracle_recount(const BipartiteGraph& g, Side side) {
  const BipartiteGraph og = oriented(g, side);
  TipResult out;
  out.theta.assign(og.u_count(), 0);
  std::vector<vertex_t> live(og.u_count());
  for (vertex_t u = 0; u < og.u_count(); ++u) live[u] = u;

  count_t floor = 0;
  while (!live.empty()) {
    const auto sub = induce_with_map(og, live);
    const auto counts = count_naive(sub.graph);
    std::size_t pick = 0;
    for (std::size_t i = 1; i < sub.parent_u.size(); ++i) {
      const auto a = std::pair{counts.u[i], sub.parent_u[i]};
      const auto b = std::pair{counts.u[pick], sub.parent_u[pick]};
      if (a < b) pick = i;
    }
    floor = std::max(floor, counts.u[pick]);
    const vertex_t u = sub.parent_u[pick];
    out.theta[u] = floor;
    live.erase(std::find(live.begin(), live.end(), u));
  }
  out.theta_max = max_theta(out.theta);
  return out;
}

}  // namespace receipt
