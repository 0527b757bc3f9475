#include "receipt/butterfly.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <numeric>

namespace receipt {

namespace {

struct CountScratch {
  std::vector<vertex_t> wdg;                       // wedges per end point
  std::vector<vertex_t> nze;                       // end points touched
  std::vector<vertex_t> nzw;                       // end point per wedge, grouped by mid point
  std::vector<std::pair<vertex_t, std::size_t>> mids;  // (mid, end of its group in nzw)
};

inline void atomic_add(std::vector<count_t>& target, vertex_t x, count_t inc, bool& overflow) {
  if (inc == 0) return;
  const count_t old = std::atomic_ref<count_t>(target[x]).fetch_add(inc, std::memory_order_relaxed);
  if (old + inc < old) overflow = true;
}

inline void add_checked(count_t& acc, count_t inc, bool& overflow) {
  if (acc + inc < acc) overflow = true;
  acc += inc;
}

}  // namespace

count_t ButterflyCounts::total() const {
  return std::accumulate(u.begin(), u.end(), count_t{0}) / 2;
}

ButterflyCounts count_per_vertex(const BipartiteGraph& g, int workers) {
  const vertex_t nu = g.u_count();
  const vertex_t nv = g.v_count();
  ButterflyCounts out;
  out.u.assign(nu, 0);
  out.v.assign(nv, 0);

  workers = std::max(workers, 1);
  std::vector<CountScratch> scratch(static_cast<std::size_t>(workers));
  count_t wedges = 0;
  bool overflow = false;
  const auto total = static_cast<std::int64_t>(nu) + nv;

#pragma omp parallel num_threads(workers) reduction(+ : wedges) reduction(|| : overflow)
  {
    auto& s = scratch[static_cast<std::size_t>(omp_get_thread_num())];
    s.wdg.assign(std::max(nu, nv), 0);

#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < total; ++i) {
      const Side sp_side = i < nu ? Side::U : Side::V;
      const Side mp_side = i < nu ? Side::V : Side::U;
      const auto sp = static_cast<vertex_t>(i < nu ? i : i - nu);
      const vertex_t sp_rank = g.rank(sp_side, sp);
      auto& same = sp_side == Side::U ? out.u : out.v;
      auto& opp = sp_side == Side::U ? out.v : out.u;

      for (vertex_t mp : g.neighbors(sp_side, sp)) {
        const vertex_t mp_rank = g.rank(mp_side, mp);
        const std::size_t before = s.nzw.size();
        for (vertex_t ep : g.neighbors(mp_side, mp)) {
          const vertex_t ep_rank = g.rank(sp_side, ep);
          if (ep_rank >= mp_rank || ep_rank >= sp_rank) break;
          if (s.wdg[ep]++ == 0) s.nze.push_back(ep);
          s.nzw.push_back(ep);
        }
        if (s.nzw.size() != before) s.mids.emplace_back(mp, s.nzw.size());
      }
      wedges += s.nzw.size();

      count_t at_sp = 0;
      for (vertex_t ep : s.nze) {
        const count_t bcnt = choose2(s.wdg[ep]);
        atomic_add(same, ep, bcnt, overflow);
        add_checked(at_sp, bcnt, overflow);
      }
      atomic_add(same, sp, at_sp, overflow);
      std::size_t k = 0;
      for (auto [mp, end] : s.mids) {
        count_t at_mp = 0;
        for (; k < end; ++k) add_checked(at_mp, s.wdg[s.nzw[k]] - 1, overflow);
        atomic_add(opp, mp, at_mp, overflow);
      }

      for (vertex_t ep : s.nze) s.wdg[ep] = 0;
      s.nze.clear();
      s.nzw.clear();
      s.mids.clear();
    }
  }
  if (overflow) throw Overflow();
  out.wedges = wedges;
  return out;
}

ButterflyCounts count_naive(const BipartiteGraph& g) {
  const vertex_t nu = g.u_count();
  ButterflyCounts out;
  out.u.assign(nu, 0);
  out.v.assign(g.v_count(), 0);
  std::vector<count_t> common(nu, 0);
  std::vector<vertex_t> seen;

  for (vertex_t u1 = 0; u1 < nu; ++u1) {
    for (vertex_t v : g.u_neighbors(u1)) {
      for (vertex_t u2 : g.v_neighbors(v)) {
        if (u2 == u1) continue;
        ++out.wedges;
        if (u2 < u1) continue;
        if (common[u2]++ == 0) seen.push_back(u2);
      }
    }
    for (vertex_t u2 : seen) {
      const count_t b = choose2(common[u2]);
      out.u[u1] += b;
      out.u[u2] += b;
    }
    // Each common neighbour of (u1, u2) closes c - 1 butterflies.
    for (vertex_t v : g.u_neighbors(u1))
      for (vertex_t u2 : g.v_neighbors(v))
        if (u2 > u1) out.v[v] += common[u2] - 1;
    for (vertex_t u2 : seen) common[u2] = 0;
    seen.clear();
  }
  return out;
}

ButterflyCounts count_live(const PeelableView& view, int workers) {
  const auto live = view.live_vertices();
  const auto sub = induce_with_map(view.base(), live);
  const auto local = count_per_vertex(sub.graph, workers);
  ButterflyCounts out;
  out.u.assign(view.u_count(), 0);
  out.v.assign(view.v_count(), 0);
  for (std::size_t i = 0; i < sub.parent_u.size(); ++i) out.u[sub.parent_u[i]] = local.u[i];
  for (std::size_t i = 0; i < sub.parent_v.size(); ++i) out.v[sub.parent_v[i]] = local.v[i];
  out.wedges = local.wedges;
  return out;
}

count_t shared_butterflies(const PeelableView& view, vertex_t u1, vertex_t u2) {
  if (!view.alive(u1) || !view.alive(u2)) return 0;
  auto a = view.u_neighbors(u1);
  auto b = view.u_neighbors(u2);
  count_t c = 0;
  for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++c;
      ++i;
      ++j;
    }
  }
  return choose2(c);
}

count_t recount_cost(const PeelableView& view) {
  count_t cost = 0;
  for (vertex_t u = 0; u < view.u_count(); ++u) {
    if (!view.alive(u)) continue;
    const vertex_t du = view.live_degree_u(u);
    for (vertex_t v : view.u_neighbors(u)) cost += std::min(du, view.live_degree_v(v));
  }
  return cost;
}

}  // namespace receipt
