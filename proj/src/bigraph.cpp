#include "receipt/bigraph.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace receipt {

namespace {

struct RankKey {
  vertex_t degree;
  ext_id_t id;
  int side;  // 0 = U, 1 = V
  vertex_t pos;
};

}  // namespace

BipartiteGraph BipartiteGraph::assemble(std::span<const ext_id_t> u_ids,
                                        std::span<const ext_id_t> v_ids,
                                        std::vector<LabelEdge> edges,
                                        std::vector<vertex_t>* u_order,
                                        std::vector<vertex_t>* v_order) {
  const auto nu = static_cast<vertex_t>(u_ids.size());
  const auto nv = static_cast<vertex_t>(v_ids.size());

  std::vector<vertex_t> du(nu, 0), dv(nv, 0);
  for (auto [u, v] : edges) {
    ++du[u];
    ++dv[v];
  }

  std::vector<RankKey> keys;
  keys.reserve(static_cast<std::size_t>(nu) + nv);
  for (vertex_t i = 0; i < nu; ++i) keys.push_back({du[i], u_ids[i], 0, i});
  for (vertex_t i = 0; i < nv; ++i) keys.push_back({dv[i], v_ids[i], 1, i});
  std::sort(keys.begin(), keys.end(), [](const RankKey& a, const RankKey& b) {
    if (a.degree != b.degree) return a.degree > b.degree;
    if (a.id != b.id) return a.id < b.id;
    return a.side < b.side;
  });

  BipartiteGraph g;
  std::vector<vertex_t> u_new(nu), v_new(nv);
  g.u_.ids.resize(nu);
  g.v_.ids.resize(nv);
  g.u_.rank.resize(nu);
  g.v_.rank.resize(nv);
  vertex_t next_u = 0, next_v = 0;
  for (vertex_t r = 0; r < keys.size(); ++r) {
    const auto& k = keys[r];
    if (k.side == 0) {
      u_new[k.pos] = next_u;
      g.u_.ids[next_u] = k.id;
      g.u_.rank[next_u] = r;
      ++next_u;
    } else {
      v_new[k.pos] = next_v;
      g.v_.ids[next_v] = k.id;
      g.v_.rank[next_v] = r;
      ++next_v;
    }
  }
  if (u_order) {
    u_order->assign(nu, 0);
    for (vertex_t i = 0; i < nu; ++i) (*u_order)[u_new[i]] = i;
  }
  if (v_order) {
    v_order->assign(nv, 0);
    for (vertex_t i = 0; i < nv; ++i) (*v_order)[v_new[i]] = i;
  }

  for (auto& [u, v] : edges) {
    u = u_new[u];
    v = v_new[v];
  }

  auto fill = [](SideData& s, vertex_t n, const std::vector<LabelEdge>& es, bool from_u) {
    s.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& e : es) ++s.offsets[(from_u ? e.first : e.second) + 1];
    std::partial_sum(s.offsets.begin(), s.offsets.end(), s.offsets.begin());
    s.neighbors.resize(es.size());
    std::vector<edge_t> cursor(s.offsets.begin(), s.offsets.end() - 1);
    for (const auto& e : es) {
      const vertex_t src = from_u ? e.first : e.second;
      s.neighbors[cursor[src]++] = from_u ? e.second : e.first;
    }
    for (vertex_t x = 0; x < n; ++x)
      std::sort(s.neighbors.begin() + static_cast<std::ptrdiff_t>(s.offsets[x]),
                s.neighbors.begin() + static_cast<std::ptrdiff_t>(s.offsets[x + 1]));
    s.by_id.resize(n);
    for (vertex_t x = 0; x < n; ++x) s.by_id[x] = {s.ids[x], x};
    std::sort(s.by_id.begin(), s.by_id.end());
  };
  fill(g.u_, nu, edges, true);
  fill(g.v_, nv, edges, false);
  return g;
}

std::optional<vertex_t> BipartiteGraph::label_of(Side side, ext_id_t id) const {
  const auto& m = side_(side).by_id;
  auto it = std::lower_bound(m.begin(), m.end(), std::pair<ext_id_t, vertex_t>{id, 0});
  if (it == m.end() || it->first != id) return std::nullopt;
  return it->second;
}

BipartiteGraph BipartiteGraph::transposed() const {
  std::vector<LabelEdge> es;
  es.reserve(edge_count());
  for (auto [u, v] : edges()) es.emplace_back(v, u);
  return assemble(v_.ids, u_.ids, std::move(es));
}

std::vector<LabelEdge> BipartiteGraph::edges() const {
  std::vector<LabelEdge> es;
  es.reserve(edge_count());
  for (vertex_t u = 0; u < u_count(); ++u)
    for (vertex_t v : u_neighbors(u)) es.emplace_back(u, v);
  return es;
}

BipartiteGraph graph_from_edges(std::span<const EdgePair> edges) {
  std::vector<ext_id_t> u_ids, v_ids;
  u_ids.reserve(edges.size());
  v_ids.reserve(edges.size());
  for (auto [a, b] : edges) {
    u_ids.push_back(a);
    v_ids.push_back(b);
  }
  auto uniq = [](std::vector<ext_id_t>& ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  };
  uniq(u_ids);
  uniq(v_ids);
  auto pos = [](const std::vector<ext_id_t>& ids, ext_id_t id) {
    return static_cast<vertex_t>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<LabelEdge> es;
  es.reserve(edges.size());
  for (auto [a, b] : edges) es.emplace_back(pos(u_ids, a), pos(v_ids, b));
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return BipartiteGraph::assemble(u_ids, v_ids, std::move(es));
}

BipartiteGraph build_graph(std::span<const EdgePair> edges) {
  if (edges.empty()) throw EmptyGraph();
  return graph_from_edges(edges);
}

BipartiteGraph oriented(const BipartiteGraph& g, Side side) {
  return side == Side::U ? g : g.transposed();
}

WedgeCounts wedge_counts(const BipartiteGraph& g, Side side) {
  const Side other = side == Side::U ? Side::V : Side::U;
  WedgeCounts w(g.count(side), 0);
  for (vertex_t x = 0; x < g.count(side); ++x)
    for (vertex_t y : g.neighbors(side, x)) w[x] += g.degree(other, y);
  return w;
}

InducedSubgraph induce_with_map(const BipartiteGraph& g, std::span<const vertex_t> u_subset) {
  std::vector<vertex_t> v_local(g.v_count(), ~vertex_t{0});
  std::vector<vertex_t> v_parent;
  std::vector<LabelEdge> es;
  for (vertex_t i = 0; i < u_subset.size(); ++i) {
    for (vertex_t v : g.u_neighbors(u_subset[i])) {
      if (v_local[v] == ~vertex_t{0}) {
        v_local[v] = static_cast<vertex_t>(v_parent.size());
        v_parent.push_back(v);
      }
      es.emplace_back(i, v_local[v]);
    }
  }
  std::vector<ext_id_t> u_ids(u_subset.size()), v_ids(v_parent.size());
  for (std::size_t i = 0; i < u_subset.size(); ++i) u_ids[i] = g.original_id(Side::U, u_subset[i]);
  for (std::size_t i = 0; i < v_parent.size(); ++i) v_ids[i] = g.original_id(Side::V, v_parent[i]);

  InducedSubgraph out;
  std::vector<vertex_t> u_order, v_order;
  out.graph = BipartiteGraph::assemble(u_ids, v_ids, std::move(es), &u_order, &v_order);
  out.parent_u.resize(u_order.size());
  out.parent_v.resize(v_order.size());
  for (std::size_t i = 0; i < u_order.size(); ++i) out.parent_u[i] = u_subset[u_order[i]];
  for (std::size_t i = 0; i < v_order.size(); ++i) out.parent_v[i] = v_parent[v_order[i]];
  return out;
}

BipartiteGraph induce_subgraph(const BipartiteGraph& g, std::span<const vertex_t> u_subset) {
  return induce_with_map(g, u_subset).graph;
}

// ---------------------------------------------------------------- PeelableView

PeelableView::PeelableView(const BipartiteGraph& g)
    : base_(&g),
      alive_(g.u_count(), 1),
      u_len_(g.u_count()),
      v_offsets_(g.v_count()),
      v_end_(g.v_count()),
      v_live_degree_(g.v_count()),
      live_count_(g.u_count()) {
  for (vertex_t u = 0; u < g.u_count(); ++u) u_len_[u] = g.degree(Side::U, u);
  v_adj_.reserve(g.edge_count());
  for (vertex_t v = 0; v < g.v_count(); ++v) {
    auto nb = g.v_neighbors(v);
    v_offsets_[v] = v_adj_.size();
    v_adj_.insert(v_adj_.end(), nb.begin(), nb.end());
    v_end_[v] = v_adj_.size();
    v_live_degree_[v] = static_cast<vertex_t>(nb.size());
  }
}

void PeelableView::kill(vertex_t u) {
  if (!alive_[u]) return;
  alive_[u] = 0;
  for (vertex_t v : base_->u_neighbors(u))
    std::atomic_ref<vertex_t>(v_live_degree_[v]).fetch_sub(1, std::memory_order_relaxed);
  std::atomic_ref<vertex_t>(live_count_).fetch_sub(1, std::memory_order_relaxed);
}

std::vector<vertex_t> PeelableView::live_vertices() const {
  std::vector<vertex_t> out;
  out.reserve(live_count_);
  for (vertex_t u = 0; u < u_count(); ++u)
    if (alive_[u]) out.push_back(u);
  return out;
}

edge_t PeelableView::live_edge_count() const {
  edge_t m = 0;
  for (vertex_t v = 0; v < v_count(); ++v) m += v_live_degree_[v];
  return m;
}

void PeelableView::record_wedges(count_t n) {
  std::atomic_ref<count_t>(wedges_since_).fetch_add(n, std::memory_order_relaxed);
}

void PeelableView::compact(int workers) {
  const auto nv = static_cast<std::int64_t>(v_count());
#pragma omp parallel for schedule(dynamic, 64) num_threads(workers)
  for (std::int64_t i = 0; i < nv; ++i) {
    const auto v = static_cast<vertex_t>(i);
    auto first = v_adj_.begin() + static_cast<std::ptrdiff_t>(v_offsets_[v]);
    auto last = v_adj_.begin() + static_cast<std::ptrdiff_t>(v_end_[v]);
    auto kept = std::stable_partition(first, last, [&](vertex_t u) { return alive_[u] != 0; });
    v_end_[v] = static_cast<edge_t>(kept - v_adj_.begin());
  }
  for (vertex_t u = 0; u < u_count(); ++u)
    if (!alive_[u]) u_len_[u] = 0;
  wedges_since_ = 0;
}

bool PeelableView::maybe_compact(count_t threshold, int workers) {
  if (wedges_since_ < threshold) return false;
  compact(workers);
  return true;
}

std::vector<LabelEdge> PeelableView::live_edges() const {
  std::vector<LabelEdge> out;
  for (vertex_t v = 0; v < v_count(); ++v)
    for (vertex_t u : v_neighbors(v))
      if (alive_[u]) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace receipt
