#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "receipt/types.hpp"

namespace receipt {

using EdgePair = std::pair<ext_id_t, ext_id_t>;  // (u id, v id) in input namespaces
using LabelEdge = std::pair<vertex_t, vertex_t>;  // (u label, v label)

// Immutable two-sided CSR. Labels on each side are dense and assigned in
// non-increasing degree order over U and V jointly (ties: smaller original
// id, then U before V); every neighbor list is strictly ascending.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  // u_ids/v_ids list the vertices of each side in any order; edges refer to
  // positions in those arrays and must be unique. If given, *u_order and
  // *v_order receive, per new label, the input position it came from.
  static BipartiteGraph assemble(std::span<const ext_id_t> u_ids,
                                 std::span<const ext_id_t> v_ids,
                                 std::vector<LabelEdge> edges,
                                 std::vector<vertex_t>* u_order = nullptr,
                                 std::vector<vertex_t>* v_order = nullptr);

  vertex_t count(Side side) const { return static_cast<vertex_t>(side_(side).ids.size()); }
  vertex_t u_count() const { return count(Side::U); }
  vertex_t v_count() const { return count(Side::V); }
  edge_t edge_count() const { return u_.neighbors.size(); }

  std::span<const vertex_t> neighbors(Side side, vertex_t x) const {
    const auto& s = side_(side);
    return {s.neighbors.data() + s.offsets[x], s.neighbors.data() + s.offsets[x + 1]};
  }
  std::span<const vertex_t> u_neighbors(vertex_t u) const { return neighbors(Side::U, u); }
  std::span<const vertex_t> v_neighbors(vertex_t v) const { return neighbors(Side::V, v); }

  vertex_t degree(Side side, vertex_t x) const {
    const auto& s = side_(side);
    return static_cast<vertex_t>(s.offsets[x + 1] - s.offsets[x]);
  }

  // Position of x in the joint degree order (0 = highest degree).
  vertex_t rank(Side side, vertex_t x) const { return side_(side).rank[x]; }
  std::span<const vertex_t> ranks(Side side) const { return side_(side).rank; }

  ext_id_t original_id(Side side, vertex_t x) const { return side_(side).ids[x]; }
  std::span<const ext_id_t> original_ids(Side side) const { return side_(side).ids; }

  std::optional<vertex_t> label_of(Side side, ext_id_t id) const;

  // Same graph with the roles of U and V exchanged.
  BipartiteGraph transposed() const;

  std::vector<LabelEdge> edges() const;

 private:
  struct SideData {
    std::vector<edge_t> offsets{0};
    std::vector<vertex_t> neighbors;
    std::vector<ext_id_t> ids;
    std::vector<vertex_t> rank;
    std::vector<std::pair<ext_id_t, vertex_t>> by_id;  // sorted, for label_of
  };

  const SideData& side_(Side side) const { return side == Side::U ? u_ : v_; }

  SideData u_;
  SideData v_;
};

// Deduplicates and relabels. Throws EmptyGraph on an empty list.
BipartiteGraph build_graph(std::span<const EdgePair> edges);

// Same as build_graph but an empty edge list yields the empty graph.
BipartiteGraph graph_from_edges(std::span<const EdgePair> edges);

// Graph oriented so that `side` becomes U.
BipartiteGraph oriented(const BipartiteGraph& g, Side side);

// w[x] = sum of d_v over v in N_x, for every x on `side`.
using WedgeCounts = std::vector<count_t>;
WedgeCounts wedge_counts(const BipartiteGraph& g, Side side);

struct InducedSubgraph {
  BipartiteGraph graph;
  std::vector<vertex_t> parent_u;  // subgraph U label -> g U label
  std::vector<vertex_t> parent_v;  // subgraph V label -> g V label
};

// Keeps every vertex of u_subset (isolated ones included) and the V vertices
// adjacent to at least one of them. Original ids are inherited from g.
InducedSubgraph induce_with_map(const BipartiteGraph& g, std::span<const vertex_t> u_subset);
BipartiteGraph induce_subgraph(const BipartiteGraph& g, std::span<const vertex_t> u_subset);

// Mutable view of a BipartiteGraph restricted to live U vertices. V vertices
// never die. Neighbor lists of V may hold dead entries until compact().
class PeelableView {
 public:
  explicit PeelableView(const BipartiteGraph& g);

  PeelableView(const PeelableView&) = delete;
  PeelableView& operator=(const PeelableView&) = delete;

  const BipartiteGraph& base() const { return *base_; }
  vertex_t u_count() const { return base_->u_count(); }
  vertex_t v_count() const { return base_->v_count(); }

  bool alive(vertex_t u) const { return alive_[u] != 0; }
  vertex_t live_count() const { return live_count_; }
  std::vector<vertex_t> live_vertices() const;

  // Safe to call concurrently for distinct u.
  void kill(vertex_t u);

  std::span<const vertex_t> u_neighbors(vertex_t u) const {
    return {base_->u_neighbors(u).data(), u_len_[u]};
  }
  std::span<const vertex_t> v_neighbors(vertex_t v) const {
    return {v_adj_.data() + v_offsets_[v], v_adj_.data() + v_end_[v]};
  }

  vertex_t live_degree_u(vertex_t u) const { return alive(u) ? base_->degree(Side::U, u) : 0; }
  vertex_t live_degree_v(vertex_t v) const { return v_live_degree_[v]; }
  edge_t live_edge_count() const;

  void record_wedges(count_t n);  // thread-safe
  count_t wedges_since_compaction() const { return wedges_since_; }

  void compact(int workers = 1);
  bool maybe_compact(count_t threshold, int workers = 1);

  std::vector<LabelEdge> live_edges() const;

 private:
  const BipartiteGraph* base_;
  std::vector<std::uint8_t> alive_;
  std::vector<vertex_t> u_len_;
  std::vector<vertex_t> v_adj_;
  std::vector<edge_t> v_offsets_;
  std::vector<edge_t> v_end_;
  std::vector<vertex_t> v_live_degree_;
  vertex_t live_count_ = 0;
  count_t wedges_since_ = 0;
};

}  // namespace receipt
