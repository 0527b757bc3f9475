#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "receipt/bigraph.hpp"
#include "receipt/butterfly.hpp"

using namespace receipt;

TEST_CASE("build_graph on K22") {
  const auto g = testing::from({{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(g.u_count() == 2);
  CHECK(g.v_count() == 2);
  CHECK(g.edge_count() == 4);
}

TEST_CASE("duplicate edges collapse") {
  const auto g = testing::from({{5, 9}, {5, 9}});
  CHECK(g.edge_count() == 1);
  CHECK(g.original_id(Side::U, 0) == 5);
  CHECK(g.original_id(Side::V, 0) == 9);
}

TEST_CASE("empty edge list is rejected") {
  std::vector<EdgePair> none;
  CHECK_THROWS_AS(build_graph(none), EmptyGraph);
  CHECK(graph_from_edges(none).edge_count() == 0);
}

TEST_CASE("edge count matches a set-based dedup") {
  std::mt19937_64 rng(7);
  std::vector<EdgePair> edges;
  for (int i = 0; i < 500; ++i) edges.emplace_back(rng() % 40, rng() % 40);
  const std::set<EdgePair> unique(edges.begin(), edges.end());
  const auto g = build_graph(edges);
  CHECK(g.edge_count() == unique.size());
  CHECK(oracle::edge_set(g) == std::set<std::pair<oracle::Id, oracle::Id>>(unique.begin(), unique.end()));
}

TEST_CASE("CSR structure: symmetry, ascending lists, degree order") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = testing::random(25, 35, 0.2, seed);
    std::set<LabelEdge> from_u, from_v;
    for (vertex_t u = 0; u < g.u_count(); ++u) {
      const auto n = g.u_neighbors(u);
      CHECK(std::adjacent_find(n.begin(), n.end(), std::greater_equal<>()) == n.end());
      for (vertex_t v : n) from_u.emplace(u, v);
    }
    for (vertex_t v = 0; v < g.v_count(); ++v) {
      const auto n = g.v_neighbors(v);
      CHECK(std::adjacent_find(n.begin(), n.end(), std::greater_equal<>()) == n.end());
      for (vertex_t u : n) from_v.emplace(u, v);
    }
    CHECK(from_u == from_v);
    CHECK(from_u.size() == g.edge_count());

    // Joint order: ranks are a permutation of 0..|U|+|V|-1 and degrees do
    // not increase along it; equal degrees are ordered by original id.
    struct Entry {
      vertex_t rank, degree;
      ext_id_t id;
    };
    std::vector<Entry> all;
    for (auto side : {Side::U, Side::V})
      for (vertex_t x = 0; x < g.count(side); ++x)
        all.push_back({g.rank(side, x), g.degree(side, x), g.original_id(side, x)});
    std::sort(all.begin(), all.end(), [](auto& a, auto& b) { return a.rank < b.rank; });
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(all[i].rank == i);
      if (i > 0) {
        CHECK(all[i - 1].degree >= all[i].degree);
        if (all[i - 1].degree == all[i].degree) CHECK(all[i - 1].id <= all[i].id);
      }
    }
    // Labels within a side follow the joint order.
    for (auto side : {Side::U, Side::V})
      for (vertex_t x = 1; x < g.count(side); ++x) CHECK(g.rank(side, x - 1) < g.rank(side, x));
  }
}

TEST_CASE("original ids round-trip through labels") {
  const auto g = testing::random(30, 30, 0.15, 3);
  for (auto side : {Side::U, Side::V})
    for (vertex_t x = 0; x < g.count(side); ++x) CHECK(*g.label_of(side, g.original_id(side, x)) == x);
  CHECK_FALSE(g.label_of(Side::U, 1'000'000).has_value());
}

TEST_CASE("wedge_counts on complete graphs") {
  const auto k22 = testing::complete(2, 2);
  CHECK(wedge_counts(k22, Side::U) == WedgeCounts{4, 4});
  const auto k33 = testing::complete(3, 3);
  CHECK(wedge_counts(k33, Side::U) == WedgeCounts{9, 9, 9});
}

TEST_CASE("wedge_counts match nested-loop summation") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto g = testing::random(30, 30, 0.2, seed);
    for (auto side : {Side::U, Side::V}) {
      const auto d = oracle::dense(oracle::edge_set(g), side == Side::V);
      CHECK(oracle::by_id(g, side, wedge_counts(g, side)) == oracle::wedge_sums(d));
    }
  }
}

TEST_CASE("oriented swaps sides") {
  const auto g = testing::random(10, 20, 0.3, 4);
  const auto t = oriented(g, Side::V);
  CHECK(t.u_count() == g.v_count());
  CHECK(t.v_count() == g.u_count());
  std::set<std::pair<ext_id_t, ext_id_t>> flipped;
  for (auto [a, b] : oracle::edge_set(t)) flipped.emplace(b, a);
  CHECK(flipped == oracle::edge_set(g));
  CHECK(oracle::edge_set(oriented(g, Side::U)) == oracle::edge_set(g));
}

TEST_CASE("induce_subgraph of K33 on two vertices is K23") {
  const auto g = testing::complete(3, 3);
  const std::vector<vertex_t> sub{0, 1};
  const auto h = induce_subgraph(g, sub);
  CHECK(h.u_count() == 2);
  CHECK(h.v_count() == 3);
  CHECK(h.edge_count() == 6);
  const auto c = count_per_vertex(h);
  CHECK(c.u[0] == 3);
  CHECK(c.u[1] == 3);
}

TEST_CASE("inducing on all of U preserves butterfly counts") {
  const auto g = testing::random(20, 20, 0.3, 11);
  std::vector<vertex_t> all(g.u_count());
  for (vertex_t u = 0; u < g.u_count(); ++u) all[u] = u;
  const auto h = induce_subgraph(g, all);
  CHECK(oracle::edge_set(h) == oracle::edge_set(g));
  CHECK(oracle::by_id(h, Side::U, count_naive(h).u) == oracle::by_id(g, Side::U, count_naive(g).u));
}

TEST_CASE("induced counts plus external counts equal full counts") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto g = testing::random(25, 25, 0.3, seed);
    const auto sub = testing::random_subset(g, seed);
    const auto h = induce_with_map(g, sub);
    const auto full = oracle::butterflies_4tuple(oracle::dense(oracle::edge_set(g))).first;
    const auto inside = oracle::butterflies_4tuple(oracle::dense(oracle::edge_set(h.graph))).first;
    const auto lib_inside = count_naive(h.graph);
    CHECK(h.graph.u_count() == sub.size());
    for (vertex_t x = 0; x < h.graph.u_count(); ++x) {
      CHECK(h.parent_u[x] == sub[x]);
      const ext_id_t id = h.graph.original_id(Side::U, x);
      CHECK(id == g.original_id(Side::U, sub[x]));
      const count_t in = inside.count(id) ? inside.at(id) : 0;
      CHECK(lib_inside.u[x] == in);
      CHECK(in + (full.at(id) - in) == full.at(id));
      CHECK(in <= full.at(id));
    }
  }
}

TEST_CASE("shared butterflies inside a subset are the same in g and in the subgraph") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto g = testing::random(30, 30, 0.35, seed);
    const auto sub = testing::random_subset(g, seed + 100);
    const auto h = induce_with_map(g, sub);
    const auto dg = oracle::dense(oracle::edge_set(g));
    const auto dh = oracle::dense(oracle::edge_set(h.graph));
    auto index = [](const oracle::Dense& d, ext_id_t id) {
      return std::lower_bound(d.u_ids.begin(), d.u_ids.end(), id) - d.u_ids.begin();
    };
    for (std::size_t a = 0; a < sub.size(); ++a)
      for (std::size_t b = a + 1; b < sub.size(); ++b) {
        const ext_id_t ia = g.original_id(Side::U, sub[a]), ib = g.original_id(Side::U, sub[b]);
        if (g.degree(Side::U, sub[a]) == 0 || g.degree(Side::U, sub[b]) == 0) continue;
        CHECK(oracle::common(dg, index(dg, ia), index(dg, ib)) == oracle::common(dh, index(dh, ia), index(dh, ib)));
      }
  }
}

TEST_CASE("induction over disjoint sets is additive") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto g = testing::random(20, 20, 0.3, seed);
    std::vector<vertex_t> a, b;
    std::mt19937_64 rng(seed);
    for (vertex_t u = 0; u < g.u_count(); ++u) (rng() % 2 ? a : b).push_back(u);
    std::vector<vertex_t> both(a);
    both.insert(both.end(), b.begin(), b.end());
    std::sort(both.begin(), both.end());
    auto ea = oracle::edge_set(induce_subgraph(g, a));
    const auto eb = oracle::edge_set(induce_subgraph(g, b));
    ea.insert(eb.begin(), eb.end());
    CHECK(ea == oracle::edge_set(induce_subgraph(g, both)));
  }
}

TEST_CASE("compact on K22 with one dead vertex") {
  const auto g = testing::complete(2, 2);
  PeelableView view(g);
  view.kill(0);
  view.compact();
  CHECK(view.live_degree_v(0) == 1);
  CHECK(view.live_degree_v(1) == 1);
  CHECK(view.v_neighbors(0).size() == 1);
  CHECK(view.v_neighbors(1).size() == 1);
}

TEST_CASE("compact with nothing dead only resets the counter") {
  const auto g = testing::random(15, 15, 0.3, 2);
  PeelableView view(g);
  const auto before = view.live_edges();
  view.record_wedges(42);
  view.compact();
  CHECK(view.wedges_since_compaction() == 0);
  CHECK(view.live_edges() == before);
  for (vertex_t v = 0; v < g.v_count(); ++v) {
    const auto n = view.v_neighbors(v);
    CHECK(std::vector<vertex_t>(n.begin(), n.end()) ==
          std::vector<vertex_t>(g.v_neighbors(v).begin(), g.v_neighbors(v).end()));
  }
}

TEST_CASE("compacted adjacency equals the edge-filter oracle and is idempotent") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = testing::random(30, 25, 0.25, seed);
    PeelableView view(g);
    std::mt19937_64 rng(seed);
    std::set<vertex_t> dead;
    for (vertex_t u = 0; u < g.u_count(); ++u)
      if (rng() % 3 == 0) {
        view.kill(u);
        dead.insert(u);
      }
    std::vector<LabelEdge> expected;
    for (auto [u, v] : g.edges())
      if (!dead.count(u)) expected.emplace_back(u, v);
    std::sort(expected.begin(), expected.end());
    CHECK(view.live_edges() == expected);
    CHECK(view.live_edge_count() == expected.size());
    CHECK(view.live_count() == g.u_count() - dead.size());

    view.compact(2);
    std::vector<LabelEdge> stored;
    for (vertex_t v = 0; v < g.v_count(); ++v) {
      const auto n = view.v_neighbors(v);
      CHECK(n.size() == view.live_degree_v(v));
      CHECK(std::is_sorted(n.begin(), n.end()));
      for (vertex_t u : n) stored.emplace_back(u, v);
    }
    std::sort(stored.begin(), stored.end());
    CHECK(stored == expected);
    for (vertex_t u : dead) CHECK(view.u_neighbors(u).empty());

    std::vector<std::vector<vertex_t>> once;
    for (vertex_t v = 0; v < g.v_count(); ++v) once.emplace_back(view.v_neighbors(v).begin(), view.v_neighbors(v).end());
    view.compact();
    for (vertex_t v = 0; v < g.v_count(); ++v)
      CHECK(std::vector<vertex_t>(view.v_neighbors(v).begin(), view.v_neighbors(v).end()) == once[v]);
  }
}

TEST_CASE("maybe_compact triggers at the threshold") {
  const auto g = testing::complete(3, 3);
  PeelableView view(g);
  view.kill(0);
  view.record_wedges(9);
  CHECK_FALSE(view.maybe_compact(10));
  CHECK(view.wedges_since_compaction() == 9);
  CHECK(view.v_neighbors(0).size() == 3);
  view.record_wedges(1);
  CHECK(view.maybe_compact(10));
  CHECK(view.v_neighbors(0).size() == 2);
  view.record_wedges(30);
  CHECK(view.maybe_compact(10));
  CHECK(view.wedges_since_compaction() == 0);
}
