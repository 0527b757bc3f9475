#pragma once

#include <random>
#include <set>
#include <vector>

#include "receipt/bigraph.hpp"
#include "receipt/genbench.hpp"

namespace testing {

inline receipt::BipartiteGraph from(std::initializer_list<receipt::EdgePair> edges) {
  std::vector<receipt::EdgePair> e(edges);
  return receipt::build_graph(e);
}

inline receipt::BipartiteGraph complete(receipt::vertex_t a, receipt::vertex_t b) {
  return receipt::gen::generate(receipt::gen::Complete{a, b});
}

inline receipt::BipartiteGraph random(receipt::vertex_t nu, receipt::vertex_t nv, double p, std::uint64_t seed) {
  return receipt::gen::generate(receipt::gen::RandomBipartite{nu, nv, p, seed});
}

// Label of the vertex with the given original id.
inline receipt::vertex_t label(const receipt::BipartiteGraph& g, receipt::Side side, receipt::ext_id_t id) {
  return *g.label_of(side, id);
}

// A random subset of U labels, each kept with probability 1/2.
inline std::vector<receipt::vertex_t> random_subset(const receipt::BipartiteGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<receipt::vertex_t> s;
  for (receipt::vertex_t u = 0; u < g.u_count(); ++u)
    if (rng() & 1) s.push_back(u);
  return s;
}

}  // namespace testing
