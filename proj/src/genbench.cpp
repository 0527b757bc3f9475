#include "receipt/genbench.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace receipt::gen {

namespace {

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

struct EdgeBuilder {
  std::vector<EdgePair> operator()(const RandomBipartite& s) const {
    if (s.u == 0 || s.v == 0) throw GenError("random_bipartite needs positive side sizes");
    if (!(s.p >= 0.0 && s.p <= 1.0)) throw GenError("random_bipartite needs p in [0, 1]");
    std::mt19937_64 rng(s.seed);
    std::vector<EdgePair> edges;
    for (vertex_t i = 0; i < s.u; ++i)
      for (vertex_t j = 0; j < s.v; ++j)
        if (unit(rng) < s.p) edges.emplace_back(i, j);
    return edges;
  }

  std::vector<EdgePair> operator()(const Complete& s) const {
    if (s.u == 0 || s.v == 0) throw GenError("complete needs positive side sizes");
    std::vector<EdgePair> edges;
    for (vertex_t i = 0; i < s.u; ++i)
      for (vertex_t j = 0; j < s.v; ++j) edges.emplace_back(i, j);
    return edges;
  }

  std::vector<EdgePair> operator()(const BlockChain& s) const {
    if (s.blocks.empty()) throw GenError("block_chain needs at least one block");
    std::vector<EdgePair> edges;
    ext_id_t u0 = 0, v0 = 0;
    for (auto [a, b] : s.blocks) {
      if (a == 0 || b == 0) throw GenError("block_chain blocks need positive sizes");
      for (ext_id_t i = 0; i < a; ++i)
        for (ext_id_t j = 0; j < b; ++j) edges.emplace_back(u0 + i, v0 + j);
      u0 += a;
      v0 += b - 1;  // last V vertex is shared with the next block
    }
    return edges;
  }

  std::vector<EdgePair> operator()(const StarHeavy& s) const {
    if (s.hub_degree < 2 || s.leaf_count < 2) throw GenError("star_heavy needs hub_degree >= 2 and leaf_count >= 2");
    std::vector<EdgePair> edges;
    for (vertex_t j = 0; j < s.leaf_count; ++j) {
      const vertex_t hubs = 2 + (j % (s.hub_degree - 1));
      for (vertex_t h = 0; h < hubs; ++h) edges.emplace_back(j, h);
    }
    return edges;
  }
};

struct Describer {
  std::string operator()(const RandomBipartite& s) const {
    std::ostringstream os;
    os << "random_bipartite(" << s.u << "," << s.v << "," << s.p << "," << s.seed << ")";
    return os.str();
  }
  std::string operator()(const Complete& s) const {
    return "complete(" + std::to_string(s.u) + "," + std::to_string(s.v) + ")";
  }
  std::string operator()(const BlockChain& s) const {
    return "block_chain(" + std::to_string(s.blocks.size()) + " blocks)";
  }
  std::string operator()(const StarHeavy& s) const {
    return "star_heavy(" + std::to_string(s.hub_degree) + "," + std::to_string(s.leaf_count) + ")";
  }
};

}  // namespace

std::vector<EdgePair> generate_edges(const GenSpec& spec) { return std::visit(EdgeBuilder{}, spec); }

BipartiteGraph generate(const GenSpec& spec) {
  const auto edges = generate_edges(spec);
  return graph_from_edges(edges);
}

std::string describe(const GenSpec& spec) { return std::visit(Describer{}, spec); }

BlockChain block_chain_instance(std::uint64_t seed, std::size_t distinct) {
  // Tip number of a K_{a,b} block is (a - 1) * C(b, 2).
  std::vector<std::pair<vertex_t, vertex_t>> pool;
  std::set<count_t> used;
  for (vertex_t b = 2; pool.size() < distinct * 2; ++b)
    for (vertex_t a : {2u, 3u})
      if (used.insert((a - 1) * choose2(b)).second) pool.emplace_back(a, b);

  std::mt19937_64 rng(seed);
  for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng() % i]);
  pool.resize(distinct);
  return BlockChain{pool};
}

std::vector<GenSpec> property_corpus() {
  std::vector<GenSpec> corpus;
  const std::pair<vertex_t, vertex_t> sizes[] = {{8, 8}, {12, 20}, {20, 12}, {30, 30},
                                                 {25, 40}, {40, 25}, {50, 50}, {60, 60}};
  const double ps[] = {0.05, 0.1, 0.2, 0.3, 0.5};
  std::uint64_t seed = 1;
  for (auto [nu, nv] : sizes)
    for (double p : ps)
      for (int k = 0; k < 5; ++k) corpus.push_back(RandomBipartite{nu, nv, p, seed++});
  for (auto [a, b] : std::vector<std::pair<vertex_t, vertex_t>>{{2, 2}, {3, 3}, {4, 6}, {7, 5}, {10, 10}})
    corpus.push_back(Complete{a, b});
  corpus.push_back(BlockChain{{{2, 3}, {2, 4}, {2, 5}}});
  for (std::uint64_t s = 0; s < 4; ++s) corpus.push_back(block_chain_instance(s, 12));
  corpus.push_back(StarHeavy{4, 30});
  corpus.push_back(StarHeavy{8, 50});
  return corpus;
}

}  // namespace receipt::gen
