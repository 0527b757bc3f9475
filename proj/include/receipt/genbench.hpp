#pragma once

#include <string>
#include <variant>
#include <vector>

#include "receipt/bigraph.hpp"

namespace receipt::gen {

// Every family draws from std::mt19937_64 seeded with the given seed; a
// Bernoulli(p) trial takes one 64-bit draw x and succeeds iff
// (x >> 11) * 2^-53 < p. Both are fully specified, so edge sets are identical
// across platforms.

struct RandomBipartite {
  vertex_t u = 0;
  vertex_t v = 0;
  double p = 0;
  std::uint64_t seed = 0;
};

struct Complete {
  vertex_t u = 0;
  vertex_t v = 0;
};

// Complete blocks K_{a,b}; consecutive blocks share exactly one V vertex, so
// no butterfly crosses a block boundary.
struct BlockChain {
  std::vector<std::pair<vertex_t, vertex_t>> blocks;
};

// leaf_count U leaves over hub_degree V hubs. Leaf j is adjacent to the first
// 2 + (j mod (hub_degree - 1)) hubs, so every leaf has 2..hub_degree hubs and
// the hubs carry almost all of the wedge mass.
struct StarHeavy {
  vertex_t hub_degree = 0;
  vertex_t leaf_count = 0;
};

using GenSpec = std::variant<RandomBipartite, Complete, BlockChain, StarHeavy>;

// Throws GenError on invalid parameters.
std::vector<EdgePair> generate_edges(const GenSpec& spec);
BipartiteGraph generate(const GenSpec& spec);

std::string describe(const GenSpec& spec);

// Block chain whose blocks have `distinct` pairwise different tip numbers,
// shapes and order drawn from `seed`.
BlockChain block_chain_instance(std::uint64_t seed, std::size_t distinct);

// Small graphs (at most 60 + 60 vertices) used by property tests: random
// graphs over several sizes, p in {0.05, 0.1, 0.2, 0.3, 0.5} and 5 seeds,
// plus complete, block-chain and star-heavy members.
std::vector<GenSpec> property_corpus();

}  // namespace receipt::gen
