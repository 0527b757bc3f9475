#include <set>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "receipt/genbench.hpp"
#include "receipt/io.hpp"
#include "receipt/peel.hpp"

using namespace receipt;

TEST_CASE("complete(2,2) is K22") {
  const auto g = gen::generate(gen::Complete{2, 2});
  CHECK(g.u_count() == 2);
  CHECK(g.v_count() == 2);
  CHECK(g.edge_count() == 4);
}

TEST_CASE("p = 0 gives the empty graph, p = 1 the complete one") {
  CHECK(gen::generate(gen::RandomBipartite{10, 10, 0.0, 3}).edge_count() == 0);
  CHECK(gen::generate(gen::RandomBipartite{10, 10, 1.0, 3}).edge_count() == 100);
}

TEST_CASE("generation is deterministic per seed") {
  const auto a = gen::generate_edges(gen::RandomBipartite{30, 30, 0.2, 7});
  const auto b = gen::generate_edges(gen::RandomBipartite{30, 30, 0.2, 7});
  const auto c = gen::generate_edges(gen::RandomBipartite{30, 30, 0.2, 8});
  CHECK(a == b);
  CHECK(a != c);
  CHECK(gen::block_chain_instance(4, 20).blocks == gen::block_chain_instance(4, 20).blocks);
}

TEST_CASE("edge sets are pinned to the documented generator") {
  // Replays mt19937_64 with the documented Bernoulli rule.
  std::mt19937_64 rng(42);
  std::vector<EdgePair> expected;
  for (ext_id_t i = 0; i < 6; ++i)
    for (ext_id_t j = 0; j < 5; ++j)
      if (static_cast<double>(rng() >> 11) / 9007199254740992.0 < 0.4) expected.emplace_back(i, j);
  CHECK(gen::generate_edges(gen::RandomBipartite{6, 5, 0.4, 42}) == expected);
  // The standard guarantees the 10000th output of a default-seeded engine.
  std::mt19937_64 fresh;
  fresh.discard(9999);
  CHECK(fresh() == 9981545732273789042ull);
}

TEST_CASE("block chain of K23, K24, K25 has three tip values") {
  const auto g = gen::generate(gen::BlockChain{{{2, 3}, {2, 4}, {2, 5}}});
  CHECK(g.u_count() == 6);
  CHECK(g.v_count() == 3 + 4 + 5 - 2);
  const auto r = tip_decompose_bup(g, Side::U);
  std::set<count_t> values(r.tips.theta.begin(), r.tips.theta.end());
  CHECK(values == std::set<count_t>{3, 6, 10});
}

TEST_CASE("engineered block chains have the requested number of distinct tips") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto chain = gen::block_chain_instance(seed, 50);
    CHECK(chain.blocks.size() == 50);
    const auto r = tip_decompose_bup(gen::generate(chain), Side::U);
    std::set<count_t> values(r.tips.theta.begin(), r.tips.theta.end());
    CHECK(values.size() == 50);
  }
}

TEST_CASE("star-heavy degrees") {
  const auto g = gen::generate(gen::StarHeavy{4, 30});
  CHECK(g.u_count() == 30);
  CHECK(g.v_count() == 4);
  for (vertex_t u = 0; u < g.u_count(); ++u) {
    CHECK(g.degree(Side::U, u) >= 2);
    CHECK(g.degree(Side::U, u) <= 4);
  }
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(gen::generate(gen::RandomBipartite{0, 5, 0.5, 1}), GenError);
  CHECK_THROWS_AS(gen::generate(gen::RandomBipartite{5, 5, 1.5, 1}), GenError);
  CHECK_THROWS_AS(gen::generate(gen::RandomBipartite{5, 5, -0.1, 1}), GenError);
  CHECK_THROWS_AS(gen::generate(gen::Complete{0, 3}), GenError);
  CHECK_THROWS_AS(gen::generate(gen::BlockChain{}), GenError);
  CHECK_THROWS_AS(gen::generate(gen::BlockChain{{{2, 0}}}), GenError);
  CHECK_THROWS_AS(gen::generate(gen::StarHeavy{1, 10}), GenError);
}

TEST_CASE("property corpus shape") {
  const auto corpus = gen::property_corpus();
  CHECK(corpus.size() >= 200);
  std::size_t random = 0, complete = 0, chain = 0, star = 0;
  for (const auto& s : corpus) {
    if (const auto* r = std::get_if<gen::RandomBipartite>(&s)) {
      ++random;
      CHECK(r->u <= 60);
      CHECK(r->v <= 60);
    }
    complete += std::holds_alternative<gen::Complete>(s);
    chain += std::holds_alternative<gen::BlockChain>(s);
    star += std::holds_alternative<gen::StarHeavy>(s);
  }
  CHECK(random >= 200);
  CHECK(complete > 0);
  CHECK(chain > 0);
  CHECK(star > 0);
}

TEST_CASE("generated graphs serialize as edge lists") {
  const auto g = gen::generate(gen::RandomBipartite{15, 15, 0.3, 2});
  std::ostringstream out;
  write_edge_list(g, out);
  std::istringstream in(out.str());
  CHECK(oracle::edge_set(build_graph(parse_edge_list(in).edges)) == oracle::edge_set(g));
}
