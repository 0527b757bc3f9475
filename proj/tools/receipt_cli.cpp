#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "receipt/cli.hpp"
#include "receipt/genbench.hpp"
#include "receipt/io.hpp"

namespace {

using receipt::cli::Algorithm;
using receipt::cli::SideChoice;

int generate_main(const std::string& family, const std::vector<double>& params, const std::string& blocks,
                  std::uint64_t seed, const std::string& output) {
  namespace gen = receipt::gen;
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw receipt::GenError(family + " takes " + std::to_string(n) + " parameters");
  };
  auto as_vertex = [](double x) { return static_cast<receipt::vertex_t>(x); };

  gen::GenSpec spec;
  if (family == "random_bipartite") {
    need(3);
    spec = gen::RandomBipartite{as_vertex(params[0]), as_vertex(params[1]), params[2], seed};
  } else if (family == "complete") {
    need(2);
    spec = gen::Complete{as_vertex(params[0]), as_vertex(params[1])};
  } else if (family == "star_heavy") {
    need(2);
    spec = gen::StarHeavy{as_vertex(params[0]), as_vertex(params[1])};
  } else if (family == "block_chain") {
    gen::BlockChain chain;
    std::istringstream in(blocks);
    std::string item;
    while (std::getline(in, item, ',')) {
      const auto x = item.find('x');
      if (x == std::string::npos) throw receipt::GenError("blocks are written AxB, comma separated");
      chain.blocks.emplace_back(std::stoul(item.substr(0, x)), std::stoul(item.substr(x + 1)));
    }
    spec = chain;
  } else {
    throw receipt::GenError("unknown family " + family);
  }

  const auto g = gen::generate(spec);
  if (output.empty()) {
    receipt::write_edge_list(g, std::cout);
    return 0;
  }
  std::ofstream f(output);
  if (!f) throw receipt::IoError("cannot open " + output + " for writing");
  receipt::write_edge_list(g, f);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tip decomposition of bipartite graphs"};
  app.require_subcommand(1);

  receipt::cli::RunConfig config;
  config.workers = receipt::cli::default_workers();
  long long partitions = static_cast<long long>(config.partitions);
  bool no_huc = false, no_dgm = false;

  auto* run = app.add_subcommand("run", "Compute tip numbers of one side of a graph");
  run->add_option("-i,--input", config.input, "Edge list file")->required();
  run->add_option("--side", config.side, "Side to decompose: u, v or auto")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, SideChoice>{{"u", SideChoice::U}, {"v", SideChoice::V}, {"auto", SideChoice::Auto}},
          CLI::ignore_case));
  run->add_option("-a,--algorithm", config.algorithm, "receipt, bup, parb or oracle")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Algorithm>{{"receipt", Algorithm::Receipt},
                                                                            {"bup", Algorithm::Bup},
                                                                            {"parb", Algorithm::Parb},
                                                                            {"oracle", Algorithm::Oracle}},
                                          CLI::ignore_case));
  run->add_option("-p,--partitions", partitions, "Number of coarse subsets");
  run->add_option("-t,--threads", config.workers, "Worker threads (default: RECEIPT_THREADS or all cores)");
  run->add_flag("--no-huc", no_huc, "Disable hybrid update computation");
  run->add_flag("--no-dgm", no_dgm, "Disable adjacency compaction");
  run->add_option("--dgm-threshold", config.dgm_threshold, "Wedges between compactions (default: edge count)");
  run->add_option("-o,--output", config.output, "Tip output file (default: stdout)");
  run->add_option("--stats", config.stats, "Write run statistics as JSON");
  run->add_flag("--verify", config.verify, "Check the result against bottom-up peeling");
  run->add_option("--verify-budget", config.verify_wedge_budget, "Warn when verification exceeds this many wedges");

  std::string family, blocks, gen_output;
  std::vector<double> params;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("generate", "Write a synthetic graph as an edge list");
  gen->add_option("family", family, "random_bipartite, complete, block_chain or star_heavy")->required();
  gen->add_option("params", params, "random_bipartite: U V P; complete: U V; star_heavy: HUBS LEAVES");
  gen->add_option("--blocks", blocks, "block_chain blocks, e.g. 2x3,2x4");
  gen->add_option("--seed", seed, "PRNG seed");
  gen->add_option("-o,--output", gen_output, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : receipt::cli::kExitUsage;
  }

  if (*gen) {
    try {
      return generate_main(family, params, blocks, seed, gen_output);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return receipt::cli::kExitUsage;
    }
  }

  if (partitions < 1) {
    std::cerr << "error: --partitions must be >= 1\n";
    return receipt::cli::kExitUsage;
  }
  config.partitions = static_cast<std::size_t>(partitions);
  config.huc = !no_huc;
  config.dgm = !no_dgm;
  return receipt::cli::run(config, std::cout, std::cerr);
}
