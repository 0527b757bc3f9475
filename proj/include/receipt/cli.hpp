#pragma once

#include <iosfwd>
#include <string>

#include "receipt/bigraph.hpp"
#include "receipt/peel.hpp"

namespace receipt::cli {

enum class Algorithm { Receipt, Bup, Parb, Oracle };
enum class SideChoice { U, V, Auto };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;

// Worker count from RECEIPT_THREADS if set, else the available cores.
int default_workers();

struct RunConfig {
  std::string input;
  SideChoice side = SideChoice::U;
  Algorithm algorithm = Algorithm::Receipt;
  std::size_t partitions = 150;
  int workers = 1;
  bool huc = true;
  bool dgm = true;
  count_t dgm_threshold = 0;
  std::string output;  // empty: tips go to `out`
  std::string stats;   // empty: no stats file
  bool verify = false;
  count_t verify_wedge_budget = 1'000'000'000;  // warn above this BUP peel cost
};

// Side whose sum of wedge counts is larger; ties pick U.
Side side_auto(const BipartiteGraph& g);

// Compares against bottom-up peeling; reports the first 10 mismatched vertices
// to `err`. Returns kExitOk or kExitMismatch.
int verify_tips(const BipartiteGraph& g, Side side, const Decomposition& result, std::ostream& err);

// Runs one decomposition end to end. Returns kExitOk, kExitInput (unreadable
// or malformed input), kExitUsage (bad configuration) or kExitMismatch
// (verification against bottom-up peeling failed). Diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace receipt::cli
