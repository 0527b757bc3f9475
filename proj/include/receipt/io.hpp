#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "receipt/bigraph.hpp"
#include "receipt/cd.hpp"
#include "receipt/peel.hpp"

namespace receipt {

// Whitespace-separated "u v" pairs, one per line. Lines starting with '%' or
// '#' are comments; blank lines are skipped.
struct EdgeListDocument {
  std::vector<EdgePair> edges;
  std::size_t comment_lines = 0;
  std::size_t blank_lines = 0;
  std::size_t line_count = 0;
};

// Throws ParseError with the 1-based line number.
EdgeListDocument parse_edge_list(std::istream& in);
EdgeListDocument read_edge_list_file(const std::string& path);

void write_edge_list(const BipartiteGraph& g, std::ostream& out);

// "id\ttip\n" per vertex, ascending by original id. Throws IoError.
void write_tips(const TipResult& result, std::span<const ext_id_t> ids, std::ostream& out);
std::map<ext_id_t, count_t> read_tips(std::istream& in);

struct PartitionSummary {
  std::size_t count = 0;
  std::vector<count_t> wedge_estimates;
  friend bool operator==(const PartitionSummary&, const PartitionSummary&) = default;
};
PartitionSummary summarize(const RangePartition& part);

// JSON object with stable key order: wedges_traversed, sync_rounds,
// recount_invocations, phase_times_ms, phase_wedges, subsets.
void write_stats(const PeelStats& stats, const PartitionSummary& subsets, std::ostream& out);

struct StatsDocument {
  PeelStats stats;
  PartitionSummary subsets;
};
StatsDocument read_stats(std::istream& in);

}  // namespace receipt
