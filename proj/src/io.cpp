#include "receipt/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace receipt {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

ext_id_t parse_id(std::string_view token, std::size_t line) {
  ext_id_t value = 0;
  if (token.empty() || token.front() < '0' || token.front() > '9')
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range)
    throw ParseError(line, "id out of range: '" + std::string(token) + "'");
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  return value;
}

// Canonical phase order first, then anything else alphabetically.
template <class Map>
std::vector<std::string> phase_keys(const Map& m) {
  std::vector<std::string> keys;
  for (const char* k : {"count", "cd", "fd", "peel"})
    if (m.count(k)) keys.emplace_back(k);
  for (const auto& [k, _] : m)
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  return keys;
}

}  // namespace

EdgeListDocument parse_edge_list(std::istream& in) {
  EdgeListDocument doc;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t lineno = ++doc.line_count;
    std::string_view rest(line);
    while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);
    if (rest.empty()) {
      ++doc.blank_lines;
      continue;
    }
    if (rest.front() == '%' || rest.front() == '#') {
      ++doc.comment_lines;
      continue;
    }
    std::vector<std::string_view> tokens;
    while (!rest.empty()) {
      std::size_t n = 0;
      while (n < rest.size() && !is_space(rest[n])) ++n;
      tokens.push_back(rest.substr(0, n));
      rest.remove_prefix(n);
      while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);
    }
    if (tokens.size() != 2)
      throw ParseError(lineno, "expected 2 fields, found " + std::to_string(tokens.size()));
    doc.edges.emplace_back(parse_id(tokens[0], lineno), parse_id(tokens[1], lineno));
  }
  return doc;
}

EdgeListDocument read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return parse_edge_list(in);
}

void write_edge_list(const BipartiteGraph& g, std::ostream& out) {
  for (auto [u, v] : g.edges())
    out << g.original_id(Side::U, u) << ' ' << g.original_id(Side::V, v) << '\n';
  if (!out) throw IoError("failed writing edge list");
}

void write_tips(const TipResult& result, std::span<const ext_id_t> ids, std::ostream& out) {
  if (ids.size() != result.theta.size()) throw IoError("id map does not match tip result");
  std::vector<std::pair<ext_id_t, count_t>> rows(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) rows[i] = {ids[i], result.theta[i]};
  std::sort(rows.begin(), rows.end());
  for (auto [id, tip] : rows) out << id << '\t' << tip << '\n';
  out.flush();
  if (!out) throw IoError("failed writing tip numbers");
}

std::map<ext_id_t, count_t> read_tips(std::istream& in) {
  std::map<ext_id_t, count_t> tips;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(lineno, "expected id<TAB>tip");
    tips[parse_id(std::string_view(line).substr(0, tab), lineno)] =
        parse_id(std::string_view(line).substr(tab + 1), lineno);
  }
  return tips;
}

PartitionSummary summarize(const RangePartition& part) {
  return {part.size(), part.subset_wedges};
}

void write_stats(const PeelStats& stats, const PartitionSummary& subsets, std::ostream& out) {
  nlohmann::ordered_json j;
  j["wedges_traversed"] = stats.wedges_traversed;
  j["sync_rounds"] = stats.sync_rounds;
  j["recount_invocations"] = stats.recount_invocations;
  j["phase_times_ms"] = nlohmann::ordered_json::object();
  for (const auto& k : phase_keys(stats.phase_times_ms)) j["phase_times_ms"][k] = stats.phase_times_ms.at(k);
  j["phase_wedges"] = nlohmann::ordered_json::object();
  for (const auto& k : phase_keys(stats.phase_wedges)) j["phase_wedges"][k] = stats.phase_wedges.at(k);
  j["subsets"] = {{"count", subsets.count}, {"wedge_estimates", subsets.wedge_estimates}};
  out << j.dump(2) << '\n';
  out.flush();
  if (!out) throw IoError("failed writing stats");
}

StatsDocument read_stats(std::istream& in) {
  StatsDocument doc;
  try {
    nlohmann::json j;
    in >> j;
    doc.stats.wedges_traversed = j.at("wedges_traversed").get<count_t>();
    doc.stats.sync_rounds = j.at("sync_rounds").get<count_t>();
    doc.stats.recount_invocations = j.at("recount_invocations").get<count_t>();
    for (const auto& [k, v] : j.at("phase_times_ms").items()) doc.stats.phase_times_ms[k] = v.get<double>();
    for (const auto& [k, v] : j.at("phase_wedges").items()) doc.stats.phase_wedges[k] = v.get<count_t>();
    doc.subsets.count = j.at("subsets").at("count").get<std::size_t>();
    doc.subsets.wedge_estimates = j.at("subsets").at("wedge_estimates").get<std::vector<count_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed stats: ") + e.what());
  }
  return doc;
}

}  // namespace receipt
