#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "receipt/bigraph.hpp"

namespace receipt {

struct TipResult {
  std::vector<count_t> theta;  // indexed by U label of the decomposed orientation
  count_t theta_max = 0;

  friend bool operator==(const TipResult&, const TipResult&) = default;
};

// Counters mirror the usual peeling metrics: wedges traversed, synchronization
// rounds, HUC recounts, and wall time per phase ("count", "peel", "cd", "fd").
struct PeelStats {
  count_t wedges_traversed = 0;
  count_t sync_rounds = 0;
  count_t recount_invocations = 0;
  std::map<std::string, count_t> phase_wedges;
  std::map<std::string, double> phase_times_ms;

  void add_wedges(const std::string& phase, count_t n) {
    wedges_traversed += n;
    phase_wedges[phase] += n;
  }
  count_t wedges_in(const std::string& phase) const {
    auto it = phase_wedges.find(phase);
    return it == phase_wedges.end() ? 0 : it->second;
  }
  void merge(const PeelStats& other);
};

class PhaseTimer {
 public:
  PhaseTimer(PeelStats& stats, std::string phase)
      : stats_(stats), phase_(std::move(phase)), start_(std::chrono::steady_clock::now()) {}
  ~PhaseTimer() {
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start_;
    stats_.phase_times_ms[phase_] += dt.count();
  }
  PhaseTimer(const PhaseTimer&) = delete;
  PhaseTimer& operator=(const PhaseTimer&) = delete;

 private:
  PeelStats& stats_;
  std::string phase_;
  std::chrono::steady_clock::time_point start_;
};

// 4-ary min-heap over (support, label) with lazy decrease-key: a new entry is
// pushed whenever a support drops, and stale entries are skipped on pop. When
// stale entries outnumber the members still waiting, pop rebuilds the heap
// from the current entries only.
class MinSupportQueue {
 public:
  static constexpr std::size_t kArity = 4;

  MinSupportQueue() = default;
  MinSupportQueue(std::span<const count_t> supports, std::span<const vertex_t> members);

  void push(vertex_t u, count_t support);
  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

  // Minimum (support, label) among entries that are alive and current.
  template <class AlivePred>
  std::optional<vertex_t> pop(std::span<const count_t> supports, AlivePred&& alive) {
    if (heap_.size() > 2 * waiting_ + 64) {
      std::erase_if(heap_, [&](const Entry& e) { return !alive(e.u) || supports[e.u] != e.support; });
      std::sort(heap_.begin(), heap_.end());
      heap_.erase(std::unique(heap_.begin(), heap_.end(), [](const Entry& a, const Entry& b) { return a.u == b.u && a.support == b.support; }), heap_.end());
    }
    while (!heap_.empty()) {
      const Entry top = heap_.front();
      pop_front();
      if (alive(top.u) && supports[top.u] == top.support) {
        if (waiting_ > 0) --waiting_;
        return top.u;
      }
    }
    return std::nullopt;
  }

 private:
  struct Entry {
    count_t support;
    vertex_t u;
    bool operator<(const Entry& o) const {
      return support != o.support ? support < o.support : u < o.u;
    }
  };
  void pop_front();
  std::vector<Entry> heap_;
  std::size_t waiting_ = 0;  // members not yet returned by pop
};

// Per-worker dense 2-hop aggregation array with touched-list reset.
struct UpdateScratch {
  std::vector<vertex_t> wdg;
  std::vector<vertex_t> hits;
  explicit UpdateScratch(vertex_t u_count = 0) : wdg(u_count, 0) {}
};

// Peels u (already killed in the view): every live u' with c >= 2 common
// neighbours gets support[u'] <- max(floor, support[u'] - C(c,2)). Updated
// vertices are appended to `touched`. Returns wedges traversed, i.e. the
// number of V-list entries scanned other than u itself. With `concurrent`
// the decrement is an atomic read-modify-write.
count_t update(vertex_t u, count_t floor, std::span<count_t> supports, PeelableView& view,
               UpdateScratch& scratch, std::vector<vertex_t>& touched, bool concurrent = false);

struct SequentialPeelOptions {
  bool dgm = false;
  count_t dgm_threshold = 0;  // 0 = edge count of the peeled graph
  bool huc = false;
  // HUC recount adds this per-vertex external count (butterflies shared with
  // vertices outside the peeled graph). Empty = zeros.
  std::vector<count_t> external;
  std::string phase = "peel";
};

// Bottom-up peeling of g's U side starting from `supports`; writes theta by
// U label and returns the extraction order.
std::vector<vertex_t> sequential_peel(const BipartiteGraph& g, std::vector<count_t> supports,
                                      const SequentialPeelOptions& opts,
                                      std::span<count_t> theta, PeelStats& stats);

struct Decomposition {
  TipResult tips;
  PeelStats stats;
  std::vector<ext_id_t> ids;  // original ids of the decomposed side, by label
  std::vector<vertex_t> order;  // extraction order (sequential algorithms)
};

struct BupOptions {
  bool dgm = false;
  count_t dgm_threshold = 0;
};

Decomposition tip_decompose_bup(const BipartiteGraph& g, Side side, const BupOptions& opts = {});

// Batch peeling: every round peels all live vertices of globally minimum
// support in parallel. One sync round per peeling round.
Decomposition tip_decompose_parb(const BipartiteGraph& g, Side side, int workers = 1);

// Independent oracle: recount the live graph from scratch with count_naive
// after each deletion.
TipResult tip_oracle_recount(const BipartiteGraph& g, Side side);

count_t max_theta(std::span<const count_t> theta);

}  // namespace receipt
