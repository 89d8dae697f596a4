#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bdom/graph.hpp"
#include "bdom/params.hpp"

namespace bdom {

/// Sorted, duplicate-free vertex ids.
using BroadcastSet = std::vector<int>;

/// Validates ids against g, sorts them, and rejects duplicates.
BroadcastSet make_broadcast_set(const FiniteGraph& g, std::vector<int> ids);

/// Reception of every vertex: each broadcast at distance k < t adds t - k
/// (t at its own vertex); unreachable broadcasts add nothing.
std::vector<std::int64_t> reception_map(const FiniteGraph& g, const BroadcastSet& broadcasts, int t);

bool is_dominating_set(const FiniteGraph& g, const BroadcastSet& broadcasts, const Params& p);

enum class GammaStatus { exact, cap_exceeded };

struct GammaOptions {
  int size_cap = 0;                       // largest set size tried; 0 = vertex count
  std::uint64_t work_budget = 50'000'000;  // search nodes
};

struct GammaResult {
  GammaStatus status = GammaStatus::exact;
  std::optional<int> gamma;
  BroadcastSet witness;     // lexicographically least minimum set when exact
  int upper_bound = 0;      // size of the best set known (greedy or exact)
  BroadcastSet upper_bound_witness;
  std::uint64_t nodes = 0;
};

/// Greedy set: repeatedly adds the vertex with the largest unwasted-reception
/// gain (lowest id on ties) until every vertex reaches r.
BroadcastSet greedy_dominating_set(const FiniteGraph& g, const Params& p);

/// Exact gamma_{t,r}(g) by iterative deepening over set sizes with
/// reachability pruning. Stops with cap_exceeded once size_cap or the work
/// budget is hit, keeping the greedy upper bound.
GammaResult gamma_exact(const FiniteGraph& g, const Params& p, const GammaOptions& opts = {});

enum class VerifyStatus { pass, fail, not_applicable };

std::string_view to_string(VerifyStatus s) noexcept;
std::string_view to_string(GammaStatus s) noexcept;

struct CycleLemmaReport {
  explicit CycleLemmaReport(const Params& p) : params(p) {}

  Params params;
  int n = 0;  // 2(t - r + 1)
  VerifyStatus status = VerifyStatus::not_applicable;
  std::optional<int> gamma;
  BroadcastSet witness;  // {0, n/2}
  std::vector<std::int64_t> witness_receptions;
  bool witness_dominates = false;
  std::string note;
};

/// Checks that C_{2(t-r+1)} has domination number 2 with witness {0, n/2}.
CycleLemmaReport verify_cycle_lemma(const Params& p, const GammaOptions& opts = {});

struct TorusReport {
  explicit TorusReport(const Params& p) : params(p) {}

  Params params;
  int n = 0;
  VerifyStatus status = VerifyStatus::not_applicable;
  std::optional<int> gamma_torus;
  std::optional<int> gamma_cycle;
  BroadcastSet witness;  // {(0,0), (n/2,n/2)}
  bool witness_dominates = false;
  std::int64_t min_reception = 0;
  std::int64_t predicted_min_reception = 0;  // 2r - 2
  bool vizing_violated = false;              // gamma(Cn x Cn) < gamma(Cn)^2
  std::string note;
};

/// Checks gamma_{t,r}(C_n x C_n) = 2 < gamma_{t,r}(C_n)^2 for n = 2(t-r+1).
/// Throws std::invalid_argument when r < 2.
TorusReport verify_torus_counterexample(const Params& p, const GammaOptions& opts = {});

struct VizingPairReport {
  std::string g_expr;
  std::string h_expr;
  std::string status;  // "ok", "cap_exceeded" or "error"
  std::string message;
  std::optional<int> gamma_tr_product;
  std::optional<int> gamma_tr_g;
  std::optional<int> gamma_tr_h;
  std::optional<int> gamma_t1_g;
  std::optional<int> gamma_t1_h;
  std::optional<int> gamma_t1_product;
  /// gamma_{t,r}(G x H) >= 1/2 gamma_{t,r}(G) gamma_{t,1}(H), and with G, H swapped.
  std::optional<bool> half_bound_gh;
  std::optional<bool> half_bound_hg;
  /// gamma_{t,1}(G x H) >= gamma_{t,1}(G) gamma_{t,1}(H).
  std::optional<bool> product_bound_t1;
};

/// Evaluates both product-domination inequalities on each listed pair.
/// A failing pair is reported and the scan continues.
std::vector<VizingPairReport> vizing_scan(const std::vector<std::pair<std::string, std::string>>& pairs,
                                          const Params& p, const GammaOptions& opts = {});

}  // namespace bdom
