#include "bdom/graph_domination.hpp"

#include <algorithm>
#include <stdexcept>

#include "bdom/errors.hpp"

namespace bdom {

BroadcastSet make_broadcast_set(const FiniteGraph& g, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 0 || ids[i] >= g.vertex_count()) {
      throw std::out_of_range("vertex id " + std::to_string(ids[i]) + " outside 0.." +
                              std::to_string(g.vertex_count() - 1));
    }
    if (i > 0 && ids[i] == ids[i - 1]) throw std::invalid_argument("duplicate broadcast vertex " + std::to_string(ids[i]));
  }
  return ids;
}

std::vector<std::int64_t> reception_map(const FiniteGraph& g, const BroadcastSet& broadcasts, int t) {
  if (t < 1) throw std::invalid_argument("transmission strength must be >= 1");
  const int n = g.vertex_count();
  std::vector<std::int64_t> rec(static_cast<std::size_t>(n), 0);
  for (int b : broadcasts) {
    if (b < 0 || b >= n) throw std::out_of_range("broadcast vertex " + std::to_string(b) + " out of range");
    for (int v = 0; v < n; ++v) {
      const int dist = g.distance(b, v);
      if (dist != FiniteGraph::kUnreachable && dist < t) rec[static_cast<std::size_t>(v)] += t - dist;
    }
  }
  return rec;
}

bool is_dominating_set(const FiniteGraph& g, const BroadcastSet& broadcasts, const Params& p) {
  const auto rec = reception_map(g, broadcasts, p.t());
  return std::all_of(rec.begin(), rec.end(), [&](std::int64_t x) { return x >= p.r(); });
}

namespace {

// gain[u*n + v] = reception vertex v gets from a broadcast at u
std::vector<int> gain_matrix(const FiniteGraph& g, int t) {
  const int n = g.vertex_count();
  std::vector<int> gain(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const int dist = g.distance(u, v);
      if (dist != FiniteGraph::kUnreachable && dist < t) gain[static_cast<std::size_t>(u * n + v)] = t - dist;
    }
  }
  return gain;
}

struct BudgetExhausted {};

class ExactSearch {
 public:
  ExactSearch(const FiniteGraph& g, const Params& p, std::uint64_t budget)
      : n_(g.vertex_count()), r_(p.r()), budget_(budget), gain_(gain_matrix(g, p.t())) {
    const auto un = static_cast<std::size_t>(n_);
    // suffix_best_[c*n + v] = max over u >= c of gain(u, v)
    suffix_best_.assign((un + 1) * un, 0);
    for (int c = n_ - 1; c >= 0; --c) {
      for (int v = 0; v < n_; ++v) {
        suffix_best_[idx(c, v)] = std::max(suffix_best_[idx(c + 1, v)], gain_[idx(c, v)]);
      }
    }
  }

  /// Looks for a dominating set of exactly k vertices; the first one found is lexicographically least.
  bool run(int k) {
    rec_.assign(static_cast<std::size_t>(n_), 0);
    chosen_.clear();
    return dfs(0, k);
  }

  const BroadcastSet& chosen() const noexcept { return chosen_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + b; }

  bool dfs(int start, int remaining) {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    int first = -1;
    for (int v = 0; v < n_; ++v) {
      const auto need = r_ - rec_[static_cast<std::size_t>(v)];
      if (need <= 0) continue;
      if (static_cast<std::int64_t>(remaining) * suffix_best_[idx(start, v)] < need) return false;
      if (first < 0) first = v;
    }
    if (first < 0) return true;
    if (remaining == 0) return false;

    const auto need_first = r_ - rec_[static_cast<std::size_t>(first)];
    for (int u = start; u < n_; ++u) {
      // candidates past u cannot serve `first` any better
      if (static_cast<std::int64_t>(remaining) * suffix_best_[idx(u, first)] < need_first) break;
      apply(u, +1);
      chosen_.push_back(u);
      if (dfs(u + 1, remaining - 1)) return true;
      chosen_.pop_back();
      apply(u, -1);
    }
    return false;
  }

  void apply(int u, int sign) {
    for (int v = 0; v < n_; ++v) rec_[static_cast<std::size_t>(v)] += sign * gain_[idx(u, v)];
  }

  int n_;
  std::int64_t r_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> gain_;
  std::vector<int> suffix_best_;
  std::vector<std::int64_t> rec_;
  BroadcastSet chosen_;
};

}  // namespace

BroadcastSet greedy_dominating_set(const FiniteGraph& g, const Params& p) {
  const int n = g.vertex_count();
  const auto gain = gain_matrix(g, p.t());
  const std::int64_t r = p.r();
  std::vector<std::int64_t> rec(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  BroadcastSet chosen;
  const auto undominated = [&] { return std::any_of(rec.begin(), rec.end(), [&](std::int64_t x) { return x < r; }); };
  while (undominated()) {
    int best = -1;
    std::int64_t best_gain = 0;
    for (int u = 0; u < n; ++u) {
      if (used[static_cast<std::size_t>(u)]) continue;
      std::int64_t total = 0;
      for (int v = 0; v < n; ++v) {
        const auto cur = rec[static_cast<std::size_t>(v)];
        total += std::min(r, cur + gain[static_cast<std::size_t>(u * n + v)]) - std::min(r, cur);
      }
      if (total > best_gain) {
        best_gain = total;
        best = u;
      }
    }
    // an undominated vertex always gains from a broadcast on itself
    if (best < 0) throw std::logic_error("greedy domination made no progress");
    used[static_cast<std::size_t>(best)] = true;
    chosen.push_back(best);
    for (int v = 0; v < n; ++v) rec[static_cast<std::size_t>(v)] += gain[static_cast<std::size_t>(best * n + v)];
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

GammaResult gamma_exact(const FiniteGraph& g, const Params& p, const GammaOptions& opts) {
  GammaResult result;
  result.upper_bound_witness = greedy_dominating_set(g, p);
  result.upper_bound = static_cast<int>(result.upper_bound_witness.size());

  const int n = g.vertex_count();
  const int size_cap = opts.size_cap > 0 ? std::min(opts.size_cap, n) : n;
  ExactSearch search(g, p, opts.work_budget);
  try {
    for (int k = 1; k <= std::min(size_cap, result.upper_bound); ++k) {
      if (search.run(k)) {
        result.gamma = k;
        result.witness = search.chosen();
        result.upper_bound = k;
        result.upper_bound_witness = search.chosen();
        result.nodes = search.nodes();
        return result;
      }
    }
  } catch (const BudgetExhausted&) {
  }
  result.status = GammaStatus::cap_exceeded;
  result.nodes = search.nodes();
  return result;
}

std::string_view to_string(VerifyStatus s) noexcept {
  switch (s) {
    case VerifyStatus::pass:
      return "pass";
    case VerifyStatus::fail:
      return "fail";
    case VerifyStatus::not_applicable:
      return "not_applicable";
  }
  return "?";
}

std::string_view to_string(GammaStatus s) noexcept {
  return s == GammaStatus::exact ? "exact" : "cap_exceeded";
}

CycleLemmaReport verify_cycle_lemma(const Params& p, const GammaOptions& opts) {
  CycleLemmaReport report(p);
  report.n = 2 * (p.t() - p.r() + 1);
  if (report.n < 3) {
    report.note = "C_" + std::to_string(report.n) + " is not a simple cycle";
    return report;
  }
  const FiniteGraph cycle = FiniteGraph::cycle(report.n);
  report.witness = {0, report.n / 2};
  report.witness_receptions = reception_map(cycle, report.witness, p.t());
  report.witness_dominates = is_dominating_set(cycle, report.witness, p);
  const auto gamma = gamma_exact(cycle, p, opts);
  report.gamma = gamma.gamma;
  if (!gamma.gamma) report.note = "exact search hit its cap";
  report.status = gamma.gamma == 2 && report.witness_dominates ? VerifyStatus::pass : VerifyStatus::fail;
  return report;
}

TorusReport verify_torus_counterexample(const Params& p, const GammaOptions& opts) {
  if (p.r() < 2) throw std::invalid_argument("the torus counterexample needs r >= 2");
  TorusReport report(p);
  report.n = 2 * (p.t() - p.r() + 1);
  report.predicted_min_reception = 2 * static_cast<std::int64_t>(p.r()) - 2;
  if (report.n < 3) {
    report.note = "C_" + std::to_string(report.n) + " is not a simple cycle";
    return report;
  }
  const int half = report.n / 2;
  const FiniteGraph cycle = FiniteGraph::cycle(report.n);
  const FiniteGraph torus = FiniteGraph::box_product(cycle, cycle);
  report.witness = make_broadcast_set(torus, {*torus.find_vertex({0, 0}), *torus.find_vertex({half, half})});
  const auto rec = reception_map(torus, report.witness, p.t());
  report.min_reception = *std::min_element(rec.begin(), rec.end());
  report.witness_dominates = report.min_reception >= p.r();

  report.gamma_torus = gamma_exact(torus, p, opts).gamma;
  report.gamma_cycle = gamma_exact(cycle, p, opts).gamma;
  if (!report.gamma_torus || !report.gamma_cycle) report.note = "exact search hit its cap";
  report.vizing_violated = report.gamma_torus && report.gamma_cycle &&
                           *report.gamma_torus < *report.gamma_cycle * *report.gamma_cycle;
  const bool ok = report.gamma_torus == 2 && report.gamma_cycle == 2 && report.witness_dominates &&
                  report.min_reception == report.predicted_min_reception && report.vizing_violated;
  report.status = ok ? VerifyStatus::pass : VerifyStatus::fail;
  return report;
}

std::vector<VizingPairReport> vizing_scan(const std::vector<std::pair<std::string, std::string>>& pairs,
                                          const Params& p, const GammaOptions& opts) {
  const Params p1(p.t(), 1);
  std::vector<VizingPairReport> out;
  for (const auto& [g_text, h_text] : pairs) {
    VizingPairReport rep;
    rep.g_expr = g_text;
    rep.h_expr = h_text;
    rep.status = "ok";
    try {
      const FiniteGraph g = parse_graph_expr(g_text);
      const FiniteGraph h = parse_graph_expr(h_text);
      const FiniteGraph gh = parse_graph_expr("(" + g_text + ")*(" + h_text + ")");
      auto gamma = [&](const FiniteGraph& graph, const Params& params) -> std::optional<int> {
        auto res = gamma_exact(graph, params, opts);
        if (!res.gamma) rep.status = "cap_exceeded";
        return res.gamma;
      };
      rep.gamma_tr_product = gamma(gh, p);
      rep.gamma_tr_g = gamma(g, p);
      rep.gamma_tr_h = gamma(h, p);
      rep.gamma_t1_g = gamma(g, p1);
      rep.gamma_t1_h = gamma(h, p1);
      rep.gamma_t1_product = gamma(gh, p1);
    } catch (const std::exception& e) {
      rep.status = "error";
      rep.message = e.what();
    }
    if (rep.gamma_tr_product && rep.gamma_tr_g && rep.gamma_t1_h) {
      rep.half_bound_gh = 2 * *rep.gamma_tr_product >= *rep.gamma_tr_g * *rep.gamma_t1_h;
    }
    if (rep.gamma_tr_product && rep.gamma_tr_h && rep.gamma_t1_g) {
      rep.half_bound_hg = 2 * *rep.gamma_tr_product >= *rep.gamma_tr_h * *rep.gamma_t1_g;
    }
    if (rep.gamma_t1_product && rep.gamma_t1_g && rep.gamma_t1_h) {
      rep.product_bound_t1 = *rep.gamma_t1_product >= *rep.gamma_t1_g * *rep.gamma_t1_h;
    }
    if (rep.status == "cap_exceeded") rep.message = "exact search hit its cap on at least one factor";
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace bdom
