#include "bdom/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bdom/coverage_bounds.hpp"
#include "bdom/errors.hpp"
#include "bdom/graph_domination.hpp"
#include "bdom/lattice_geometry.hpp"
#include "bdom/pattern_engine.hpp"
#include "report.hpp"

namespace bdom::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct Globals {
  std::string format = "text";
  std::string output;
  unsigned threads = 0;
  bool timestamp = false;
  bool seedless = false;
  bool quiet = false;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(trim(cur));
  return parts;
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument("expected an integer, got '" + s + "'");
  return v;
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_int(part));
  return out;
}

// "18,0;5,1" -> columns (18,0) and (5,1)
IntMatrix parse_basis(const std::string& s) {
  IntMatrix columns;
  for (const auto& col : split(s, ';')) columns.push_back(parse_int_list(col));
  return columns;
}

Json count_json(const Count& c) { return to_string(c); }

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += sep;
    s += items[i];
  }
  return s;
}

std::string point_text(const LatticePoint& p) {
  std::vector<std::string> parts;
  for (auto c : p.coords) parts.push_back(std::to_string(c));
  return "(" + join(parts, ",") + ")";
}

std::string tuples_text(const TupleSequence& s) {
  std::vector<std::string> parts;
  for (const auto& t : s.tuples) {
    parts.push_back(std::string(t.sign == Sign::plus ? "+" : "-") + "(" + std::to_string(t.gap) + "," +
                    std::to_string(t.magnitude) + ")");
  }
  return "[" + join(parts, ", ") + "]";
}

Json labels_json(const FiniteGraph& g, const BroadcastSet& set) {
  Json arr = Json::array();
  for (int v : set) arr.push_back(g.label(v));
  return arr;
}

std::string labels_text(const FiniteGraph& g, const BroadcastSet& set) {
  std::vector<std::string> parts;
  for (int v : set) parts.push_back(format_label(g.label(v)));
  return join(parts, " ");
}

Json optional_json(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }
Json optional_json(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }
std::string optional_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "?"; }
std::string optional_text(const std::optional<bool>& v) { return v ? (*v ? "holds" : "VIOLATED") : "unknown"; }

std::string cell(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }
std::string cell(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : std::string(); }

Json params_json(const Params& p) { return Json{{"t", p.t()}, {"r", p.r()}}; }

// --- lattice geometry -------------------------------------------------------

Report cmd_count(const std::string& name, int n, int d, bool list) {
  const bool shell = name == "shell";
  const Count value = shell ? shell_size(n, d) : ball_size(n, d);
  Report rep;
  rep.json = {{"command", name}, {"n", n}, {"d", d}, {"count", count_json(value)}};
  rep.text = to_string(value) + "\n";
  if (list) {
    const auto points = shell ? shell_enumerate(n, d) : ball_enumerate(n, d);
    Json arr = Json::array();
    rep.csv_header = {"point"};
    for (const auto& p : points) {
      arr.push_back(p.coords);
      rep.text += point_text(p) + "\n";
      rep.csv_rows.push_back({point_text(p)});
    }
    rep.json["points"] = std::move(arr);
  }
  return rep;
}

Report cmd_delannoy(int m, int k) {
  const Count value = delannoy(m, k);
  Report rep;
  rep.json = {{"command", "delannoy"}, {"m", m}, {"k", k}, {"count", count_json(value)}};
  rep.text = to_string(value) + "\n";
  return rep;
}

Report cmd_genfunc(const std::string& kind_name, std::optional<int> fixed, int max_index) {
  const auto kind = parse_genfunc_kind(kind_name);
  if (!kind) {
    throw std::invalid_argument("unknown generating function '" + kind_name +
                                "' (expected B_bivariate, S_bivariate, B_fixed_d, B_fixed_n, S_fixed_d, S_fixed_n)");
  }
  const auto table = genfunc_coefficients(*kind, fixed, max_index);
  Report rep;
  rep.json = {{"command", "genfunc"}, {"kind", kind_name}, {"fixed", fixed ? Json(*fixed) : Json(nullptr)},
              {"max_index", max_index}};
  if (is_bivariate(*kind)) {
    Json rows = Json::array();
    rep.csv_header = {"n", "d", "coefficient"};
    for (std::size_t i = 0; i < table.size(); ++i) {
      Json row = Json::array();
      std::vector<std::string> cells;
      for (std::size_t j = 0; j < table[i].size(); ++j) {
        row.push_back(count_json(table[i][j]));
        cells.push_back(to_string(table[i][j]));
        rep.csv_rows.push_back({std::to_string(i), std::to_string(j), to_string(table[i][j])});
      }
      rows.push_back(std::move(row));
      rep.text += join(cells, " ") + "\n";
    }
    rep.json["coefficients"] = std::move(rows);
  } else {
    Json row = Json::array();
    std::vector<std::string> cells;
    rep.csv_header = {"index", "coefficient"};
    for (std::size_t i = 0; i < table[0].size(); ++i) {
      row.push_back(count_json(table[0][i]));
      cells.push_back(to_string(table[0][i]));
      rep.csv_rows.push_back({std::to_string(i), to_string(table[0][i])});
    }
    rep.json["coefficients"] = std::move(row);
    rep.text = join(cells, " ") + "\n";
  }
  return rep;
}

Report cmd_bijection(const std::string& point_csv, std::optional<int> n_opt, int d) {
  const LatticePoint p{parse_int_list(point_csv)};
  const int n = n_opt.value_or(static_cast<int>(p.dimension()));
  const auto image = ball_bijection(p, n, d);
  const auto encoded = tuple_encode(p);
  const auto transposed = transpose(encoded);
  Report rep;
  rep.json = {{"command", "bijection"},     {"n", n},
              {"d", d},                     {"point", p.coords},
              {"tuples", tuples_text(encoded)}, {"transposed", tuples_text(transposed)},
              {"image", image.coords}};
  rep.text = point_text(p) + " -> " + tuples_text(encoded) + " -> " + tuples_text(transposed) + " -> " +
             point_text(image) + "\n";
  rep.csv_header = {"point", "tuples", "transposed", "image"};
  rep.csv_rows = {{point_text(p), tuples_text(encoded), tuples_text(transposed), point_text(image)}};
  return rep;
}

// --- coverage ---------------------------------------------------------------

Report cmd_coverage(int n, int t, int r) {
  const Params p(t, r);
  const Count c = coverage(n, p);
  Report rep;
  rep.json = {{"command", "coverage"}, {"n", n}, {"t", t}, {"r", r}, {"coverage", count_json(c)}};
  if (n >= 1 && n <= 4) rep.json["closed_form"] = count_json(coverage_closed_form(n, p));
  rep.text = to_string(c) + "\n";
  return rep;
}

Report cmd_lower_bound(const std::string& dims, int t, int r) {
  const Params p(t, r);
  const GridDims grid(parse_int_list(dims));
  const Count bound = domination_lower_bound(grid, p);
  Report rep;
  rep.json = {{"command", "lower-bound"},
              {"dims", grid.dims()},
              {"t", t},
              {"r", r},
              {"volume", count_json(grid.volume())},
              {"coverage", count_json(coverage(grid.dimension(), p))},
              {"lower_bound", count_json(bound)}};
  rep.text = to_string(bound) + "\n";
  return rep;
}

Report cmd_max_d(int n, int t, int r) {
  const Params p(t, r);
  const Count value = max_potential_d(n, p);
  Report rep;
  rep.json = {{"command", "max-d"}, {"n", n}, {"t", t}, {"r", r}, {"max_d", count_json(value)}};
  rep.text = to_string(value) + "\n";
  return rep;
}

// --- patterns ---------------------------------------------------------------

Report cmd_tower_check(int t, int r, std::int64_t d, std::int64_t e) {
  const Params p(t, r);
  const TowerPattern tp(d, e);
  const bool ok = is_dominating_tower(p, tp);
  const auto profile = reception_table(p, tp);
  const auto min_rec = *std::min_element(profile.receptions.begin(), profile.receptions.end());
  Report rep;
  rep.json = {{"command", "tower-check"}, {"t", t},          {"r", r},
              {"pattern", tp.id()},       {"d", d},          {"e", e},
              {"dominating", ok},         {"min_reception", min_rec}, {"receptions", profile.receptions}};
  rep.text = tp.id() + (ok ? " is " : " is not ") + "(" + std::to_string(t) + "," + std::to_string(r) +
             ")-dominating (min reception " + std::to_string(min_rec) + ")\n";
  rep.exit_code = ok ? kExitOk : kExitFalse;
  return rep;
}

Report cmd_tower_table(int t, int r, std::int64_t d, std::int64_t e) {
  const Params p(t, r);
  const TowerPattern tp(d, e);
  const auto profile = reception_table(p, tp);
  Report rep;
  Json rows = Json::array();
  rep.csv_header = {"row"};
  for (std::int64_t i = 0; i < d; ++i) rep.csv_header.push_back(std::to_string(i));
  for (const auto& row : profile.rows) {
    rows.push_back({{"y", row.y}, {"values", row.values}});
    std::vector<std::string> cells{std::to_string(row.y)};
    for (auto v : row.values) cells.push_back(std::to_string(v));
    rep.csv_rows.push_back(std::move(cells));
  }
  std::vector<std::string> sum{"Sum"};
  for (auto v : profile.receptions) sum.push_back(std::to_string(v));
  rep.csv_rows.push_back(std::move(sum));
  rep.json = {{"command", "tower-table"}, {"t", t},        {"r", r},
              {"pattern", profile.pattern_id}, {"rows", std::move(rows)}, {"sum", profile.receptions},
              {"dominating", is_dominating_tower(p, tp)}};
  rep.text = tower_table_text(profile);
  return rep;
}

Report cmd_tower_search(int t, int r, const Globals& g, std::ostream& err) {
  const Params p(t, r);
  const auto res = min_density_search(p, {g.threads, g.quiet ? nullptr : &err});
  Report rep;
  rep.json = {{"command", "tower-search"},
              {"t", t},
              {"r", r},
              {"d", res.best.d()},
              {"e", res.best.e()},
              {"pattern", res.best.id()},
              {"ceiling", res.ceiling},
              {"candidates_before_best", res.candidates_before_best}};
  rep.text = "d=" + std::to_string(res.best.d()) + " e=" + std::to_string(res.best.e()) + "\n";
  return rep;
}

Report cmd_table3(int tmax, const Globals& g, std::ostream& err) {
  if (tmax < 1) throw std::invalid_argument("--tmax must be >= 1");
  Report rep;
  Json entries = Json::array();
  rep.csv_header = {"t", "r", "d", "e"};
  std::ostringstream text;
  const int width = 5;
  text << std::setw(5) << "";
  for (int r = 1; r <= tmax; ++r) text << std::setw(width) << ("r=" + std::to_string(r));
  text << '\n';
  for (int t = 1; t <= tmax; ++t) {
    if (!g.quiet) err << "table3: t=" << t << '\n';
    text << std::setw(5) << std::left << ("t=" + std::to_string(t)) << std::right;
    for (int r = 1; r <= t; ++r) {
      const auto res = min_density_search(Params(t, r), {g.threads, nullptr});
      entries.push_back({{"t", t}, {"r", r}, {"d", res.best.d()}, {"e", res.best.e()}});
      rep.csv_rows.push_back(
          {std::to_string(t), std::to_string(r), std::to_string(res.best.d()), std::to_string(res.best.e())});
      text << std::setw(width) << res.best.d();
    }
    text << '\n';
  }
  rep.json = {{"command", "table3"}, {"tmax", tmax}, {"entries", std::move(entries)}};
  rep.text = text.str();
  return rep;
}

Report cmd_lattice_check(int t, int r, const std::string& basis, std::uint64_t cap) {
  const Params p(t, r);
  const auto sp = SublatticePattern::from_columns(parse_basis(basis));
  const auto profile = lattice_reception_profile(p, sp, cap);
  const auto min_rec = *std::min_element(profile.receptions.begin(), profile.receptions.end());
  const bool ok = min_rec >= r;
  Report rep;
  rep.json = {{"command", "lattice-check"}, {"t", t},         {"r", r},
              {"pattern", sp.id()},         {"hnf", sp.hnf()}, {"index", sp.index()},
              {"dominating", ok},           {"min_reception", min_rec}, {"receptions", profile.receptions}};
  rep.text = sp.id() + (ok ? " is " : " is not ") + "(" + std::to_string(t) + "," + std::to_string(r) +
             ")-dominating (index " + std::to_string(sp.index()) + ", min reception " + std::to_string(min_rec) +
             ")\n";
  rep.exit_code = ok ? kExitOk : kExitFalse;
  return rep;
}

Report cmd_lattice_search3d(int t, int r, std::int64_t cap, const Globals& g, std::ostream& err) {
  const Params p(t, r);
  const auto res = lattice_search_3d(p, cap, {g.threads, g.quiet ? nullptr : &err});
  Report rep;
  rep.json = {{"command", "lattice-search3d"}, {"t", t}, {"r", r}, {"cap", cap}, {"start_d", res.start_d},
              {"found", res.best.has_value()}};
  if (res.best) {
    const auto& h = res.best->hnf();
    rep.json["d"] = h[0][0];
    rep.json["e1"] = h[0][1];
    rep.json["e2"] = h[0][2];
    rep.json["pattern"] = res.best->id();
    rep.json["hnf"] = h;
    rep.json["candidates_before_best"] = res.candidates_before_best;
    rep.text = "d=" + std::to_string(h[0][0]) + " e1=" + std::to_string(h[0][1]) + " e2=" + std::to_string(h[0][2]) +
               "\n";
  } else {
    rep.text = "no dominating tower-form lattice with d <= " + std::to_string(res.start_d) + "\n";
  }
  return rep;
}

// --- finite graphs ----------------------------------------------------------

GammaOptions gamma_options(int size_cap, std::uint64_t budget) {
  GammaOptions opts;
  opts.size_cap = size_cap;
  opts.work_budget = budget;
  return opts;
}

Report cmd_gamma(const std::string& expr, int t, int r, const GammaOptions& opts) {
  const Params p(t, r);
  const FiniteGraph g = parse_graph_expr(expr);
  const auto res = gamma_exact(g, p, opts);
  const BroadcastSet& shown = res.gamma ? res.witness : res.upper_bound_witness;
  Report rep;
  rep.json = {{"command", "gamma"},
              {"expression", expr},
              {"params", params_json(p)},
              {"gamma", optional_json(res.gamma)},
              {"witness", labels_json(g, res.witness)},
              {"status", std::string(to_string(res.status))},
              {"upper_bound", res.upper_bound},
              {"upper_bound_witness", labels_json(g, res.upper_bound_witness)},
              {"vertices", g.vertex_count()},
              {"connected", g.is_connected()},
              {"nodes", res.nodes}};
  std::ostringstream text;
  if (res.gamma) {
    text << "gamma_{" << t << "," << r << "}(" << expr << ") = " << *res.gamma << '\n';
    text << "witness: " << labels_text(g, res.witness) << '\n';
  } else {
    text << "gamma_{" << t << "," << r << "}(" << expr << ") <= " << res.upper_bound << " (search cap exceeded)\n";
    text << "best known: " << labels_text(g, res.upper_bound_witness) << '\n';
  }
  if (!g.is_connected()) text << "note: graph is disconnected\n";
  text << reception_grid(g, reception_map(g, shown, t), shown);
  rep.text = text.str();
  rep.exit_code = res.gamma ? kExitOk : kExitFalse;
  return rep;
}

Report cmd_reception(const std::string& expr, int t, int r, const std::string& set_text) {
  const Params p(t, r);
  const FiniteGraph g = parse_graph_expr(expr);
  std::vector<int> ids;
  if (!trim(set_text).empty()) {
    for (const auto& item : split(set_text, ';')) {
      VertexLabel label;
      for (auto v : parse_int_list(item)) label.push_back(static_cast<int>(v));
      const auto id = g.find_vertex(label);
      if (!id) throw std::invalid_argument("no vertex labelled " + format_label(label) + " in " + expr);
      ids.push_back(*id);
    }
  }
  const BroadcastSet set = make_broadcast_set(g, ids);
  const auto rec = reception_map(g, set, t);
  const bool ok = is_dominating_set(g, set, p);
  Report rep;
  Json per_vertex = Json::array();
  rep.csv_header = {"vertex", "reception", "broadcast"};
  for (int v = 0; v < g.vertex_count(); ++v) {
    const bool b = std::binary_search(set.begin(), set.end(), v);
    per_vertex.push_back({{"vertex", g.label(v)}, {"reception", rec[static_cast<std::size_t>(v)]}, {"broadcast", b}});
    rep.csv_rows.push_back({format_label(g.label(v)), std::to_string(rec[static_cast<std::size_t>(v)]), b ? "1" : "0"});
  }
  rep.json = {{"command", "reception"}, {"expression", expr},        {"params", params_json(p)},
              {"broadcasts", labels_json(g, set)}, {"dominating", ok}, {"receptions", std::move(per_vertex)}};
  rep.text = reception_grid(g, rec, set) + (ok ? "dominating\n" : "not dominating\n");
  rep.exit_code = ok ? kExitOk : kExitFalse;
  return rep;
}

Report cmd_verify_lemma2(int t, int r, const GammaOptions& opts) {
  const auto rep_data = verify_cycle_lemma(Params(t, r), opts);
  Report rep;
  rep.json = {{"command", "verify-lemma2"},
              {"params", params_json(rep_data.params)},
              {"n", rep_data.n},
              {"status", std::string(to_string(rep_data.status))},
              {"gamma", optional_json(rep_data.gamma)},
              {"witness", rep_data.witness},
              {"witness_receptions", rep_data.witness_receptions},
              {"witness_dominates", rep_data.witness_dominates},
              {"note", rep_data.note}};
  std::ostringstream text;
  text << "C_" << rep_data.n << " under (" << t << "," << r << "): " << to_string(rep_data.status) << '\n';
  if (rep_data.status != VerifyStatus::not_applicable) {
    text << "gamma = " << optional_text(rep_data.gamma) << ", witness {0," << rep_data.n / 2 << "} "
         << (rep_data.witness_dominates ? "dominates" : "does not dominate") << '\n';
  }
  if (!rep_data.note.empty()) text << "note: " << rep_data.note << '\n';
  rep.text = text.str();
  rep.exit_code = rep_data.status == VerifyStatus::fail ? kExitFalse : kExitOk;
  return rep;
}

Report cmd_verify_torus(int t, int r, const GammaOptions& opts) {
  const auto d = verify_torus_counterexample(Params(t, r), opts);
  Report rep;
  const int half = d.n / 2;
  rep.json = {{"command", "verify-torus"},
              {"params", params_json(d.params)},
              {"n", d.n},
              {"status", std::string(to_string(d.status))},
              {"gamma_torus", optional_json(d.gamma_torus)},
              {"gamma_cycle", optional_json(d.gamma_cycle)},
              {"witness", Json::array({Json::array({0, 0}), Json::array({half, half})})},
              {"witness_dominates", d.witness_dominates},
              {"min_reception", d.min_reception},
              {"predicted_min_reception", d.predicted_min_reception},
              {"vizing_violated", d.vizing_violated},
              {"note", d.note}};
  std::ostringstream text;
  text << "C_" << d.n << " x C_" << d.n << " under (" << t << "," << r << "): " << to_string(d.status) << '\n';
  if (d.status != VerifyStatus::not_applicable) {
    text << "gamma(torus) = " << optional_text(d.gamma_torus) << ", gamma(cycle) = " << optional_text(d.gamma_cycle)
         << ", min witness reception = " << d.min_reception << " (predicted " << d.predicted_min_reception << ")\n";
    if (d.vizing_violated) {
      text << optional_text(d.gamma_torus) << " < " << optional_text(d.gamma_cycle) << "*"
           << optional_text(d.gamma_cycle) << ": product bound violated\n";
    }
  }
  if (!d.note.empty()) text << "note: " << d.note << '\n';
  rep.text = text.str();
  rep.exit_code = d.status == VerifyStatus::fail ? kExitFalse : kExitOk;
  return rep;
}

std::vector<std::pair<std::string, std::string>> read_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open pairs file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected '<expr>, <expr>'");
    }
    pairs.emplace_back(trim(line.substr(0, comma)), trim(line.substr(comma + 1)));
  }
  return pairs;
}

Report cmd_vizing_scan(const std::string& pairs_file, int t, int r, const GammaOptions& opts) {
  const Params p(t, r);
  const auto results = vizing_scan(read_pairs(pairs_file), p, opts);
  Report rep;
  Json arr = Json::array();
  rep.csv_header = {"G",          "H",          "status",          "gamma_tr_GH",   "gamma_tr_G",
                    "gamma_tr_H", "gamma_t1_G", "gamma_t1_H",      "gamma_t1_GH",   "half_bound_GH",
                    "half_bound_HG", "product_bound_t1"};
  std::ostringstream text;
  for (const auto& x : results) {
    arr.push_back({{"G", x.g_expr},
                   {"H", x.h_expr},
                   {"status", x.status},
                   {"message", x.message},
                   {"gamma_tr_GH", optional_json(x.gamma_tr_product)},
                   {"gamma_tr_G", optional_json(x.gamma_tr_g)},
                   {"gamma_tr_H", optional_json(x.gamma_tr_h)},
                   {"gamma_t1_G", optional_json(x.gamma_t1_g)},
                   {"gamma_t1_H", optional_json(x.gamma_t1_h)},
                   {"gamma_t1_GH", optional_json(x.gamma_t1_product)},
                   {"half_bound_GH", optional_json(x.half_bound_gh)},
                   {"half_bound_HG", optional_json(x.half_bound_hg)},
                   {"product_bound_t1", optional_json(x.product_bound_t1)}});
    rep.csv_rows.push_back({x.g_expr, x.h_expr, x.status, cell(x.gamma_tr_product), cell(x.gamma_tr_g),
                            cell(x.gamma_tr_h), cell(x.gamma_t1_g), cell(x.gamma_t1_h), cell(x.gamma_t1_product),
                            cell(x.half_bound_gh), cell(x.half_bound_hg), cell(x.product_bound_t1)});
    text << x.g_expr << " x " << x.h_expr << ": " << x.status;
    if (!x.message.empty()) text << " (" << x.message << ")";
    text << '\n';
    if (x.status == "error") continue;
    text << "  gamma_{t,r}: GxH=" << optional_text(x.gamma_tr_product) << " G=" << optional_text(x.gamma_tr_g)
         << " H=" << optional_text(x.gamma_tr_h) << "; gamma_{t,1}: GxH=" << optional_text(x.gamma_t1_product)
         << " G=" << optional_text(x.gamma_t1_g) << " H=" << optional_text(x.gamma_t1_h) << '\n';
    text << "  half bound (G,H): " << optional_text(x.half_bound_gh)
         << "; half bound (H,G): " << optional_text(x.half_bound_hg)
         << "; (t,1) product bound: " << optional_text(x.product_bound_t1) << '\n';
  }
  rep.json = {{"command", "vizing-scan"}, {"params", params_json(p)}, {"pairs", std::move(arr)}};
  rep.text = text.str();
  return rep;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for (t,r) broadcast domination on grids and small graphs", "bdom"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output encoding")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output,-o", g.output, "Write the report to a file instead of stdout");
  app.add_option("--threads", g.threads, "Worker threads for searches (0 = auto)");
  app.add_flag("--timestamp", g.timestamp, "Add a generated_at field to json output");
  app.add_flag("--seedless", g.seedless, "Accepted for scripts; the toolkit never uses randomness");
  app.add_flag("--quiet,-q", g.quiet, "Suppress progress messages on stderr");

  std::map<std::string, std::function<Report()>> handlers;

  // Positional storage shared by the subcommands; only one subcommand runs.
  int n = 0, d = 0, m = 0, k = 0, t = 0, r = 0, max_index = 0, tmax = 9, size_cap = 0;
  std::int64_t period = 0, shift = 0, index_cap = 10;
  std::optional<int> fixed, n_opt;
  std::uint64_t budget = GammaOptions{}.work_budget, lattice_cap = kDefaultIndexCap;
  bool list = false;
  std::string kind, point, dims, basis, expr, set_text, pairs_file;

  const auto add_tr = [&](CLI::App* sub) {
    sub->add_option("t", t, "Transmission strength")->required();
    sub->add_option("r", r, "Required reception")->required();
  };
  const auto add_gamma_opts = [&](CLI::App* sub) {
    sub->add_option("--size-cap", size_cap, "Largest set size to try (0 = vertex count)");
    sub->add_option("--budget", budget, "Search node budget");
  };

  for (const char* name : {"shell", "ball"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "shell" ? "Count points of Z^n at l1 distance exactly d"
                                                                        : "Count points of Z^n at l1 distance <= d");
    sub->add_option("n", n, "Dimension")->required();
    sub->add_option("d", d, "Radius")->required();
    sub->add_flag("--list", list, "Also list the points");
    handlers[name] = [&, name] { return cmd_count(name, n, d, list); };
  }

  auto* gen = app.add_subcommand("genfunc", "Generating-function coefficients by exact series division");
  gen->add_option("kind", kind, "B_bivariate, S_bivariate, B_fixed_d, B_fixed_n, S_fixed_d or S_fixed_n")->required();
  gen->add_option("--fixed", fixed, "The fixed dimension or radius (univariate kinds)");
  gen->add_option("--max", max_index, "Largest coefficient index")->required();
  handlers["genfunc"] = [&] { return cmd_genfunc(kind, fixed, max_index); };

  auto* bij = app.add_subcommand("bijection", "Map a point of B_n(d) to B_d(n)");
  bij->add_option("--point", point, "Comma-separated coordinates (use --point=-1,0 for a leading minus)")->required();
  bij->add_option("--n", n_opt, "Ambient dimension (defaults to the point's length)");
  bij->add_option("--d", d, "Radius")->required();
  handlers["bijection"] = [&] { return cmd_bijection(point, n_opt, d); };

  auto* del = app.add_subcommand("delannoy", "Delannoy number D(m,k)");
  del->add_option("m", m)->required();
  del->add_option("k", k)->required();
  handlers["delannoy"] = [&] { return cmd_delannoy(m, k); };

  auto* cov = app.add_subcommand("coverage", "Unwasted reception of one broadcast in Z^n");
  cov->add_option("n", n, "Dimension")->required();
  add_tr(cov);
  handlers["coverage"] = [&] { return cmd_coverage(n, t, r); };

  auto* lb = app.add_subcommand("lower-bound", "Coverage lower bound on gamma of a finite grid");
  lb->add_option("--dims", dims, "Comma-separated side lengths")->required();
  add_tr(lb);
  handlers["lower-bound"] = [&] { return cmd_lower_bound(dims, t, r); };

  auto* maxd = app.add_subcommand("max-d", "Largest period a dominating pattern could have");
  maxd->add_option("n", n, "Dimension")->required();
  add_tr(maxd);
  handlers["max-d"] = [&] { return cmd_max_d(n, t, r); };

  for (const char* name : {"tower-check", "tower-table"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "tower-check" ? "Check whether T(d,e) dominates Z^2"
                                                                             : "Per-row reception table of T(d,e)");
    add_tr(sub);
    sub->add_option("d", period, "Tower period")->required();
    sub->add_option("e", shift, "Row shift")->required();
  }
  handlers["tower-check"] = [&] { return cmd_tower_check(t, r, period, shift); };
  handlers["tower-table"] = [&] { return cmd_tower_table(t, r, period, shift); };

  auto* ts = app.add_subcommand("tower-search", "Sparsest dominating tower T(d,e)");
  add_tr(ts);
  handlers["tower-search"] = [&] { return cmd_tower_search(t, r, g, err); };

  auto* t3 = app.add_subcommand("table3", "Sparsest tower periods for all 1 <= r <= t <= tmax");
  t3->add_option("--tmax", tmax, "Largest t")->capture_default_str();
  handlers["table3"] = [&] { return cmd_table3(tmax, g, err); };

  auto* lc = app.add_subcommand("lattice-check", "Check whether a sublattice of Z^n dominates");
  add_tr(lc);
  lc->add_option("--basis", basis, "Generating columns, e.g. \"18,0;5,1\"")->required();
  lc->add_option("--cap", lattice_cap, "Largest lattice index accepted")->capture_default_str();
  handlers["lattice-check"] = [&] { return cmd_lattice_check(t, r, basis, lattice_cap); };

  auto* ls = app.add_subcommand("lattice-search3d", "Sparsest dominating tower-form lattice in Z^3");
  add_tr(ls);
  ls->add_option("--cap", index_cap, "Largest index d to try")->capture_default_str();
  handlers["lattice-search3d"] = [&] { return cmd_lattice_search3d(t, r, index_cap, g, err); };

  auto* gm = app.add_subcommand("gamma", "Exact (t,r) broadcast domination number of a graph expression");
  gm->add_option("expr", expr, "Graph expression, e.g. \"P5*P5\"")->required();
  add_tr(gm);
  add_gamma_opts(gm);
  handlers["gamma"] = [&] { return cmd_gamma(expr, t, r, gamma_options(size_cap, budget)); };

  auto* rc = app.add_subcommand("reception", "Reception map of a broadcast set on a graph expression");
  rc->add_option("expr", expr, "Graph expression")->required();
  add_tr(rc);
  rc->add_option("--set", set_text, "Broadcast vertex labels, e.g. \"1,3;3,1\"")->required();
  handlers["reception"] = [&] { return cmd_reception(expr, t, r, set_text); };

  auto* l2 = app.add_subcommand("verify-lemma2", "Check gamma(C_{2(t-r+1)}) = 2");
  add_tr(l2);
  add_gamma_opts(l2);
  handlers["verify-lemma2"] = [&] { return cmd_verify_lemma2(t, r, gamma_options(size_cap, budget)); };

  auto* vt = app.add_subcommand("verify-torus", "Check the C_n x C_n product-bound counterexample");
  add_tr(vt);
  add_gamma_opts(vt);
  handlers["verify-torus"] = [&] { return cmd_verify_torus(t, r, gamma_options(size_cap, budget)); };

  auto* vs = app.add_subcommand("vizing-scan", "Evaluate product-domination inequalities on graph pairs");
  vs->add_option("--pairs", pairs_file, "File with one '<expr>, <expr>' pair per line")->required();
  add_tr(vs);
  add_gamma_opts(vs);
  handlers["vizing-scan"] = [&] { return cmd_vizing_scan(pairs_file, t, r, gamma_options(size_cap, budget)); };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    const auto* sub = app.get_subcommands().front();
    Report rep = handlers.at(sub->get_name())();
    const Format format = g.format == "json" ? Format::json : g.format == "csv" ? Format::csv : Format::text;
    if (g.timestamp) rep.json["generated_at"] = utc_timestamp();
    const std::string rendered = render(rep, format);
    if (g.output.empty()) {
      out << rendered;
    } else {
      std::ofstream file(g.output);
      if (!file) throw std::runtime_error("cannot write '" + g.output + "'");
      file << rendered;
    }
    return rep.exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace bdom::cli
