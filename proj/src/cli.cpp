#include "turan/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "turan/cache.hpp"
#include "turan/cliques.hpp"
#include "turan/constructions.hpp"
#include "turan/errors.hpp"
#include "turan/formulas.hpp"
#include "turan/graph.hpp"
#include "turan/packing.hpp"
#include "turan/search.hpp"
#include "turan/verify.hpp"

namespace turan {

namespace {

using nlohmann::json;

// Usage-level failure tied to a named argument.
class UsageError : public Error {
 public:
  UsageError(const std::string& arg, const std::string& what) : Error(arg + ": " + what) {}
};

Graph parse_graph_arg(const std::string& arg, const std::string& text) {
  try {
    return graph6_decode(text);
  } catch (const Error& e) {
    throw UsageError(arg, e.what());
  }
}

PatternGraph parse_pattern_arg(const std::optional<std::string>& text) {
  if (!text) return PatternGraph::p3();
  try {
    return PatternGraph(graph6_decode(*text));
  } catch (const Error& e) {
    throw UsageError("--pattern", e.what());
  }
}

VertexSet parse_vertex_list(const std::string& text, int order) {
  Word bits = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--through", "'" + item + "' is not a vertex index");
    }
    if (v < 0 || v >= order) throw UsageError("--through", "vertex " + item + " outside the graph");
    bits |= Word{1} << v;
  }
  return VertexSet(bits);
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("--input", "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

json search_json(const SearchResult& r, std::string_view source) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(w.form);
  json out = {
      {"n", r.n},   {"k", r.k},          {"s", r.s},           {"pattern", r.pattern},
      {"value", r.value}, {"witnesses", witnesses}, {"source", source},
  };
  if (source != "cache") {
    out["classes_visited"] = r.classes_visited;
    out["nodes_pruned"] = r.nodes_pruned;
  }
  return out;
}

void print_elapsed(std::ostream& err, std::chrono::nanoseconds ns) {
  err << "elapsed_ms " << std::chrono::duration_cast<std::chrono::milliseconds>(ns).count() << '\n';
}

struct TableRow {
  int n;
  int k;
  int s;
  std::optional<std::int64_t> formula;
  std::optional<std::int64_t> construction;
  std::optional<std::int64_t> exact;
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;
};

TableRow table_row(int n, int k, int s, int exact_max_n, int jobs) {
  TableRow row{n, k, s, {}, {}, {}, {}, {}};
  if (n >= 3 * k && s >= 3) row.formula = conjecture_value(n, k, s);
  if (n >= k) {
    std::int64_t best = static_cast<std::int64_t>(count_cliques(build_conjecture_join(n, k), s));
    if (n >= 3 * k - 1) {
      best = std::max(best, static_cast<std::int64_t>(count_cliques(build_conjecture_union(n, k), s)));
    }
    row.construction = best;
  }
  if (n <= exact_max_n && n <= kMaxEnumerationOrder) row.exact = exact_ex(n, s, k, PatternGraph::p3(), jobs).value;
  if (n >= 3 * k) {
    row.lower = thm11_lower(n, k, s, 3, ex_p3_closed).value;
    if (s >= 1) row.upper = thm12_upper(n, k, s, 3, ex_p3_closed);
  }
  return row;
}

std::string csv_cell(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); }
json json_cell(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Turan numbers of cliques in kP3-free graphs", "turan"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  // formula
  auto* formula = app.add_subcommand("formula", "evaluate a closed formula");
  formula->require_subcommand(1);
  int fn = 0, fk = 0, fs = 0, fa = 0;
  auto* f_cmd = formula->add_subcommand("f", "f(n,k,s)");
  f_cmd->add_option("n", fn)->required();
  f_cmd->add_option("k", fk)->required();
  f_cmd->add_option("s", fs)->required();
  auto* g_cmd = formula->add_subcommand("g", "g(k,s)");
  g_cmd->add_option("k", fk)->required();
  g_cmd->add_option("s", fs)->required();
  auto* luo_cmd = formula->add_subcommand("luo", "f_s(n,k,a)");
  luo_cmd->add_option("n", fn)->required();
  luo_cmd->add_option("k", fk)->required();
  luo_cmd->add_option("a", fa)->required();
  luo_cmd->add_option("s", fs)->required();
  auto* conj_cmd = formula->add_subcommand("conjecture", "max{C(3k-1,s), f(n,k,s)}");
  conj_cmd->add_option("n", fn)->required();
  conj_cmd->add_option("k", fk)->required();
  conj_cmd->add_option("s", fs)->required();
  auto* bounds_cmd = formula->add_subcommand("bounds", "lower/upper bound sums for H = P3");
  bounds_cmd->add_option("n", fn)->required();
  bounds_cmd->add_option("k", fk)->required();
  bounds_cmd->add_option("s", fs)->required();
  std::string convention = "standard";
  bounds_cmd->add_option("--convention", convention, "binomial convention (diagnostic)")
      ->check(CLI::IsMember({"standard", "zero-top-one"}));

  // construct
  auto* construct = app.add_subcommand("construct", "build an extremal construction");
  construct->require_subcommand(1);
  int cn = 0, ck = 0, cc = 0, s_from = 1, s_to = 6;
  std::string emit = "graph6";
  auto* c_union = construct->add_subcommand("union", "K_{3k-1} u M_{n-3k+1}");
  c_union->add_option("--n", cn)->required();
  c_union->add_option("--k", ck)->required();
  auto* c_join = construct->add_subcommand("join", "K_{k-1} + M_{n-k+1}");
  c_join->add_option("--n", cn)->required();
  c_join->add_option("--k", ck)->required();
  auto* c_fan = construct->add_subcommand("fan", "fan F_c");
  c_fan->add_option("--c", cc)->required();
  for (auto* sub : {c_union, c_join, c_fan}) {
    sub->add_option("--emit", emit)->check(CLI::IsMember({"graph6", "stats"}));
    sub->add_option("--s-from", s_from);
    sub->add_option("--s-to", s_to);
  }

  // count
  auto* count = app.add_subcommand("count", "count s-cliques");
  std::string graph_text;
  int count_s = 0;
  std::optional<std::string> through;
  count->add_option("--graph", graph_text, "graph6")->required();
  count->add_option("--s", count_s)->required();
  count->add_option("--through", through, "comma-separated root vertices");

  // pack
  auto* pack = app.add_subcommand("pack", "packing number or kH test");
  std::optional<std::string> pattern_text;
  std::optional<int> pack_k;
  pack->add_option("--graph", graph_text, "graph6")->required();
  pack->add_option("--pattern", pattern_text, "graph6 of H (default P3)");
  pack->add_option("--k", pack_k);

  // exact
  auto* exact = app.add_subcommand("exact", "ex(n, K_s, kH) by exhaustive search");
  int en = 0, ek = 0, es = 0, jobs = 1;
  std::optional<std::string> cache_path, input_path;
  exact->add_option("--n", en)->required();
  exact->add_option("--k", ek)->required();
  exact->add_option("--s", es)->required();
  exact->add_option("--pattern", pattern_text, "graph6 of H (default P3)");
  exact->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  exact->add_option("--cache", cache_path);
  exact->add_option("--input", input_path, "graph6 stream used instead of enumeration ('-' = stdin)");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "stream kH-free classes as graph6");
  std::optional<int> enum_k;
  enumerate->add_option("--n", en)->required();
  enumerate->add_option("--k", enum_k, "restrict to kH-free graphs");
  enumerate->add_option("--pattern", pattern_text, "graph6 of H (default P3)");
  enumerate->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  // verify
  auto* verify = app.add_subcommand("verify", "check the conjecture or the bound sandwich");
  verify->require_subcommand(1);
  std::string format = "json";
  auto* v_conj = verify->add_subcommand("conjecture", "value and extremal families");
  v_conj->add_option("--n", en)->required();
  v_conj->add_option("--k", ek)->required();
  v_conj->add_option("--s", es)->required();
  v_conj->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  v_conj->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  auto* v_bounds = verify->add_subcommand("bounds", "lower <= exact <= upper");
  v_bounds->add_option("--n", en)->required();
  v_bounds->add_option("--k", ek)->required();
  v_bounds->add_option("--s", es)->required();
  v_bounds->add_option("--pattern", pattern_text)->required();
  v_bounds->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  // table
  auto* table = app.add_subcommand("table", "formula vs construction vs exact, one row per n");
  int n_from = 0, n_to = 0, exact_max_n = 10;
  table->add_option("--k", ek)->required();
  table->add_option("--s", es)->required();
  table->add_option("--n-from", n_from)->required();
  table->add_option("--n-to", n_to)->required();
  table->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  table->add_option("--exact-max-n", exact_max_n, "largest n for the exact column");
  table->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (formula->parsed()) {
      if (f_cmd->parsed()) out << f_formula(fn, fk, fs) << '\n';
      if (g_cmd->parsed()) out << g_threshold(fk, fs) << '\n';
      if (luo_cmd->parsed()) out << luo_f(fn, fk, fa, fs) << '\n';
      if (conj_cmd->parsed()) out << conjecture_value(fn, fk, fs) << '\n';
      if (bounds_cmd->parsed()) {
        const auto conv = convention == "zero-top-one" ? BinomialConvention::zero_top_one : BinomialConvention::standard;
        const LowerBound lo = thm11_lower(fn, fk, fs, 3, ex_p3_closed, conv);
        json j = {{"convention", convention},
                  {"lower", lo.value},
                  {"lower_union", lo.union_branch},
                  {"lower_join", lo.join_branch}};
        j["upper"] = fs >= 1 ? json(thm12_upper(fn, fk, fs, 3, ex_p3_closed, conv)) : json(nullptr);
        out << j.dump() << '\n';
      }
      return kExitOk;
    }

    if (construct->parsed()) {
      Graph g;
      if (c_union->parsed()) g = build_conjecture_union(cn, ck);
      if (c_join->parsed()) g = build_conjecture_join(cn, ck);
      if (c_fan->parsed()) g = make_fan(cc);
      if (emit == "graph6") {
        out << graph6_encode(g) << '\n';
      } else {
        out << "order " << g.order() << '\n' << "edges " << g.edge_count() << '\n';
        for (int s = s_from; s <= s_to; ++s) out << "cliques s=" << s << ' ' << count_cliques(g, s) << '\n';
      }
      return kExitOk;
    }

    if (count->parsed()) {
      const Graph g = parse_graph_arg("--graph", graph_text);
      if (count_s < 0) throw UsageError("--s", "must be nonnegative");
      if (through) {
        out << count_cliques_through(g, count_s, parse_vertex_list(*through, g.order())) << '\n';
      } else {
        out << count_cliques(g, count_s) << '\n';
      }
      return kExitOk;
    }

    if (pack->parsed()) {
      const Graph g = parse_graph_arg("--graph", graph_text);
      const PatternGraph h = parse_pattern_arg(pattern_text);
      if (pack_k) {
        if (*pack_k < 0) throw UsageError("--k", "must be nonnegative");
        out << (has_k_disjoint(g, h, *pack_k) ? "true" : "false") << '\n';
      } else {
        out << max_packing(g, h) << '\n';
      }
      return kExitOk;
    }

    if (exact->parsed()) {
      const PatternGraph h = parse_pattern_arg(pattern_text);
      std::optional<ResultCache> cache;
      if (cache_path && !input_path) {
        cache.emplace(*cache_path);
        if (auto hit = cache->get(en, ek, es, h.id())) {
          if (cache->warnings() > 0) err << "cache: skipped " << cache->warnings() << " corrupt line(s)\n";
          SearchResult r;
          r.n = hit->n;
          r.k = hit->k;
          r.s = hit->s;
          r.pattern = hit->pattern;
          r.value = hit->value;
          for (auto& w : hit->witnesses) r.witnesses.push_back({w});
          out << search_json(r, "cache").dump() << '\n';
          return kExitOk;
        }
        if (cache->warnings() > 0) err << "cache: skipped " << cache->warnings() << " corrupt line(s)\n";
      }
      SearchResult r;
      if (input_path) {
        const auto graphs = graph6_decode_stream(read_input(*input_path));
        r = exact_ex_from_graphs(graphs, en, es, ek, h);
      } else {
        r = exact_ex(en, es, ek, h, jobs);
      }
      if (cache) {
        CacheRecord rec{r.n, r.k, r.s, r.pattern, r.value, {}, Method::enumeration, std::string(kToolVersion)};
        for (const auto& w : r.witnesses) rec.witnesses.push_back(w.form);
        cache->put(rec);
      }
      out << search_json(r, input_path ? "input" : "search").dump() << '\n';
      print_elapsed(err, r.elapsed);
      return kExitOk;
    }

    if (enumerate->parsed()) {
      const PatternGraph h = parse_pattern_arg(pattern_text);
      const KeepPredicate keep = enum_k ? kh_free(h, *enum_k) : KeepPredicate([](const Graph&) { return true; });
      std::vector<std::string> lines;
      std::mutex mutex;
      const auto stats = enumerate_graphs(
          en, keep,
          [&](const Graph& g) {
            std::string line = graph6_encode(g);
            std::lock_guard lock(mutex);
            lines.push_back(std::move(line));
          },
          jobs);
      std::sort(lines.begin(), lines.end());
      for (const auto& line : lines) out << line << '\n';
      err << "classes " << stats.classes_visited << " pruned " << stats.nodes_pruned << '\n';
      return kExitOk;
    }

    if (v_conj->parsed()) {
      const ConjectureReport r = verify_conjecture(en, ek, es, jobs);
      if (format == "csv") {
        out << csv_header_conjecture() << '\n' << to_csv(r) << '\n';
      } else {
        out << to_json(r).dump() << '\n';
      }
      const bool ok = r.value_ok && r.characterization_ok;
      return ok ? kExitOk : kExitCheckFailed;
    }

    if (v_bounds->parsed()) {
      const BoundReport r = verify_bounds(en, ek, es, parse_pattern_arg(pattern_text), jobs);
      out << to_json(r).dump() << '\n';
      return r.chain_ok ? kExitOk : kExitCheckFailed;
    }

    if (table->parsed()) {
      if (n_from > n_to) throw UsageError("--n-from", "exceeds --n-to");
      bool ok = true;
      json rows = json::array();
      if (format == "csv") out << "n,k,s,formula,construction,exact,lower,upper\n";
      for (int n = n_from; n <= n_to; ++n) {
        const TableRow row = table_row(n, ek, es, exact_max_n, jobs);
        if (row.formula && row.construction && *row.formula != *row.construction) ok = false;
        if (row.exact && row.lower && row.upper && (*row.exact < *row.lower || *row.exact > *row.upper)) ok = false;
        if (format == "csv") {
          out << row.n << ',' << row.k << ',' << row.s << ',' << csv_cell(row.formula) << ','
              << csv_cell(row.construction) << ',' << csv_cell(row.exact) << ',' << csv_cell(row.lower) << ','
              << csv_cell(row.upper) << '\n';
        } else {
          rows.push_back(json{{"n", row.n},
                              {"k", row.k},
                              {"s", row.s},
                              {"formula", json_cell(row.formula)},
                              {"construction", json_cell(row.construction)},
                              {"exact", json_cell(row.exact)},
                              {"lower", json_cell(row.lower)},
                              {"upper", json_cell(row.upper)}});
        }
      }
      if (format == "json") out << rows.dump() << '\n';
      return ok ? kExitOk : kExitCheckFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace turan
