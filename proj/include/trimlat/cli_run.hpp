#pragma once

// Subcommand dispatch for the trimlat tool. Kept apart from cli.hpp so the
// light parsing/formatting helpers can be used without pulling in CLI11.

#include <algorithm>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "trimlat/cli.hpp"

namespace trimlat::cli {

namespace detail {

inline int guard_cap(int default_cap) {
  if (const char* env = std::getenv("TRIMLAT_MAX_N")) {
    int v = std::atoi(env);
    if (v > default_cap) return std::min(v, kMaxUniverse);
  }
  return default_cap;
}

inline bool admit(int n, const std::string& command, int cap, bool force,
                  std::ostream& err) {
  if (force || n <= cap) return true;
  err << command << ": instance has n=" << n << ", over this command's guard n <= "
      << cap << "; rerun with --force or raise TRIMLAT_MAX_N\n";
  return false;
}

inline nlohmann::json json_mask(Mask x) {
  nlohmann::json arr = nlohmann::json::array();
  for (int e : mask_elements(x)) arr.push_back(e + 1);
  return arr;
}

/// Random graph with max degree <= cap: shuffled candidate edges, added
/// while both endpoints have headroom.
inline Graph random_bounded_degree_graph(int n, int degree_cap,
                                         std::mt19937& rng) {
  std::vector<std::pair<int, int>> candidates;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) candidates.emplace_back(u, v);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, int>> edges;
  std::uniform_int_distribution<int> keep(0, 2);
  for (auto [u, v] : candidates) {
    if (degree[u] >= degree_cap || degree[v] >= degree_cap) continue;
    if (keep(rng) == 0) continue;
    edges.emplace_back(u, v);
    ++degree[u];
    ++degree[v];
  }
  return Graph(n, edges);
}

inline Graph complete_graph_union(int order, int components) {
  std::vector<std::pair<int, int>> edges;
  for (int c = 0; c < components; ++c)
    for (int u = 0; u < order; ++u)
      for (int v = u + 1; v < order; ++v)
        edges.emplace_back(c * order + u, c * order + v);
  return Graph(order * components, edges);
}

}  // namespace detail

inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
  CLI::App app{"exact set-cover/packing/partition counting on the subset "
               "lattice, with chromatic and domatic solvers"};
  app.require_subcommand(1);

  bool json = false;
  bool force = false;
  app.add_flag("--json", json, "emit one JSON document instead of records");
  app.add_flag("--force", force, "bypass instance size guards");

  std::string file;
  std::string method = "mis";
  std::string path = "auto";
  std::string family_name = "mindom";
  std::string kind_name = "cover";
  std::string op_name = "zeta";
  std::string delta_range = "3..8";
  int decide = 0, mim = 0;
  unsigned tuple_k = 1;
  int transform_n = 0;
  int bench_delta = 3, bench_max_n = 12, bench_random = 3;
  unsigned bench_seed = 1;

  CLI::App* chromatic = app.add_subcommand("chromatic", "chromatic number");
  chromatic->add_option("file", file, "graph file")->required();
  chromatic->add_option("--method", method, "mis | bipartite")
      ->check(CLI::IsMember({"mis", "bipartite"}));
  chromatic->add_option("--decide", decide, "decide k-colourability instead");

  CLI::App* domatic = app.add_subcommand("domatic", "domatic number");
  domatic->add_option("file", file, "graph file")->required();
  domatic->add_option("--decide", decide, "decide a k-packing instead");
  domatic->add_option("--mim", mim,
                      "meet-in-the-middle decision for even d");
  domatic->add_option("--path", path, "auto | filtered | unfiltered")
      ->check(CLI::IsMember({"auto", "filtered", "unfiltered"}));

  CLI::App* count = app.add_subcommand("count", "tuple count tables");
  count->add_option("file", file, "graph file")->required();
  count->add_option("-k,--k", tuple_k, "tuple length")->required();
  count->add_option("--kind", kind_name, "cover | partition | packing")
      ->check(CLI::IsMember({"cover", "partition", "packing"}));
  count->add_option("--family", family_name, "mindom | maxind | maxbip")
      ->check(CLI::IsMember({"mindom", "maxind", "maxbip"}));

  CLI::App* transform = app.add_subcommand("transform", "trimmed transforms");
  transform->add_option("file", file, "sparse table file")->required();
  transform->add_option("--op", op_name, "zeta | moebius")
      ->check(CLI::IsMember({"zeta", "moebius"}));
  transform->add_option("--n", transform_n, "universe size (default: max element)");

  CLI::App* bounds = app.add_subcommand("bounds", "per-vertex base tables");
  bounds->add_option("--delta", delta_range, "degree or range, e.g. 3..8");

  CLI::App* bench = app.add_subcommand("bench", "visited counts vs bounds");
  bench->add_option("--delta", bench_delta, "max degree of generated instances");
  bench->add_option("--max-n", bench_max_n, "largest instance size");
  bench->add_option("--random", bench_random, "random instances to add");
  bench->add_option("--seed", bench_seed, "generator seed");

  // let --json / --force appear after the subcommand name as well
  for (CLI::App* sub : {chromatic, domatic, count, transform, bounds, bench})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (chromatic->parsed()) {
      Graph g = parse_graph_file(file);
      if (!detail::admit(g.vertex_count(), "chromatic", detail::guard_cap(20),
                         force, err))
        return 2;
      ChromaticMethod m = method == "mis" ? ChromaticMethod::MaximalIndependent
                                          : ChromaticMethod::MaximalBipartite;
      double bound =
          bound_value(g.vertex_count(), g.max_degree(), BoundVariant::Chrom);
      SolverReport report;
      int number = 0;
      if (decide > 0) {
        report = m == ChromaticMethod::MaximalIndependent
                     ? chromatic_decision_mis(g, static_cast<unsigned>(decide))
                     : chromatic_decision_bipartite(
                           g, static_cast<unsigned>(decide));
      } else {
        number = chromatic_number(g, m, &report);
      }
      if (json) {
        nlohmann::json doc{{"command", "chromatic"},
                           {"n", g.vertex_count()},
                           {"delta", g.max_degree()},
                           {"method", method},
                           {"family_size", report.family_size},
                           {"visited", report.visited},
                           {"bound", bound}};
        if (decide > 0) {
          doc["k"] = decide;
          doc["answer"] = report.answer;
          if (report.witness) doc["witness"] = detail::json_mask(*report.witness);
        } else {
          doc["answer"] = number;
        }
        out << doc.dump() << "\n";
      } else {
        Record record{{"command", "chromatic"},
                      {"n", std::to_string(g.vertex_count())},
                      {"delta", std::to_string(g.max_degree())},
                      {"method", method}};
        if (decide > 0) {
          out << (report.answer ? "true" : "false") << "\n";
          record.emplace_back("k", std::to_string(decide));
          record.emplace_back("answer", report.answer ? "true" : "false");
          if (report.witness)
            record.emplace_back("witness", format_mask(*report.witness));
        } else {
          out << number << "\n";
          record.emplace_back("answer", std::to_string(number));
        }
        record.emplace_back("family_size", std::to_string(report.family_size));
        record.emplace_back("visited", std::to_string(report.visited));
        record.emplace_back("bound", format_real(bound));
        out << format_record(record) << "\n";
      }
      return 0;
    }

    if (domatic->parsed()) {
      Graph g = parse_graph_file(file);
      const bool use_mim = mim > 0;
      int cap = use_mim ? detail::guard_cap(16) : detail::guard_cap(20);
      if (!detail::admit(g.vertex_count(), "domatic", cap, force, err))
        return 2;
      double bound = bound_value(g.vertex_count(), g.max_degree(),
                                 BoundVariant::DomTrimmed);
      SolverReport report;
      int number = 0;
      if (use_mim) {
        domatic_meet_in_middle(g, static_cast<unsigned>(mim), &report,
                               force ? g.vertex_count() : cap);
      } else if (decide > 0) {
        DomaticPath p = path == "auto"       ? DomaticPath::Auto
                        : path == "filtered" ? DomaticPath::Filtered
                                             : DomaticPath::Unfiltered;
        report = domatic_packing_decision(g, static_cast<unsigned>(decide), p);
      } else {
        number = domatic_number(g, &report);
      }
      const bool is_decision = use_mim || decide > 0;
      if (json) {
        nlohmann::json doc{{"command", "domatic"},
                           {"n", g.vertex_count()},
                           {"delta", g.max_degree()},
                           {"family_size", report.family_size},
                           {"visited", report.visited},
                           {"bound", bound}};
        if (use_mim) doc["d"] = mim;
        if (decide > 0) doc["k"] = decide;
        if (is_decision) {
          doc["answer"] = report.answer;
          if (report.witness) doc["witness"] = detail::json_mask(*report.witness);
        } else {
          doc["answer"] = number;
        }
        out << doc.dump() << "\n";
      } else {
        Record record{{"command", "domatic"},
                      {"n", std::to_string(g.vertex_count())},
                      {"delta", std::to_string(g.max_degree())}};
        if (use_mim) record.emplace_back("d", std::to_string(mim));
        if (decide > 0) record.emplace_back("k", std::to_string(decide));
        if (is_decision) {
          out << (report.answer ? "true" : "false") << "\n";
          record.emplace_back("answer", report.answer ? "true" : "false");
          if (report.witness)
            record.emplace_back("witness", format_mask(*report.witness));
        } else {
          out << number << "\n";
          record.emplace_back("answer", std::to_string(number));
        }
        record.emplace_back("family_size", std::to_string(report.family_size));
        record.emplace_back("visited", std::to_string(report.visited));
        record.emplace_back("bound", format_real(bound));
        out << format_record(record) << "\n";
      }
      return 0;
    }

    if (count->parsed()) {
      Graph g = parse_graph_file(file);
      if (!detail::admit(g.vertex_count(), "count", detail::guard_cap(20),
                         force, err))
        return 2;
      SetFamily family = family_name == "mindom"
                             ? enumerate_minimal_dominating(g)
                         : family_name == "maxind"
                             ? enumerate_maximal_independent(g)
                             : enumerate_maximal_bipartite(g);
      TupleCounts counts = kind_name == "cover"
                               ? cover_numbers(family, tuple_k)
                           : kind_name == "partition"
                               ? partition_numbers(family, tuple_k)
                               : packing_numbers(family, tuple_k);
      if (json) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& [mask, value] : counts.table.entries())
          entries.push_back({{"mask", detail::json_mask(mask)},
                             {"value", value.get_str()}});
        nlohmann::json doc{{"command", "count"},
                           {"n", g.vertex_count()},
                           {"k", tuple_k},
                           {"kind", kind_name},
                           {"family", family_name},
                           {"family_size", family.size()},
                           {"visited", counts.visited},
                           {"entries", entries}};
        out << doc.dump() << "\n";
      } else {
        Record summary{{"command", "count"},
                       {"n", std::to_string(g.vertex_count())},
                       {"k", std::to_string(tuple_k)},
                       {"kind", kind_name},
                       {"family", family_name},
                       {"family_size", std::to_string(family.size())},
                       {"visited", std::to_string(counts.visited)}};
        out << format_record(summary) << "\n";
        for (const auto& [mask, value] : counts.table.entries())
          out << format_record(
                     {{"mask", format_mask(mask)}, {"value", value.get_str()}})
              << "\n";
      }
      return 0;
    }

    if (transform->parsed()) {
      std::ifstream in(file);
      if (!in) throw std::runtime_error("cannot open table file: " + file);
      int max_element = 0;
      std::vector<std::pair<Mask, mpz_class>> raw;
      std::string line;
      int line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        Record record = parse_record(line);
        std::optional<Mask> mask;
        std::optional<mpz_class> value;
        for (const auto& [key, text] : record) {
          if (key == "mask") mask = parse_mask_text(text);
          if (key == "value") value = mpz_class(text);
        }
        if (!mask || !value)
          throw ParseError(line_no, "expected mask={..} value=<int>");
        raw.emplace_back(*mask, std::move(*value));
        for (int e : mask_elements(*mask)) max_element = std::max(max_element, e + 1);
      }
      int n = transform_n > 0 ? transform_n : max_element;
      check_universe_size(n);
      if (!detail::admit(n, "transform", detail::guard_cap(24), force, err))
        return 2;
      SparseTable input(n);
      for (auto& [mask, value] : raw) input.set(mask, std::move(value));
      TransformResult result = op_name == "zeta" ? trimmed_zeta(input)
                                                 : trimmed_moebius(input);
      if (json) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& [mask, value] : result.table.entries())
          entries.push_back({{"mask", detail::json_mask(mask)},
                             {"value", value.get_str()}});
        nlohmann::json doc{{"command", "transform"},
                           {"op", op_name},
                           {"n", n},
                           {"support", input.support().size()},
                           {"visited", result.visited},
                           {"entries", entries}};
        out << doc.dump() << "\n";
      } else {
        Record summary{{"command", "transform"},
                       {"op", op_name},
                       {"n", std::to_string(n)},
                       {"support", std::to_string(input.support().size())},
                       {"visited", std::to_string(result.visited)}};
        out << format_record(summary) << "\n";
        for (const auto& [mask, value] : result.table.entries())
          out << format_record(
                     {{"mask", format_mask(mask)}, {"value", value.get_str()}})
              << "\n";
      }
      return 0;
    }

    if (bounds->parsed()) {
      int lo = 0, hi = 0;
      auto dots = delta_range.find("..");
      try {
        if (dots == std::string::npos) {
          lo = hi = std::stoi(delta_range);
        } else {
          lo = std::stoi(delta_range.substr(0, dots));
          hi = std::stoi(delta_range.substr(dots + 2));
        }
      } catch (const std::exception&) {
        err << "bounds: cannot parse --delta '" << delta_range << "'\n";
        return 2;
      }
      if (lo < 1 || hi < lo) {
        err << "bounds: --delta wants 1 <= lo <= hi\n";
        return 2;
      }
      nlohmann::json rows = nlohmann::json::array();
      for (int d = lo; d <= hi; ++d) {
        double dom = bound_base(d, BoundVariant::Dom);
        double trimmed = bound_base(d, BoundVariant::DomTrimmed);
        double chrom = bound_base(d, BoundVariant::Chrom);
        if (json) {
          rows.push_back({{"delta", d},
                          {"dominating_base", dom},
                          {"domatic_base", trimmed},
                          {"chromatic_base", chrom}});
        } else {
          out << format_record({{"delta", std::to_string(d)},
                                {"dominating_base", format_base(dom)},
                                {"domatic_base", format_base(trimmed)},
                                {"chromatic_base", format_base(chrom)}})
              << "\n";
        }
      }
      if (json)
        out << nlohmann::json{{"command", "bounds"}, {"rows", rows}}.dump()
            << "\n";
      return 0;
    }

    if (bench->parsed()) {
      if (bench_delta < 1 || bench_max_n < bench_delta + 1) {
        err << "bench: wants --delta >= 1 and --max-n >= delta + 1\n";
        return 2;
      }
      if (!detail::admit(bench_max_n, "bench", detail::guard_cap(16), force,
                         err))
        return 2;
      std::vector<std::pair<std::string, Graph>> instances;
      int order = bench_delta + 1;
      for (int m = 1; m * order <= bench_max_n; ++m)
        instances.emplace_back(
            "union_k" + std::to_string(order) + "_x" + std::to_string(m),
            detail::complete_graph_union(order, m));
      std::mt19937 rng(bench_seed);
      for (int i = 0; i < bench_random; ++i)
        instances.emplace_back(
            "random_" + std::to_string(i),
            detail::random_bounded_degree_graph(bench_max_n, bench_delta, rng));

      nlohmann::json rows = nlohmann::json::array();
      for (const auto& [name, g] : instances) {
        const int n = g.vertex_count();
        const int delta = g.max_degree();
        SetFamily mindom = enumerate_minimal_dominating(g);
        TupleCounts unfiltered = partition_numbers(mindom, 1);
        TupleCounts filtered =
            partition_numbers(mindom, 1, complement_dominates_filter(g));
        std::uint64_t upset = upper_closure(enumerate_maximal_bipartite(g)).size();
        double bound_dom = bound_value(n, delta, BoundVariant::Dom);
        double bound_trimmed = bound_value(n, delta, BoundVariant::DomTrimmed);
        double bound_chrom = bound_value(n, delta, BoundVariant::Chrom);
        if (json) {
          rows.push_back({{"instance", name},
                          {"n", n},
                          {"delta", delta},
                          {"family_size", mindom.size()},
                          {"visited", unfiltered.visited},
                          {"visited_filtered", filtered.visited},
                          {"bound_dom", bound_dom},
                          {"bound_dom_trimmed", bound_trimmed},
                          {"upset_maxbip", upset},
                          {"bound_chrom", bound_chrom}});
        } else {
          out << format_record(
                     {{"instance", name},
                      {"n", std::to_string(n)},
                      {"delta", std::to_string(delta)},
                      {"family_size", std::to_string(mindom.size())},
                      {"visited", std::to_string(unfiltered.visited)},
                      {"visited_filtered", std::to_string(filtered.visited)},
                      {"bound_dom", format_real(bound_dom)},
                      {"bound_dom_trimmed", format_real(bound_trimmed)},
                      {"upset_maxbip", std::to_string(upset)},
                      {"bound_chrom", format_real(bound_chrom)}})
              << "\n";
        }
      }
      if (json)
        out << nlohmann::json{{"command", "bench"}, {"instances", rows}}.dump()
            << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace trimlat::cli
