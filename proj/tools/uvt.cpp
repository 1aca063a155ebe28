// uvt: classify graphs as Cayley / uniformly vertex-transitive / vertex-transitive.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "uvt/census.hpp"
#include "uvt/named_graph.hpp"
#include "uvt/report.hpp"
#include "uvt/sha256.hpp"

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::filesystem::path default_cache_dir() {
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "uvt";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "uvt";
  return ".uvt-cache";
}

std::string summary_csv(const uvt::ClassificationReport& r) {
  std::string omega = r.omega_id ? std::to_string(*r.omega_id) : "";
  return "id,n,aut_order,vt,cayley,uvt,omega_id\n" + r.id + ',' + std::to_string(r.n) + ',' + r.aut_order + ',' +
         (r.vertex_transitive ? "yes" : "no") + ',' + uvt::to_string(r.cayley) + ',' + uvt::to_string(r.uvt) + ',' +
         omega + '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley / uniformly vertex-transitive / vertex-transitive graph classifier"};
  app.require_subcommand(1);
  app.fallthrough();

  uvt::Budgets budgets;
  std::size_t threads = 1;
  std::string format;
  std::string cache_dir;
  bool no_cache = false;
  bool pretty = false;

  app.add_option("--budget-clique", budgets.clique_nodes, "Clique search node budget")->envname("UVT_BUDGET_CLIQUE")->capture_default_str();
  app.add_option("--budget-cover", budgets.cover_nodes, "k-cover search node budget")->envname("UVT_BUDGET_COVER")->capture_default_str();
  app.add_option("--budget-regular", budgets.regular_nodes, "Regular-subgroup search node budget")->envname("UVT_BUDGET_REGULAR")->capture_default_str();
  app.add_option("--max-group", budgets.max_group, "Largest group enumerated element by element")->envname("UVT_MAX_GROUP")->capture_default_str();
  app.add_option("--threads", threads, "Census worker threads")->envname("UVT_THREADS")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--format", format, "Output format (json or csv)")->envname("UVT_FORMAT")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cache", cache_dir, "Census cache directory")->envname("UVT_CACHE");
  app.add_flag("--no-cache", no_cache, "Disable the census cache")->envname("UVT_NO_CACHE");
  app.add_flag("--pretty", pretty, "Indent JSON output");

  auto* analyze = app.add_subcommand("analyze", "Classify one graph");
  std::string input;
  bool no_factorizing = false;
  std::size_t vertex_cap = uvt::kDefaultVertexCap;
  analyze->add_option("graph", input, "graph6/sparse6 line or construction (petersen, kneser:n:k, johnson:n:k, "
                                      "circulant:n:a,b, cycle:n, complete:n, bipartite:a:b, line:<g>, complement:<g>)")
      ->required();
  analyze->add_flag("--no-factorizing", no_factorizing, "Skip the block-system search when the verdict is already known");
  analyze->add_option("--vertex-cap", vertex_cap, "Largest accepted vertex count")->check(CLI::Range(1, 128));

  auto* census = app.add_subcommand("census", "Count verdicts over a graph6 file");
  std::string census_file;
  std::string log_file;
  std::optional<std::size_t> census_k;
  census->add_option("file", census_file, "graph6/sparse6 file, one graph per line")->required();
  census->add_option("--log", log_file, "Write per-graph JSON lines here");
  census->add_option("--kuvt", census_k, "Also decide k-uniform vertex-transitivity for this k")->check(CLI::PositiveNumber);
  census->add_option("--vertex-cap", vertex_cap, "Largest accepted vertex count")->check(CLI::Range(1, 128));

  auto* group = app.add_subcommand("group", "Query a permutation group given as JSON generators");
  std::string group_file;
  std::string query;
  std::size_t k = 0;
  group->add_option("file", group_file, "JSON {\"degree\": n, \"generators\": [[...], ...]}")->required();
  group->add_option("query", query, "order | uniform | omega | blocks | kuvt")
      ->required()
      ->check(CLI::IsMember({"order", "uniform", "omega", "blocks", "kuvt"}));
  group->add_option("k", k, "multiplicity for kuvt")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  const int indent = pretty ? 2 : -1;
  try {
    if (*analyze) {
      uvt::Graph g;
      try {
        g = uvt::named_graph(input, vertex_cap);
      } catch (const std::exception& e) {
        throw InputError("'" + input + "' is neither a known construction nor valid graph6/sparse6: " + e.what());
      }
      uvt::ClassifyOptions opts{budgets, !no_factorizing};
      auto report = uvt::is_uvt(g, opts, input);
      if (format == "csv")
        std::cout << summary_csv(report);
      else
        std::cout << uvt::to_json(report).dump(indent) << '\n';
      return 0;
    }

    if (*census) {
      std::vector<uvt::GraphRecord> records;
      try {
        records = uvt::read_graph_file(census_file);
      } catch (const std::exception& e) {
        throw InputError(e.what());
      }
      uvt::CensusOptions opts;
      opts.classify.budgets = budgets;
      opts.classify.factorizing_evidence = true;
      opts.threads = threads;
      opts.kuvt = census_k;
      opts.vertex_cap = vertex_cap;
      std::optional<uvt::ReportCache> cache;
      if (!no_cache) cache.emplace(cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir), uvt::sha256_hex);
      auto entries = uvt::run_census(records, opts, cache ? &*cache : nullptr);
      for (const auto& e : entries)
        if (!e.report) std::cerr << "line " << e.line_number << ": " << e.error << '\n';
      auto rows = uvt::tabulate(entries);
      if (!log_file.empty()) {
        std::ofstream out(log_file);
        if (!out) throw InputError("cannot write " + log_file);
        out << uvt::census_log(entries);
      }
      if (format == "json") {
        uvt::Json j = uvt::Json::array();
        for (const auto& r : rows)
          j.push_back({{"n", r.n}, {"vt", r.vt}, {"non_cayley", r.non_cayley}, {"uvt", r.uvt}, {"non_uvt", r.non_uvt}, {"unknown", r.unknown}});
        std::cout << j.dump(indent) << '\n';
      } else {
        std::cout << uvt::to_csv(rows);
      }
      return 0;
    }

    if (*group) {
      std::optional<uvt::PermGroup> g;
      try {
        std::ifstream in(group_file);
        if (!in) throw std::runtime_error("cannot open " + group_file);
        g = uvt::group_from_json(uvt::Json::parse(in));
      } catch (const std::exception& e) {
        throw InputError(e.what());
      }
      uvt::Json out;
      out["group"] = uvt::to_json(*g);
      out["transitive"] = g->is_transitive();
      if (query != "order" && query != "blocks" && !g->is_transitive()) throw InputError(query + " needs a transitive group");
      if (query == "uniform" || query == "omega") {
        auto r = uvt::is_uniformly_transitive(*g, budgets);
        if (query == "omega") {
          out["omega_id"] = uvt::optional_size(r.omega_id);
          out["omega"] = r.omega_id ? uvt::Json(*r.omega_id + 1) : uvt::Json(nullptr);
          out["omega_deficit"] = uvt::optional_long(r.omega_deficit(g->degree()));
          out["omega_lower"] = r.omega_lower + 1;
          out["omega_upper"] = r.omega_upper + 1;
          out["verdict"] = uvt::to_string(r.verdict);
          if (!r.reason.empty()) out["reason"] = r.reason;
        } else {
          out["uniform"] = uvt::to_json(r, g->degree());
        }
      } else if (query == "blocks") {
        uvt::Json systems = uvt::Json::array();
        if (g->is_transitive())
          for (const auto& b : uvt::all_block_systems(*g, budgets.block_degree_cap)) {
            auto j = uvt::to_json(b);
            auto q = uvt::block_quotient(*g, b);
            j["quotient_order"] = q.quotient().order_string();
            j["fixer_order"] = q.fixer().order_string();
            systems.push_back(j);
          }
        out["block_systems"] = systems;
        if (g->is_transitive()) {
          auto f = uvt::find_factorizing_block_system(*g, budgets);
          out["factorizing"] = f.witness ? uvt::to_json(*f.witness) : uvt::Json(nullptr);
        }
      } else if (query == "kuvt") {
        if (k == 0) throw InputError("kuvt needs k >= 1");
        out["k"] = k;
        out["kuvt"] = uvt::to_json(uvt::k_uvt(*g, k, budgets));
      }
      std::cout << out.dump(indent) << '\n';
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const uvt::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const uvt::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
