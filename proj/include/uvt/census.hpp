#ifndef UVT_CENSUS_HPP
#define UVT_CENSUS_HPP

// Batch classification of graph6 files into per-order count rows.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "uvt/graph6.hpp"
#include "uvt/report.hpp"

namespace uvt {

struct CensusRow {
  std::size_t n = 0;
  std::size_t vt = 0;
  std::size_t non_cayley = 0;
  std::size_t uvt = 0;
  std::size_t non_uvt = 0;
  std::size_t unknown = 0;

  bool consistent() const { return uvt + non_uvt + unknown == non_cayley && non_cayley <= vt; }
  bool operator==(const CensusRow&) const = default;
};

inline constexpr std::string_view kCensusHeader = "n,vt,non_cayley,uvt,non_uvt,unknown";

inline std::string to_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << kCensusHeader << '\n';
  for (const auto& r : rows)
    out << r.n << ',' << r.vt << ',' << r.non_cayley << ',' << r.uvt << ',' << r.non_uvt << ',' << r.unknown << '\n';
  return out.str();
}

using Digest = std::function<std::string(std::string_view)>;

/// Content-addressed store of report JSON, one file per key.
class ReportCache {
 public:
  ReportCache(std::filesystem::path dir, Digest digest) : dir_(std::move(dir)), digest_(std::move(digest)) {
    std::filesystem::create_directories(dir_);
  }

  std::string key(std::string_view graph6, const Budgets& b) const {
    std::ostringstream material;
    material << graph6 << '|' << b.clique_nodes << '|' << b.cover_nodes << '|' << b.regular_nodes << '|'
             << b.max_group << '|' << b.block_degree_cap;
    return digest_(material.str());
  }

  std::optional<Json> load(const std::string& key) const {
    std::ifstream in(path(key));
    if (!in) return std::nullopt;
    try {
      return Json::parse(in);
    } catch (const Json::exception&) {
      return std::nullopt;
    }
  }

  void store(const std::string& key, const Json& report) const {
    auto target = path(key);
    auto tmp = target;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
      std::ofstream out(tmp);
      out << report.dump();
    }
    std::filesystem::rename(tmp, target);
  }

 private:
  std::filesystem::path path(const std::string& key) const { return dir_ / (key + ".json"); }

  std::filesystem::path dir_;
  Digest digest_;
};

/// Checks a cached report against the graph: every claimed witness must be
/// made of automorphisms and pass its sum or regularity test.
inline bool reverify_cached(const Graph& g, const Json& report) {
  try {
    const std::size_t n = g.order();
    if (report.at("n").get<std::size_t>() != n) return false;
    auto perms_of = [&](const Json& arr) {
      std::vector<Perm> out;
      for (const auto& p : arr) {
        auto perm = Perm::from_images(p.get<std::vector<int>>());
        if (perm.degree() != n || !is_automorphism(g, perm)) throw std::runtime_error("not an automorphism");
        out.push_back(std::move(perm));
      }
      return out;
    };
    auto aut = PermGroup(n, perms_of(report.at("aut_generators")));
    if (aut.order_string() != report.at("aut_order").get<std::string>()) return false;
    if (aut.is_transitive() != report.at("vertex_transitive").get<bool>()) return false;
    const auto& cayley = report.at("cayley");
    if (cayley.at("verdict") == "yes") {
      PermGroup r(n, perms_of(cayley.at("regular_subgroup_generators")));
      if (!r.is_regular()) return false;
    }
    const auto& uvt = report.at("uvt");
    if (uvt.at("verdict") == "yes") {
      const auto& w = uvt.at("witness");
      auto perms = perms_of(w.at("perms"));
      if (check_k_uniform_sum(perms, n, w.at("k").get<std::size_t>()) != UniformSumResult::kOk) return false;
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

struct CensusEntry {
  std::size_t line_number = 0;
  std::string text;
  std::optional<std::size_t> n;  // known whenever the size prefix parsed
  std::optional<Json> report;
  std::string error;
  bool cache_hit = false;
};

struct CensusOptions {
  ClassifyOptions classify;
  std::size_t threads = 1;
  std::optional<std::size_t> kuvt;  // also decide k-uniform transitivity for this k
  std::size_t vertex_cap = kDefaultVertexCap;
};

namespace detail {

inline std::optional<std::size_t> declared_order(const std::string& text) {
  std::string_view s = text;
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  if (s.starts_with(">>sparse6<<")) s.remove_prefix(11);
  if (!s.empty() && s.front() == ':') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  try {
    SixBitReader r(s, 0);
    return r.read_size();
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline CensusEntry classify_entry(const GraphRecord& rec, const CensusOptions& options, const ReportCache* cache) {
  CensusEntry e{rec.line_number, rec.text, declared_order(rec.text), std::nullopt, {}, false};
  try {
    Graph g = parse_graph_line(rec.text, options.vertex_cap);
    e.n = g.order();
    std::string key;
    if (cache) {
      key = cache->key(rec.text, options.classify.budgets);
      if (auto hit = cache->load(key); hit && reverify_cached(g, *hit)) {
        e.report = std::move(*hit);
        e.cache_hit = true;
        return e;
      }
    }
    auto report = is_uvt(g, options.classify, rec.text);
    Json j = to_json(report);
    if (options.kuvt && report.vertex_transitive) {
      auto aut = automorphism_group(g);
      j["kuvt"] = to_json(k_uvt(aut, *options.kuvt, options.classify.budgets));
      j["kuvt"]["k"] = *options.kuvt;
    }
    if (cache) cache->store(key, j);
    e.report = std::move(j);
  } catch (const std::exception& ex) {
    e.error = ex.what();
  }
  return e;
}

}  // namespace detail

/// Classifies every record with a pool of worker threads. Results are in
/// input order regardless of completion order.
inline std::vector<CensusEntry> run_census(const std::vector<GraphRecord>& records, const CensusOptions& options,
                                           const ReportCache* cache = nullptr) {
  std::vector<CensusEntry> out(records.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < records.size();) out[i] = detail::classify_entry(records[i], options, cache);
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, records.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return out;
}

/// One row per vertex count, ascending. The non-Cayley column counts every
/// vertex-transitive graph not shown to be Cayley; entries that failed count
/// as unknown. Entries whose order is unreadable are left out.
inline std::vector<CensusRow> tabulate(const std::vector<CensusEntry>& entries) {
  std::map<std::size_t, CensusRow> rows;
  for (const auto& e : entries) {
    if (!e.n) continue;
    auto& row = rows[*e.n];
    row.n = *e.n;
    if (!e.report) {
      ++row.vt;
      ++row.non_cayley;
      ++row.unknown;
      continue;
    }
    const auto& r = *e.report;
    if (!r.at("vertex_transitive").get<bool>()) continue;
    ++row.vt;
    if (r.at("cayley").at("verdict") == "yes") continue;
    ++row.non_cayley;
    const auto verdict = r.at("uvt").at("verdict").get<std::string>();
    if (verdict == "yes")
      ++row.uvt;
    else if (verdict == "no")
      ++row.non_uvt;
    else
      ++row.unknown;
  }
  std::vector<CensusRow> out;
  for (auto& [n, row] : rows) out.push_back(row);
  return out;
}

/// One compact JSON object per entry, in input order.
inline std::string census_log(const std::vector<CensusEntry>& entries) {
  std::string out;
  for (const auto& e : entries) {
    Json j;
    j["line"] = e.line_number;
    j["graph6"] = e.text;
    j["cache_hit"] = e.cache_hit;
    if (e.report)
      j["report"] = *e.report;
    else
      j["error"] = e.error;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace uvt

#endif  // UVT_CENSUS_HPP
