#ifndef UVT_REPORT_HPP
#define UVT_REPORT_HPP

// JSON serialization with stable key order. Permutations are image arrays.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "uvt/classify.hpp"

namespace uvt {

using Json = nlohmann::ordered_json;

inline Json to_json(const Perm& p) { return p.image_vector(); }

inline Json to_json(const std::vector<Perm>& perms) {
  Json a = Json::array();
  for (const auto& p : perms) a.push_back(to_json(p));
  return a;
}

inline Json to_json(const PermGroup& g) {
  Json j;
  j["degree"] = g.degree();
  j["generators"] = to_json(g.generators());
  j["order"] = g.order_string();
  return j;
}

inline Json to_json(const SchurSet& s) {
  Json j;
  j["k"] = s.k;
  j["size"] = s.perms.size();
  j["verified"] = s.verify();
  j["perms"] = to_json(s.perms);
  return j;
}

inline Json to_json(const BlockSystem& b) {
  Json j;
  j["block_count"] = b.block_count();
  j["block_size"] = b.block_size();
  j["blocks"] = b.blocks();
  return j;
}

inline Json to_json(const FactorizingWitness& w) {
  Json j;
  j["system"] = to_json(w.system);
  j["inner"] = to_json(w.inner);
  j["outer_on_blocks"] = to_json(w.outer_blocks);
  j["outer"] = to_json(w.outer);
  j["product"] = to_json(w.product);
  return j;
}

inline Json to_json(const SystemReport& s) {
  Json j;
  j["block_count"] = s.block_count;
  j["block_size"] = s.block_size;
  j["fixer_order"] = s.fixer_order;
  j["quotient_order"] = s.quotient_order;
  j["outcome"] = to_string(s.outcome);
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

inline Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }
inline Json optional_long(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

inline Json to_json(const ClassificationReport& r, bool include_witnesses = true) {
  Json j;
  j["id"] = r.id;
  j["n"] = r.n;
  j["aut_order"] = r.aut_order;
  j["aut_generators"] = to_json(r.aut_generators);
  j["vertex_transitive"] = r.vertex_transitive;

  Json cayley;
  cayley["verdict"] = to_string(r.cayley);
  if (r.cayley == Verdict::kYes) {
    cayley["regular_subgroup_generators"] = to_json(r.regular_subgroup_generators);
    cayley["connection_set"] = r.connection_set;
  }
  j["cayley"] = cayley;

  Json uvt;
  uvt["verdict"] = to_string(r.uvt);
  uvt["method"] = r.uvt_method;
  uvt["omega_id"] = optional_size(r.omega_id);
  uvt["omega_lower"] = r.omega_lower;
  uvt["omega_upper"] = r.omega_upper;
  uvt["omega_deficit"] = optional_long(r.omega_deficit);
  if (r.witness && include_witnesses) uvt["witness"] = to_json(*r.witness);
  j["uvt"] = uvt;

  Json fact;
  fact["status"] = r.factorizing;
  if (r.factorizing_witness && include_witnesses) fact["witness"] = to_json(*r.factorizing_witness);
  Json systems = Json::array();
  for (const auto& s : r.block_systems) systems.push_back(to_json(s));
  fact["systems"] = systems;
  j["factorizing"] = fact;

  Json timing;
  timing["automorphisms"] = r.ms_automorphisms;
  timing["cayley"] = r.ms_cayley;
  timing["uvt"] = r.ms_uvt;
  timing["factorizing"] = r.ms_factorizing;
  j["timings_ms"] = timing;

  Json flags;
  flags["group_too_large"] = r.group_too_large;
  flags["clique_budget_exhausted"] = r.clique_budget_exhausted;
  flags["regular_budget_exhausted"] = r.regular_budget_exhausted;
  j["budget_flags"] = flags;
  j["notes"] = r.notes;
  return j;
}

inline Json to_json(const UniformResult& r, std::size_t degree) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["method"] = r.method;
  j["derangements"] = r.derangements;
  j["omega_id"] = optional_size(r.omega_id);
  j["omega_lower"] = r.omega_lower;
  j["omega_upper"] = r.omega_upper;
  j["omega_deficit"] = optional_long(r.omega_deficit(degree));
  j["nodes"] = r.nodes;
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

inline Json to_json(const KUniformResult& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["method"] = r.method;
  j["nodes"] = r.nodes;
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

/// Reads {"degree": n, "generators": [[images], ...]}.
inline PermGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    throw std::invalid_argument("group JSON needs \"degree\" and \"generators\"");
  const auto degree = j.at("degree").get<std::size_t>();
  if (degree == 0 || degree > kMaxDegree) throw std::invalid_argument("group degree out of range");
  std::vector<Perm> gens;
  for (const auto& g : j.at("generators")) {
    auto images = g.get<std::vector<int>>();
    if (images.size() != degree) throw std::invalid_argument("generator length differs from degree");
    gens.push_back(Perm::from_images(images));
  }
  return PermGroup(degree, gens);
}

}  // namespace uvt

#endif  // UVT_REPORT_HPP
