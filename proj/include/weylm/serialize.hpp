#pragma once

// JSON views of the main data. Key order is fixed, so output is byte-stable.

#include <nlohmann/json.hpp>

#include "weylm/conjugacy.hpp"
#include "weylm/report.hpp"
#include "weylm/root_system.hpp"
#include "weylm/wm.hpp"

namespace weylm {

using Json = nlohmann::ordered_json;

inline Json subset_json(SimpleSubset s) {
  Json out = Json::array();
  for (int i : s.indices()) out.push_back(i + 1);
  return out;
}

inline Json coords_json(const RootSystem& rs, int root) {
  Json out = Json::array();
  for (int k = 0; k < rs.rank(); ++k) out.push_back(static_cast<int>(rs.coords(root)[k]));
  return out;
}

inline Json to_json(const RootSystem& rs) {
  Json j;
  j["type"] = to_string(rs.type());
  j["rank"] = rs.rank();
  j["cartan"] = rs.cartan();
  Json roots = Json::array();
  for (int r = 0; r < rs.num_positive(); ++r) roots.push_back(coords_json(rs, r));
  j["positive_roots"] = std::move(roots);
  return j;
}

inline Json to_json(const RootSystem& rs, const std::vector<ConjClass>& classes) {
  Json j;
  j["type"] = to_string(rs.type());
  j["rank"] = rs.rank();
  Json list = Json::array();
  for (const auto& c : classes) {
    Json e;
    e["size"] = c.size();
    e["min_length"] = c.min_length;
    e["max_length"] = c.max_length;
    e["representative_word"] = format_word(c.representative_word);
    e["involution"] = c.is_involution_class;
    e["n_max_length_elements"] = c.max_elements.size();
    list.push_back(std::move(e));
  }
  j["classes"] = std::move(list);
  return j;
}

inline Json to_json(const RootSystem& rs, const WmLattice& lattice) {
  Json j;
  j["type"] = to_string(rs.type());
  j["rank"] = rs.rank();
  Json list = Json::array();
  for (const auto& e : lattice.entries) {
    Json x;
    x["sigma"] = subset_json(e.sigma);
    x["max_element_word"] = format_word(e.max_word);
    x["max_length"] = e.max_length;
    x["rank_defect"] = e.rank_defect;
    x["fixed_dim"] = e.fixed_dim;
    x["predicted_dimension"] = e.predicted_dimension;
    x["class_size"] = e.class_ref.size();
    x["class_representative_word"] = format_word(e.class_ref.representative_word);
    list.push_back(std::move(x));
  }
  j["entries"] = std::move(list);
  Json jsets = Json::array();
  for (auto s : lattice.jsets) jsets.push_back(subset_json(s));
  j["jsets"] = std::move(jsets);
  return j;
}

inline Json to_json(const Report& r) {
  Json j;
  j["type"] = to_string(r.type);
  j["rank"] = r.type.rank;
  j["suite"] = r.suite;
  j["n_checked"] = r.n_checked;
  j["n_passed"] = r.n_passed;
  Json list = Json::array();
  for (const auto& c : r.counterexamples) {
    Json x;
    x["check"] = c.check;
    x["words"] = c.words;
    list.push_back(std::move(x));
  }
  j["counterexamples"] = std::move(list);
  return j;
}

}  // namespace weylm
