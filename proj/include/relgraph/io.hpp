#pragma once

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "relgraph/relative.hpp"

namespace relgraph {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using json = nlohmann::ordered_json;

inline void reject_unknown_keys(const json& obj,
                                const std::set<std::string>& allowed,
                                const char* what) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key)) {
      throw ParseError(std::string(what) + ": unknown field '" + key + "'");
    }
  }
}

inline std::string string_field(const json& obj, const char* key,
                                const std::string& what) {
  if (!obj.contains(key)) {
    throw ParseError(what + ": missing field '" + key + "'");
  }
  if (!obj[key].is_string() || obj[key].get<std::string>().empty()) {
    throw ParseError(what + ": field '" + key +
                     "' must be a non-empty string");
  }
  return obj[key].get<std::string>();
}

inline VertexSet name_array(const json& arr, const char* what) {
  if (!arr.is_array()) {
    throw ParseError(std::string(what) + ": expected an array of names");
  }
  VertexSet out;
  for (const auto& item : arr) {
    if (!item.is_string() || item.get<std::string>().empty()) {
      throw ParseError(std::string(what) + ": names must be non-empty strings");
    }
    if (!out.insert(item.get<std::string>()).second) {
      throw ParseError(std::string(what) + ": duplicate name '" +
                       item.get<std::string>() + "'");
    }
  }
  return out;
}

inline Graph graph_from_json(const json& j, bool allow_ck) {
  if (!j.is_object()) {
    throw ParseError("graph: expected a JSON object");
  }
  std::set<std::string> allowed{"vertices", "edges"};
  if (allow_ck) {
    allowed.insert("A");
  }
  reject_unknown_keys(j, allowed, "graph");
  if (!j.contains("vertices") || !j.contains("edges")) {
    throw ParseError("graph: fields 'vertices' and 'edges' are required");
  }
  VertexSet vertices = name_array(j["vertices"], "vertices");
  if (!j["edges"].is_array()) {
    throw ParseError("edges: expected an array");
  }
  std::vector<EdgeDecl> edges;
  std::set<std::string> edge_names;
  for (const auto& e : j["edges"]) {
    if (!e.is_object()) {
      throw ParseError("edge: expected an object");
    }
    reject_unknown_keys(e, {"name", "src", "rng", "card"}, "edge");
    EdgeDecl d;
    d.name = string_field(e, "name", "edge");
    d.src = string_field(e, "src", "edge " + d.name);
    d.rng = string_field(e, "rng", "edge " + d.name);
    if (e.contains("card")) {
      std::string card = string_field(e, "card", "edge " + d.name);
      if (card == "1") {
        d.card = Cardinality::one;
      } else if (card == "inf") {
        d.card = Cardinality::countably_infinite;
      } else {
        throw ParseError("edge " + d.name + ": card must be \"1\" or \"inf\"");
      }
    }
    if (!edge_names.insert(d.name).second) {
      throw ParseError("edge " + d.name + ": duplicate edge name");
    }
    edges.push_back(std::move(d));
  }
  return make_graph(std::move(vertices), std::move(edges));
}

}  // namespace detail

//! Strict graph format: {"vertices": [names], "edges": [{"name","src",
//! "rng","card"}]} with card "1" (default) or "inf". Unknown fields are
//! rejected.
inline Graph graph_from_json_text(const std::string& text) {
  detail::json j;
  try {
    j = detail::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return detail::graph_from_json(j, false);
}

//! Relative-graph format: the graph format plus an optional "A" array of
//! vertex names (absent means empty).
inline RelativeGraph relative_from_json_text(const std::string& text) {
  detail::json j;
  try {
    j = detail::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  RelativeGraph rg;
  rg.graph = detail::graph_from_json(j, true);
  if (j.contains("A")) {
    rg.ck_vertices = detail::name_array(j["A"], "A");
  }
  return rg;
}

namespace detail {
inline json graph_to_json(const Graph& g) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : g.vertices) {
    j["vertices"].push_back(v);
  }
  j["edges"] = json::array();
  for (const auto& d : g.edges) {
    json e;
    e["name"] = d.name;
    e["src"] = d.src;
    e["rng"] = d.rng;
    e["card"] = d.is_bundle() ? "inf" : "1";
    j["edges"].push_back(std::move(e));
  }
  return j;
}
}  // namespace detail

inline std::string to_json_text(const Graph& g) {
  return detail::graph_to_json(g).dump(2) + "\n";
}

inline std::string to_json_text(const RelativeGraph& rg) {
  detail::json j = detail::graph_to_json(rg.graph);
  j["A"] = detail::json::array();
  for (const auto& v : rg.ck_vertices) {
    j["A"].push_back(v);
  }
  return j.dump(2) + "\n";
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Graph load_graph(const std::filesystem::path& path) {
  return graph_from_json_text(read_file(path));
}

inline RelativeGraph load_relative_graph(const std::filesystem::path& path) {
  return relative_from_json_text(read_file(path));
}

inline void write_file(const std::filesystem::path& path,
                       const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write file: " + path.string());
  }
  out << text;
}

}  // namespace relgraph
