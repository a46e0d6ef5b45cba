// On-disk curve documents (UTF-8 JSON).
//
//   {
//     "vertices":    [{"id": "v1", "genus": 1, "cusps": 0, "exceptional": false}, ...],
//     "edges":       [{"ends": ["v1", "v2"], "kind": "node"}, ...],
//     "degree":      10,                  // optional
//     "multidegree": {"v1": 5, "v2": 5}   // optional, keys = vertex ids
//   }
//
// "kind" defaults to "node", "cusps" to 0 and "exceptional" to false.
// Unknown keys are rejected unless lenient parsing is requested.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gitstab/balance.hpp"
#include "gitstab/curve_graph.hpp"

namespace gitstab {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CurveDocument {
  CurveGraph graph;
  std::optional<Multidegree> multidegree;
  std::optional<long long> degree;
};

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& obj,
                                std::initializer_list<const char*> known,
                                const char* where, bool lenient) {
  if (lenient) return;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : known)
      if (it.key() == k) ok = true;
    if (!ok) throw ParseError(std::string("unknown key '") + it.key() + "' in " + where);
  }
}

inline long long require_integer(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw ParseError(where + " must be an integer");
  long long v = j.get<long long>();
  // keep the scaled integer comparisons far away from overflow
  if (v > 1000000000000LL || v < -1000000000000LL)
    throw ParseError(where + " is outside the supported range");
  return v;
}

}  // namespace detail

inline CurveDocument parse_curve_document(const nlohmann::json& j, bool lenient = false) {
  if (!j.is_object()) throw ParseError("curve document must be a JSON object");
  detail::reject_unknown_keys(j, {"vertices", "edges", "degree", "multidegree"},
                              "curve document", lenient);
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw ParseError("curve document needs a 'vertices' array");

  CurveDocument doc;
  for (const auto& jv : j["vertices"]) {
    if (!jv.is_object()) throw ParseError("vertex entries must be objects");
    detail::reject_unknown_keys(jv, {"id", "genus", "cusps", "exceptional"}, "vertex", lenient);
    if (!jv.contains("id") || !jv["id"].is_string())
      throw ParseError("every vertex needs a string 'id'");
    if (!jv.contains("genus")) throw ParseError("every vertex needs a 'genus'");
    Vertex v;
    v.id = jv["id"].get<std::string>();
    long long genus = detail::require_integer(jv["genus"], "vertex genus");
    long long cusps = jv.contains("cusps") ? detail::require_integer(jv["cusps"], "vertex cusps") : 0;
    if (genus < 0 || cusps < 0)
      throw ParseError("genus and cusps must be non-negative on vertex '" + v.id + "'");
    if (genus > 1000000 || cusps > 1000000)
      throw ParseError("genus and cusps above 10^6 are outside the supported range");
    v.genus = static_cast<int>(genus);
    v.cusps = static_cast<int>(cusps);
    if (jv.contains("exceptional")) {
      if (!jv["exceptional"].is_boolean())
        throw ParseError("'exceptional' must be a boolean on vertex '" + v.id + "'");
      v.exceptional = jv["exceptional"].get<bool>();
    }
    if (doc.graph.find_vertex(v.id))
      throw ParseError("duplicate vertex id '" + v.id + "'");
    doc.graph.add_vertex(v);
  }

  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError("'edges' must be an array");
    for (const auto& je : j["edges"]) {
      if (!je.is_object()) throw ParseError("edge entries must be objects");
      detail::reject_unknown_keys(je, {"ends", "kind"}, "edge", lenient);
      if (!je.contains("ends") || !je["ends"].is_array() || je["ends"].size() != 2 ||
          !je["ends"][0].is_string() || !je["ends"][1].is_string())
        throw ParseError("every edge needs 'ends': [id, id]");
      std::string a = je["ends"][0].get<std::string>();
      std::string b = je["ends"][1].get<std::string>();
      EdgeKind kind = EdgeKind::Node;
      if (je.contains("kind")) {
        std::string k = je["kind"].is_string() ? je["kind"].get<std::string>() : "";
        if (k == "node") kind = EdgeKind::Node;
        else if (k == "tacnode") kind = EdgeKind::Tacnode;
        else throw ParseError("edge 'kind' must be \"node\" or \"tacnode\"");
      }
      if (!doc.graph.find_vertex(a) || !doc.graph.find_vertex(b))
        throw ParseError("edge ('" + a + "','" + b + "') references an unknown vertex");
      doc.graph.add_edge(a, b, kind);
    }
  }

  if (j.contains("degree"))
    doc.degree = detail::require_integer(j["degree"], "'degree'");

  if (j.contains("multidegree")) {
    if (!j["multidegree"].is_object()) throw ParseError("'multidegree' must be an object");
    std::map<std::string, long long> by_id;
    for (auto it = j["multidegree"].begin(); it != j["multidegree"].end(); ++it) {
      if (!doc.graph.find_vertex(it.key()))
        throw ParseError("multidegree references an unknown vertex '" + it.key() + "'");
      by_id[it.key()] = detail::require_integer(it.value(), "multidegree entry");
    }
    if (static_cast<int>(by_id.size()) != doc.graph.vertex_count())
      throw ParseError("multidegree must assign a degree to every vertex");
    doc.multidegree = make_multidegree(doc.graph, by_id);
    if (doc.degree && *doc.degree != doc.multidegree->total())
      throw ParseError("'degree' disagrees with the multidegree total");
  }

  return doc;
}

inline CurveDocument parse_curve_document_text(const std::string& text, bool lenient = false) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_curve_document(j, lenient);
}

inline nlohmann::json curve_document_json(const CurveGraph& g,
                                          const Multidegree* md = nullptr) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const Vertex& v : g.vertices())
    j["vertices"].push_back({{"id", v.id},
                             {"genus", v.genus},
                             {"cusps", v.cusps},
                             {"exceptional", v.exceptional}});
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges())
    j["edges"].push_back(
        {{"ends", {g.vertex(e.a).id, g.vertex(e.b).id}},
         {"kind", e.kind == EdgeKind::Tacnode ? "tacnode" : "node"}});
  if (md) {
    j["multidegree"] = multidegree_by_id(g, *md);
    j["degree"] = md->total();
  }
  return j;
}

}  // namespace gitstab
