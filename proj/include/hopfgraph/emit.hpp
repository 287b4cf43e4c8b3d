#pragma once

#include <json.hpp>

#include <string>

#include "hopfgraph/algebra.hpp"
#include "hopfgraph/canonical.hpp"
#include "hopfgraph/dsl.hpp"
#include "hopfgraph/rational.hpp"
#include "hopfgraph/tensor.hpp"

namespace hopfgraph {

enum class EmitFormat : std::uint8_t { Text, Dot, Json, Latexish };

inline constexpr const char* kFormatTag = "hopfgraph/1";

namespace emit_detail {

// Inline factor form, e.g. "[3; 0>1 0>2 1>2;]" or "[1;; out0 out0]".
// Types other than 1 get a ":k" suffix. Keys are canonical, so this is a
// stable rendering.
inline std::string factor_string(const CanonicalKey& k) {
  const auto& c = k.code;
  std::string out = "[" + std::to_string(c[0]) + ";";
  std::size_t pos = 4;
  for (std::size_t i = 0; i < k.internal_count(); ++i, pos += 3) {
    out += " " + std::to_string(c[pos]) + ">" + std::to_string(c[pos + 1]);
    if (c[pos + 2] != 1) out += ":" + std::to_string(c[pos + 2]);
  }
  out += ";";
  for (std::size_t j = 0; j < k.external_count(); ++j, pos += 3) {
    out += std::string(" ") + (c[pos + 1] == 1 ? "out" : "in") +
           std::to_string(c[pos]);
    if (c[pos + 2] != 1) out += ":" + std::to_string(c[pos + 2]);
  }
  out += "]";
  return out;
}

inline std::string monomial_string(const Monomial& m, bool latexish) {
  if (m.is_unit()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.factors.size(); ++i) {
    if (i) out += latexish ? "·" : "*";
    out += factor_string(m.factors[i]);
  }
  return out;
}

inline std::string coeff_prefix(const Rational& c, bool latexish) {
  if (c == 1) return "";
  if (c == -1) return "-";
  return to_string(c) + (latexish ? " · " : " * ");
}

template <class Terms>
std::string term_lines(const Terms& terms, bool latexish,
                       const std::string& tensor_sep) {
  if (terms.empty()) return "0\n";
  std::string out;
  for (const auto& [key, coeff] : terms) {
    out += coeff_prefix(coeff, latexish);
    if constexpr (std::is_same_v<std::decay_t<decltype(key)>, Monomial>) {
      out += monomial_string(key, latexish);
    } else {
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (i) out += tensor_sep;
        out += monomial_string(key[i], latexish);
      }
    }
    out += "\n";
  }
  return out;
}

inline nlohmann::json graph_json(const GraphDocument& doc) {
  nlohmann::json jg;
  jg["name"] = doc.name;
  auto vertices = nlohmann::json::array();
  for (VertexId v : doc.graph.vertices()) {
    vertices.push_back(doc.vertex_names.at(v));
  }
  jg["vertices"] = vertices;
  auto edges = nlohmann::json::array();
  for (const auto& e : doc.graph.internal_edges()) {
    edges.push_back({{"name", doc.edge_names.at(e.id)},
                     {"source", doc.vertex_names.at(e.source)},
                     {"target", doc.vertex_names.at(e.target)},
                     {"type", e.etype.value}});
  }
  jg["edges"] = edges;
  auto legs = nlohmann::json::array();
  for (const auto& x : doc.graph.external_edges()) {
    legs.push_back(
        {{"name", doc.edge_names.at(x.id)},
         {"vertex", doc.vertex_names.at(x.vertex)},
         {"direction", x.direction == LegDirection::Incoming ? "in" : "out"},
         {"type", x.etype.value}});
  }
  jg["legs"] = legs;
  return jg;
}

inline nlohmann::json monomial_json(const Monomial& m) {
  auto arr = nlohmann::json::array();
  for (std::size_t i = 0; i < m.factors.size(); ++i) {
    arr.push_back(graph_json(
        make_document(decode_key(m.factors[i]), "f" + std::to_string(i))));
  }
  return arr;
}

inline std::string dot_string(const GraphDocument& doc) {
  std::string out = "digraph " + doc.name + " {\n  rankdir=LR;\n";
  for (VertexId v : doc.graph.vertices()) {
    out += "  \"" + doc.vertex_names.at(v) + "\";\n";
  }
  for (const auto& e : doc.graph.internal_edges()) {
    out += "  \"" + doc.vertex_names.at(e.source) + "\" -> \"" +
           doc.vertex_names.at(e.target) + "\"";
    if (e.etype.value != 1) {
      out += " [label=\"" + std::to_string(e.etype.value) + "\"]";
    }
    out += ";\n";
  }
  for (const auto& x : doc.graph.external_edges()) {
    std::string open = "__open_" + doc.edge_names.at(x.id);
    out += "  \"" + open + "\" [shape=point, width=0.05];\n  ";
    if (x.direction == LegDirection::Outgoing) {
      out += "\"" + doc.vertex_names.at(x.vertex) + "\" -> \"" + open + "\"";
    } else {
      out += "\"" + open + "\" -> \"" + doc.vertex_names.at(x.vertex) + "\"";
    }
    out += " [style=dashed";
    if (x.etype.value != 1) {
      out += ", label=\"" + std::to_string(x.etype.value) + "\"";
    }
    out += "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace emit_detail

// Canonical text (a DSL document of the canonical representative), DOT with
// the declared names, a JSON document, or the inline factor form.
inline std::string emit(const GraphDocument& doc, EmitFormat format) {
  switch (format) {
    case EmitFormat::Text:
      return emit_dsl(make_document(decode_key(canonical_key(doc.graph)),
                                    doc.name));
    case EmitFormat::Dot:
      return emit_detail::dot_string(doc);
    case EmitFormat::Json: {
      nlohmann::json j;
      j["format"] = kFormatTag;
      j["graphs"] = nlohmann::json::array({emit_detail::graph_json(doc)});
      return j.dump(2) + "\n";
    }
    case EmitFormat::Latexish:
      return emit_detail::factor_string(canonical_key(doc.graph)) + "\n";
  }
  return {};
}

inline std::string emit(const OrientedGraph& g, EmitFormat format) {
  // the empty graph is the algebra unit and prints as such
  if (g.empty() &&
      (format == EmitFormat::Text || format == EmitFormat::Latexish)) {
    return "1\n";
  }
  return emit(make_document(g, "g"), format);
}

inline std::string emit(const AlgebraElement& x, EmitFormat format) {
  switch (format) {
    case EmitFormat::Text:
      return emit_detail::term_lines(x.terms(), false, " (x) ");
    case EmitFormat::Latexish:
      return emit_detail::term_lines(x.terms(), true, " ⊗ ");
    case EmitFormat::Json: {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [m, c] : x.terms()) {
        terms.push_back({{"coeff", to_string(c)},
                         {"monomial", emit_detail::monomial_json(m)}});
      }
      nlohmann::json j;
      j["format"] = kFormatTag;
      j["element"] = {{"terms", terms}};
      return j.dump(2) + "\n";
    }
    case EmitFormat::Dot:
      throw GraphError(errc::bad_config, "dot output is for single graphs");
  }
  return {};
}

template <std::size_t K>
std::string emit(const Tensor<K>& t, EmitFormat format) {
  switch (format) {
    case EmitFormat::Text:
      return emit_detail::term_lines(t.terms(), false, " (x) ");
    case EmitFormat::Latexish:
      return emit_detail::term_lines(t.terms(), true, " ⊗ ");
    case EmitFormat::Json: {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [key, c] : t.terms()) {
        auto slots = nlohmann::json::array();
        for (const auto& m : key) slots.push_back(emit_detail::monomial_json(m));
        terms.push_back({{"coeff", to_string(c)}, {"slots", slots}});
      }
      nlohmann::json j;
      j["format"] = kFormatTag;
      j["tensor"] = {{"arity", K}, {"terms", terms}};
      return j.dump(2) + "\n";
    }
    case EmitFormat::Dot:
      throw GraphError(errc::bad_config, "dot output is for single graphs");
  }
  return {};
}

// Reads the JSON mirror of the DSL (format "hopfgraph/1").
inline std::vector<GraphDocument> parse_documents_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(1, 1, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != kFormatTag) {
    throw SyntaxError(1, 1, "missing \"format\": \"hopfgraph/1\"");
  }
  std::vector<GraphDocument> docs;
  try {
    for (const auto& jg : j.at("graphs")) {
      GraphDocument doc;
      doc.name = jg.value("name", "g");
      std::map<std::string, VertexId> vertex_ids;
      VertexId next_vertex = 0;
      EdgeId next_edge = 0;
      auto vertex_ref = [&](const std::string& name) {
        auto it = vertex_ids.find(name);
        if (it != vertex_ids.end()) return it->second;
        VertexId v = next_vertex++;
        vertex_ids.emplace(name, v);
        return v;
      };
      std::vector<VertexId> vertices;
      std::vector<InternalEdge> internal;
      std::vector<ExternalEdge> external;
      for (const auto& jv : jg.at("vertices")) {
        VertexId v = vertex_ref(jv.get<std::string>());
        vertices.push_back(v);
        doc.vertex_names[v] = jv.get<std::string>();
      }
      for (const auto& je : jg.value("edges", nlohmann::json::array())) {
        EdgeId id = next_edge++;
        internal.push_back({id, vertex_ref(je.at("source").get<std::string>()),
                            vertex_ref(je.at("target").get<std::string>()),
                            EdgeType{je.value("type", 1u)}});
        doc.edge_names[id] = je.value("name", "e" + std::to_string(id));
      }
      for (const auto& jx : jg.value("legs", nlohmann::json::array())) {
        EdgeId id = next_edge++;
        std::string dir = jx.at("direction").get<std::string>();
        if (dir != "in" && dir != "out") {
          throw SyntaxError(1, 1, "leg direction must be \"in\" or \"out\"");
        }
        external.push_back({id, vertex_ref(jx.at("vertex").get<std::string>()),
                            dir == "in" ? LegDirection::Incoming
                                        : LegDirection::Outgoing,
                            EdgeType{jx.value("type", 1u)}});
        doc.edge_names[id] = jx.value("name", "x" + std::to_string(id));
      }
      doc.graph = OrientedGraph(std::move(vertices), std::move(internal),
                                std::move(external));
      validate(doc.graph);
      docs.push_back(std::move(doc));
    }
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(1, 1, std::string("bad document structure: ") + e.what());
  }
  return docs;
}

// DSL or JSON by content sniffing: JSON documents start with '{'.
inline std::vector<GraphDocument> parse_documents_any(const std::string& text) {
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') continue;
    if (ch == '{') return parse_documents_json(text);
    break;
  }
  return parse_documents(text);
}

}  // namespace hopfgraph
