#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hopfgraph/graph.hpp"

namespace hopfgraph {

// One `graph NAME { ... }` block, parsed into a validated graph plus the
// declared names (kept for faithful re-emission).
struct GraphDocument {
  std::string name;
  OrientedGraph graph;
  std::map<VertexId, std::string> vertex_names;
  std::map<EdgeId, std::string> edge_names;
};

namespace dsl_detail {

struct Token {
  enum Kind { Ident, Number, Punct, End } kind = End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    skip_space();
    tok_ = Token{Token::End, "", line_, col_};
    if (pos_ >= src_.size()) return;
    char c = src_[pos_];
    tok_.line = line_;
    tok_.column = col_;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        bump();
      }
      tok_.kind = Token::Ident;
      tok_.text = std::string(src_.substr(start, pos_ - start));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        bump();
      }
      tok_.kind = Token::Number;
      tok_.text = std::string(src_.substr(start, pos_ - start));
    } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      bump();
      bump();
      tok_.kind = Token::Punct;
      tok_.text = "->";
    } else if (c == '{' || c == '}' || c == ';' || c == ':' || c == '[' ||
               c == ']') {
      bump();
      tok_.kind = Token::Punct;
      tok_.text = std::string(1, c);
    } else {
      throw SyntaxError(line_, col_,
                        std::string("unexpected character '") + c + "'");
    }
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  Token tok_;
};

class Parser {
public:
  explicit Parser(std::string_view src) : lex_(src) {}

  std::vector<GraphDocument> documents() {
    std::vector<GraphDocument> docs;
    while (lex_.peek().kind != Token::End) {
      docs.push_back(graph_block());
    }
    return docs;
  }

private:
  Token expect(Token::Kind kind, const std::string& what) {
    Token t = lex_.take();
    if (t.kind != kind) {
      throw SyntaxError(t.line, t.column, "expected " + what);
    }
    return t;
  }

  void expect_punct(const std::string& p) {
    Token t = lex_.take();
    if (t.kind != Token::Punct || t.text != p) {
      throw SyntaxError(t.line, t.column, "expected '" + p + "'");
    }
  }

  Token expect_keyword() {
    Token t = lex_.take();
    if (t.kind != Token::Ident) {
      throw SyntaxError(t.line, t.column, "expected a statement keyword");
    }
    return t;
  }

  std::uint32_t type_clause() {
    // optional "[type K]"
    if (lex_.peek().kind == Token::Punct && lex_.peek().text == "[") {
      lex_.take();
      Token kw = expect(Token::Ident, "'type'");
      if (kw.text != "type") {
        throw SyntaxError(kw.line, kw.column, "expected 'type'");
      }
      Token num = expect(Token::Number, "a type number");
      expect_punct("]");
      unsigned long long v = std::stoull(num.text);
      if (v > 0xffffffffull) {
        throw SyntaxError(num.line, num.column, "type out of range");
      }
      return static_cast<std::uint32_t>(v);
    }
    return 1;
  }

  GraphDocument graph_block() {
    Token kw = expect(Token::Ident, "'graph'");
    if (kw.text != "graph") {
      throw SyntaxError(kw.line, kw.column, "expected 'graph'");
    }
    GraphDocument doc;
    doc.name = expect(Token::Ident, "a graph name").text;
    expect_punct("{");

    std::map<std::string, VertexId> vertex_ids;
    std::map<std::string, EdgeId> edge_ids;
    std::vector<VertexId> vertices;
    std::vector<InternalEdge> internal;
    std::vector<ExternalEdge> external;
    VertexId next_vertex = 0;
    EdgeId next_edge = 0;

    // unknown vertex names get an id that is never declared, so validate()
    // reports the dangling endpoint
    auto vertex_ref = [&](const std::string& name) {
      auto it = vertex_ids.find(name);
      if (it != vertex_ids.end()) return it->second;
      VertexId v = next_vertex++;
      vertex_ids.emplace(name, v);
      return v;
    };
    auto edge_name = [&](const std::string& name) {
      auto it = edge_ids.find(name);
      if (it != edge_ids.end()) return it->second;  // duplicate: validate flags it
      EdgeId e = next_edge++;
      edge_ids.emplace(name, e);
      return e;
    };

    while (true) {
      if (lex_.peek().kind == Token::Punct && lex_.peek().text == "}") {
        lex_.take();
        break;
      }
      Token stmt = expect_keyword();
      if (stmt.text == "vertex") {
        Token id = expect(Token::Ident, "a vertex name");
        expect_punct(";");
        VertexId v = vertex_ref(id.text);
        vertices.push_back(v);  // duplicates surface as DuplicateId
        doc.vertex_names[v] = id.text;
      } else if (stmt.text == "edge") {
        Token id = expect(Token::Ident, "an edge name");
        expect_punct(":");
        Token src = expect(Token::Ident, "a source vertex");
        expect_punct("->");
        Token dst = expect(Token::Ident, "a target vertex");
        std::uint32_t type = type_clause();
        expect_punct(";");
        EdgeId e = edge_name(id.text);
        internal.push_back(
            {e, vertex_ref(src.text), vertex_ref(dst.text), EdgeType{type}});
        doc.edge_names[e] = id.text;
      } else if (stmt.text == "in") {
        Token id = expect(Token::Ident, "a leg name");
        expect_punct(":");
        expect_punct("->");
        Token v = expect(Token::Ident, "a vertex");
        std::uint32_t type = type_clause();
        expect_punct(";");
        EdgeId e = edge_name(id.text);
        external.push_back(
            {e, vertex_ref(v.text), LegDirection::Incoming, EdgeType{type}});
        doc.edge_names[e] = id.text;
      } else if (stmt.text == "out") {
        Token id = expect(Token::Ident, "a leg name");
        expect_punct(":");
        Token v = expect(Token::Ident, "a vertex");
        expect_punct("->");
        std::uint32_t type = type_clause();
        expect_punct(";");
        EdgeId e = edge_name(id.text);
        external.push_back(
            {e, vertex_ref(v.text), LegDirection::Outgoing, EdgeType{type}});
        doc.edge_names[e] = id.text;
      } else {
        throw SyntaxError(stmt.line, stmt.column,
                          "unknown statement '" + stmt.text + "'");
      }
    }

    doc.graph = OrientedGraph(std::move(vertices), std::move(internal),
                              std::move(external));
    validate(doc.graph);
    return doc;
  }

  Lexer lex_;
};

}  // namespace dsl_detail

// Parses every `graph` block in the text. Syntax problems raise
// SyntaxError with position; semantic problems surface from validate().
inline std::vector<GraphDocument> parse_documents(std::string_view text) {
  return dsl_detail::Parser(text).documents();
}

// Convenience for a text with exactly one graph block.
inline GraphDocument parse_document(std::string_view text) {
  auto docs = parse_documents(text);
  if (docs.size() != 1) {
    throw SyntaxError(1, 1, "expected exactly one graph block");
  }
  return std::move(docs.front());
}

// Synthesizes names (v0, e0, x0, ...) for a bare graph.
inline GraphDocument make_document(const OrientedGraph& g, std::string name) {
  GraphDocument doc;
  doc.name = std::move(name);
  doc.graph = g;
  for (VertexId v : g.vertices()) {
    doc.vertex_names[v] = "v" + std::to_string(v);
  }
  for (const auto& e : g.internal_edges()) {
    doc.edge_names[e.id] = "e" + std::to_string(e.id);
  }
  for (const auto& x : g.external_edges()) {
    doc.edge_names[x.id] = "x" + std::to_string(x.id);
  }
  return doc;
}

inline std::string emit_dsl(const GraphDocument& doc) {
  std::string out = "graph " + doc.name + " {\n";
  for (VertexId v : doc.graph.vertices()) {
    out += "  vertex " + doc.vertex_names.at(v) + ";\n";
  }
  auto type_suffix = [](EdgeType t) {
    return t.value == 1 ? std::string()
                        : " [type " + std::to_string(t.value) + "]";
  };
  for (const auto& e : doc.graph.internal_edges()) {
    out += "  edge " + doc.edge_names.at(e.id) + ": " +
           doc.vertex_names.at(e.source) + " -> " +
           doc.vertex_names.at(e.target) + type_suffix(e.etype) + ";\n";
  }
  for (const auto& x : doc.graph.external_edges()) {
    if (x.direction == LegDirection::Incoming) {
      out += "  in " + doc.edge_names.at(x.id) + ": -> " +
             doc.vertex_names.at(x.vertex) + type_suffix(x.etype) + ";\n";
    } else {
      out += "  out " + doc.edge_names.at(x.id) + ": " +
             doc.vertex_names.at(x.vertex) + " ->" + type_suffix(x.etype) +
             ";\n";
    }
  }
  out += "}\n";
  return out;
}

inline std::string emit_dsl(const OrientedGraph& g,
                            const std::string& name = "g") {
  return emit_dsl(make_document(g, name));
}

// Multiple graphs per file form a disjoint-union monomial.
inline OrientedGraph document_union(const std::vector<GraphDocument>& docs) {
  OrientedGraph g;
  for (const auto& d : docs) g = disjoint_union(g, d.graph);
  return g;
}

}  // namespace hopfgraph
