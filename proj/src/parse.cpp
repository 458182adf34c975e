#include <cctype>
#include <string>
#include <vector>

#include "hgdec/hypergraph.hpp"

namespace hgdec {

ParseError::ParseError(std::string msg, int line, int col)
    : std::runtime_error(msg + " at line " + std::to_string(line) +
                         ", column " + std::to_string(col)),
      line(line),
      col(col) {}

namespace {

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' ||
         c == '.' || c == '-';
}

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  void advance() {
    if (pos < text.size() && text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '%') {
        while (pos < text.size() && text[pos] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line, col);
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string name() {
    skip_ws();
    if (pos >= text.size() || !name_char(text[pos])) fail("expected a name");
    std::string out;
    while (pos < text.size() && name_char(text[pos])) {
      out += text[pos];
      advance();
    }
    return out;
  }
};

}  // namespace

Hypergraph parse_hypergraph(std::string_view text, std::string name) {
  Lexer lex{text};
  HypergraphBuilder builder(std::move(name));
  bool any = false;
  while (!lex.eof()) {
    int eline = lex.line, ecol = lex.col;
    std::string ename = lex.name();
    if (ename == "." && any) break;  // terminating dot
    lex.expect('(');
    std::vector<std::string> verts;
    verts.push_back(lex.name());
    while (lex.peek() == ',') {
      lex.expect(',');
      verts.push_back(lex.name());
    }
    lex.expect(')');
    try {
      builder.add_edge(ename, verts);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), eline, ecol);
    }
    any = true;
    char c = lex.peek();
    if (c == ',') {
      lex.expect(',');
    } else if (c == '.') {
      lex.advance();
      break;
    } else {
      break;
    }
  }
  if (!lex.eof()) lex.fail("trailing input after edge list");
  if (!any) lex.fail("empty edge list");
  return builder.build();
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::string out;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    if (e) out += ",\n";
    out += h.edge_name(e);
    out += "(";
    bool first = true;
    for (auto v : h.edge(e)) {
      if (!first) out += ",";
      out += h.vertex_name(v);
      first = false;
    }
    out += ")";
  }
  out += ".\n";
  return out;
}

}  // namespace hgdec
